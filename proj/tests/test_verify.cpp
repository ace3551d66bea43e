#include <doctest.h>

#include <random>

#include "cpf/json_io.hpp"
#include "cpf/verify.hpp"

using namespace cpf;

namespace {

verify::CheckConfig small_config() {
    verify::CheckConfig cfg;
    cfg.trials = 20;
    return cfg;
}

// Reassembles the potential from the library primitives with a configurable
// leading sign; used to demonstrate which checks catch a broken sign.
//   parity == 1 is the correct (-1)^{n+1};
//   parity == 0 is (-1)^{n};
//   parity == 2 omits the sign entirely.
Potential potential_with_sign(const ColoredBraid& b, int parity) {
    const int n = b.strand_count();
    const auto nv = static_cast<std::size_t>(b.color_count());
    const LaurentPoly det = determinant(word_matrix(b).mat -
                                        PolyMatrix::identity(static_cast<std::size_t>(n - 1), nv));
    LaurentPoly numerator = monomial_weight(b) * det.square_variables();
    const bool negate = parity == 1 ? (n % 2 == 0) : parity == 0 ? (n % 2 == 1) : false;
    if (negate) numerator = -numerator;

    const ClosureInfo info = closure_info(b);
    const LaurentPoly den = closure_denominator(b);
    Potential out;
    out.components = info.component_count();
    if (out.components >= 2) {
        out.kind = PotentialKind::polynomial;
        out.value = exact_div(numerator, den);
    } else {
        out.kind = PotentialKind::knot_fraction;
        out.knot_color = b.bottom().colors.front();
        const auto k = static_cast<std::size_t>(out.knot_color);
        out.value = exact_div(
            numerator * (LaurentPoly::variable(nv, k) - LaurentPoly::variable(nv, k, -1)), den);
    }
    return out;
}

}  // namespace

TEST_CASE("random closed braids are closed and in bounds") {
    std::mt19937_64 rng(606);
    for (int iter = 0; iter < 200; ++iter) {
        const ColoredBraid b = verify::random_closed_braid(rng, 6, 12, 4);
        CHECK(b.is_closed());
        CHECK(b.strand_count() >= 2);
        CHECK(b.strand_count() <= 6);
        CHECK(b.color_count() <= 4);
    }
}

TEST_CASE("hand stabilization instance: the Hopf braid both ways") {
    const Potential hopf = potential_function(ColoredBraid::parse("-1 -1", "1,2"));
    CHECK(hopf == potential_function(ColoredBraid::parse("-1 -1 2", "1,2,2")));
    CHECK(hopf == potential_function(ColoredBraid::parse("-1 -1 -2", "1,2,2")));
}

TEST_CASE("all checks pass at reduced trial counts") {
    const auto cfg = small_config();
    for (const auto& name : verify::check_names()) {
        const verify::CheckReport r = verify::run_check(name, cfg);
        INFO(name);
        CHECK(r.passed());
        CHECK(r.trials == cfg.trials);
    }
    CHECK_THROWS_AS(verify::run_check("nonsense", cfg), std::invalid_argument);
}

TEST_CASE("reports are deterministic in the seed") {
    // The sign-omitted variant fails, so its report content depends on the
    // sampled instances and exposes the seeding.
    const auto broken = [](const ColoredBraid& b) { return potential_with_sign(b, 2); };
    auto cfg = small_config();
    cfg.seed = 99991;
    const auto a = report_to_json(verify::check_markov(cfg, broken)).dump();
    const auto b = report_to_json(verify::check_markov(cfg, broken)).dump();
    CHECK(a == b);
    cfg.seed = 99992;
    CHECK(report_to_json(verify::check_markov(cfg, broken)).dump() != a);
}

TEST_CASE("sign reassembly matches the library on the correct parity") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 30; ++iter) {
        const ColoredBraid b = verify::random_closed_braid(rng, 6, 10, 4);
        CHECK(potential_with_sign(b, 1) == potential_function(b));
    }
}

TEST_CASE("a missing leading sign breaks stabilization") {
    auto cfg = small_config();
    cfg.trials = 40;
    const verify::CheckReport r = verify::check_markov(
        cfg, [](const ColoredBraid& b) { return potential_with_sign(b, 2); });
    CHECK(!r.passed());
    for (const auto& f : r.failures) CHECK(f.input.starts_with("stabilization"));
}

TEST_CASE("a flipped leading sign is a global unit, caught by normalization") {
    // (-1)^n in place of (-1)^{n+1} rescales every value by -1, so move
    // invariance still holds trial for trial; the broken build surfaces on
    // the absolute anchor instead (the positive Hopf value must be +1).
    auto cfg = small_config();
    const auto flipped = [](const ColoredBraid& b) { return potential_with_sign(b, 0); };
    CHECK(verify::check_markov(cfg, flipped).passed());
    const Potential hopf = flipped(ColoredBraid::parse("-1 -1", "1,2"));
    CHECK(hopf.value == -LaurentPoly::one(2));
    CHECK(!hopf.value.is_one());
}

TEST_CASE("failures carry reproducible seeds") {
    auto cfg = small_config();
    cfg.trials = 25;
    const verify::CheckReport r = verify::check_markov(
        cfg, [](const ColoredBraid& b) { return potential_with_sign(b, 2); });
    REQUIRE(!r.failures.empty());
    const auto& f = r.failures.front();
    CHECK(f.seed != 0);
    CHECK(!f.input.empty());
    CHECK(f.expected != f.actual);
}
