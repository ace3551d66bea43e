#include <doctest.h>

#include <random>

#include "cpf/braid.hpp"
#include "cpf/verify.hpp"

using namespace cpf;

namespace {

LaurentPoly t(std::size_t nvars, std::size_t idx, std::int64_t pow = 1) {
    return LaurentPoly::variable(nvars, idx, pow);
}

}  // namespace

TEST_CASE("parse") {
    const ColoredBraid hopf = ColoredBraid::parse("-1 -1", "1,2");
    CHECK(hopf.strand_count() == 2);
    CHECK(hopf.color_count() == 2);
    CHECK(hopf.bottom().colors == std::vector<int>{1, 2});
    CHECK(hopf.top().colors == std::vector<int>{1, 2});
    CHECK(hopf.is_closed());
    CHECK(hopf.word() == std::vector<Crossing>{{1, -1}, {1, -1}});

    const ColoredBraid trivial = ColoredBraid::parse("", "1");
    CHECK(trivial.strand_count() == 1);
    CHECK(trivial.word().empty());

    CHECK_THROWS_WITH_AS(ColoredBraid::parse("3 1", "1,1"),
                         "crossing index 3 out of range for 2 strands", std::invalid_argument);
    CHECK_THROWS_AS(ColoredBraid::parse("0", "1,1"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(ColoredBraid::parse("1x", "1,1"), "bad braid token '1x'",
                         std::invalid_argument);
    CHECK_THROWS_AS(ColoredBraid::parse("1", ""), std::invalid_argument);
    CHECK_THROWS_AS(ColoredBraid::parse("1", "1,3"), std::invalid_argument);  // color 2 missing
    CHECK_THROWS_WITH_AS(ColoredBraid::parse("1", "1,a"), "bad color token 'a'",
                         std::invalid_argument);
}

TEST_CASE("compose") {
    const ColoredBraid a = ColoredBraid::parse("-1 -1", "1,2,3");
    const ColoredBraid b = ColoredBraid::parse("-2 -2", "1,2,3");
    const ColoredBraid chain = compose(a, b);
    CHECK(chain == ColoredBraid::parse("-1 -1 -2 -2", "1,2,3"));

    const ColoredBraid id3 = ColoredBraid::parse("", "1,2,3");
    CHECK(compose(chain, id3) == chain);
    CHECK(compose(id3, chain) == chain);

    const ColoredBraid half = ColoredBraid::parse("1", "1,2");  // top is (2,1)
    CHECK_THROWS_AS(compose(half, ColoredBraid::parse("1", "1,2")), std::invalid_argument);
}

TEST_CASE("include_strand") {
    const ColoredBraid hopf = ColoredBraid::parse("-1 -1", "1,2");
    const ColoredBraid bigger = include_strand(hopf, 2);
    CHECK(bigger.strand_count() == 3);
    CHECK(bigger.bottom().colors == std::vector<int>{1, 2, 2});
    CHECK(bigger.word() == hopf.word());
    CHECK(bigger.perm().back() == 2);  // the new strand is fixed

    CHECK(include_strand(ColoredBraid::parse("", "1"), 1) == ColoredBraid::parse("", "1,1"));
    CHECK(include_strand(hopf, 3).color_count() == 3);
    CHECK_THROWS_AS(include_strand(hopf, 4), std::invalid_argument);  // would skip color 3
    CHECK_THROWS_AS(include_strand(hopf, 0), std::invalid_argument);
}

TEST_CASE("monomial_weight on pinned words") {
    CHECK(monomial_weight(ColoredBraid::parse("-1 -1", "1,2")) == t(2, 1) * t(2, 2));
    CHECK(monomial_weight(ColoredBraid::parse("-1 -1 -2 -2", "1,2,3")) ==
          t(3, 1) * t(3, 2, 2) * t(3, 3));
    CHECK(monomial_weight(ColoredBraid::parse("", "1,2")).is_one());
    CHECK(monomial_weight(ColoredBraid::parse("1 1", "1,2")) == t(2, 1, -1) * t(2, 2, -1));
}

TEST_CASE("monomial_weight properties") {
    std::mt19937_64 rng(1209);
    for (int iter = 0; iter < 100; ++iter) {
        const ColoredBraid w = verify::random_open_braid(rng, 6, 12, 4);
        const int n = w.strand_count();

        if (n >= 3) {
            const int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 2));
            const ColoredBraid a(w.bottom(), {{i, 1}, {i + 1, 1}, {i, 1}});
            const ColoredBraid b(w.bottom(), {{i + 1, 1}, {i, 1}, {i + 1, 1}});
            CHECK(monomial_weight(a) == monomial_weight(b));
        }

        const auto k = static_cast<std::size_t>(rng() % (w.word().size() + 1));
        const ColoredBraid head(w.bottom(),
                                {w.word().begin(), w.word().begin() + static_cast<std::ptrdiff_t>(k)});
        const ColoredBraid tail(ColorSeq(w.state_before(k)),
                                {w.word().begin() + static_cast<std::ptrdiff_t>(k), w.word().end()});
        CHECK(monomial_weight(compose(head, tail)) == monomial_weight(head) * monomial_weight(tail));
    }
}

TEST_CASE("weight under stabilization") {
    std::mt19937_64 rng(88);
    for (int iter = 0; iter < 50; ++iter) {
        const ColoredBraid a = verify::random_closed_braid(rng, 5, 8, 3);
        const int n = a.strand_count();
        const int cn = a.bottom().colors.back();
        const int eps = (rng() % 2 == 0) ? 1 : -1;

        const ColoredBraid included = include_strand(a, cn);
        CHECK(monomial_weight(included) == monomial_weight(a));

        std::vector<Crossing> w = included.word();
        w.push_back({n, eps});
        const ColoredBraid stab(included.bottom(), std::move(w));
        const auto nv = static_cast<std::size_t>(a.color_count());
        CHECK(monomial_weight(stab) ==
              LaurentPoly::variable(nv, static_cast<std::size_t>(cn), -eps) * monomial_weight(a));
    }
}

TEST_CASE("trace consistency") {
    std::mt19937_64 rng(4096);
    for (int iter = 0; iter < 50; ++iter) {
        const ColoredBraid b = verify::random_open_braid(rng, 6, 12, 4);
        std::vector<int> state = b.bottom().colors;
        for (std::size_t j = 0; j < b.word().size(); ++j) {
            CHECK(b.state_before(j) == state);
            const int i = b.word()[j].index;
            std::swap(state[static_cast<std::size_t>(i - 1)], state[static_cast<std::size_t>(i)]);
        }
        CHECK(b.top().colors == state);
    }
}

TEST_CASE("closure_info") {
    const ClosureInfo hopf = closure_info(ColoredBraid::parse("-1 -1", "1,2"));
    CHECK(hopf.component_count() == 2);
    CHECK(hopf.axis_linking() == std::vector<int>{1, 1});

    const ClosureInfo trefoil = closure_info(ColoredBraid::parse("1 1 1", "1,1"));
    CHECK(trefoil.component_count() == 1);
    CHECK(trefoil.axis_linking() == std::vector<int>{2});
    CHECK(trefoil.components[0].color == 1);
    CHECK(trefoil.components[0].strands == std::vector<int>{1, 2});

    CHECK(closure_info(ColoredBraid::parse("", "1,2,3")).component_count() == 3);
    CHECK_THROWS_AS(closure_info(ColoredBraid::parse("1", "1,2")), std::invalid_argument);
}
