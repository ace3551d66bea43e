#include "cpf/verify.hpp"

#include <algorithm>
#include <cassert>

#include "cpf/gassner.hpp"

namespace cpf::verify {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(const CheckConfig& cfg, std::uint64_t salt, int trial) {
    return splitmix64(cfg.seed ^ splitmix64(salt ^ static_cast<std::uint64_t>(trial)));
}

int below(std::mt19937_64& rng, int bound) {
    assert(bound > 0);
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

int coin_sign(std::mt19937_64& rng) { return below(rng, 2) == 0 ? 1 : -1; }

int effective_trials(const CheckConfig& cfg, int fallback) {
    return cfg.trials > 0 ? cfg.trials : fallback;
}

ColorSeq random_coloring(std::mt19937_64& rng, int n, int max_colors) {
    const int target = 1 + below(rng, std::min(n, std::max(1, max_colors)));
    std::vector<int> cols(static_cast<std::size_t>(n));
    for (auto& c : cols) c = 1 + below(rng, target);
    // Relabel by first appearance so the coloring is onto {1..mu}.
    std::vector<int> remap(static_cast<std::size_t>(target) + 1, 0);
    int next = 1;
    for (auto& c : cols) {
        if (remap[static_cast<std::size_t>(c)] == 0) remap[static_cast<std::size_t>(c)] = next++;
        c = remap[static_cast<std::size_t>(c)];
    }
    return ColorSeq(std::move(cols));
}

std::vector<Crossing> random_word(std::mt19937_64& rng, int n, int len) {
    std::vector<Crossing> word;
    word.reserve(static_cast<std::size_t>(len));
    for (int j = 0; j < len; ++j) word.push_back({1 + below(rng, n - 1), coin_sign(rng)});
    return word;
}

// Appends letters that bubble the top coloring back onto the bottom one.
void close_colors(std::vector<Crossing>& word, const std::vector<int>& bottom,
                  std::mt19937_64& rng) {
    std::vector<int> cur = bottom;
    for (const Crossing& x : word)
        std::swap(cur[static_cast<std::size_t>(x.index - 1)], cur[static_cast<std::size_t>(x.index)]);
    while (cur != bottom) {
        std::size_t i = 0;
        while (cur[i] == bottom[i]) ++i;
        std::size_t j = i + 1;
        while (cur[j] != bottom[i]) ++j;
        for (std::size_t p = j; p > i; --p) {
            word.push_back({static_cast<int>(p), coin_sign(rng)});
            std::swap(cur[p - 1], cur[p]);
        }
    }
}

std::string braid_desc(const ColoredBraid& b) {
    return "braid '" + b.word_text() + "' colors " + b.colors_text();
}

Potential standard_potential(const ColoredBraid& b) { return potential_function(b); }

ColoredBraid rotate_word(const ColoredBraid& b, std::size_t k) {
    std::vector<Crossing> w(b.word().begin() + static_cast<std::ptrdiff_t>(k), b.word().end());
    w.insert(w.end(), b.word().begin(), b.word().begin() + static_cast<std::ptrdiff_t>(k));
    return ColoredBraid(ColorSeq(b.state_before(k)), std::move(w));
}

ColoredBraid stabilize(const ColoredBraid& b, int eps) {
    std::vector<int> cols = b.bottom().colors;
    cols.push_back(cols.back());
    std::vector<Crossing> w = b.word();
    w.push_back({b.strand_count(), eps});
    return ColoredBraid(ColorSeq(std::move(cols)), std::move(w));
}

}  // namespace

ColoredBraid random_open_braid(std::mt19937_64& rng, int max_strands, int max_len,
                               int max_colors) {
    const int n = 2 + below(rng, std::max(1, max_strands - 1));
    ColorSeq colors = random_coloring(rng, n, max_colors);
    return ColoredBraid(std::move(colors), random_word(rng, n, below(rng, max_len + 1)));
}

ColoredBraid random_closed_braid(std::mt19937_64& rng, int max_strands, int max_len,
                                 int max_colors) {
    const int n = 2 + below(rng, std::max(1, max_strands - 1));
    ColorSeq colors = random_coloring(rng, n, max_colors);
    std::vector<Crossing> word = random_word(rng, n, below(rng, max_len + 1));
    close_colors(word, colors.colors, rng);
    return ColoredBraid(std::move(colors), std::move(word));
}

CheckReport check_markov(const CheckConfig& cfg, const PotentialFn& f) {
    const PotentialFn fn = f ? f : PotentialFn(standard_potential);
    CheckReport report{"markov", effective_trials(cfg, 200), {}};
    for (int trial = 0; trial < report.trials; ++trial) {
        const std::uint64_t ts = trial_seed(cfg, 0xa11ce, trial);
        std::mt19937_64 rng(ts);
        const ColoredBraid b = random_closed_braid(rng, cfg.max_strands, cfg.max_len, cfg.max_colors);
        const Potential base = fn(b);

        if (!b.word().empty()) {
            const auto k = static_cast<std::size_t>(below(rng, static_cast<int>(b.word().size()) + 1));
            const Potential got = fn(rotate_word(b, k));
            if (got != base)
                report.failures.push_back({ts,
                                           "conjugation: " + braid_desc(b) + " rotated at " +
                                               std::to_string(k),
                                           base.to_text(), got.to_text()});
        }

        const Potential got = fn(stabilize(b, coin_sign(rng)));
        if (got != base)
            report.failures.push_back(
                {ts, "stabilization: " + braid_desc(b), base.to_text(), got.to_text()});
    }
    return report;
}

CheckReport check_braid_relations(const CheckConfig& cfg) {
    CheckReport report{"braid_relations", effective_trials(cfg, 100), {}};
    for (int trial = 0; trial < report.trials; ++trial) {
        const std::uint64_t ts = trial_seed(cfg, 0xb4a1d, trial);
        std::mt19937_64 rng(ts);
        const int n = 3 + below(rng, std::max(1, cfg.max_strands - 2));
        const ColorSeq colors = random_coloring(rng, n, cfg.max_colors);

        const auto fail = [&](const std::string& what, const std::string& expected,
                              const std::string& actual) {
            report.failures.push_back({ts, what + " on colors " + ColoredBraid(colors, {}).colors_text(),
                                       expected, actual});
        };

        {
            const int i = 1 + below(rng, n - 2);
            const ColoredBraid a(colors, {{i, 1}, {i + 1, 1}, {i, 1}});
            const ColoredBraid b(colors, {{i + 1, 1}, {i, 1}, {i + 1, 1}});
            if (word_matrix(a) != word_matrix(b))
                fail("braid relation sigma_" + std::to_string(i), "equal matrices", "differ");
            if (monomial_weight(a) != monomial_weight(b))
                fail("braid relation weight sigma_" + std::to_string(i), "equal weights", "differ");
        }

        if (n >= 4) {
            const int i = 1 + below(rng, n - 3);
            const int j = i + 2 + below(rng, n - 1 - (i + 2) + 1);
            const int si = coin_sign(rng), sj = coin_sign(rng);
            const ColoredBraid a(colors, {{i, si}, {j, sj}});
            const ColoredBraid b(colors, {{j, sj}, {i, si}});
            if (word_matrix(a) != word_matrix(b))
                fail("far commutation sigma_" + std::to_string(i) + ", sigma_" + std::to_string(j),
                     "equal matrices", "differ");
            if (monomial_weight(a) != monomial_weight(b))
                fail("far commutation weight", "equal weights", "differ");
        }

        {
            const int i = 1 + below(rng, n - 1);
            const int s = coin_sign(rng);
            const ColoredBraid a(colors, {{i, s}, {i, -s}});
            const auto id = PolyMatrix::identity(static_cast<std::size_t>(n - 1),
                                                 static_cast<std::size_t>(colors.mu));
            if (word_matrix(a).mat != id)
                fail("inverse pair sigma_" + std::to_string(i), "identity matrix",
                     word_matrix(a).mat.at(0, 0).to_text());
            if (!monomial_weight(a).is_one()) fail("inverse pair weight", "1", monomial_weight(a).to_text());
        }

        {
            std::mt19937_64 rng2(splitmix64(ts));
            const ColoredBraid w = random_open_braid(rng2, cfg.max_strands, cfg.max_len, cfg.max_colors);
            const auto k = static_cast<std::size_t>(below(rng2, static_cast<int>(w.word().size()) + 1));
            const ColoredBraid a(w.bottom(), {w.word().begin(), w.word().begin() + static_cast<std::ptrdiff_t>(k)});
            const ColoredBraid c(ColorSeq(w.state_before(k)),
                                 {w.word().begin() + static_cast<std::ptrdiff_t>(k), w.word().end()});
            const GassnerMatrix whole = word_matrix(compose(a, c));
            if (whole.mat != word_matrix(c).mat * word_matrix(a).mat)
                report.failures.push_back({ts, "product rule: " + braid_desc(w) + " split at " +
                                                   std::to_string(k),
                                           "M(ab) == M(b) M(a)", "differ"});
            if (monomial_weight(compose(a, c)) != monomial_weight(a) * monomial_weight(c))
                report.failures.push_back({ts, "weight multiplicativity: " + braid_desc(w),
                                           "<ab> == <a><b>", "differ"});
        }
    }
    return report;
}

CheckReport check_lemma_rows(const CheckConfig& cfg) {
    CheckReport report{"lemma_rows", effective_trials(cfg, 200), {}};
    for (int trial = 0; trial < report.trials; ++trial) {
        const std::uint64_t ts = trial_seed(cfg, 0x1e44a, trial);
        std::mt19937_64 rng(ts);
        const ColoredBraid b = random_closed_braid(rng, cfg.max_strands, cfg.max_len, cfg.max_colors);
        const auto n = static_cast<std::size_t>(b.strand_count());
        const auto nv = static_cast<std::size_t>(b.color_count());

        PolyMatrix unreduced(0, 0, 0);
        try {
            unreduced = unreduced_extend(b);
        } catch (const NotDivisibleError& e) {
            report.failures.push_back({ts, braid_desc(b), "exact row division", e.what()});
            continue;
        }

        std::vector<LaurentPoly> prefix;
        ExponentVec exps(nv, 0);
        for (std::size_t i = 0; i < n; ++i) {
            exps[static_cast<std::size_t>(b.bottom().colors[i] - 1)] += 1;
            prefix.push_back(LaurentPoly::monomial(nv, exps, 1) - LaurentPoly::one(nv));
        }

        const PolyMatrix diff =
            word_matrix(b).mat - PolyMatrix::identity(n - 1, nv);
        for (std::size_t c = 0; c + 1 < n; ++c) {
            LaurentPoly sum(nv);
            for (std::size_t i = 0; i + 1 < n; ++i) sum += prefix[i] * diff.at(i, c);
            sum += prefix[n - 1] * unreduced.at(n - 1, c);
            if (!sum.is_zero()) {
                report.failures.push_back(
                    {ts, "row identity, column " + std::to_string(c) + ": " + braid_desc(b), "0",
                     sum.to_text()});
            }
        }

        PolyMatrix del(1, n, nv);
        for (std::size_t i = 0; i < n; ++i) del.at(0, i) = prefix[i];
        if (del * unreduced != del)
            report.failures.push_back({ts, "connecting row: " + braid_desc(b), "del * B == del", "differ"});

        for (std::size_t r = 0; r < n; ++r) {
            const LaurentPoly expected =
                r + 1 == n ? LaurentPoly::one(nv) : LaurentPoly(nv);
            if (unreduced.at(r, n - 1) != expected)
                report.failures.push_back({ts, "last column: " + braid_desc(b), "(0,...,0,1)^T",
                                           unreduced.at(r, n - 1).to_text()});
        }
    }
    return report;
}

CheckReport check_jiang(const CheckConfig& cfg) {
    CheckReport report{"jiang", effective_trials(cfg, 100), {}};
    for (int trial = 0; trial < report.trials; ++trial) {
        const std::uint64_t ts = trial_seed(cfg, 0x71a46, trial);
        std::mt19937_64 rng(ts);

        {  // R1: the positive Hopf braid, shuffled by random Markov moves, gives 1.
            ColoredBraid h = ColoredBraid::parse("-1 -1", "1,2");
            const int moves = below(rng, 4);
            for (int m = 0; m < moves; ++m) {
                if (coin_sign(rng) > 0 && !h.word().empty())
                    h = rotate_word(h, static_cast<std::size_t>(below(rng, static_cast<int>(h.word().size()))));
                else
                    h = stabilize(h, coin_sign(rng));
            }
            const Potential p = potential_function(h);
            if (p.kind != PotentialKind::polynomial || !p.value.is_one())
                report.failures.push_back({ts, "R1: " + braid_desc(h), "1", p.to_text()});
        }

        {  // R2: adding a split unknotted component kills the potential.
            const ColoredBraid a = random_closed_braid(rng, cfg.max_strands, cfg.max_len, cfg.max_colors);
            const int extra = 1 + below(rng, a.color_count() + 1);
            const Potential p = potential_function(include_strand(a, extra));
            if (!p.value.is_zero())
                report.failures.push_back(
                    {ts, "R2: " + braid_desc(a) + " + split strand color " + std::to_string(extra),
                     "0", p.to_text()});
        }

        {  // R3: a clasp with a fresh strand multiplies by t_{c_n} - t_{c_n}^{-1}.
            const ColoredBraid a = random_closed_braid(rng, cfg.max_strands, cfg.max_len, cfg.max_colors);
            const int n = a.strand_count();
            const int extra = 1 + below(rng, a.color_count() + 1);
            std::vector<int> cols = a.bottom().colors;
            cols.push_back(extra);
            std::vector<Crossing> w = a.word();
            w.push_back({n, -1});
            w.push_back({n, -1});
            const ColoredBraid clasped(ColorSeq(std::move(cols)), std::move(w));

            const Potential pa = potential_function(a);
            const Potential pc = potential_function(clasped);
            const auto nv = static_cast<std::size_t>(clasped.color_count());
            const auto cn = static_cast<std::size_t>(a.bottom().colors.back());
            LaurentPoly expected;
            if (pa.kind == PotentialKind::knot_fraction) {
                // The clasp factor cancels the knot denominator (same color).
                expected = pa.value.extend_vars(nv);
            } else {
                const LaurentPoly factor =
                    LaurentPoly::variable(nv, cn) - LaurentPoly::variable(nv, cn, -1);
                expected = factor * pa.value.extend_vars(nv);
            }
            if (pc.value != expected)
                report.failures.push_back({ts, "R3: " + braid_desc(a) + " clasped with color " +
                                                   std::to_string(extra),
                                           expected.to_text(), pc.value.to_text()});
        }

        {  // R4: f(sigma_1^2 a) + f(sigma_1^{-2} a) == (t_{c1} t_{c2} + t_{c1}^{-1} t_{c2}^{-1}) f(a),
           // the double-twist relation in the parallel-strand realization.
            const ColoredBraid a = random_closed_braid(rng, cfg.max_strands, cfg.max_len, cfg.max_colors);
            const auto with_twist = [&](int s) {
                std::vector<Crossing> w{{1, s}, {1, s}};
                w.insert(w.end(), a.word().begin(), a.word().end());
                return ColoredBraid(a.bottom(), std::move(w));
            };
            const Potential p0 = potential_function(a);
            const Potential pmm = potential_function(with_twist(+1));
            const Potential ppp = potential_function(with_twist(-1));
            const auto nv = static_cast<std::size_t>(a.color_count());
            const auto c1 = static_cast<std::size_t>(a.bottom().colors[0]);
            const auto c2 = static_cast<std::size_t>(a.bottom().colors[1]);
            const LaurentPoly factor =
                LaurentPoly::variable(nv, c1) * LaurentPoly::variable(nv, c2) +
                LaurentPoly::variable(nv, c1, -1) * LaurentPoly::variable(nv, c2, -1);
            if (pmm.kind != p0.kind || ppp.kind != p0.kind ||
                pmm.value + ppp.value != factor * p0.value)
                report.failures.push_back({ts, "R4: " + braid_desc(a),
                                           (factor * p0.value).to_text(),
                                           (pmm.value + ppp.value).to_text()});
        }
    }
    return report;
}

CheckReport check_routes(const CheckConfig& cfg) {
    CheckReport report{"routes", effective_trials(cfg, 50), {}};

    const auto run_one = [&](const ColoredBraid& b, std::uint64_t ts) {
        const Potential direct = potential_function(b);
        const Potential via = potential_via_axis(b);
        if (direct != via)
            report.failures.push_back(
                {ts, "route equality: " + braid_desc(b), direct.to_text(), via.to_text()});

        const auto nv = static_cast<std::size_t>(b.color_count());
        LaurentPoly at_one = axis_potential(b);
        for (std::size_t v = 1; v <= nv; ++v) at_one = at_one.specialize_one(v);
        const LaurentPoly x = LaurentPoly::variable(nv + 1, nv + 1);
        const LaurentPoly x_inv = LaurentPoly::variable(nv + 1, nv + 1, -1);
        LaurentPoly rhs = LaurentPoly::one(nv + 1);
        for (int lambda : closure_info(b).axis_linking())
            rhs *= LaurentPoly::variable(nv + 1, nv + 1, lambda) -
                   LaurentPoly::variable(nv + 1, nv + 1, -lambda);
        if (at_one * (x - x_inv) != rhs)
            report.failures.push_back({ts, "axis value at t = 1: " + braid_desc(b), rhs.to_text(),
                                       (at_one * (x - x_inv)).to_text()});
    };

    run_one(ColoredBraid::parse("-1 -1", "1,2"), 0);
    run_one(ColoredBraid::parse("-1 -1 -2 -2", "1,2,3"), 1);
    for (int trial = 0; trial < report.trials; ++trial) {
        const std::uint64_t ts = trial_seed(cfg, 0x40a7e, trial);
        std::mt19937_64 rng(ts);
        run_one(random_closed_braid(rng, cfg.max_strands, cfg.max_len, cfg.max_colors), ts);
    }
    return report;
}

CheckReport check_symmetry(const CheckConfig& cfg) {
    CheckReport report{"symmetry", effective_trials(cfg, 100), {}};
    for (int trial = 0; trial < report.trials; ++trial) {
        const std::uint64_t ts = trial_seed(cfg, 0x5b44a, trial);
        std::mt19937_64 rng(ts);
        const ColoredBraid b = random_closed_braid(rng, cfg.max_strands, cfg.max_len, cfg.max_colors);
        const Potential p = potential_function(b);
        LaurentPoly expected = p.value;
        if (p.kind == PotentialKind::polynomial && p.components % 2 != 0) expected = -expected;
        if (p.value.bar_involution() != expected)
            report.failures.push_back({ts, "bar symmetry: " + braid_desc(b), expected.to_text(),
                                       p.value.bar_involution().to_text()});
    }
    return report;
}

std::vector<std::string> check_names() {
    return {"markov", "braid_relations", "lemma_rows", "jiang", "routes", "symmetry"};
}

CheckReport run_check(const std::string& name, const CheckConfig& cfg) {
    if (name == "markov") return check_markov(cfg);
    if (name == "braid_relations") return check_braid_relations(cfg);
    if (name == "lemma_rows") return check_lemma_rows(cfg);
    if (name == "jiang") return check_jiang(cfg);
    if (name == "routes") return check_routes(cfg);
    if (name == "symmetry") return check_symmetry(cfg);
    throw std::invalid_argument("unknown check '" + name + "'");
}

std::vector<CheckReport> run_all(const CheckConfig& cfg) {
    std::vector<CheckReport> reports;
    for (const auto& name : check_names()) reports.push_back(run_check(name, cfg));
    return reports;
}

}  // namespace cpf::verify
