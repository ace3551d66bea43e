#include "cpf/gassner.hpp"

#include <cassert>

namespace cpf {

namespace {

ColorSeq swapped(const ColorSeq& s, int i) {
    std::vector<int> cols = s.colors;
    std::swap(cols[static_cast<std::size_t>(i - 1)], cols[static_cast<std::size_t>(i)]);
    return ColorSeq(std::move(cols));
}

}  // namespace

GassnerMatrix generator_matrix(int n, int i, int sign, const ColorSeq& source) {
    if (n < 2) throw std::invalid_argument("generator matrix needs at least 2 strands");
    if (i < 1 || i >= n)
        throw std::invalid_argument("generator index " + std::to_string(i) +
                                    " out of range for " + std::to_string(n) + " strands");
    if (static_cast<int>(source.size()) != n)
        throw std::invalid_argument("source color sequence has wrong length");

    const std::size_t nv = static_cast<std::size_t>(source.mu);
    ColorSeq target = swapped(source, i);
    PolyMatrix m = PolyMatrix::identity(static_cast<std::size_t>(n - 1), nv);

    const auto one = LaurentPoly::one(nv);
    if (sign > 0) {
        // Over-crossing strand enters at position i; its color supplies the
        // variable (equivalently the color at position i+1 of the target).
        const std::size_t k = static_cast<std::size_t>(source.colors[static_cast<std::size_t>(i - 1)]);
        const auto t = LaurentPoly::variable(nv, k);
        if (n == 2) {
            m.at(0, 0) = -t;
        } else if (i == 1) {
            m.at(0, 0) = -t;
            m.at(1, 0) = one;
        } else if (i == n - 1) {
            const std::size_t r = static_cast<std::size_t>(n - 3);
            m.at(r, r + 1) = t;
            m.at(r + 1, r + 1) = -t;
        } else {
            const std::size_t r = static_cast<std::size_t>(i - 2);
            m.at(r, r + 1) = t;
            m.at(r + 1, r + 1) = -t;
            m.at(r + 2, r + 1) = one;
        }
    } else {
        // Inverse letter: over-crossing strand enters at position i+1.
        const std::size_t k = static_cast<std::size_t>(source.colors[static_cast<std::size_t>(i)]);
        const auto tinv = LaurentPoly::variable(nv, k, -1);
        if (n == 2) {
            m.at(0, 0) = -tinv;
        } else if (i == 1) {
            m.at(0, 0) = -tinv;
            m.at(1, 0) = tinv;
        } else if (i == n - 1) {
            const std::size_t r = static_cast<std::size_t>(n - 3);
            m.at(r, r + 1) = one;
            m.at(r + 1, r + 1) = -tinv;
        } else {
            const std::size_t r = static_cast<std::size_t>(i - 2);
            m.at(r, r + 1) = one;
            m.at(r + 1, r + 1) = -tinv;
            m.at(r + 2, r + 1) = tinv;
        }
#ifndef NDEBUG
        // The inverse letter viewed backwards is the positive letter from the
        // target boundary; their matrices must cancel.
        GassnerMatrix fwd = generator_matrix(n, i, +1, target);
        assert(fwd.mat * m == PolyMatrix::identity(static_cast<std::size_t>(n - 1), nv));
#endif
    }
    return GassnerMatrix{std::move(m), source, std::move(target)};
}

GassnerMatrix word_matrix(const ColoredBraid& b) {
    const int n = b.strand_count();
    const std::size_t nv = static_cast<std::size_t>(b.color_count());
    PolyMatrix acc = PolyMatrix::identity(static_cast<std::size_t>(n - 1), nv);
    for (std::size_t j = 0; j < b.word().size(); ++j) {
        const Crossing& x = b.word()[j];
        GassnerMatrix g = generator_matrix(n, x.index, x.sign, ColorSeq(b.state_before(j)));
        acc = g.mat * acc;
    }
    return GassnerMatrix{std::move(acc), b.bottom(), b.top()};
}

PolyMatrix unreduced_extend(const ColoredBraid& b) {
    if (!b.is_closed())
        throw std::invalid_argument("unreduced_extend requires a closed-colorable braid");
    const std::size_t n = static_cast<std::size_t>(b.strand_count());
    const std::size_t nv = static_cast<std::size_t>(b.color_count());
    const PolyMatrix reduced = word_matrix(b).mat;
    const PolyMatrix diff = reduced - PolyMatrix::identity(n - 1, nv);

    // Prefix color products t_{c_1}...t_{c_i} - 1.
    std::vector<LaurentPoly> prefix;
    prefix.reserve(n);
    ExponentVec exps(nv, 0);
    for (std::size_t i = 0; i < n; ++i) {
        exps[static_cast<std::size_t>(b.bottom().colors[i] - 1)] += 1;
        prefix.push_back(LaurentPoly::monomial(nv, exps, 1) - LaurentPoly::one(nv));
    }

    PolyMatrix out(n, n, nv);
    for (std::size_t r = 0; r + 1 < n; ++r)
        for (std::size_t c = 0; c + 1 < n; ++c) out.at(r, c) = reduced.at(r, c);
    out.at(n - 1, n - 1) = LaurentPoly::one(nv);
    for (std::size_t c = 0; c + 1 < n; ++c) {
        LaurentPoly num(nv);
        for (std::size_t i = 0; i + 1 < n; ++i) num += prefix[i] * diff.at(i, c);
        out.at(n - 1, c) = exact_div(-num, prefix[n - 1]);
    }
    return out;
}

}  // namespace cpf
