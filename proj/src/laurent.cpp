#include "cpf/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace cpf {

namespace {

std::string var_name(std::span<const std::string> names, std::size_t i) {
    if (i < names.size()) return names[i];
    return "t" + std::to_string(i + 1);
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t nvars, Coeff c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.emplace(ExponentVec(nvars, 0), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::monomial(std::size_t nvars, ExponentVec exps, Coeff c) {
    if (exps.size() != nvars)
        throw std::invalid_argument("monomial: exponent vector length differs from nvars");
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.emplace(std::move(exps), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t index, std::int64_t power) {
    if (index < 1 || index > nvars)
        throw std::invalid_argument("variable index out of range");
    ExponentVec e(nvars, 0);
    e[index - 1] = power;
    return monomial(nvars, std::move(e), 1);
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           std::ranges::all_of(terms_.begin()->first, [](auto x) { return x == 0; });
}

Coeff LaurentPoly::coefficient(const ExponentVec& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Coeff(0) : it->second;
}

void LaurentPoly::add_term(const ExponentVec& exps, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::require_same_ring(const LaurentPoly& other) const {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("variable-count mismatch between operands");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    require_same_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    require_same_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    require_same_ring(rhs);
    LaurentPoly out(nvars_);
    ExponentVec e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    *this = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Coeff& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    out *= b;
    return out;
}
LaurentPoly operator*(LaurentPoly a, const Coeff& scalar) { return a *= scalar; }

LaurentPoly LaurentPoly::square_variables() const {
    LaurentPoly out(nvars_);
    // Doubling preserves lexicographic order, so hinted insertion stays linear.
    for (const auto& [e, c] : terms_) {
        ExponentVec d(e);
        for (auto& x : d) x *= 2;
        out.terms_.emplace_hint(out.terms_.end(), std::move(d), c);
    }
    return out;
}

LaurentPoly LaurentPoly::bar_involution() const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        ExponentVec d(e);
        for (auto& x : d) x = -x;
        out.terms_.emplace(std::move(d), c);
    }
    return out;
}

LaurentPoly LaurentPoly::specialize_one(std::size_t var_index) const {
    if (var_index < 1 || var_index > nvars_)
        throw std::invalid_argument("specialize_one: variable index out of range");
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        ExponentVec d(e);
        d[var_index - 1] = 0;
        out.add_term(d, c);
    }
    return out;
}

LaurentPoly LaurentPoly::extend_vars(std::size_t new_nvars) const {
    if (new_nvars < nvars_)
        throw std::invalid_argument("extend_vars: cannot shrink the ring");
    LaurentPoly out(new_nvars);
    for (const auto& [e, c] : terms_) {
        ExponentVec d(e);
        d.resize(new_nvars, 0);
        out.terms_.emplace_hint(out.terms_.end(), std::move(d), c);
    }
    return out;
}

LaurentPoly LaurentPoly::restrict_vars(std::size_t new_nvars) const {
    if (new_nvars > nvars_)
        throw std::invalid_argument("restrict_vars: cannot grow the ring");
    LaurentPoly out(new_nvars);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = new_nvars; i < nvars_; ++i)
            if (e[i] != 0)
                throw std::invalid_argument("restrict_vars: dropped variable has nonzero exponent");
        ExponentVec d(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(new_nvars));
        out.terms_.emplace_hint(out.terms_.end(), std::move(d), c);
    }
    return out;
}

std::string LaurentPoly::to_text(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << "*" << var_name(names, i);
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

std::string LaurentPoly::to_latex(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Coeff a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = std::ranges::any_of(e, [](auto x) { return x != 0; });
        if (!has_vars || a != 1) os << a.str();
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            std::string nm = var_name(names, i);
            // "t3" renders as t_{3}; anything else keeps its own name.
            if (nm.size() > 1 && (nm[0] == 't' || nm[0] == 'x') &&
                std::all_of(nm.begin() + 1, nm.end(),
                            [](unsigned char ch) { return std::isdigit(ch); }))
                os << " " << nm[0] << "_{" << nm.substr(1) << "}";
            else
                os << " " << nm;
            if (e[i] != 1) os << "^{" << e[i] << "}";
        }
    }
    return os.str();
}

namespace {

// Componentwise minimum exponent over all terms; p must be nonzero.
ExponentVec min_exponents(const LaurentPoly& p) {
    ExponentVec mins = p.terms().begin()->first;
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < mins.size(); ++i) mins[i] = std::min(mins[i], e[i]);
    return mins;
}

LaurentPoly shift_by(const LaurentPoly& p, const ExponentVec& delta) {
    LaurentPoly m = LaurentPoly::monomial(p.nvars(), delta, 1);
    return p * m;
}

ExponentVec negated(ExponentVec e) {
    for (auto& x : e) x = -x;
    return e;
}

}  // namespace

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("exact division by zero");
    if (p.nvars() != d.nvars())
        throw std::invalid_argument("variable-count mismatch between operands");
    const std::size_t nv = p.nvars();
    if (p.is_zero()) return LaurentPoly(nv);

    // Normalize both operands into ordinary polynomials; the monomial shifts
    // are undone on the quotient at the end.
    ExponentVec pmin = min_exponents(p);
    ExponentVec dmin = min_exponents(d);
    LaurentPoly rem = shift_by(p, negated(pmin));
    LaurentPoly den = shift_by(d, negated(dmin));

    const auto& dlead = *den.terms().rbegin();
    LaurentPoly quot(nv);
    ExponentVec qe(nv);
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        for (std::size_t i = 0; i < nv; ++i) {
            qe[i] = rlead.first[i] - dlead.first[i];
            if (qe[i] < 0) return std::nullopt;
        }
        if (rlead.second % dlead.second != 0) return std::nullopt;
        LaurentPoly qterm = LaurentPoly::monomial(nv, qe, rlead.second / dlead.second);
        quot += qterm;
        rem -= qterm * den;
    }

    ExponentVec back(nv);
    for (std::size_t i = 0; i < nv; ++i) back[i] = pmin[i] - dmin[i];
    LaurentPoly result = shift_by(quot, back);
    if (result * d != p) return std::nullopt;
    return result;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d) {
    auto q = try_exact_div(p, d);
    if (!q)
        throw NotDivisibleError("exact_div: (" + p.to_text() + ") is not divisible by (" +
                                d.to_text() + ")");
    return *q;
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), cells_(rows * cols, LaurentPoly(nvars)) {}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t nvars) {
    PolyMatrix m(n, n, nvars);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one(nvars);
    return m;
}

LaurentPoly& PolyMatrix::at(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return cells_[r * cols_ + c];
}

const LaurentPoly& PolyMatrix::at(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return cells_[r * cols_ + c];
}

PolyMatrix PolyMatrix::extend_vars(std::size_t new_nvars) const {
    PolyMatrix out(rows_, cols_, new_nvars);
    for (std::size_t i = 0; i < cells_.size(); ++i) out.cells_[i] = cells_[i].extend_vars(new_nvars);
    return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows() || a.nvars() != b.nvars())
        throw std::invalid_argument("matrix product: incompatible shapes or rings");
    PolyMatrix out(a.rows(), b.cols(), a.nvars());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b.at(k, j).is_zero()) out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.nvars() != b.nvars())
        throw std::invalid_argument("matrix difference: incompatible shapes or rings");
    PolyMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) -= b.at(i, j);
    return out;
}

LaurentPoly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    const std::size_t nv = m.nvars();
    if (n == 0) return LaurentPoly::one(nv);

    PolyMatrix work = m;
    ExponentVec factor_exps(nv, 0);
    int sign = 1;

    for (std::size_t r = 0; r < n; ++r) {
        ExponentVec mins;
        for (std::size_t c = 0; c < n; ++c) {
            const auto& cell = work.at(r, c);
            if (cell.is_zero()) continue;
            ExponentVec cm = min_exponents(cell);
            if (mins.empty())
                mins = cm;
            else
                for (std::size_t i = 0; i < nv; ++i) mins[i] = std::min(mins[i], cm[i]);
        }
        if (mins.empty()) return LaurentPoly(nv);  // zero row
        ExponentVec neg = negated(mins);
        for (std::size_t c = 0; c < n; ++c)
            if (!work.at(r, c).is_zero()) work.at(r, c) = shift_by(work.at(r, c), neg);
        for (std::size_t i = 0; i < nv; ++i) factor_exps[i] += mins[i];
    }

    LaurentPoly prev = LaurentPoly::one(nv);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && work.at(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return LaurentPoly(nv);
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(work.at(pivot, j), work.at(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly num =
                    work.at(i, j) * work.at(k, k) - work.at(i, k) * work.at(k, j);
                work.at(i, j) =
                    prev.is_one() ? std::move(num) : exact_div(num, prev);
            }
            work.at(i, k) = LaurentPoly(nv);
        }
        prev = work.at(k, k);
    }

    LaurentPoly det = work.at(n - 1, n - 1) * LaurentPoly::monomial(nv, factor_exps, 1);
    if (sign < 0) det = -det;
    return det;
}

LaurentPoly determinant_cofactor(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    const std::size_t nv = m.nvars();
    if (n == 0) return LaurentPoly::one(nv);
    if (n == 1) return m.at(0, 0);
    LaurentPoly det(nv);
    for (std::size_t c = 0; c < n; ++c) {
        if (m.at(0, c).is_zero()) continue;
        PolyMatrix minor(n - 1, n - 1, nv);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor.at(i - 1, jj++) = m.at(i, j);
            }
        }
        LaurentPoly term = m.at(0, c) * determinant_cofactor(minor);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

}  // namespace cpf
