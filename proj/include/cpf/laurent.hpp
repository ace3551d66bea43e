// Exact sparse arithmetic in the ring of multivariable Laurent polynomials
// Z[t1^{±1}, ..., tn^{±1}] with arbitrary-precision integer coefficients.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpf {

using Coeff = boost::multiprecision::cpp_int;

// Exponent vector of a Laurent monomial. Fixed length equal to the ambient
// variable count; ordered lexicographically (the canonical term order).
using ExponentVec = std::vector<std::int64_t>;

// Exact division was requested for a pair with no quotient in the ring.
// At the call sites inside the invariant computation this can only happen
// through a convention bug, so it is never swallowed.
class NotDivisibleError : public std::runtime_error {
public:
    explicit NotDivisibleError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Sparse Laurent polynomial. Invariants: no stored zero coefficients, no
/// duplicate exponent vectors, every exponent vector has length nvars().
/// Values are immutable in spirit: all operations return fresh values and
/// none touch global state, so instances can be shared across threads.
class LaurentPoly {
public:
    using TermMap = std::map<ExponentVec, Coeff>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

    static LaurentPoly constant(std::size_t nvars, Coeff c);
    static LaurentPoly one(std::size_t nvars) { return constant(nvars, 1); }
    static LaurentPoly monomial(std::size_t nvars, ExponentVec exps, Coeff c);
    /// t_index^power, with 1-based variable index.
    static LaurentPoly variable(std::size_t nvars, std::size_t index, std::int64_t power = 1);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Coeff coefficient(const ExponentVec& exps) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Coeff& scalar);
    bool operator==(const LaurentPoly&) const = default;

    /// The exponent-doubling ring endomorphism t_i -> t_i^2.
    LaurentPoly square_variables() const;
    /// The bar involution t_i -> t_i^{-1}.
    LaurentPoly bar_involution() const;
    /// Sets t_var_index = 1 (1-based index). Keeps the ambient variable count.
    LaurentPoly specialize_one(std::size_t var_index) const;
    /// Re-embeds into a ring with more variables (new ones unused).
    LaurentPoly extend_vars(std::size_t new_nvars) const;
    /// Drops trailing variables, which must have exponent 0 in every term.
    LaurentPoly restrict_vars(std::size_t new_nvars) const;

    /// Canonical text form, terms in lexicographic order,
    /// e.g. "-1*t1^-1*t2^-1 + 1*t1*t2". Default names are t1..tn.
    std::string to_text(std::span<const std::string> names = {}) const;
    std::string to_latex(std::span<const std::string> names = {}) const;

private:
    void add_term(const ExponentVec& exps, const Coeff& c);
    void require_same_ring(const LaurentPoly& other) const;

    std::size_t nvars_ = 0;
    TermMap terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const Coeff& scalar);

/// Exact division in the Laurent ring. Returns the unique q with q*d == p,
/// or nullopt when p is not a multiple of d. Both inputs are first shifted by
/// monomials into ordinary polynomials (the shift is undone at the end), the
/// quotient is produced by term-driven long division against the
/// lexicographic leading term, and the product q*d is checked against p
/// before returning.
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& p, const LaurentPoly& d);

/// As try_exact_div, but throws NotDivisibleError instead of returning nullopt.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d);

/// Dense rows x cols matrix over the Laurent ring. All entries share nvars.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);
    static PolyMatrix identity(std::size_t n, std::size_t nvars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }
    LaurentPoly& at(std::size_t r, std::size_t c);
    const LaurentPoly& at(std::size_t r, std::size_t c) const;
    PolyMatrix extend_vars(std::size_t new_nvars) const;
    bool operator==(const PolyMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t nvars_ = 0;
    std::vector<LaurentPoly> cells_;
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);

/// Exact determinant by fraction-free Bareiss elimination. Rows are first
/// normalized by monomials so that entries are ordinary polynomials; the
/// normalization is accumulated as a monomial factor of the result. The 0x0
/// determinant is 1.
LaurentPoly determinant(const PolyMatrix& m);

/// Determinant by cofactor expansion. Exponential; kept as an independent
/// oracle for the Bareiss path on small matrices.
LaurentPoly determinant_cofactor(const PolyMatrix& m);

}  // namespace cpf
