#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cwp/numeric.hpp"

namespace cwp {

/// Sparse multivariate Laurent polynomial with arbitrary-precision integer
/// coefficients. Terms are kept in lexicographic order on the exponent
/// vector; zero coefficients are never stored, so equality is structural.
class LaurentPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Int>;

    explicit LaurentPoly(int arity) : arity_(arity) {
        if (arity < 0) throw std::invalid_argument("negative arity");
    }

    static LaurentPoly zero(int arity) { return LaurentPoly(arity); }

    static LaurentPoly constant(int arity, Int c) {
        LaurentPoly p(arity);
        p.add_term(Exponents(arity, 0), std::move(c));
        return p;
    }

    static LaurentPoly one(int arity) { return constant(arity, 1); }

    static LaurentPoly variable(int arity, int index, int power = 1) {
        if (index < 0 || index >= arity) throw std::out_of_range("variable index");
        LaurentPoly p(arity);
        Exponents e(arity, 0);
        e[index] = power;
        p.add_term(std::move(e), 1);
        return p;
    }

    static LaurentPoly monomial(int arity, Exponents e, Int c) {
        if (static_cast<int>(e.size()) != arity) throw std::invalid_argument("exponent length");
        LaurentPoly p(arity);
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of a given exponent vector (zero if absent).
    Int coeff(const Exponents& e) const;

    void add_term(Exponents e, Int c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Int& c) const;

    bool operator==(const LaurentPoly& o) const {
        return arity_ == o.arity_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly pow(unsigned long k) const;

    /// Exact partial derivative with respect to one variable (termwise;
    /// negative exponents differentiate like any other power).
    LaurentPoly partial(int var) const;

    /// Exact evaluation; coordinates hit by a negative exponent must be
    /// nonzero.
    Rat eval(const std::vector<Rat>& point) const;

    /// Minimum (resp. maximum) exponent of `var` over all terms.
    /// Requires a nonzero polynomial.
    int min_exponent(int var) const;
    int max_exponent(int var) const;

    /// Positive gcd of all coefficients; 0 for the zero polynomial.
    Int content() const;

    /// Multiply by the monomial with the given exponent shift.
    LaurentPoly shifted(const Exponents& delta) const;

    /// Divide every coefficient by c (must divide exactly).
    LaurentPoly divide_content(const Int& c) const;

    /// Lexicographically largest term.
    const std::pair<const Exponents, Int>& leading_term() const;

private:
    void check_arity(const LaurentPoly& o) const {
        if (arity_ != o.arity_) throw std::invalid_argument("arity mismatch");
    }

    int arity_;
    TermMap terms_;
};

/// Exact division a / b; nullopt when b does not divide a.
/// Works on Laurent polynomials by first clearing negative exponents.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// Gcd of two polynomials with nonnegative exponents, via a primitive
/// pseudo-remainder sequence recursing over the variables. Intended for the
/// small arities the reduction path and the test oracles need.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace cwp
