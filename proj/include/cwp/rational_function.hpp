#pragma once

#include "cwp/laurent.hpp"

namespace cwp {

/// Exact rational function num/den over the Laurent ring. Kept reduced:
/// no common monomial factor, integer content 1, positive lexicographic
/// leading coefficient in the denominator. Non-monomial common factors of
/// the shapes mutation produces are cancelled by exact division; full
/// polynomial gcd kicks in for arity <= 2.
class RationalFunction {
public:
    RationalFunction(LaurentPoly num, LaurentPoly den);

    static RationalFunction from_poly(LaurentPoly p) {
        int n = p.arity();
        return RationalFunction(std::move(p), LaurentPoly::one(n));
    }
    static RationalFunction zero(int arity) { return from_poly(LaurentPoly::zero(arity)); }
    static RationalFunction one(int arity) { return from_poly(LaurentPoly::one(arity)); }
    static RationalFunction constant(int arity, Int c) {
        return from_poly(LaurentPoly::constant(arity, std::move(c)));
    }
    static RationalFunction variable(int arity, int index, int power = 1) {
        return from_poly(LaurentPoly::variable(arity, index, power));
    }

    int arity() const { return num_.arity(); }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// True when the reduced denominator is a monomial, i.e. the value is a
    /// Laurent polynomial.
    bool is_laurent() const { return den_.is_monomial(); }

    /// The value as a single Laurent polynomial; requires is_laurent().
    LaurentPoly as_laurent() const;

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction inv() const;
    RationalFunction pow(long k) const;

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    /// Exact partial derivative (quotient rule).
    RationalFunction partial(int var) const;

    /// Exact evaluation; throws std::domain_error on a pole.
    Rat eval(const std::vector<Rat>& point) const;

    /// Exponent of variable `var` in the monomial denominator of the
    /// Laurent expansion, i.e. minus the minimum exponent over all
    /// monomials; delta_x(x) = -1. Throws std::domain_error when the
    /// reduced denominator is not a monomial (a Laurentness violation).
    int denominator_exponent(int var) const;

private:
    void reduce();

    LaurentPoly num_, den_;
};

}  // namespace cwp
