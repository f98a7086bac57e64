#include "cwp/rational_function.hpp"

#include <algorithm>

namespace cwp {

namespace {

// Split p = M * P where M is the monomial of per-variable minimum exponents
// (coefficient 1) and P has minimum exponent 0 in every variable.
LaurentPoly monomial_part(const LaurentPoly& p) {
    int n = p.arity();
    LaurentPoly::Exponents e(n, 0);
    for (int v = 0; v < n; ++v) e[v] = p.min_exponent(v);
    return LaurentPoly::monomial(n, std::move(e), 1);
}

LaurentPoly primitive_part(const LaurentPoly& p) {
    int n = p.arity();
    LaurentPoly::Exponents shift(n, 0);
    for (int v = 0; v < n; ++v) shift[v] = -p.min_exponent(v);
    return p.shifted(shift);
}

}  // namespace

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.arity() != den_.arity()) throw std::invalid_argument("arity mismatch");
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    int n = num_.arity();
    if (num_.is_zero()) {
        den_ = LaurentPoly::one(n);
        return;
    }

    for (int pass = 0; pass < 3; ++pass) {
        // Cancel the common monomial factor.
        LaurentPoly::Exponents shift(n, 0);
        bool any = false;
        for (int v = 0; v < n; ++v) {
            int m = std::min(num_.min_exponent(v), den_.min_exponent(v));
            if (m != 0) {
                shift[v] = -m;
                any = true;
            }
        }
        if (any) {
            num_ = num_.shifted(shift);
            den_ = den_.shifted(shift);
        }

        if (den_.is_monomial()) break;

        // Mutation denominators are monomials times a polynomial factor that
        // divides the numerator exactly (Laurent phenomenon); try both
        // directions.
        LaurentPoly dm = monomial_part(den_);
        LaurentPoly dp = primitive_part(den_);
        if (auto q = exact_divide(num_, dp)) {
            num_ = std::move(*q);
            den_ = std::move(dm);
            continue;
        }
        if (!num_.is_monomial()) {
            LaurentPoly nm = monomial_part(num_);
            LaurentPoly np = primitive_part(num_);
            if (auto q = exact_divide(den_, np)) {
                num_ = std::move(nm);
                den_ = std::move(*q);
                continue;
            }
        }

        // Small arity: full polynomial gcd.
        if (n <= 2) {
            LaurentPoly g = poly_gcd(num_, den_);
            if (!g.is_monomial() || g.leading_term().second != 1) {
                num_ = *exact_divide(num_, g);
                den_ = *exact_divide(den_, g);
                continue;
            }
        }
        break;
    }

    // Integer content.
    Int c;
    mpz_gcd(c.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
    if (c > 1) {
        num_ = num_.divide_content(c);
        den_ = den_.divide_content(c);
    }

    // Positive lexicographic leading coefficient in the denominator.
    if (den_.leading_term().second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

LaurentPoly RationalFunction::as_laurent() const {
    if (!is_laurent()) throw std::domain_error("non-monomial denominator");
    const auto& [e, c] = den_.leading_term();
    LaurentPoly::Exponents inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
    LaurentPoly r = num_.shifted(inv);
    if (c != 1) r = r.divide_content(c);
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const {
    return RationalFunction(-num_, den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long k) const {
    if (k == 0) return one(arity());
    RationalFunction base = k > 0 ? *this : inv();
    unsigned long e = k > 0 ? k : -k;
    return RationalFunction(base.num_.pow(e), base.den_.pow(e));
}

RationalFunction RationalFunction::partial(int var) const {
    if (var < 0 || var >= arity()) throw std::out_of_range("partial: variable index");
    return RationalFunction(num_.partial(var) * den_ - num_ * den_.partial(var), den_ * den_);
}

Rat RationalFunction::eval(const std::vector<Rat>& point) const {
    Rat d = den_.eval(point);
    if (d == 0) throw std::domain_error("evaluation pole");
    return num_.eval(point) / d;
}

int RationalFunction::denominator_exponent(int var) const {
    if (var < 0 || var >= arity()) throw std::out_of_range("variable index");
    if (!is_laurent()) throw std::domain_error("non-monomial denominator (Laurentness violation)");
    if (is_zero()) return 0;
    return den_.leading_term().first[var] - num_.min_exponent(var);
}

}  // namespace cwp
