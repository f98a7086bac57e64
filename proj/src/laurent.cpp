#include "cwp/laurent.hpp"

#include <algorithm>

namespace cwp {

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Int LaurentPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(Exponents e, Int c) {
    if (static_cast<int>(e.size()) != arity_) throw std::invalid_argument("exponent length");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(std::move(e), std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_arity(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_arity(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_arity(o);
    LaurentPoly r(arity_);
    Exponents e(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const Int& c) const {
    LaurentPoly r(arity_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned long k) const {
    LaurentPoly base = *this;
    LaurentPoly r = one(arity_);
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

LaurentPoly LaurentPoly::partial(int var) const {
    if (var < 0 || var >= arity_) throw std::out_of_range("partial: variable index");
    LaurentPoly r(arity_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(std::move(d), c * e[var]);
    }
    return r;
}

Rat LaurentPoly::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != arity_) throw std::invalid_argument("point length");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat term(c);
        for (int i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            if (point[i] == 0) {
                if (e[i] < 0) throw std::domain_error("evaluation pole: zero coordinate with negative exponent");
                term = 0;
                break;
            }
            Rat p;
            mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), std::abs(e[i]));
            mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), std::abs(e[i]));
            p.canonicalize();
            if (e[i] < 0) p = 1 / p;
            term *= p;
        }
        acc += term;
    }
    return acc;
}

int LaurentPoly::min_exponent(int var) const {
    if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
    int m = terms_.begin()->first[var];
    for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
    return m;
}

int LaurentPoly::max_exponent(int var) const {
    if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
    int m = terms_.begin()->first[var];
    for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
    return m;
}

Int LaurentPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

LaurentPoly LaurentPoly::shifted(const Exponents& delta) const {
    if (static_cast<int>(delta.size()) != arity_) throw std::invalid_argument("shift length");
    LaurentPoly r(arity_);
    Exponents e(arity_);
    for (const auto& [ea, c] : terms_) {
        for (int i = 0; i < arity_; ++i) e[i] = ea[i] + delta[i];
        r.terms_.emplace(e, c);
    }
    return r;
}

LaurentPoly LaurentPoly::divide_content(const Int& c) const {
    if (c == 0) throw std::invalid_argument("divide_content by zero");
    LaurentPoly r(arity_);
    for (const auto& [e, k] : terms_) {
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), k.get_mpz_t(), c.get_mpz_t());
        if (rem != 0) throw std::logic_error("divide_content: not exact");
        r.terms_.emplace(e, std::move(q));
    }
    return r;
}

const std::pair<const LaurentPoly::Exponents, Int>& LaurentPoly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

namespace {

// Shift a Laurent polynomial so every exponent is nonnegative; returns the
// applied shift.
LaurentPoly clear_negatives(const LaurentPoly& p, std::vector<int>& shift) {
    int n = p.arity();
    shift.assign(n, 0);
    if (p.is_zero()) return p;
    for (int v = 0; v < n; ++v) {
        int m = p.min_exponent(v);
        if (m < 0) shift[v] = -m;
    }
    return p.shifted(shift);
}

}  // namespace

std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    int n = a.arity();
    if (a.is_zero()) return LaurentPoly::zero(n);

    // Work with nonnegative exponents; undo the net shift at the end.
    std::vector<int> sa, sb;
    LaurentPoly pa = clear_negatives(a, sa);
    LaurentPoly pb = clear_negatives(b, sb);

    LaurentPoly q(n);
    const auto& ltb = pb.leading_term();
    LaurentPoly rem = pa;
    while (!rem.is_zero()) {
        const auto& ltr = rem.leading_term();
        LaurentPoly::Exponents e(n);
        for (int i = 0; i < n; ++i) {
            e[i] = ltr.first[i] - ltb.first[i];
            if (e[i] < 0) return std::nullopt;
        }
        Int c, r;
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), ltr.second.get_mpz_t(), ltb.second.get_mpz_t());
        if (r != 0) return std::nullopt;
        LaurentPoly t = LaurentPoly::monomial(n, e, c);
        q = q + t;
        rem = rem - t * pb;
    }
    std::vector<int> net(n);
    for (int i = 0; i < n; ++i) net[i] = sb[i] - sa[i];
    return q.shifted(net);
}

namespace {

int degree_in(const LaurentPoly& p, int v) { return p.is_zero() ? -1 : p.max_exponent(v); }

// Coefficient of x_v^k in p, as a polynomial with the v-slot zeroed.
LaurentPoly coeff_in(const LaurentPoly& p, int v, int k) {
    LaurentPoly r(p.arity());
    for (const auto& [e, c] : p.terms()) {
        if (e[v] != k) continue;
        auto e2 = e;
        e2[v] = 0;
        r.add_term(std::move(e2), c);
    }
    return r;
}

LaurentPoly times_power(const LaurentPoly& p, int v, int k) {
    std::vector<int> delta(p.arity(), 0);
    delta[v] = k;
    return p.shifted(delta);
}

// Content of p viewed as a univariate polynomial in x_v.
LaurentPoly content_in(const LaurentPoly& p, int v) {
    LaurentPoly g = LaurentPoly::zero(p.arity());
    for (int k = 0; k <= degree_in(p, v); ++k) {
        LaurentPoly c = coeff_in(p, v, k);
        if (!c.is_zero()) g = poly_gcd(g, c);
    }
    return g;
}

LaurentPoly normalize_sign(LaurentPoly p) {
    if (!p.is_zero() && p.leading_term().second < 0) return -p;
    return p;
}

// Pseudo-remainder of a by b in the variable v.
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b, int v) {
    int db = degree_in(b, v);
    LaurentPoly lb = coeff_in(b, v, db);
    while (!a.is_zero() && degree_in(a, v) >= db) {
        int da = degree_in(a, v);
        LaurentPoly la = coeff_in(a, v, da);
        a = a * lb - times_power(la * b, v, da - db);
    }
    return a;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
    int n = a.arity();
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    for (int v = 0; v < n; ++v)
        if (a.min_exponent(v) < 0 || b.min_exponent(v) < 0)
            throw std::invalid_argument("poly_gcd requires nonnegative exponents");

    // Main variable: the highest one actually occurring.
    int v = -1;
    for (int i = n - 1; i >= 0; --i) {
        if (degree_in(a, i) > 0 || degree_in(b, i) > 0) {
            v = i;
            break;
        }
    }
    if (v < 0) {
        // Both are constants.
        Int g;
        mpz_gcd(g.get_mpz_t(), a.leading_term().second.get_mpz_t(), b.leading_term().second.get_mpz_t());
        return LaurentPoly::constant(n, g);
    }

    LaurentPoly ca = content_in(a, v);
    LaurentPoly cb = content_in(b, v);
    LaurentPoly g = poly_gcd(ca, cb);
    LaurentPoly pa = *exact_divide(a, ca);
    LaurentPoly pb = *exact_divide(b, cb);
    if (degree_in(pa, v) < degree_in(pb, v)) std::swap(pa, pb);

    // Primitive pseudo-remainder sequence.
    while (!pb.is_zero()) {
        LaurentPoly r = pseudo_rem(pa, pb, v);
        pa = pb;
        if (r.is_zero()) {
            pb = r;
        } else {
            LaurentPoly cr = content_in(r, v);
            pb = *exact_divide(r, cr);
        }
    }
    LaurentPoly prim = *exact_divide(pa, content_in(pa, v));
    return normalize_sign(g * prim);
}

}  // namespace cwp
