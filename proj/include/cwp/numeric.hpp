#pragma once

#include <gmpxx.h>

#include <random>
#include <stdexcept>
#include <string>

namespace cwp {

using Int = mpz_class;
using Rat = mpq_class;

// Parse "3/2", "-5", "7" into an exact rational.
inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Small positive rational, numerator and denominator in [1, 9].
inline Rat rand_pos_rat(Rng& rng) {
    Rat q(rand_int(rng, 1, 9), rand_int(rng, 1, 9));
    q.canonicalize();
    return q;
}

// Small rational in [-5, 5] with denominator in [1, 4].
inline Rat rand_rat(Rng& rng) {
    Rat q(rand_int(rng, -5, 5), rand_int(rng, 1, 4));
    q.canonicalize();
    return q;
}

}  // namespace cwp
