#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace crossint {

using Rat = mpq_class;

// Parses "num/den" or a plain integer, canonicalized. Throws on malformed
// input or a zero denominator.
inline Rat parse_rational(const std::string& text) {
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational: '" + text + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_pow(const Rat& base, unsigned e) {
    Rat acc(1), b(base);
    while (e) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline long double rat_ld(const Rat& r) {
    return static_cast<long double>(mpz_get_d(r.get_num_mpz_t())) /
           static_cast<long double>(mpz_get_d(r.get_den_mpz_t()));
}

// True iff r is the square of a rational (sign included).
inline bool rat_is_square(const Rat& r) {
    if (sgn(r) < 0) return false;
    return mpz_perfect_square_p(r.get_num_mpz_t()) && mpz_perfect_square_p(r.get_den_mpz_t());
}

inline Rat rat_sqrt_exact(const Rat& r) {
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
    return Rat(n, d);
}

}  // namespace crossint
