#pragma once

#include <gmpxx.h>
#include <string>

namespace qha {

// Exact coefficient arithmetic is GMP-backed throughout.  BigInt is an
// arbitrary-precision integer; Rational is always kept in reduced form with a
// positive denominator (mpq_class canonical form).
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const BigInt& z) { return sgn(z) == 0; }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace qha
