#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace brt {

// Exact rational numbers. Backed by GMP's mpq_class, which keeps every
// value reduced with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// "7" or "-3/2"; denominator omitted when 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses the same form. Throws std::invalid_argument on garbage.
inline Rational rational_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

}  // namespace brt
