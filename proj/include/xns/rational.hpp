#pragma once

#include <gmpxx.h>

#include <string>

namespace xns {

// Canonical (reduced, positive denominator) rationals and big integers.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Rational rational_from_string(const std::string& s) {
  Rational r(s, 10);
  r.canonicalize();
  return r;
}

}  // namespace xns
