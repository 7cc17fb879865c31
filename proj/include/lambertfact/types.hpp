#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lambertfact {

using BigInt = mpz_class;
/// Exact rational; gmpxx keeps results of arithmetic in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Always "num/den", including integers ("3/1").
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// "3" for integers, "num/den" otherwise.
inline std::string to_short_string(const Rational& r) { return r.get_str(); }

}  // namespace lambertfact
