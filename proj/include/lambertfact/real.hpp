#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>

#include "lambertfact/types.hpp"

namespace lambertfact {

/// Precision, in bits, used for real-valued quantities unless overridden.
inline constexpr unsigned kDefaultRealPrecision = 128;

/// Owning MPFR value with a fixed bit precision. Binary operations produce a
/// result at the larger of the two operand precisions, rounded to nearest.
class Real {
 public:
  explicit Real(unsigned precision = kDefaultRealPrecision);
  Real(long value, unsigned precision);
  Real(const Rational& value, unsigned precision);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_string(const std::string& text, unsigned precision);

  unsigned precision() const;
  double to_double() const;
  /// Decimal rendering with `digits` significant digits.
  std::string to_string(int digits = 40) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real operator-() const;

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }

  friend bool operator<(const Real& a, const Real& b);
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
  friend bool operator>=(const Real& a, const Real& b) { return !(a < b); }
  friend bool operator==(const Real& a, const Real& b);

  bool is_zero() const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real log(const Real& x);
Real pow(const Real& base, const Real& exponent);
/// 2^(-bits) at the given precision; handy for tolerance checks.
Real epsilon_bits(long bits, unsigned precision);

}  // namespace lambertfact
