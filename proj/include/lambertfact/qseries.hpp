#pragma once

// Truncated formal power series over exact rationals. These are the
// brute-force oracle for every factorization identity in the library, so
// nothing here depends on the closed forms in factorization.hpp.

#include <cstddef>
#include <span>
#include <vector>

#include "lambertfact/arithmetic_table.hpp"
#include "lambertfact/types.hpp"

namespace lambertfact {

/// Coefficients of q^0 .. q^order. Binary operations truncate to the smaller
/// order of their operands.
class QSeries {
 public:
  explicit QSeries(std::size_t order);
  static QSeries from_coeffs(std::vector<Rational> coeffs);
  static QSeries one(std::size_t order);
  /// q^k (zero series when k > order).
  static QSeries monomial(std::size_t k, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }

  /// [q^j]; throws std::out_of_range for j > order().
  const Rational& operator[](std::size_t j) const;
  void set(std::size_t j, Rational value);
  void add_to(std::size_t j, const Rational& value);

  std::span<const Rational> coeffs() const { return coeffs_; }

  /// Same series at a lower order.
  QSeries truncated(std::size_t order) const;
  /// Multiplication by q^k, keeping the order.
  QSeries shifted(std::size_t k) const;

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator*(const Rational& c, const QSeries& a);

/// Cauchy product to order min(a.order, b.order).
QSeries series_mul(const QSeries& a, const QSeries& b);
inline QSeries operator*(const QSeries& a, const QSeries& b) { return series_mul(a, b); }

/// (q; q)_inf truncated to order N, expanded as a product.
QSeries pochhammer_qq(std::size_t order);

/// sum_{n>=1} a_n q^n / (1 - q^n) truncated to `order` (needs a_1..a_order).
QSeries lambert_gf(const ArithmeticTable& a, std::size_t order);

/// q^k / (1 - q^k).
QSeries lambert_term(std::size_t k, std::size_t order);

/// q^t D^t f, i.e. [q^n] f  ->  n (n-1) ... (n-t+1) [q^n] f.
QSeries q_derivative(const QSeries& f, unsigned t);

/// Multiplicative inverse; throws NonInvertibleError when f_0 = 0.
QSeries series_reciprocal(const QSeries& f);

/// 1 / (1 - q^step)^power.
QSeries geometric_power(std::size_t step, unsigned power, std::size_t order);

/// Coefficients a_fg with sum_{d|n} a_fg(d) = f~(n) g~(n), f~ = f * 1.
ArithmeticTable hadamard_coeffs(const ArithmeticTable& f, const ArithmeticTable& g,
                                std::size_t order);

/// Ordinary generating function sum_{n>=1} c_n q^n of a table (constant 0).
QSeries ordinary_gf(const ArithmeticTable& c, std::size_t order);

/// Coefficients 1..order of a series as a table.
ArithmeticTable coefficients_table(const QSeries& f);

}  // namespace lambertfact

namespace lambertfact {

/// f / q for a series with zero constant term; the order drops by one.
QSeries divide_by_q(const QSeries& f);

}  // namespace lambertfact
