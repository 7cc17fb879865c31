#include "lambertfact/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lambertfact/arith.hpp"
#include "lambertfact/errors.hpp"

namespace lambertfact {

QSeries::QSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

QSeries QSeries::from_coeffs(std::vector<Rational> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("QSeries needs at least one coefficient");
  QSeries s(coeffs.size() - 1);
  for (auto& c : coeffs) c.canonicalize();
  s.coeffs_ = std::move(coeffs);
  return s;
}

QSeries QSeries::one(std::size_t order) {
  QSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

QSeries QSeries::monomial(std::size_t k, std::size_t order) {
  QSeries s(order);
  if (k <= order) s.coeffs_[k] = 1;
  return s;
}

const Rational& QSeries::operator[](std::size_t j) const {
  if (j > order()) {
    throw std::out_of_range("coefficient q^" + std::to_string(j) + " beyond order " +
                            std::to_string(order()));
  }
  return coeffs_[j];
}

void QSeries::set(std::size_t j, Rational value) {
  if (j > order()) throw std::out_of_range("QSeries::set beyond order");
  value.canonicalize();
  coeffs_[j] = std::move(value);
}

void QSeries::add_to(std::size_t j, const Rational& value) {
  if (j > order()) throw std::out_of_range("QSeries::add_to beyond order");
  coeffs_[j] += value;
}

QSeries QSeries::truncated(std::size_t new_order) const {
  if (new_order >= order()) return *this;
  return from_coeffs({coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(new_order) + 1});
}

QSeries QSeries::shifted(std::size_t k) const {
  QSeries s(order());
  for (std::size_t j = 0; j + k <= order(); ++j) s.coeffs_[j + k] = coeffs_[j];
  return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  QSeries s(n);
  for (std::size_t j = 0; j <= n; ++j) s.set(j, a[j] + b[j]);
  return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  QSeries s(n);
  for (std::size_t j = 0; j <= n; ++j) s.set(j, a[j] - b[j]);
  return s;
}

QSeries operator*(const Rational& c, const QSeries& a) {
  QSeries s(a.order());
  for (std::size_t j = 0; j <= a.order(); ++j) s.set(j, c * a[j]);
  return s;
}

QSeries series_mul(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> out(n + 1, Rational(0));
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  for (std::size_t i = 0; i <= n; ++i) {
    if (sgn(ac[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (sgn(bc[j]) == 0) continue;
      out[i + j] += ac[i] * bc[j];
    }
  }
  return QSeries::from_coeffs(std::move(out));
}

QSeries pochhammer_qq(std::size_t order) {
  // Multiply out prod_{k=1}^{N} (1 - q^k) in place; factors with k > N are 1
  // modulo q^{N+1}.
  std::vector<Rational> c(order + 1, Rational(0));
  c[0] = 1;
  for (std::size_t k = 1; k <= order; ++k) {
    for (std::size_t j = order; j >= k; --j) c[j] -= c[j - k];
  }
  return QSeries::from_coeffs(std::move(c));
}

QSeries lambert_term(std::size_t k, std::size_t order) {
  if (k == 0) throw DomainError("lambert_term: k must be positive");
  QSeries s(order);
  for (std::size_t m = k; m <= order; m += k) s.set(m, 1);
  return s;
}

QSeries lambert_gf(const ArithmeticTable& a, std::size_t order) {
  if (a.size() < order) throw std::invalid_argument("lambert_gf: table shorter than order");
  QSeries s(order);
  for (std::size_t d = 1; d <= order; ++d) {
    if (sgn(a(d)) == 0) continue;
    for (std::size_t m = d; m <= order; m += d) s.add_to(m, a(d));
  }
  return s;
}

QSeries q_derivative(const QSeries& f, unsigned t) {
  if (t == 0) throw DomainError("q_derivative: order must be positive");
  QSeries s(f.order());
  for (std::size_t n = t; n <= f.order(); ++n) {
    s.set(n, Rational(falling_factorial(static_cast<std::int64_t>(n), t)) * f[n]);
  }
  return s;
}

QSeries series_reciprocal(const QSeries& f) {
  if (sgn(f[0]) == 0) throw NonInvertibleError("series_reciprocal: zero constant term");
  const std::size_t n = f.order();
  std::vector<Rational> g(n + 1, Rational(0));
  g[0] = 1 / f[0];
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      if (sgn(f[j]) != 0) acc += f[j] * g[m - j];
    }
    g[m] = -acc * g[0];
  }
  return QSeries::from_coeffs(std::move(g));
}

QSeries geometric_power(std::size_t step, unsigned power, std::size_t order) {
  if (step == 0) throw DomainError("geometric_power: step must be positive");
  QSeries s(order);
  if (power == 0) {
    s.set(0, 1);
    return s;
  }
  // 1/(1-x)^p = sum_m binom(m+p-1, p-1) x^m
  for (std::size_t m = 0; m * step <= order; ++m) {
    s.set(m * step, Rational(binomial(static_cast<std::int64_t>(m + power - 1), power - 1)));
  }
  return s;
}

ArithmeticTable hadamard_coeffs(const ArithmeticTable& f, const ArithmeticTable& g,
                                std::size_t order) {
  const auto ft = f.divisor_sums();
  const auto gt = g.divisor_sums();
  ArithmeticTable product(order, [&](std::uint64_t n) -> Rational { return ft(n) * gt(n); });
  return product.mobius_inverse();
}

QSeries ordinary_gf(const ArithmeticTable& c, std::size_t order) {
  if (c.size() < order) throw std::invalid_argument("ordinary_gf: table shorter than order");
  QSeries s(order);
  for (std::size_t n = 1; n <= order; ++n) s.set(n, c(n));
  return s;
}

ArithmeticTable coefficients_table(const QSeries& f) {
  return ArithmeticTable(f.order(), [&](std::uint64_t n) { return f[n]; });
}

}  // namespace lambertfact

namespace lambertfact {

QSeries divide_by_q(const QSeries& f) {
  if (sgn(f[0]) != 0) throw DomainError("divide_by_q: nonzero constant term");
  if (f.order() == 0) throw DomainError("divide_by_q: order-0 series");
  QSeries s(f.order() - 1);
  for (std::size_t j = 1; j <= f.order(); ++j) s.set(j - 1, f[j]);
  return s;
}

}  // namespace lambertfact
