#pragma once

// Derivatives of Lambert series: modified Lambert coefficients, the Stirling
// expansions of q^s D^s [q^i/(1-q^i)], the coefficient function A_t(n) and
// its factorization identities.

#include <cstddef>
#include <cstdint>

#include "lambertfact/arithmetic_table.hpp"
#include "lambertfact/qseries.hpp"
#include "lambertfact/report.hpp"
#include "lambertfact/types.hpp"

namespace lambertfact {

/// Which transcription of a formula to evaluate. kStandard is the form that
/// holds identically; kLiteral is the commonly quoted form, kept so reports
/// can show where it breaks.
enum class Form { kStandard, kLiteral };

struct DerivParams {
  unsigned t = 1;
  std::size_t N = 1;
  ArithmeticTable a;

  /// Throws DomainError unless t >= 1, N >= t and a covers 1..N.
  void validate() const;
};

/// [q^n] sum_{i>=t} a_i q^{mi} / (1-q^i)^{k+1}
///   = sum_{d|n, t <= d <= n/m} binom(n/d - m + k, k) a_d.
Rational modified_coeff(const ArithmeticTable& a, std::uint64_t m, unsigned k, std::uint64_t t,
                        std::uint64_t n);
/// Left-hand series built term by term (the oracle for modified_coeff).
QSeries modified_series(const ArithmeticTable& a, std::uint64_t m, unsigned k, std::uint64_t t,
                        std::size_t order);

enum class DerivExpansion {
  kStirling,        ///< sum_m sum_k c(s,m) S(m,k) (-1)^{s-k} k! i^m q^i / (1-q^i)^{k+1}
  kBinomialShift,   ///< numerator polynomial in q^i over (1-q^i)^{s+1}
};

/// q^s D^s [q^i/(1-q^i)] assembled from its Stirling-number expansion.
/// kLiteral drops the q^i factor (kStirling) or uses (1-q^i)^{k+1} as the
/// denominator (kBinomialShift); both literal forms fail for most (i, s).
QSeries deriv_term_series(std::uint64_t i, unsigned s, DerivExpansion expansion,
                          std::size_t order, Form form = Form::kStandard);
/// Same quantity by direct coefficient-wise differentiation.
QSeries deriv_term_direct(std::uint64_t i, unsigned s, std::size_t order);

/// A_t(n) from its Stirling/binomial divisor sum. The standard form uses
/// binom(n/d - 1 - r + t, t); the literal form binom(n/d - 1 - r + k, k).
Rational a_t(const DerivParams& params, std::uint64_t n, Form form = Form::kStandard);
/// q^t D^t [sum_{m>=t} a_m q^m/(1-q^m)] to order N.
QSeries a_t_oracle(const DerivParams& params);
/// (A_t * mu)(n) for n <= N.
ArithmeticTable a_t_lambert_coeffs(const DerivParams& params);
/// A_t(1..N) as a table.
ArithmeticTable a_t_table(const DerivParams& params, Form form = Form::kStandard);

/// Factorization identities for A_t(n), n = 1..N:
///   "stilde-factorization"    A_t(n) = [q^n] (q;q)^{-1} sum_k s~_{n,k}(mu) A_t(k) q^n
///   "stilde-inverse"          A_t(n) = sum_k s~^{-1}_{n,k}(mu) [pentagonal bracket of A_t](k)
///   "full-derivative"         n!/(n-t)! (a*1)(n) = lower-index correction + A_t(n)
///   "full-derivative-literal" the correction without the pentagonal bracket (kLiteral)
VerificationReport a_t_identities(const DerivParams& params);

/// Coefficient of a_i in (A_t * mu)(n); zero for i > n.
Rational a_t_weight(std::uint64_t n, std::uint64_t i, unsigned t, Form form = Form::kStandard);

}  // namespace lambertfact
