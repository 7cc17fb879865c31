#pragma once

// Scalar number-theoretic functions consumed by the factorization theorems.
// Everything except von_mangoldt is exact.

#include <cstdint>
#include <shared_mutex>
#include <vector>

#include "lambertfact/real.hpp"
#include "lambertfact/types.hpp"

namespace lambertfact {

/// Divisors of n in increasing order. Throws DomainError for n == 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// 1 iff k | n.
int t_div(std::uint64_t n, std::uint64_t k);

int mobius(std::uint64_t n);

/// G_j = ceil(j/2) * ceil((3j+1)/2) / 2: 0, 1, 2, 5, 7, 12, 15, ...
std::uint64_t pentagonal_g(std::uint64_t j);

/// Sign attached to q^{G_j} in the pentagonal expansion, (-1)^ceil(j/2).
int pentagonal_sign(std::uint64_t j);

std::uint64_t isqrt(std::uint64_t n);

/// Upper index floor((sqrt(radicand) - b) / 6) of the pentagonal correction
/// sums, b = +1 or -1, evaluated with an integer square root. A negative
/// radicand (or a negative result) gives 0, i.e. an empty sum.
std::int64_t pentagonal_bound(std::int64_t radicand, int b);

/// Shift j(3j+b)/2 of the b = +1/-1 branch of the pentagonal theorem.
inline std::int64_t pentagonal_shift(std::int64_t j, int b) { return j * (3 * j + b) / 2; }

/// acc + h(k) + sum_{b=+-1} sum_{j=1}^{bound} (-1)^j h(k - j(3j+b)/2), where
/// bound = pentagonal_bound(radicand, b). Terms whose argument drops below 1
/// are skipped. With radicand = 24k - 23 this is [q^k] (q;q)_inf sum_m h(m) q^m.
template <class T, class Fn>
T pentagonal_bracket(std::int64_t k, std::int64_t radicand, T acc, Fn&& h) {
  acc += h(k);
  for (int b : {1, -1}) {
    const std::int64_t top = pentagonal_bound(radicand, b);
    for (std::int64_t j = 1; j <= top; ++j) {
      const std::int64_t m = k - pentagonal_shift(j, b);
      if (m < 1) continue;
      if (j % 2 == 0) {
        acc += h(m);
      } else {
        acc -= h(m);
      }
    }
  }
  return acc;
}

/// Memoised partition numbers p(0..n) and pentagonal numbers G_0..G_J.
///
/// Grows on demand under an exclusive lock; filled entries never change, so
/// concurrent readers only ever take the shared lock once the table is warm.
class PartitionCache {
 public:
  static PartitionCache& global();

  /// p(n); zero for n < 0.
  BigInt p(std::int64_t n);
  /// Ensures p(0..n) is filled.
  void reserve(std::int64_t n);
  /// Copy of p(0..n).
  std::vector<BigInt> table(std::int64_t n);
  std::size_t size() const;

  /// Replaces the table with `values` after checking they satisfy the
  /// pentagonal recurrence. Used when loading a persisted cache.
  void adopt(std::vector<BigInt> values);

 private:
  void extend_locked(std::int64_t n);

  mutable std::shared_mutex mutex_;
  std::vector<BigInt> p_{BigInt(1)};
  std::vector<std::uint64_t> pent_{0};
};

/// Number of partitions of n (0 for n < 0), via the pentagonal recurrence.
BigInt partition_p(std::int64_t n);

/// Sum of d^alpha over d | n. alpha may be negative.
Rational sigma(std::uint64_t n, std::int64_t alpha);

/// Jordan totient J_t(n) = sum_{d|n} d^t mu(n/d); totients(n, 1) = phi(n).
BigInt totients(std::uint64_t n, unsigned t);

inline BigInt euler_phi(std::uint64_t n) { return totients(n, 1); }

/// log p if n = p^k, else 0.
Real von_mangoldt(std::uint64_t n, unsigned precision = kDefaultRealPrecision);

/// Number of distinct prime factors, by trial division.
unsigned omega_distinct(std::uint64_t n);

/// Unsigned Stirling numbers of the first kind, c(n, m).
BigInt stirling1_unsigned(unsigned n, unsigned m);
/// Stirling numbers of the second kind, S(m, k).
BigInt stirling2(unsigned m, unsigned k);

/// Row-indexed tables [0..n][0..n] of c(i, j) and S(i, j).
std::vector<std::vector<BigInt>> stirling1_table(unsigned n);
std::vector<std::vector<BigInt>> stirling2_table(unsigned n);

/// binomial(a, b) with the falling-factorial extension to negative a;
/// zero for b < 0.
BigInt binomial(std::int64_t a, std::int64_t b);

/// n (n-1) ... (n-t+1); zero when 0 <= n < t.
BigInt falling_factorial(std::int64_t n, unsigned t);

BigInt factorial(unsigned n);

}  // namespace lambertfact
