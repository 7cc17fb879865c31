#pragma once

// Factorization matrix sequences and their inverses. Every forward matrix
// here has an oracle counterpart built purely from qseries products; the
// closed forms are checked against those in the unit and acceptance tests.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lambertfact/arithmetic_table.hpp"
#include "lambertfact/factor_matrix.hpp"
#include "lambertfact/types.hpp"

namespace lambertfact {

struct BuildOptions {
  /// Multiply each closed-form inverse by its forward matrix and throw
  /// IdentityViolation unless the product is the identity.
  bool verify = true;
  /// Worker threads for row/column construction; 0 = hardware concurrency.
  unsigned jobs = 1;
};

/// s_{n,k} = [q^n] (q;q)_inf q^k/(1-q^k), rows/cols 1..N.
FactorMatrix s_base(std::size_t N, unsigned jobs = 1);

/// s_o(n,k) - s_e(n,k) by enumerating partitions of n into distinct parts.
/// Refuses (DomainError) outside 1 <= k <= n <= 40.
BigInt s_base_combinatorial(std::size_t n, std::size_t k);

/// (T_Div(n,k)), the divisor-sum matrix.
FactorMatrix tdiv_matrix(std::size_t N);

/// Pentagonal-correction closed form for a given table of divisor sums
/// ftilde(1..N):
///   T_Div(n,k) ftilde(n) + sum_{b=+-1} sum_j (-1)^j T_Div(n-s_j, k) ftilde(n-s_j)
/// with s_j = j(3j+b)/2 and j up to floor((sqrt(24(n-k)+1)-b)/6).
FactorMatrix pentagonal_divisor_forward(const ArithmeticTable& ftilde, std::size_t N,
                                        unsigned jobs = 1);

/// sum_{d|n} p(d-k) mu(n/d) / ftilde(d). Throws ZeroDivisorSumError naming
/// the first d with ftilde(d) = 0.
FactorMatrix pentagonal_divisor_inverse(const ArithmeticTable& ftilde, std::size_t N);

/// Hadamard-product factorization s_{n,k}(f); depends on f only through f~.
FactorMatrix hadamard_forward(const ArithmeticTable& f, std::size_t N, unsigned jobs = 1);
/// [q^n] (q;q)_inf sum_m T_Div(m,k) f~(m) q^m, column by column.
FactorMatrix hadamard_forward_oracle(const ArithmeticTable& f, std::size_t N);
/// Closed-form inverse sum_{d|n} p(d-k) mu(n/d) / f~(d).
FactorMatrix hadamard_inverse(const ArithmeticTable& f, std::size_t N, BuildOptions opts = {});

/// s~_{n,k}(g) = sum_{j: kj <= n} s_{n,kj} g(j).
FactorMatrix stilde(const ArithmeticTable& g, std::size_t N);

/// Reading of the empty divisor sum at the j = n+1 boundary of the
/// convolution forward formula.
enum class ConvBoundary {
  kZero,  ///< contributes nothing; agrees with the series oracle
  kOne,   ///< sum over d | 0 read as 1
};

/// sum_{j=1}^{n+1} s_{j,k} g~(n+1-j), with the j = n+1 term per `boundary`.
FactorMatrix conv_forward_closed_form(const ArithmeticTable& g, std::size_t N,
                                      ConvBoundary boundary);
/// [q^n] (q;q)_inf q^k/(1-q^k) G_L(q)/q.
FactorMatrix conv_forward_oracle(const ArithmeticTable& g, std::size_t N);
/// The convolution factorization matrix. Built from the closed form with the
/// zero boundary term; with opts.verify the oracle matrix is compared and,
/// should they ever differ, the oracle matrix is returned.
FactorMatrix conv_forward(const ArithmeticTable& g, std::size_t N, BuildOptions opts = {});
/// sum_{d|n} [q^d] (q^{k+1} / ((q;q)_inf G_L(q))) mu(n/d). Needs g(1) != 0.
FactorMatrix conv_inverse(const ArithmeticTable& g, std::size_t N, BuildOptions opts = {});

/// s_{t,n,k} = [q^n] (q;q)_inf q^t D^t [q^k/(1-q^k)] for t <= k <= n <= N.
/// Start index is t.
FactorMatrix deriv_matrix(unsigned t, std::size_t N);
/// sum_{d|n} p(d-k) mu(n/d) / d.
FactorMatrix deriv_inverse_t1(std::size_t N, BuildOptions opts = {});
/// Closed form for t = 1, exact forward substitution for t >= 2.
FactorMatrix deriv_inverse(unsigned t, std::size_t N, BuildOptions opts = {});

/// Divisor weight d!/(d-j)! + [d < j] of the mixed derivative series.
Rational mixed_weight(std::uint64_t d, unsigned j);
/// Forward matrix of q^j D^j[L_a(q)] + sum_{i<j} (a*1)(i) q^i, built from
/// series products. Start index 1.
FactorMatrix mixed_deriv_forward(unsigned j, std::size_t N);
/// sum_{d|n} p(d-k) mu(n/d) / (d!/(d-j)! + [d<j]).
FactorMatrix mixed_deriv_inverse(unsigned j, std::size_t N, BuildOptions opts = {});

/// s_{n,k}(b) = sum_j s_{n,j} b_{j,k}; b must start at 1.
FactorMatrix related_fact_matrix(const FactorMatrix& b);

/// C_{n,k} = sum_{d|n} sum_{i=1}^{d} p(d - ik) mu(n/d).
FactorMatrix c_matrix(std::size_t N);
/// T_Div^{-1} ([q^i] q^j/(1-q^j) / (q;q)_inf), the matrix route to C.
FactorMatrix c_matrix_from_series(std::size_t N);

/// b(n) = sum_k sum_{j<=k} s_{n,k} C_{k,j} a_j, which reconstructs (a*1)(n).
ArithmeticTable reconstruct_b(const ArithmeticTable& a, std::size_t N);

}  // namespace lambertfact
