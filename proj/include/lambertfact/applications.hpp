#pragma once

// Consequences of the inverse factorization sequences: exotic sums for
// classical multiplicative functions, series for zeta(s), an exact formula
// for omega(n), and partition / divisor-sum identities.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lambertfact/derivatives.hpp"
#include "lambertfact/real.hpp"
#include "lambertfact/types.hpp"

namespace lambertfact {

/// Exact value, or a high-precision real when the quantity is transcendental.
using Scalar = std::variant<Rational, Real>;

std::string to_string(const Scalar& x, int digits = 40);
Real to_real(const Scalar& x, unsigned precision);

// -- exotic sums -------------------------------------------------------------

enum class ExoticKind { kPowerS, kVonMangoldt, kJordan, kTotient };

struct ExoticParams {
  std::int64_t s = 1;
  std::int64_t t = 1;
  unsigned precision = kDefaultRealPrecision;
};

/// Accepts power_s, von_mangoldt, jordan, totient (dashes allowed).
ExoticKind parse_exotic_kind(std::string_view name);
std::string to_string(ExoticKind kind);

/// sum_{k<=n} sum_{d|n} p(d-k) mu(n/d) / f~(d) * [pentagonal bracket](k):
///   power_s       f~ = sigma_t, bracket over sigma_t(m) sigma_s(m)   -> n^s
///   jordan        f~ = d^t,     bracket over m^{2t}                  -> J_t(n)
///   totient       f~ = d,       bracket over m^2                     -> phi(n)
///   von_mangoldt  f~ = d,       bracket over m log m (real)          -> Lambda(n)
Scalar exotic_sum(ExoticKind kind, std::uint64_t n, const ExoticParams& params = {});
/// The classical function the sum reproduces.
Scalar exotic_reference(ExoticKind kind, std::uint64_t n, const ExoticParams& params = {});

// -- zeta series ---------------------------------------------------------------

enum class ZetaVariant {
  kSigmaST,         ///< weights 1/sigma_t(d), inner sigma_t sigma_s / m^s
  kSigmaSTShifted,  ///< weights d^t/sigma_t(d), inner sigma_t sigma_s / m^{s+t}
  kDerivT1,         ///< weights 1/d, inner sigma_s / m^{s-1}
};

ZetaVariant parse_zeta_variant(std::string_view name);
std::string to_string(ZetaVariant v);

/// n-th outer summand for integer s >= 2 (exact). Throws DivergenceError for s <= 1.
Rational zeta_term(ZetaVariant variant, std::int64_t s, std::int64_t t, std::uint64_t n);
/// n-th outer summand for real s > 1.
Real zeta_term_real(ZetaVariant variant, const Real& s, std::int64_t t, std::uint64_t n);

/// zeta(s) for real s > 1 by Euler-Maclaurin summation with exact Bernoulli
/// numbers, accurate to about the precision of s.
Real zeta_reference(const Real& s);

struct ZetaReport {
  ZetaVariant variant = ZetaVariant::kSigmaST;
  std::string s;  ///< decimal text of the exponent
  std::int64_t t = 1;
  bool exact = true;
  std::vector<Scalar> terms;          ///< terms[i] is the summand for n = i+1
  std::vector<Scalar> partial_sums;   ///< running sums of terms
  Real reference;                     ///< zeta(s)
  std::vector<Real> abs_errors;       ///< |reference - partial_sums[i]|
};

/// Exact report for integer s >= 2.
ZetaReport zeta_partial(ZetaVariant variant, std::int64_t s, std::int64_t t, std::size_t N,
                        unsigned precision = kDefaultRealPrecision, unsigned jobs = 1);
/// Real-domain report for non-integer s > 1.
ZetaReport zeta_partial_real(ZetaVariant variant, const Real& s, std::int64_t t, std::size_t N,
                             unsigned jobs = 1);

/// Columns n, term, partial_sum, abs_error.
std::string to_csv(const ZetaReport& r);
nlohmann::json to_json(const ZetaReport& r);

/// sum_{n<=N} sigma_alpha(n) / n^s and the closed value zeta(s) zeta(s-alpha).
struct DirichletCheck {
  Real partial;
  Real closed_form;
};
DirichletCheck dirichlet_sigma_check(std::int64_t alpha, std::int64_t s, std::size_t N,
                                     unsigned precision = kDefaultRealPrecision);

// -- omega(n) -------------------------------------------------------------------

/// sum_{k<=n} sum_{j<=k} C_{k,j} s_{n,k} |mu(j)|, which equals 2^omega(n).
/// The literal form replaces C_{k,j} by sum_{d|k} sum_i p(d-ji) (no mu(k/d)).
BigInt omega_inner_sum(std::uint64_t n, Form form = Form::kStandard);
/// log_2 of the inner sum; throws IdentityViolation if it is not a power of two.
unsigned omega_exact(std::uint64_t n);

struct OmegaRow {
  std::uint64_t n;
  BigInt inner_sum;
  unsigned omega_formula;
  unsigned omega_reference;
  bool match;
};
/// Rows for n = 1..upto sharing one s_{n,k} and C_{k,j} build.
std::vector<OmegaRow> omega_table(std::uint64_t upto, unsigned jobs = 1);

// -- partition identities -------------------------------------------------------

enum class PartitionIdentity {
  kPSigma1,       ///< n p(n) = sum_{k<n} p(k) sigma_1(n-k)
  kPkRestricted,  ///< n p_k(n) = sum_{t<=n} p_k(n-t) sum_{j|t, j<=k} j
  kPpSigma2,      ///< n pp(n) = sum_{j<=n} pp(n-j) sigma_2(j)
};

PartitionIdentity parse_partition_identity(std::string_view name);
std::string to_string(PartitionIdentity which);

struct PartitionVerdict {
  PartitionIdentity which;
  std::uint64_t n;
  std::uint64_t k;
  BigInt lhs;
  BigInt rhs;
  bool pass;
  /// kPSigma1 only: right side with sigma_1(n) in place of sigma_1(n-k).
  std::optional<BigInt> literal_rhs;
  std::optional<bool> literal_pass;
};

PartitionVerdict partition_identity_check(PartitionIdentity which, std::uint64_t n,
                                          std::uint64_t k = 0);
nlohmann::json to_json(const PartitionVerdict& v);

/// Partitions into at most k parts, p_k(0..order).
std::vector<BigInt> restricted_partitions(std::uint64_t k, std::size_t order);
/// Plane partitions pp(0..order).
std::vector<BigInt> plane_partitions(std::size_t order);

}  // namespace lambertfact
