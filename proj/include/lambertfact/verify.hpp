#pragma once

// Named verification suites. Each suite checks closed forms against the
// q-series oracle, inverse pairs against the identity, and the analytic
// consequences against their classical references.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lambertfact/arithmetic_table.hpp"
#include "lambertfact/factor_matrix.hpp"
#include "lambertfact/qseries.hpp"
#include "lambertfact/real.hpp"
#include "lambertfact/report.hpp"

namespace lambertfact {

struct VerifyConfig {
  std::size_t N = 12;
  std::string f = "id";   ///< registry name
  std::string g = "phi";  ///< registry name
  unsigned t = 1;
  unsigned j = 2;
  unsigned jobs = 1;
  unsigned precision = kDefaultRealPrecision;
};

/// base, hadamard, convolution, derivatives, mixed, lemmas, reconstruction,
/// applications, all.
std::vector<std::string> suite_names();

/// Throws DomainError for an unknown suite or invalid configuration.
VerificationReport run_suite(std::string_view suite, const VerifyConfig& config);

/// Checks [q^n] ((q;q)_inf * target) == sum_k m(n,k) a_k for n <= target.order(),
/// and that the left side vanishes below m.start().
IdentityResult factorization_identity(std::string id, std::string description,
                                      const FactorMatrix& m, const ArithmeticTable& a,
                                      const QSeries& target,
                                      CheckKind kind = CheckKind::kIdentity);

/// Compares two real sequences entrywise against an absolute tolerance.
IdentityResult compare_real(std::string id, std::string description, std::size_t n_min,
                            const std::vector<Real>& expected, const std::vector<Real>& actual,
                            const Real& tolerance);

}  // namespace lambertfact
