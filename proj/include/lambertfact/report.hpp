#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lambertfact/factor_matrix.hpp"
#include "lambertfact/types.hpp"

namespace lambertfact {

/// kIdentity results gate pass/fail. kLiteral results record how a literal
/// transcription of a formula fares when it differs from the form that
/// holds; they are informational and never fail a report.
enum class CheckKind { kIdentity, kLiteral };

struct Counterexample {
  std::size_t index = 0;
  std::optional<std::size_t> column;
  std::string expected;
  std::string actual;
};

struct IdentityResult {
  std::string id;
  std::string description;
  CheckKind kind = CheckKind::kIdentity;
  std::size_t n_min = 1;
  std::size_t n_max = 0;
  bool pass = true;
  std::optional<Counterexample> first_failure;
};

struct VerificationReport {
  std::string suite;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<IdentityResult> results;

  /// True iff every kIdentity result passed.
  bool passed() const;
  const IdentityResult* first_failure() const;
  void append(const VerificationReport& other);
  void add(IdentityResult result) { results.push_back(std::move(result)); }
};

nlohmann::json to_json(const IdentityResult& r);
nlohmann::json to_json(const VerificationReport& r);

/// expected[i] vs actual[i] for indices n_min + i.
IdentityResult compare_sequences(std::string id, std::string description, std::size_t n_min,
                                 const std::vector<Rational>& expected,
                                 const std::vector<Rational>& actual,
                                 CheckKind kind = CheckKind::kIdentity);

/// Evaluates expected(n) and actual(n) for n in [n_min, n_max], stopping at
/// the first disagreement.
IdentityResult compare_indexed(std::string id, std::string description, std::size_t n_min,
                               std::size_t n_max,
                               const std::function<Rational(std::size_t)>& expected,
                               const std::function<Rational(std::size_t)>& actual,
                               CheckKind kind = CheckKind::kIdentity);

IdentityResult compare_matrices(std::string id, std::string description,
                                const FactorMatrix& expected, const FactorMatrix& actual,
                                CheckKind kind = CheckKind::kIdentity);

/// Passes iff m is the identity on its block.
IdentityResult check_identity_matrix(std::string id, std::string description,
                                     const FactorMatrix& m);

}  // namespace lambertfact
