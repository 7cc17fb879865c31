#include "lambertfact/report.hpp"

namespace lambertfact {

bool VerificationReport::passed() const { return first_failure() == nullptr; }

const IdentityResult* VerificationReport::first_failure() const {
  for (const auto& r : results) {
    if (r.kind == CheckKind::kIdentity && !r.pass) return &r;
  }
  return nullptr;
}

void VerificationReport::append(const VerificationReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

nlohmann::json to_json(const IdentityResult& r) {
  nlohmann::json j = {{"id", r.id},
                      {"description", r.description},
                      {"kind", r.kind == CheckKind::kIdentity ? "identity" : "literal"},
                      {"n_min", r.n_min},
                      {"n_max", r.n_max},
                      {"pass", r.pass}};
  if (r.first_failure) {
    nlohmann::json ce = {{"n", r.first_failure->index},
                         {"expected", r.first_failure->expected},
                         {"actual", r.first_failure->actual}};
    if (r.first_failure->column) ce["k"] = *r.first_failure->column;
    j["first_counterexample"] = std::move(ce);
  } else {
    j["first_counterexample"] = nullptr;
  }
  return j;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& x : r.results) results.push_back(to_json(x));
  return {{"suite", r.suite},
          {"parameters", r.parameters},
          {"pass", r.passed()},
          {"results", std::move(results)}};
}

IdentityResult compare_sequences(std::string id, std::string description, std::size_t n_min,
                                 const std::vector<Rational>& expected,
                                 const std::vector<Rational>& actual, CheckKind kind) {
  IdentityResult r{std::move(id), std::move(description), kind, n_min,
                   n_min + expected.size() - 1, true, std::nullopt};
  if (expected.size() != actual.size()) {
    r.pass = false;
    r.first_failure = Counterexample{n_min, std::nullopt, std::to_string(expected.size()) + " terms",
                                     std::to_string(actual.size()) + " terms"};
    return r;
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (expected[i] != actual[i]) {
      r.pass = false;
      r.first_failure = Counterexample{n_min + i, std::nullopt, to_fraction_string(expected[i]),
                                       to_fraction_string(actual[i])};
      break;
    }
  }
  return r;
}

IdentityResult compare_indexed(std::string id, std::string description, std::size_t n_min,
                               std::size_t n_max,
                               const std::function<Rational(std::size_t)>& expected,
                               const std::function<Rational(std::size_t)>& actual,
                               CheckKind kind) {
  IdentityResult r{std::move(id), std::move(description), kind, n_min, n_max, true, std::nullopt};
  for (std::size_t n = n_min; n <= n_max; ++n) {
    const Rational e = expected(n);
    const Rational a = actual(n);
    if (e != a) {
      r.pass = false;
      r.first_failure = Counterexample{n, std::nullopt, to_fraction_string(e), to_fraction_string(a)};
      break;
    }
  }
  return r;
}

IdentityResult compare_matrices(std::string id, std::string description,
                                const FactorMatrix& expected, const FactorMatrix& actual,
                                CheckKind kind) {
  IdentityResult r{std::move(id), std::move(description), kind, expected.start(),
                   expected.last(), true, std::nullopt};
  if (auto m = first_mismatch(expected, actual)) {
    r.pass = false;
    r.first_failure =
        Counterexample{m->n, m->k, to_fraction_string(m->expected), to_fraction_string(m->actual)};
  }
  return r;
}

IdentityResult check_identity_matrix(std::string id, std::string description,
                                     const FactorMatrix& m) {
  return compare_matrices(std::move(id), std::move(description),
                          FactorMatrix::identity(m.start(), m.dim()), m);
}

}  // namespace lambertfact
