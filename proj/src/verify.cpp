#include "lambertfact/verify.hpp"

#include <functional>
#include <optional>
#include <string>

#include "lambertfact/applications.hpp"
#include "lambertfact/arith.hpp"
#include "lambertfact/derivatives.hpp"
#include "lambertfact/errors.hpp"
#include "lambertfact/factorization.hpp"

namespace lambertfact {

namespace {

using Suite = std::function<VerificationReport(const VerifyConfig&)>;

ArithmeticTable fn(const std::string& name, std::size_t size) { return named_function(name, size); }

Rational pow2(unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return Rational(r);
}

std::optional<std::size_t> first_series_mismatch(const QSeries& a, const QSeries& b) {
  const std::size_t top = std::min(a.order(), b.order());
  for (std::size_t n = 0; n <= top; ++n) {
    if (a[n] != b[n]) return n;
  }
  return std::nullopt;
}

/// Result accumulated over a family of cases; the first failing case is kept.
struct FamilyResult {
  IdentityResult r;

  FamilyResult(std::string id, std::string description, std::size_t n_max, CheckKind kind) {
    r.id = std::move(id);
    r.description = std::move(description);
    r.kind = kind;
    r.n_min = 0;
    r.n_max = n_max;
  }

  void check_series(const QSeries& expected, const QSeries& actual, std::size_t column) {
    if (!r.pass) return;
    if (auto n = first_series_mismatch(expected, actual)) {
      r.pass = false;
      r.first_failure = Counterexample{*n, column, to_short_string(expected[*n]),
                                       to_short_string(actual[*n])};
    }
  }

  void check_value(std::size_t n, std::size_t column, const Rational& expected,
                   const Rational& actual) {
    if (!r.pass || expected == actual) return;
    r.pass = false;
    r.first_failure = Counterexample{n, column, to_short_string(expected), to_short_string(actual)};
  }
};

VerificationReport make_report(std::string suite, const VerifyConfig& c) {
  VerificationReport rep;
  rep.suite = std::move(suite);
  rep.parameters = {{"N", c.N}, {"f", c.f}, {"g", c.g}, {"t", c.t}, {"j", c.j}};
  return rep;
}

void require_config(const VerifyConfig& c) {
  if (c.N == 0) throw DomainError("verify: N must be at least 1");
  if (!is_named_function(c.f)) throw DomainError("verify: unknown function '" + c.f + "'");
  if (!is_named_function(c.g)) throw DomainError("verify: unknown function '" + c.g + "'");
  if (c.t == 0) throw DomainError("verify: t must be at least 1");
  if (c.j < 2) throw DomainError("verify: j must be at least 2");
}

BuildOptions no_verify(const VerifyConfig& c) { return BuildOptions{false, c.jobs}; }

// -- suites -------------------------------------------------------------------

VerificationReport suite_base(const VerifyConfig& c) {
  auto rep = make_report("base", c);
  const std::size_t N = c.N;
  const auto s = s_base(N, c.jobs);
  const std::size_t nc = std::min<std::size_t>(N, 40);
  FamilyResult comb("s-base-combinatorial", "s_{n,k} equals s_o(n,k) - s_e(n,k)", nc,
                    CheckKind::kIdentity);
  for (std::size_t n = 1; n <= nc; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      comb.check_value(n, k, Rational(s_base_combinatorial(n, k)), s.at(n, k));
    }
  }
  rep.add(comb.r);

  const auto f = fn(c.f, N);
  rep.add(factorization_identity("s-base-factorization",
                                 "L_f(q) = (q;q)^{-1} sum_n sum_k s_{n,k} f_k q^n", s, f,
                                 lambert_gf(f, N)));

  const QSeries partitions = series_reciprocal(pochhammer_qq(N));
  rep.add(compare_indexed(
      "partition-recurrence", "pentagonal recurrence p(n) equals [q^n] 1/(q;q)", 0, N,
      [&](std::size_t n) { return partitions[n]; },
      [](std::size_t n) { return Rational(partition_p(static_cast<std::int64_t>(n))); }));

  const ArithmeticTable ones(N, [](std::uint64_t) { return Rational(1); });
  rep.add(check_identity_matrix("s-base-inverse",
                                "s_{n,k} times sum_{d|n} p(d-k) mu(n/d) is the identity",
                                multiply(s, pentagonal_divisor_inverse(ones, N))));
  rep.add(compare_matrices("c-matrix-series", "C_{n,k} closed form equals its matrix route",
                           c_matrix_from_series(N), c_matrix(N)));
  return rep;
}

VerificationReport suite_hadamard(const VerifyConfig& c) {
  auto rep = make_report("hadamard", c);
  const std::size_t N = c.N;
  const auto f = fn(c.f, N);
  const auto g = fn(c.g, N);
  const auto fwd = hadamard_forward(f, N, c.jobs);
  rep.add(compare_matrices("hadamard-forward-oracle",
                           "pentagonal closed form for s_{n,k}(f) equals the series oracle",
                           hadamard_forward_oracle(f, N), fwd));
  const auto inv = hadamard_inverse(f, N, no_verify(c));
  rep.add(check_identity_matrix("hadamard-inverse-product",
                                "s_{n,k}(f) times sum_{d|n} p(d-k) mu(n/d)/f~(d) is the identity",
                                multiply(fwd, inv)));
  const auto afg = hadamard_coeffs(f, g, N);
  const QSeries target = lambert_gf(afg, N);
  rep.add(factorization_identity("hadamard-factorization",
                                 "L_{a_fg}(q) = (q;q)^{-1} sum_n sum_k s_{n,k}(f) g_k q^n", fwd,
                                 g, target));
  const QSeries rhs = series_mul(pochhammer_qq(N), target);
  std::vector<Rational> rv(N);
  for (std::size_t k = 1; k <= N; ++k) rv[k - 1] = rhs[k];
  const auto recovered = lambertfact::apply(inv, rv);
  std::vector<Rational> gv(N);
  for (std::size_t k = 1; k <= N; ++k) gv[k - 1] = g(k);
  rep.add(compare_sequences("hadamard-inverse-expansion",
                            "g_n = sum_k s^{-1}_{n,k}(f) [q^k] (q;q) L_{a_fg}(q)", 1, gv,
                            recovered));
  return rep;
}

VerificationReport suite_convolution(const VerifyConfig& c) {
  auto rep = make_report("convolution", c);
  const std::size_t N = c.N;
  const auto f = fn(c.f, N + 1);
  const auto g = fn(c.g, N + 1);
  const auto gN = fn(c.g, N);
  const auto oracle = conv_forward_oracle(gN, N);
  rep.add(compare_matrices("conv-forward-oracle",
                           "sum_{j<=n+1} s_{j,k} g~(n+1-j), empty j = n+1 term, equals the oracle",
                           oracle, conv_forward_closed_form(gN, N, ConvBoundary::kZero)));
  rep.add(compare_matrices("conv-forward-boundary-one",
                           "same sum reading the j = n+1 divisor sum over d | 0 as 1", oracle,
                           conv_forward_closed_form(gN, N, ConvBoundary::kOne),
                           CheckKind::kLiteral));
  const auto fwd = conv_forward(gN, N, no_verify(c));
  rep.add(check_identity_matrix("conv-inverse-product",
                                "s_{n,k}(g) times its closed-form inverse is the identity",
                                multiply(fwd, conv_inverse(gN, N, no_verify(c)))));
  const QSeries target = divide_by_q(series_mul(lambert_gf(f, N + 1), lambert_gf(g, N + 1)));
  rep.add(factorization_identity("conv-factorization",
                                 "F_L(q) G_L(q) / q = (q;q)^{-1} sum_n sum_k s_{n,k}(g) f_k q^n",
                                 fwd, fn(c.f, N), target));
  const auto fN = fn(c.f, N);
  rep.add(factorization_identity(
      "stilde-factorization", "L_{f*g}(q) = (q;q)^{-1} sum_n sum_k s~_{n,k}(g) f(k) q^n",
      stilde(gN, N), fN, lambert_gf(fN.convolve(gN), N)));
  return rep;
}

VerificationReport suite_derivatives(const VerifyConfig& c) {
  auto rep = make_report("derivatives", c);
  const std::size_t N = c.N;
  const unsigned t = c.t;
  if (N < t) throw DomainError("verify: N must be at least t");
  const auto a = fn(c.f, N);
  ArithmeticTable tail(N, [&](std::uint64_t m) { return m >= t ? a(m) : Rational(0); });
  const auto fwd = deriv_matrix(t, N);
  rep.add(factorization_identity("deriv-factorization",
                                 "q^t D^t sum_{m>=t} a_m q^m/(1-q^m) = (q;q)^{-1} sum s_{t,n,k} a_k q^n",
                                 fwd, a, q_derivative(lambert_gf(tail, N), t)));
  const auto inv = deriv_inverse(t, N, no_verify(c));
  rep.add(check_identity_matrix("deriv-inverse-product",
                                "s_{t,n,k} times its inverse is the identity", multiply(fwd, inv)));
  if (t == 1) {
    rep.add(compare_matrices("deriv-inverse-closed-form",
                             "sum_{d|n} p(d-k) mu(n/d)/d equals the exact inverse",
                             invert_lower_triangular(fwd), inv));
  }
  DerivParams params{t, N, a};
  rep.append(a_t_identities(params));
  return rep;
}

VerificationReport suite_mixed(const VerifyConfig& c) {
  auto rep = make_report("mixed", c);
  const std::size_t N = c.N;
  const unsigned j = c.j;
  const auto fwd = mixed_deriv_forward(j, N);
  rep.add(check_identity_matrix("mixed-inverse-product",
                                "mixed forward matrix times sum_{d|n} p(d-k) mu(n/d)/w_j(d)",
                                multiply(fwd, mixed_deriv_inverse(j, N, no_verify(c)))));
  const auto a = fn(c.f, N);
  QSeries target = q_derivative(lambert_gf(a, N), j);
  for (std::size_t i = 1; i < j && i <= N; ++i) target.add_to(i, a.divisor_sum(i));
  rep.add(factorization_identity(
      "mixed-factorization",
      "q^j D^j L_a(q) + sum_{i<j} (a*1)(i) q^i = (q;q)^{-1} sum_n sum_k s_{n,k} a_k q^n", fwd, a,
      target));
  return rep;
}

VerificationReport suite_lemmas(const VerifyConfig& c) {
  auto rep = make_report("lemmas", c);
  const std::size_t N = c.N;
  const auto a = fn(c.f, N);

  FamilyResult modified("modified-coefficients",
                        "[q^n] sum_{i>=t} a_i q^{mi}/(1-q^i)^{k+1} divisor-sum closed form, "
                        "m,k <= 3, t <= 2",
                        N, CheckKind::kIdentity);
  for (std::uint64_t m = 1; m <= 3; ++m) {
    for (unsigned k = 0; k <= 3; ++k) {
      for (std::uint64_t t = 1; t <= 2; ++t) {
        const QSeries oracle = modified_series(a, m, k, t, N);
        for (std::uint64_t n = 1; n <= N; ++n) {
          modified.check_value(n, m * 100 + k * 10 + t, oracle[n], modified_coeff(a, m, k, t, n));
        }
      }
    }
  }
  rep.add(modified.r);

  const unsigned s_max = 4;
  const std::uint64_t i_max = 6;
  for (auto expansion : {DerivExpansion::kStirling, DerivExpansion::kBinomialShift}) {
    const std::string name =
        expansion == DerivExpansion::kStirling ? "stirling-expansion" : "binomial-expansion";
    for (Form form : {Form::kStandard, Form::kLiteral}) {
      const bool literal = form == Form::kLiteral;
      FamilyResult fam(name + (literal ? "-literal" : ""),
                       std::string("q^s D^s [q^i/(1-q^i)] from its ") +
                           (expansion == DerivExpansion::kStirling ? "Stirling" : "binomial") +
                           " expansion, s <= 4, i <= 6" + (literal ? ", printed form" : ""),
                       N, literal ? CheckKind::kLiteral : CheckKind::kIdentity);
      for (unsigned s = 1; s <= s_max; ++s) {
        for (std::uint64_t i = 1; i <= i_max; ++i) {
          fam.check_series(deriv_term_direct(i, s, N), deriv_term_series(i, s, expansion, N, form),
                           i * 10 + s);
        }
      }
      rep.add(fam.r);
    }
  }

  const auto g = fn(c.g, N);
  for (const auto& [id, b] : {std::pair{std::string("related-factorization-tdiv"), tdiv_matrix(N)},
                              std::pair{std::string("related-factorization-stilde"), stilde(g, N)}}) {
    const auto pq = pochhammer_qq(N);
    FactorMatrix oracle(1, N);
    for (std::size_t k = 1; k <= N; ++k) {
      QSeries col(N);
      for (std::size_t j = k; j <= N; ++j) {
        if (sgn(b.at(j, k)) != 0) col = col + b.at(j, k) * lambert_term(j, N);
      }
      const QSeries prod = series_mul(pq, col);
      for (std::size_t n = k; n <= N; ++n) oracle.set(n, k, prod[n]);
    }
    rep.add(compare_matrices(id, "s_{n,k}(b) = sum_j s_{n,j} b_{j,k} against the series oracle",
                             oracle, related_fact_matrix(b)));
  }

  for (unsigned t = 1; t <= std::min<unsigned>(3, static_cast<unsigned>(N)); ++t) {
    const DerivParams params{t, N, a};
    const auto target = a_t_lambert_coeffs(params);
    for (Form form : {Form::kStandard, Form::kLiteral}) {
      const bool literal = form == Form::kLiteral;
      rep.add(compare_indexed(
          "a_t-weights-t" + std::to_string(t) + (literal ? "-literal" : ""),
          std::string("(A_t * mu)(n) = sum_i b_{n,i} a_i") + (literal ? ", printed binomial" : ""),
          1, N, [&](std::size_t n) { return target(n); },
          [&](std::size_t n) {
            Rational acc = 0;
            for (std::size_t i = 1; i <= n; ++i) acc += a_t_weight(n, i, t, form) * a(i);
            return acc;
          },
          literal ? CheckKind::kLiteral : CheckKind::kIdentity));
    }
  }
  return rep;
}

VerificationReport suite_reconstruction(const VerifyConfig& c) {
  auto rep = make_report("reconstruction", c);
  const std::size_t N = c.N;
  const auto a = fn(c.f, N);
  const auto b = reconstruct_b(a, N);
  const auto oracle = a.divisor_sums();
  rep.add(compare_indexed("reconstruct-b", "sum_k sum_j s_{n,k} C_{k,j} a_j = (a*1)(n)", 1, N,
                          [&](std::size_t n) { return oracle(n); },
                          [&](std::size_t n) { return b(n); }));
  const auto rows = omega_table(N, c.jobs);
  rep.add(compare_indexed(
      "omega-inner-sum", "sum_k sum_j C_{k,j} s_{n,k} |mu(j)| = 2^omega(n)", 1, N,
      [](std::size_t n) { return pow2(omega_distinct(n)); },
      [&](std::size_t n) { return Rational(rows[n - 1].inner_sum); }));
  rep.add(compare_indexed(
      "omega-inner-sum-literal", "same sum with sum_{d|k} sum_i p(d-ji) in place of C_{k,j}", 1,
      N, [](std::size_t n) { return pow2(omega_distinct(n)); },
      [](std::size_t n) { return Rational(omega_inner_sum(n, Form::kLiteral)); },
      CheckKind::kLiteral));
  return rep;
}

VerificationReport suite_applications(const VerifyConfig& c) {
  auto rep = make_report("applications", c);
  const std::size_t N = c.N;
  struct ExactCase {
    std::string id;
    ExoticKind kind;
    ExoticParams params;
  };
  const std::vector<ExactCase> cases = {
      {"exotic-totient", ExoticKind::kTotient, {}},
      {"exotic-jordan-2", ExoticKind::kJordan, {1, 2}},
      {"exotic-jordan-3", ExoticKind::kJordan, {1, 3}},
      {"exotic-power-2", ExoticKind::kPowerS, {2, 1}},
  };
  for (const auto& ec : cases) {
    rep.add(compare_indexed(
        ec.id, "exotic sum for " + to_string(ec.kind) + " equals the classical function", 1, N,
        [&](std::size_t n) { return std::get<Rational>(exotic_reference(ec.kind, n, ec.params)); },
        [&](std::size_t n) { return std::get<Rational>(exotic_sum(ec.kind, n, ec.params)); }));
  }
  {
    ExoticParams p;
    p.precision = c.precision;
    std::vector<Real> expected;
    std::vector<Real> actual;
    for (std::size_t n = 1; n <= N; ++n) {
      expected.push_back(std::get<Real>(exotic_reference(ExoticKind::kVonMangoldt, n, p)));
      actual.push_back(std::get<Real>(exotic_sum(ExoticKind::kVonMangoldt, n, p)));
    }
    rep.add(compare_real("exotic-von-mangoldt", "exotic sum for Lambda(n) within 1e-20", 1,
                         expected, actual, Real::from_string("1e-20", c.precision)));
  }
  for (auto v : {ZetaVariant::kSigmaST, ZetaVariant::kSigmaSTShifted, ZetaVariant::kDerivT1}) {
    for (std::int64_t s = 2; s <= 3; ++s) {
      rep.add(compare_indexed(
          "zeta-term-" + to_string(v) + "-s" + std::to_string(s),
          "n-th summand of the zeta series equals 1/n^s", 1, N,
          [s](std::size_t n) {
            BigInt p;
            mpz_ui_pow_ui(p.get_mpz_t(), n, static_cast<unsigned long>(s));
            return make_rational(BigInt(1), p);
          },
          [&, v, s](std::size_t n) { return zeta_term(v, s, static_cast<std::int64_t>(c.t), n); }));
    }
  }
  auto identity_family = [&](PartitionIdentity which, std::uint64_t k, bool literal) {
    FamilyResult fam(to_string(which) + (literal ? "-literal" : ""),
                     literal ? "n p(n) = sum_{k<n} p(k) sigma_1(n), printed form"
                             : "classical partition identity for " + to_string(which),
                     N, literal ? CheckKind::kLiteral : CheckKind::kIdentity);
    for (std::uint64_t n = 1; n <= N; ++n) {
      const auto v = partition_identity_check(which, n, k);
      const BigInt& rhs = literal ? *v.literal_rhs : v.rhs;
      fam.check_value(n, k, Rational(v.lhs), Rational(rhs));
    }
    fam.r.n_min = 1;
    return fam.r;
  };
  rep.add(identity_family(PartitionIdentity::kPSigma1, 0, false));
  rep.add(identity_family(PartitionIdentity::kPSigma1, 0, true));
  rep.add(identity_family(PartitionIdentity::kPkRestricted, 3, false));
  rep.add(identity_family(PartitionIdentity::kPpSigma2, 0, false));
  return rep;
}

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> r = {
      {"base", suite_base},
      {"hadamard", suite_hadamard},
      {"convolution", suite_convolution},
      {"derivatives", suite_derivatives},
      {"mixed", suite_mixed},
      {"lemmas", suite_lemmas},
      {"reconstruction", suite_reconstruction},
      {"applications", suite_applications},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  out.push_back("all");
  return out;
}

VerificationReport run_suite(std::string_view suite, const VerifyConfig& config) {
  require_config(config);
  if (suite == "all") {
    auto rep = make_report("all", config);
    for (const auto& [name, run] : registry()) rep.append(run(config));
    return rep;
  }
  for (const auto& [name, run] : registry()) {
    if (name == suite) return run(config);
  }
  throw DomainError("unknown verification suite '" + std::string(suite) + "'");
}

IdentityResult factorization_identity(std::string id, std::string description,
                                      const FactorMatrix& m, const ArithmeticTable& a,
                                      const QSeries& target, CheckKind kind) {
  const std::size_t N = std::min(target.order(), m.last());
  const QSeries lhs = series_mul(pochhammer_qq(N), target.truncated(N));
  std::vector<Rational> v(m.dim());
  for (std::size_t k = m.start(); k <= m.last(); ++k) v[k - m.start()] = a(k);
  const auto rhs = lambertfact::apply(m, v);
  return compare_indexed(
      std::move(id), std::move(description), 1, N, [&](std::size_t n) { return lhs[n]; },
      [&](std::size_t n) { return n < m.start() ? Rational(0) : rhs[n - m.start()]; }, kind);
}

IdentityResult compare_real(std::string id, std::string description, std::size_t n_min,
                            const std::vector<Real>& expected, const std::vector<Real>& actual,
                            const Real& tolerance) {
  IdentityResult r;
  r.id = std::move(id);
  r.description = std::move(description);
  r.n_min = n_min;
  r.n_max = n_min + expected.size() - 1;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (abs(expected[i] - actual[i]) > tolerance) {
      r.pass = false;
      r.first_failure = Counterexample{n_min + i, std::nullopt, expected[i].to_string(30),
                                       actual[i].to_string(30)};
      break;
    }
  }
  return r;
}

}  // namespace lambertfact
