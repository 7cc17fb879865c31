#include "lambertfact/applications.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "lambertfact/arith.hpp"
#include "lambertfact/errors.hpp"
#include "lambertfact/factorization.hpp"
#include "lambertfact/parallel.hpp"
#include "lambertfact/qseries.hpp"

namespace lambertfact {

namespace {

std::string normalise(std::string_view name) {
  std::string out(name);
  std::replace(out.begin(), out.end(), '-', '_');
  return out;
}

Rational rational_pow(std::uint64_t base, std::int64_t e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), base, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e < 0) return make_rational(BigInt(1), p);
  return Rational(p);
}

Real real_pow(std::uint64_t base, const Real& e) {
  return pow(Real(static_cast<long>(base), e.precision()), e);
}

Real real_sigma(std::uint64_t n, const Real& s) {
  Real acc(0L, s.precision());
  for (auto d : divisors(n)) acc += real_pow(d, s);
  return acc;
}

using Weight = std::function<Rational(std::uint64_t)>;

/// w_k = sum_{d|n, d>=k} p(d-k) mu(n/d) c(d) for k = 1..n; slot 0 unused.
std::vector<Rational> inverse_row(std::uint64_t n, const Weight& c) {
  const auto pt = PartitionCache::global().table(static_cast<std::int64_t>(n));
  std::vector<Rational> w(n + 1, Rational(0));
  for (auto d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    const Rational cd = c(d);
    for (std::uint64_t k = 1; k <= d; ++k) {
      const Rational term = cd * Rational(pt[d - k]);
      if (mu > 0) {
        w[k] += term;
      } else {
        w[k] -= term;
      }
    }
  }
  return w;
}

template <class T>
T combine(const std::vector<Rational>& w, const std::vector<T>& bracket, T acc,
          unsigned precision) {
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (sgn(w[k]) == 0) continue;
    if constexpr (std::is_same_v<T, Rational>) {
      acc += w[k] * bracket[k];
    } else {
      acc += Real(w[k], precision) * bracket[k];
    }
  }
  return acc;
}

}  // namespace

std::string to_string(const Scalar& x, int digits) {
  if (const auto* q = std::get_if<Rational>(&x)) return to_short_string(*q);
  return std::get<Real>(x).to_string(digits);
}

Real to_real(const Scalar& x, unsigned precision) {
  if (const auto* q = std::get_if<Rational>(&x)) return Real(*q, precision);
  return std::get<Real>(x);
}

// -- exotic sums -------------------------------------------------------------

ExoticKind parse_exotic_kind(std::string_view name) {
  const auto n = normalise(name);
  if (n == "power_s") return ExoticKind::kPowerS;
  if (n == "von_mangoldt") return ExoticKind::kVonMangoldt;
  if (n == "jordan") return ExoticKind::kJordan;
  if (n == "totient") return ExoticKind::kTotient;
  throw DomainError("unknown exotic sum kind '" + std::string(name) + "'");
}

std::string to_string(ExoticKind kind) {
  switch (kind) {
    case ExoticKind::kPowerS: return "power_s";
    case ExoticKind::kVonMangoldt: return "von_mangoldt";
    case ExoticKind::kJordan: return "jordan";
    case ExoticKind::kTotient: return "totient";
  }
  return "?";
}

namespace {

void check_exotic(ExoticKind kind, std::uint64_t n, const ExoticParams& params) {
  if (n == 0) throw DomainError("exotic_sum: n must be positive");
  if (kind == ExoticKind::kJordan && params.t < 1) {
    throw DomainError("exotic_sum: jordan needs t >= 1");
  }
  if (kind == ExoticKind::kVonMangoldt && params.precision < 2) {
    throw DomainError("exotic_sum: precision too small");
  }
}

}  // namespace

Scalar exotic_sum(ExoticKind kind, std::uint64_t n, const ExoticParams& params) {
  check_exotic(kind, n, params);
  const auto sn = static_cast<std::int64_t>(n);
  switch (kind) {
    case ExoticKind::kPowerS: {
      const auto w = inverse_row(n, [&](std::uint64_t d) -> Rational { return 1 / sigma(d, params.t); });
      Rational acc = 0;
      for (std::int64_t k = 1; k <= sn; ++k) {
        if (sgn(w[k]) == 0) continue;
        const Rational b = pentagonal_bracket(k, 24 * k + 1, Rational(0), [&](std::int64_t m) {
          const auto um = static_cast<std::uint64_t>(m);
          return Rational(sigma(um, params.t) * sigma(um, params.s));
        });
        acc += w[k] * b;
      }
      return acc;
    }
    case ExoticKind::kJordan:
    case ExoticKind::kTotient: {
      const std::int64_t t = kind == ExoticKind::kJordan ? params.t : 1;
      const auto w = inverse_row(n, [&](std::uint64_t d) -> Rational { return rational_pow(d, -t); });
      Rational acc = 0;
      for (std::int64_t k = 1; k <= sn; ++k) {
        if (sgn(w[k]) == 0) continue;
        const Rational b = pentagonal_bracket(k, 24 * k - 23, Rational(0), [&](std::int64_t m) {
          return rational_pow(static_cast<std::uint64_t>(m), 2 * t);
        });
        acc += w[k] * b;
      }
      return acc;
    }
    case ExoticKind::kVonMangoldt: {
      const unsigned prec = params.precision;
      const auto w = inverse_row(n, [](std::uint64_t d) -> Rational { return make_rational(1, BigInt(d)); });
      Real acc(0L, prec);
      for (std::int64_t k = 1; k <= sn; ++k) {
        if (sgn(w[k]) == 0) continue;
        const Real b = pentagonal_bracket(k, 24 * k - 23, Real(0L, prec), [&](std::int64_t m) {
          if (m < 1) throw IdentityViolation("exotic_sum: log argument below 1");
          if (m == 1) return Real(0L, prec);
          const Real rm(static_cast<long>(m), prec);
          return rm * log(rm);
        });
        acc += Real(w[k], prec) * b;
      }
      return acc;
    }
  }
  throw DomainError("exotic_sum: unknown kind");
}

Scalar exotic_reference(ExoticKind kind, std::uint64_t n, const ExoticParams& params) {
  check_exotic(kind, n, params);
  switch (kind) {
    case ExoticKind::kPowerS: return rational_pow(n, params.s);
    case ExoticKind::kJordan: return Rational(totients(n, static_cast<unsigned>(params.t)));
    case ExoticKind::kTotient: return Rational(euler_phi(n));
    case ExoticKind::kVonMangoldt: return von_mangoldt(n, params.precision);
  }
  throw DomainError("exotic_reference: unknown kind");
}

// -- zeta series ---------------------------------------------------------------

ZetaVariant parse_zeta_variant(std::string_view name) {
  const auto n = normalise(name);
  if (n == "sigma_st") return ZetaVariant::kSigmaST;
  if (n == "sigma_st_shifted") return ZetaVariant::kSigmaSTShifted;
  if (n == "deriv_t1") return ZetaVariant::kDerivT1;
  throw DomainError("unknown zeta variant '" + std::string(name) + "'");
}

std::string to_string(ZetaVariant v) {
  switch (v) {
    case ZetaVariant::kSigmaST: return "sigma_st";
    case ZetaVariant::kSigmaSTShifted: return "sigma_st_shifted";
    case ZetaVariant::kDerivT1: return "deriv_t1";
  }
  return "?";
}

namespace {

Weight zeta_weight(ZetaVariant variant, std::int64_t t) {
  switch (variant) {
    case ZetaVariant::kSigmaST:
      return [t](std::uint64_t d) -> Rational { return 1 / sigma(d, t); };
    case ZetaVariant::kSigmaSTShifted:
      return [t](std::uint64_t d) -> Rational { return rational_pow(d, t) / sigma(d, t); };
    case ZetaVariant::kDerivT1:
      return [](std::uint64_t d) -> Rational { return make_rational(1, BigInt(d)); };
  }
  throw DomainError("unknown zeta variant");
}

/// sum over j with G_j < k of (-1)^ceil(j/2) h(k - G_j).
template <class T, class Fn>
T interleaved_bracket(std::uint64_t k, T acc, Fn&& h) {
  for (std::uint64_t j = 0;; ++j) {
    const std::uint64_t g = pentagonal_g(j);
    if (g >= k) break;
    if (pentagonal_sign(j) > 0) {
      acc += h(k - g);
    } else {
      acc -= h(k - g);
    }
  }
  return acc;
}

/// Exact inner summand h(m) for integer s.
Rational zeta_inner_exact(ZetaVariant variant, std::int64_t s, std::int64_t t, std::uint64_t m) {
  switch (variant) {
    case ZetaVariant::kSigmaST:
      return sigma(m, t) * sigma(m, s) * rational_pow(m, -s);
    case ZetaVariant::kSigmaSTShifted:
      return sigma(m, t) * sigma(m, s) * rational_pow(m, -(s + t));
    case ZetaVariant::kDerivT1:
      return sigma(m, s) * rational_pow(m, -(s - 1));
  }
  throw DomainError("unknown zeta variant");
}

Real zeta_inner_real(ZetaVariant variant, const Real& s, std::int64_t t, std::uint64_t m) {
  const unsigned prec = s.precision();
  const Real rt(static_cast<long>(t), prec);
  switch (variant) {
    case ZetaVariant::kSigmaST:
      return Real(sigma(m, t), prec) * real_sigma(m, s) / real_pow(m, s);
    case ZetaVariant::kSigmaSTShifted:
      return Real(sigma(m, t), prec) * real_sigma(m, s) / real_pow(m, s + rt);
    case ZetaVariant::kDerivT1:
      return real_sigma(m, s) / real_pow(m, s - Real(1L, prec));
  }
  throw DomainError("unknown zeta variant");
}

void require_convergent(bool ok) {
  if (!ok) throw DivergenceError("zeta series diverges for s <= 1");
}

}  // namespace

Rational zeta_term(ZetaVariant variant, std::int64_t s, std::int64_t t, std::uint64_t n) {
  require_convergent(s > 1);
  if (n == 0) throw DomainError("zeta_term: n must be positive");
  const auto w = inverse_row(n, zeta_weight(variant, t));
  std::vector<Rational> b(n + 1, Rational(0));
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (sgn(w[k]) == 0) continue;
    b[k] = interleaved_bracket(k, Rational(0), [&](std::uint64_t m) {
      return zeta_inner_exact(variant, s, t, m);
    });
  }
  return combine(w, b, Rational(0), 0);
}

Real zeta_term_real(ZetaVariant variant, const Real& s, std::int64_t t, std::uint64_t n) {
  require_convergent(s > Real(1L, s.precision()));
  if (n == 0) throw DomainError("zeta_term: n must be positive");
  const unsigned prec = s.precision();
  const auto w = inverse_row(n, zeta_weight(variant, t));
  std::vector<Real> b(n + 1, Real(0L, prec));
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (sgn(w[k]) == 0) continue;
    b[k] = interleaved_bracket(k, Real(0L, prec), [&](std::uint64_t m) {
      return zeta_inner_real(variant, s, t, m);
    });
  }
  return combine(w, b, Real(0L, prec), prec);
}

namespace {

/// B_0 .. B_m (B_1 = -1/2).
std::vector<Rational> bernoulli_numbers(unsigned m) {
  std::vector<Rational> b(m + 1, Rational(0));
  b[0] = 1;
  for (unsigned k = 1; k <= m; ++k) {
    Rational acc = 0;
    for (unsigned j = 0; j < k; ++j) acc += Rational(binomial(k + 1, j)) * b[j];
    b[k] = -acc / (k + 1);
  }
  return b;
}

}  // namespace

Real zeta_reference(const Real& s) {
  const unsigned prec = s.precision();
  require_convergent(s > Real(1L, prec));
  const unsigned work = prec + 32;
  const Real sw = Real(0L, work) + s;
  const unsigned K = std::max(8u, prec / 4);
  const long M = static_cast<long>(std::max(32u, prec));
  const auto B = bernoulli_numbers(2 * K);

  const Real one(1L, work);
  Real acc(0L, work);
  for (long n = 1; n < M; ++n) acc += one / pow(Real(n, work), sw);
  const Real rm(M, work);
  const Real m_pow = pow(rm, sw);  // M^s
  acc += rm / (m_pow * (sw - one));
  acc += one / (m_pow * Real(2L, work));

  // rising = s (s+1) ... (s+2k-2), mpow = M^{s+2k-1}
  Real rising = sw;
  Real mpow = m_pow * rm;
  BigInt fact = 2;  // (2k)!
  for (unsigned k = 1; k <= K; ++k) {
    acc += Real(B[2 * k] / Rational(fact), work) * rising / mpow;
    rising *= (sw + Real(static_cast<long>(2 * k - 1), work)) *
              (sw + Real(static_cast<long>(2 * k), work));
    mpow *= rm * rm;
    fact *= (2 * k + 1) * (2 * k + 2);
  }
  Real out(prec);
  mpfr_set(out.get(), acc.get(), MPFR_RNDN);
  return out;
}

namespace {

ZetaReport finish_report(ZetaReport r, unsigned precision) {
  r.partial_sums.reserve(r.terms.size());
  r.abs_errors.reserve(r.terms.size());
  if (r.exact) {
    Rational acc = 0;
    for (const auto& t : r.terms) {
      acc += std::get<Rational>(t);
      r.partial_sums.emplace_back(acc);
      r.abs_errors.push_back(abs(r.reference - Real(acc, precision)));
    }
  } else {
    Real acc(0L, precision);
    for (const auto& t : r.terms) {
      acc += std::get<Real>(t);
      r.partial_sums.emplace_back(acc);
      r.abs_errors.push_back(abs(r.reference - acc));
    }
  }
  return r;
}

}  // namespace

ZetaReport zeta_partial(ZetaVariant variant, std::int64_t s, std::int64_t t, std::size_t N,
                        unsigned precision, unsigned jobs) {
  require_convergent(s > 1);
  if (N == 0) throw DomainError("zeta_partial: N must be positive");
  PartitionCache::global().reserve(static_cast<std::int64_t>(N));
  ZetaReport r;
  r.variant = variant;
  r.s = std::to_string(s);
  r.t = t;
  r.exact = true;
  r.reference = zeta_reference(Real(s, precision));
  std::vector<Rational> terms(N);
  parallel_for(N, jobs, [&](std::size_t i) { terms[i] = zeta_term(variant, s, t, i + 1); });
  for (auto& x : terms) r.terms.emplace_back(std::move(x));
  return finish_report(std::move(r), precision);
}

ZetaReport zeta_partial_real(ZetaVariant variant, const Real& s, std::int64_t t, std::size_t N,
                             unsigned jobs) {
  require_convergent(s > Real(1L, s.precision()));
  if (N == 0) throw DomainError("zeta_partial: N must be positive");
  PartitionCache::global().reserve(static_cast<std::int64_t>(N));
  const unsigned precision = s.precision();
  ZetaReport r;
  r.variant = variant;
  r.s = s.to_string(20);
  r.t = t;
  r.exact = false;
  r.reference = zeta_reference(s);
  std::vector<Real> terms(N, Real(precision));
  parallel_for(N, jobs, [&](std::size_t i) { terms[i] = zeta_term_real(variant, s, t, i + 1); });
  for (auto& x : terms) r.terms.emplace_back(std::move(x));
  return finish_report(std::move(r), precision);
}

std::string to_csv(const ZetaReport& r) {
  std::string out = "n,term,partial_sum,abs_error\n";
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    out += std::to_string(i + 1) + "," + to_string(r.terms[i]) + "," +
           to_string(r.partial_sums[i]) + "," + r.abs_errors[i].to_string(30) + "\n";
  }
  return out;
}

nlohmann::json to_json(const ZetaReport& r) {
  auto render = [](const Scalar& x) {
    if (const auto* q = std::get_if<Rational>(&x)) return to_fraction_string(*q);
    return std::get<Real>(x).to_string(40);
  };
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    rows.push_back({{"n", i + 1},
                    {"term", render(r.terms[i])},
                    {"partial_sum", render(r.partial_sums[i])},
                    {"abs_error", r.abs_errors[i].to_string(30)}});
  }
  return {{"variant", to_string(r.variant)}, {"s", r.s},
          {"t", r.t},                       {"exact", r.exact},
          {"reference", r.reference.to_string(40)}, {"rows", std::move(rows)}};
}

DirichletCheck dirichlet_sigma_check(std::int64_t alpha, std::int64_t s, std::size_t N,
                                     unsigned precision) {
  require_convergent(s > 1 && s - alpha > 1);
  Real acc(0L, precision);
  for (std::uint64_t n = 1; n <= N; ++n) {
    acc += Real(sigma(n, alpha) * rational_pow(n, -s), precision);
  }
  const Real closed =
      zeta_reference(Real(s, precision)) * zeta_reference(Real(s - alpha, precision));
  return {acc, closed};
}

// -- omega(n) -------------------------------------------------------------------

namespace {

/// s_{n,k} for k = 0..n (slot 0 unused) from one pochhammer expansion.
std::vector<BigInt> s_row(std::uint64_t n) {
  const QSeries poch = pochhammer_qq(n);
  std::vector<BigInt> row(n + 1, BigInt(0));
  for (std::uint64_t k = 1; k <= n; ++k) {
    for (std::uint64_t m = k; m <= n; m += k) row[k] += poch[n - m].get_num();
  }
  return row;
}

/// sum_{j<=k} C_{k,j} |mu(j)| for k = 1..n; the literal form omits mu(k/d).
std::vector<BigInt> c_squarefree_sums(std::uint64_t n, Form form) {
  std::vector<BigInt> out(n + 1, BigInt(0));
  if (form == Form::kStandard) {
    const auto c = c_matrix(n);
    for (std::uint64_t k = 1; k <= n; ++k) {
      for (std::uint64_t j = 1; j <= k; ++j) {
        if (mobius(j) != 0) out[k] += c.at(k, j).get_num();
      }
    }
    return out;
  }
  const auto pt = PartitionCache::global().table(static_cast<std::int64_t>(n));
  for (std::uint64_t k = 1; k <= n; ++k) {
    for (std::uint64_t j = 1; j <= k; ++j) {
      if (mobius(j) == 0) continue;
      for (auto d : divisors(k)) {
        for (std::uint64_t i = 1; i * j <= d; ++i) out[k] += pt[d - i * j];
      }
    }
  }
  return out;
}

unsigned exact_log2(const BigInt& x, std::uint64_t n) {
  if (sgn(x) <= 0 || mpz_popcount(x.get_mpz_t()) != 1) {
    throw IdentityViolation("omega formula: inner sum " + x.get_str() + " at n = " +
                            std::to_string(n) + " is not a power of two");
  }
  return static_cast<unsigned>(mpz_sizeinbase(x.get_mpz_t(), 2) - 1);
}

}  // namespace

BigInt omega_inner_sum(std::uint64_t n, Form form) {
  if (n == 0) throw DomainError("omega: n must be positive");
  const auto s = s_row(n);
  const auto c = c_squarefree_sums(n, form);
  BigInt acc = 0;
  for (std::uint64_t k = 1; k <= n; ++k) acc += s[k] * c[k];
  return acc;
}

unsigned omega_exact(std::uint64_t n) { return exact_log2(omega_inner_sum(n), n); }

std::vector<OmegaRow> omega_table(std::uint64_t upto, unsigned jobs) {
  if (upto == 0) throw DomainError("omega: upto must be positive");
  const auto s = s_base(upto, jobs);
  const auto c = c_squarefree_sums(upto, Form::kStandard);
  std::vector<OmegaRow> rows;
  rows.reserve(upto);
  for (std::uint64_t n = 1; n <= upto; ++n) {
    BigInt acc = 0;
    for (std::uint64_t k = 1; k <= n; ++k) acc += s.at(n, k).get_num() * c[k];
    OmegaRow row{n, acc, 0, omega_distinct(n), false};
    if (sgn(acc) > 0 && mpz_popcount(acc.get_mpz_t()) == 1) {
      row.omega_formula = exact_log2(acc, n);
      row.match = row.omega_formula == row.omega_reference;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// -- partition identities -------------------------------------------------------

PartitionIdentity parse_partition_identity(std::string_view name) {
  const auto n = normalise(name);
  if (n == "p_sigma1") return PartitionIdentity::kPSigma1;
  if (n == "pk_restricted") return PartitionIdentity::kPkRestricted;
  if (n == "pp_sigma2") return PartitionIdentity::kPpSigma2;
  throw DomainError("unknown partition identity '" + std::string(name) + "'");
}

std::string to_string(PartitionIdentity which) {
  switch (which) {
    case PartitionIdentity::kPSigma1: return "p_sigma1";
    case PartitionIdentity::kPkRestricted: return "pk_restricted";
    case PartitionIdentity::kPpSigma2: return "pp_sigma2";
  }
  return "?";
}

std::vector<BigInt> restricted_partitions(std::uint64_t k, std::size_t order) {
  QSeries f = QSeries::one(order);
  for (std::uint64_t i = 1; i <= k && i <= order; ++i) f = f * geometric_power(i, 1, order);
  std::vector<BigInt> out;
  for (const auto& c : f.coeffs()) out.push_back(c.get_num());
  return out;
}

std::vector<BigInt> plane_partitions(std::size_t order) {
  QSeries f = QSeries::one(order);
  for (std::size_t k = 1; k <= order; ++k) {
    f = f * geometric_power(k, static_cast<unsigned>(k), order);
  }
  std::vector<BigInt> out;
  for (const auto& c : f.coeffs()) out.push_back(c.get_num());
  return out;
}

PartitionVerdict partition_identity_check(PartitionIdentity which, std::uint64_t n,
                                          std::uint64_t k) {
  if (n == 0) throw DomainError("partition_identity_check: n must be positive");
  PartitionVerdict v{which, n, k, 0, 0, false, std::nullopt, std::nullopt};
  const BigInt bn(static_cast<unsigned long>(n));
  switch (which) {
    case PartitionIdentity::kPSigma1: {
      const auto pt = PartitionCache::global().table(static_cast<std::int64_t>(n));
      v.lhs = bn * pt[n];
      BigInt literal = 0;
      const BigInt sn = sigma(n, 1).get_num();
      for (std::uint64_t j = 0; j < n; ++j) {
        v.rhs += pt[j] * sigma(n - j, 1).get_num();
        literal += pt[j] * sn;
      }
      v.literal_pass = literal == v.lhs;
      v.literal_rhs = std::move(literal);
      break;
    }
    case PartitionIdentity::kPkRestricted: {
      if (k == 0) throw DomainError("partition_identity_check: restricted form needs k >= 1");
      const auto pk = restricted_partitions(k, n);
      v.lhs = bn * pk[n];
      for (std::uint64_t t = 1; t <= n; ++t) {
        BigInt inner = 0;
        for (auto j : divisors(t)) {
          if (j <= k) inner += static_cast<unsigned long>(j);
        }
        v.rhs += pk[n - t] * inner;
      }
      break;
    }
    case PartitionIdentity::kPpSigma2: {
      const auto pp = plane_partitions(n);
      v.lhs = bn * pp[n];
      for (std::uint64_t j = 1; j <= n; ++j) v.rhs += pp[n - j] * sigma(j, 2).get_num();
      break;
    }
  }
  v.pass = v.lhs == v.rhs;
  return v;
}

nlohmann::json to_json(const PartitionVerdict& v) {
  nlohmann::json j = {{"identity", to_string(v.which)},
                      {"n", v.n},
                      {"lhs", v.lhs.get_str()},
                      {"rhs", v.rhs.get_str()},
                      {"pass", v.pass}};
  if (v.which == PartitionIdentity::kPkRestricted) j["k"] = v.k;
  if (v.literal_rhs) {
    j["literal_rhs"] = v.literal_rhs->get_str();
    j["literal_pass"] = *v.literal_pass;
  }
  return j;
}

}  // namespace lambertfact
