#include "lambertfact/derivatives.hpp"

#include <string>
#include <vector>

#include "lambertfact/arith.hpp"
#include "lambertfact/errors.hpp"
#include "lambertfact/factor_matrix.hpp"
#include "lambertfact/factorization.hpp"

namespace lambertfact {

namespace {

BigInt upow(std::uint64_t base, unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

int sign_of_power(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

/// Stirling weights w(m, k) = c(t,m) S(m,k) k!, shared by every triple sum.
struct StirlingWeights {
  explicit StirlingWeights(unsigned t) : t(t), c(stirling1_table(t)), s(stirling2_table(t)) {}
  BigInt operator()(unsigned m, unsigned k) const { return c[t][m] * s[m][k] * factorial(k); }
  unsigned t;
  std::vector<std::vector<BigInt>> c;
  std::vector<std::vector<BigInt>> s;
};

}  // namespace

void DerivParams::validate() const {
  if (t == 0) throw DomainError("derivative order t must be at least 1");
  if (N < t) throw DomainError("truncation N must be at least t");
  if (a.size() < N) throw DomainError("input function must be defined on 1..N");
}

Rational modified_coeff(const ArithmeticTable& a, std::uint64_t m, unsigned k, std::uint64_t t,
                        std::uint64_t n) {
  if (m == 0 || t == 0 || n == 0) throw DomainError("modified_coeff: m, t, n must be positive");
  Rational total = 0;
  for (auto d : divisors(n)) {
    if (d < t || d > n / m) continue;
    const auto top = static_cast<std::int64_t>(n / d) - static_cast<std::int64_t>(m) + k;
    total += Rational(binomial(top, k)) * a(d);
  }
  return total;
}

QSeries modified_series(const ArithmeticTable& a, std::uint64_t m, unsigned k, std::uint64_t t,
                        std::size_t order) {
  QSeries total(order);
  for (std::uint64_t i = t; i * m <= order; ++i) {
    if (sgn(a(i)) == 0) continue;
    total = total + a(i) * geometric_power(i, k + 1, order).shifted(i * m);
  }
  return total;
}

QSeries deriv_term_direct(std::uint64_t i, unsigned s, std::size_t order) {
  const QSeries base = lambert_term(i, order);
  return s == 0 ? base : q_derivative(base, s);
}

QSeries deriv_term_series(std::uint64_t i, unsigned s, DerivExpansion expansion,
                          std::size_t order, Form form) {
  if (i == 0) throw DomainError("deriv_term_series: i must be positive");
  const StirlingWeights w(s);
  QSeries total(order);
  if (expansion == DerivExpansion::kStirling) {
    for (unsigned m = 0; m <= s; ++m) {
      for (unsigned k = 0; k <= m; ++k) {
        BigInt coeff = w(m, k) * upow(i, m) * sign_of_power(s - k);
        if (coeff == 0) continue;
        QSeries term = geometric_power(i, k + 1, order);
        if (form == Form::kStandard) term = term.shifted(i);
        total = total + Rational(coeff) * term;
      }
    }
    return total;
  }
  for (unsigned r = 0; r <= s; ++r) {
    for (unsigned m = 0; m <= s; ++m) {
      for (unsigned k = 0; k <= m; ++k) {
        BigInt coeff = w(m, k) * binomial(s - k, r) * upow(i, m) *
                       sign_of_power(static_cast<std::int64_t>(s) - k - r);
        if (coeff == 0) continue;
        const unsigned power = form == Form::kStandard ? s + 1 : k + 1;
        total = total + Rational(coeff) * geometric_power(i, power, order).shifted((r + 1) * i);
      }
    }
  }
  return total;
}

Rational a_t(const DerivParams& params, std::uint64_t n, Form form) {
  params.validate();
  if (n == 0) throw DomainError("a_t: n must be positive");
  const unsigned t = params.t;
  const StirlingWeights w(t);
  const auto ds = divisors(n);
  Rational total = 0;
  for (unsigned m = 0; m <= t; ++m) {
    for (unsigned k = 0; k <= m; ++k) {
      const BigInt wk = w(m, k);
      if (wk == 0) continue;
      for (unsigned r = 0; r <= t; ++r) {
        const BigInt outer = wk * binomial(t - k, r) * sign_of_power(static_cast<std::int64_t>(t) - k - r);
        if (outer == 0) continue;
        for (auto d : ds) {
          if (d < t || d > n / (r + 1)) continue;
          const std::uint64_t lower = form == Form::kStandard ? t : k;
          const auto top = static_cast<std::int64_t>(n / d) - 1 - r + static_cast<std::int64_t>(lower);
          const BigInt bin = binomial(top, static_cast<std::int64_t>(lower));
          if (bin == 0) continue;
          total += Rational(outer * bin * upow(d, m)) * params.a(d);
        }
      }
    }
  }
  return total;
}

QSeries a_t_oracle(const DerivParams& params) {
  params.validate();
  QSeries lambert(params.N);
  for (std::uint64_t m = params.t; m <= params.N; ++m) {
    if (sgn(params.a(m)) == 0) continue;
    for (std::uint64_t n = m; n <= params.N; n += m) lambert.add_to(n, params.a(m));
  }
  return q_derivative(lambert, params.t);
}

ArithmeticTable a_t_table(const DerivParams& params, Form form) {
  params.validate();
  return ArithmeticTable(params.N, [&](std::uint64_t n) { return a_t(params, n, form); });
}

ArithmeticTable a_t_lambert_coeffs(const DerivParams& params) {
  return a_t_table(params).mobius_inverse();
}

VerificationReport a_t_identities(const DerivParams& params) {
  params.validate();
  const std::size_t N = params.N;
  const unsigned t = params.t;
  VerificationReport report;
  report.suite = "a_t-identities";
  report.parameters = {{"t", t}, {"N", N}};

  const ArithmeticTable at = a_t_table(params);
  const ArithmeticTable mu = named_function("mu", N);
  const FactorMatrix st = stilde(mu, N);
  const FactorMatrix st_inv = invert_lower_triangular(st);

  // A_t(n) = [q^n] (q;q)^{-1} sum_n (sum_k s~_{n,k}(mu) A_t(k)) q^n
  {
    QSeries weighted(N);
    for (std::size_t n = 1; n <= N; ++n) {
      Rational v = 0;
      for (std::size_t k = 1; k <= n; ++k) v += st.at(n, k) * at(k);
      weighted.set(n, v);
    }
    const QSeries rhs = series_mul(series_reciprocal(pochhammer_qq(N)), weighted);
    report.add(compare_indexed("stilde-factorization",
                               "A_t(n) = [q^n] (q;q)^-1 sum_k s~_{n,k}(mu) A_t(k) q^n", 1, N,
                               [&](std::size_t n) { return at(n); },
                               [&](std::size_t n) { return rhs[n]; }));
  }

  const auto bracket_of = [](const std::function<Rational(std::int64_t)>& h, std::int64_t k) {
    return pentagonal_bracket(k, 24 * k - 23, Rational(0), h);
  };

  report.add(compare_indexed(
      "stilde-inverse", "A_t(n) = sum_k s~^-1_{n,k}(mu) [A_t(k) + pentagonal shifts]", 1, N,
      [&](std::size_t n) { return at(n); },
      [&](std::size_t n) {
        Rational v = 0;
        for (std::size_t k = 1; k <= n; ++k) {
          v += st_inv.at(n, k) *
               bracket_of([&](std::int64_t m) { return at(static_cast<std::uint64_t>(m)); },
                          static_cast<std::int64_t>(k));
        }
        return v;
      }));

  const auto lhs = [&](std::size_t n) -> Rational {
    return Rational(falling_factorial(static_cast<std::int64_t>(n), t)) * params.a.divisor_sum(n);
  };

  report.add(compare_indexed(
      "full-derivative",
      "n!/(n-t)! (a*1)(n) = sum_{i<t} a_i sum_k s~^-1_{n,k}(mu) [pentagonal bracket of "
      "T_Div(m,i) m!/(m-t)!](k) + A_t(n)",
      1, N, lhs, [&](std::size_t n) {
        Rational v = at(n);
        for (unsigned i = 1; i < t; ++i) {
          if (sgn(params.a(i)) == 0) continue;
          const auto h = [&](std::int64_t m) {
            return m % i == 0 ? Rational(falling_factorial(m, t)) : Rational(0);
          };
          Rational inner = 0;
          for (std::size_t k = 1; k <= n; ++k) {
            inner += st_inv.at(n, k) * bracket_of(h, static_cast<std::int64_t>(k));
          }
          v += params.a(i) * inner;
        }
        return v;
      }));

  report.add(compare_indexed(
      "full-derivative-literal",
      "n!/(n-t)! (a*1)(n) = sum_{i<t} sum_{k<=n/i} s~^-1_{n,ik}(mu) (ik)!/(ik-t)! a_i + A_t(n)",
      1, N, lhs,
      [&](std::size_t n) {
        Rational v = at(n);
        for (unsigned i = 1; i < t; ++i) {
          for (std::size_t k = 1; k * i <= n; ++k) {
            v += st_inv.at(n, i * k) *
                 Rational(falling_factorial(static_cast<std::int64_t>(i * k), t)) * params.a(i);
          }
        }
        return v;
      },
      CheckKind::kLiteral));
  return report;
}

Rational a_t_weight(std::uint64_t n, std::uint64_t i, unsigned t, Form form) {
  if (n == 0 || i == 0 || t == 0) throw DomainError("a_t_weight: n, i, t must be positive");
  if (i > n) return 0;
  const StirlingWeights w(t);
  Rational total = 0;
  for (auto d : divisors(n)) {
    if (d % i != 0) continue;
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    for (unsigned m = 0; m <= t; ++m) {
      for (unsigned k = 0; k <= m; ++k) {
        const BigInt wk = w(m, k);
        if (wk == 0) continue;
        for (unsigned r = 0; r <= t; ++r) {
          if (i < t || i > d / (r + 1)) continue;
          const std::uint64_t lower = form == Form::kStandard ? t : k;
          const auto top = static_cast<std::int64_t>(d / i) - 1 - r + static_cast<std::int64_t>(lower);
          const BigInt term = wk * binomial(t - k, r) * binomial(top, static_cast<std::int64_t>(lower)) *
                              upow(i, m) * sign_of_power(static_cast<std::int64_t>(t) - k - r) * mu;
          total += Rational(term);
        }
      }
    }
  }
  return total;
}

}  // namespace lambertfact
