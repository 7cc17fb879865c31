#include "lambertfact/factorization.hpp"

#include <string>

#include "lambertfact/arith.hpp"
#include "lambertfact/errors.hpp"
#include "lambertfact/parallel.hpp"
#include "lambertfact/qseries.hpp"

namespace lambertfact {

namespace {

void require_dim(std::size_t N, const char* what) {
  if (N == 0) throw DomainError(std::string(what) + ": N must be at least 1");
}

void require_table(const ArithmeticTable& a, std::size_t N, const char* what) {
  if (a.size() < N) {
    throw std::invalid_argument(std::string(what) + ": function table shorter than N");
  }
}

void check_inverse(const FactorMatrix& forward, const FactorMatrix& inverse, const char* what) {
  if (!multiply(forward, inverse).is_identity()) {
    throw IdentityViolation(std::string(what) + ": closed-form inverse is not an inverse");
  }
}

/// Column k of a matrix whose entry (n,k) is [q^n] of a series, rows start..N.
void fill_column(FactorMatrix& m, std::size_t k, const QSeries& column) {
  for (std::size_t n = k; n <= m.last(); ++n) m.set(n, k, column[n]);
}

void enumerate_distinct(std::size_t remaining, std::size_t max_part, std::size_t parts,
                        bool has_k, std::size_t k, BigInt& total) {
  if (remaining == 0) {
    if (has_k) total += (parts % 2 == 1) ? 1 : -1;
    return;
  }
  for (std::size_t part = std::min(max_part, remaining); part >= 1; --part) {
    // The largest sum reachable with distinct parts <= part is part(part+1)/2.
    if (part * (part + 1) / 2 < remaining) break;
    enumerate_distinct(remaining - part, part - 1, parts + 1, has_k || part == k, k, total);
  }
}

}  // namespace

FactorMatrix s_base(std::size_t N, unsigned jobs) {
  require_dim(N, "s_base");
  const QSeries pq = pochhammer_qq(N);
  FactorMatrix m(1, N);
  parallel_for(N, jobs, [&](std::size_t i) {
    const std::size_t k = i + 1;
    fill_column(m, k, series_mul(pq, lambert_term(k, N)));
  });
  return m;
}

BigInt s_base_combinatorial(std::size_t n, std::size_t k) {
  if (k < 1 || k > n || n > 40) {
    throw DomainError("s_base_combinatorial: enumeration oracle limited to 1 <= k <= n <= 40");
  }
  BigInt total = 0;
  enumerate_distinct(n, n, 0, false, k, total);
  return total;
}

FactorMatrix tdiv_matrix(std::size_t N) {
  require_dim(N, "tdiv_matrix");
  FactorMatrix m(1, N);
  for (std::size_t n = 1; n <= N; ++n) {
    for (std::size_t k = 1; k <= n; ++k) m.set(n, k, t_div(n, k));
  }
  return m;
}

FactorMatrix pentagonal_divisor_forward(const ArithmeticTable& ftilde, std::size_t N,
                                        unsigned jobs) {
  require_dim(N, "pentagonal_divisor_forward");
  require_table(ftilde, N, "pentagonal_divisor_forward");
  FactorMatrix m(1, N);
  parallel_for(N, jobs, [&](std::size_t i) {
    const auto n = static_cast<std::int64_t>(i + 1);
    for (std::int64_t k = 1; k <= n; ++k) {
      Rational entry = 0;
      if (n % k == 0) entry += ftilde(n);
      for (int b : {1, -1}) {
        const std::int64_t top = pentagonal_bound(24 * (n - k) + 1, b);
        for (std::int64_t j = 1; j <= top; ++j) {
          const std::int64_t shifted = n - pentagonal_shift(j, b);
          if (shifted % k != 0) continue;
          if (j % 2 == 0) {
            entry += ftilde(shifted);
          } else {
            entry -= ftilde(shifted);
          }
        }
      }
      m.set(n, k, std::move(entry));
    }
  });
  return m;
}

FactorMatrix pentagonal_divisor_inverse(const ArithmeticTable& ftilde, std::size_t N) {
  require_dim(N, "pentagonal_divisor_inverse");
  require_table(ftilde, N, "pentagonal_divisor_inverse");
  for (std::size_t d = 1; d <= N; ++d) {
    if (sgn(ftilde(d)) == 0) {
      throw ZeroDivisorSumError(d, "f~(" + std::to_string(d) +
                                       ") = 0: inverse factorization sequence undefined");
    }
  }
  const auto pt = PartitionCache::global().table(static_cast<std::int64_t>(N));
  FactorMatrix m(1, N);
  for (std::size_t n = 1; n <= N; ++n) {
    const auto ds = divisors(n);
    for (std::size_t k = 1; k <= n; ++k) {
      Rational entry = 0;
      for (auto d : ds) {
        if (d < k) continue;
        const int mu = mobius(n / d);
        if (mu == 0) continue;
        const Rational term =
            Rational(pt[d - k]) / ftilde(d);
        if (mu > 0) {
          entry += term;
        } else {
          entry -= term;
        }
      }
      m.set(n, k, std::move(entry));
    }
  }
  return m;
}

FactorMatrix hadamard_forward(const ArithmeticTable& f, std::size_t N, unsigned jobs) {
  require_table(f, N, "hadamard_forward");
  return pentagonal_divisor_forward(f.divisor_sums(), N, jobs);
}

FactorMatrix hadamard_forward_oracle(const ArithmeticTable& f, std::size_t N) {
  require_dim(N, "hadamard_forward_oracle");
  require_table(f, N, "hadamard_forward_oracle");
  const auto ft = f.divisor_sums();
  const QSeries pq = pochhammer_qq(N);
  FactorMatrix m(1, N);
  for (std::size_t k = 1; k <= N; ++k) {
    QSeries weighted(N);
    for (std::size_t n = k; n <= N; n += k) weighted.set(n, ft(n));
    fill_column(m, k, series_mul(pq, weighted));
  }
  return m;
}

FactorMatrix hadamard_inverse(const ArithmeticTable& f, std::size_t N, BuildOptions opts) {
  require_table(f, N, "hadamard_inverse");
  const auto ft = f.divisor_sums();
  auto inverse = pentagonal_divisor_inverse(ft, N);
  if (opts.verify) {
    check_inverse(pentagonal_divisor_forward(ft, N, opts.jobs), inverse, "hadamard_inverse");
  }
  return inverse;
}

FactorMatrix stilde(const ArithmeticTable& g, std::size_t N) {
  require_table(g, N, "stilde");
  const auto s = s_base(N);
  FactorMatrix m(1, N);
  for (std::size_t n = 1; n <= N; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      Rational entry = 0;
      for (std::size_t j = 1; k * j <= n; ++j) {
        if (sgn(g(j)) != 0) entry += s.at(n, k * j) * g(j);
      }
      m.set(n, k, std::move(entry));
    }
  }
  return m;
}

FactorMatrix conv_forward_closed_form(const ArithmeticTable& g, std::size_t N,
                                      ConvBoundary boundary) {
  require_table(g, N, "conv_forward");
  const auto gt = g.divisor_sums();
  // The j = n+1 term needs s_{n+1,k}, one row beyond the block.
  const auto s = s_base(N + 1);
  FactorMatrix m(1, N);
  for (std::size_t n = 1; n <= N; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      Rational entry = 0;
      for (std::size_t j = k; j <= n; ++j) entry += s.at(j, k) * gt(n + 1 - j);
      if (boundary == ConvBoundary::kOne) entry += s.at(n + 1, k);
      m.set(n, k, std::move(entry));
    }
  }
  return m;
}

FactorMatrix conv_forward_oracle(const ArithmeticTable& g, std::size_t N) {
  require_dim(N, "conv_forward_oracle");
  require_table(g, N, "conv_forward_oracle");
  // [q^n] A(q) G_L(q)/q with A = (q;q) q^k/(1-q^k) equals [q^{n-1}] (A/q)(G_L/q).
  const QSeries gl_over_q = divide_by_q(lambert_gf(g, N));
  const QSeries pq = pochhammer_qq(N);
  FactorMatrix m(1, N);
  for (std::size_t k = 1; k <= N; ++k) {
    const QSeries column = series_mul(divide_by_q(series_mul(pq, lambert_term(k, N))), gl_over_q);
    for (std::size_t n = k; n <= N; ++n) m.set(n, k, column[n - 1]);
  }
  return m;
}

FactorMatrix conv_forward(const ArithmeticTable& g, std::size_t N, BuildOptions opts) {
  auto closed = conv_forward_closed_form(g, N, ConvBoundary::kZero);
  if (opts.verify) {
    auto oracle = conv_forward_oracle(g, N);
    if (!(oracle == closed)) return oracle;
  }
  return closed;
}

FactorMatrix conv_inverse(const ArithmeticTable& g, std::size_t N, BuildOptions opts) {
  require_dim(N, "conv_inverse");
  require_table(g, N, "conv_inverse");
  if (sgn(g(1)) == 0) {
    throw NonInvertibleError("g(1) = 0: G_L(q)/q has zero constant term, inverse undefined");
  }
  // q^{k+1} / ((q;q) G_L) = q^k R(q) with R = 1 / ((q;q) G_L/q), so
  // [q^d] of it is R_{d-k}.
  const QSeries gl_over_q = divide_by_q(lambert_gf(g, N));
  const QSeries r = series_reciprocal(series_mul(pochhammer_qq(N - 1), gl_over_q));
  FactorMatrix m(1, N);
  for (std::size_t n = 1; n <= N; ++n) {
    const auto ds = divisors(n);
    for (std::size_t k = 1; k <= n; ++k) {
      Rational entry = 0;
      for (auto d : ds) {
        if (d < k) continue;
        const int mu = mobius(n / d);
        if (mu > 0) entry += r[d - k];
        if (mu < 0) entry -= r[d - k];
      }
      m.set(n, k, std::move(entry));
    }
  }
  if (opts.verify) check_inverse(conv_forward(g, N, opts), m, "conv_inverse");
  return m;
}

FactorMatrix deriv_matrix(unsigned t, std::size_t N) {
  if (t == 0) throw DomainError("deriv_matrix: t must be at least 1");
  if (N < t) throw DomainError("deriv_matrix: N must be at least t");
  const QSeries pq = pochhammer_qq(N);
  FactorMatrix m(t, N - t + 1);
  for (std::size_t k = t; k <= N; ++k) {
    fill_column(m, k, series_mul(pq, q_derivative(lambert_term(k, N), t)));
  }
  return m;
}

FactorMatrix deriv_inverse_t1(std::size_t N, BuildOptions opts) {
  const ArithmeticTable ident(N, [](std::uint64_t d) { return Rational(static_cast<unsigned long>(d)); });
  auto inverse = pentagonal_divisor_inverse(ident, N);
  if (opts.verify) check_inverse(deriv_matrix(1, N), inverse, "deriv_inverse_t1");
  return inverse;
}

FactorMatrix deriv_inverse(unsigned t, std::size_t N, BuildOptions opts) {
  if (t == 1) return deriv_inverse_t1(N, opts);
  return invert_lower_triangular(deriv_matrix(t, N));
}

Rational mixed_weight(std::uint64_t d, unsigned j) {
  Rational w(falling_factorial(static_cast<std::int64_t>(d), j));
  if (d < j) w += 1;
  return w;
}

FactorMatrix mixed_deriv_forward(unsigned j, std::size_t N) {
  if (j < 2) throw DomainError("mixed_deriv_forward: j must be at least 2");
  require_dim(N, "mixed_deriv_forward");
  const QSeries pq = pochhammer_qq(N);
  FactorMatrix m(1, N);
  for (std::size_t k = 1; k <= N; ++k) {
    // Coefficient of a_k in q^j D^j[L_a] + sum_{i<j} (a*1)(i) q^i.
    QSeries series = q_derivative(lambert_term(k, N), j);
    for (std::size_t i = k; i < j && i <= N; i += k) series.add_to(i, 1);
    fill_column(m, k, series_mul(pq, series));
  }
  return m;
}

FactorMatrix mixed_deriv_inverse(unsigned j, std::size_t N, BuildOptions opts) {
  if (j < 2) throw DomainError("mixed_deriv_inverse: j must be at least 2");
  const ArithmeticTable weight(N, [j](std::uint64_t d) { return mixed_weight(d, j); });
  auto inverse = pentagonal_divisor_inverse(weight, N);
  if (opts.verify) check_inverse(mixed_deriv_forward(j, N), inverse, "mixed_deriv_inverse");
  return inverse;
}

FactorMatrix related_fact_matrix(const FactorMatrix& b) {
  if (b.start() != 1) throw std::invalid_argument("related_fact_matrix: b must start at 1");
  return multiply(s_base(b.dim()), b);
}

FactorMatrix c_matrix(std::size_t N) {
  require_dim(N, "c_matrix");
  const auto pt = PartitionCache::global().table(static_cast<std::int64_t>(N));
  FactorMatrix m(1, N);
  for (std::size_t n = 1; n <= N; ++n) {
    const auto ds = divisors(n);
    for (std::size_t k = 1; k <= n; ++k) {
      BigInt entry = 0;
      for (auto d : ds) {
        const int mu = mobius(n / d);
        if (mu == 0) continue;
        BigInt inner = 0;
        for (std::size_t i = 1; i * k <= d; ++i) {
          inner += pt[d - i * k];
        }
        if (mu > 0) {
          entry += inner;
        } else {
          entry -= inner;
        }
      }
      m.set(n, k, Rational(entry));
    }
  }
  return m;
}

FactorMatrix c_matrix_from_series(std::size_t N) {
  require_dim(N, "c_matrix_from_series");
  const QSeries partitions = series_reciprocal(pochhammer_qq(N));
  FactorMatrix p(1, N);
  for (std::size_t k = 1; k <= N; ++k) fill_column(p, k, series_mul(partitions, lambert_term(k, N)));
  return multiply(invert_lower_triangular(tdiv_matrix(N)), p);
}

ArithmeticTable reconstruct_b(const ArithmeticTable& a, std::size_t N) {
  require_table(a, N, "reconstruct_b");
  const auto s = s_base(N);
  const auto c = c_matrix(N);
  std::vector<Rational> ca(N + 1, Rational(0));
  for (std::size_t k = 1; k <= N; ++k) {
    for (std::size_t j = 1; j <= k; ++j) ca[k] += c.at(k, j) * a(j);
  }
  return ArithmeticTable(N, [&](std::uint64_t n) {
    Rational b = 0;
    for (std::size_t k = 1; k <= n; ++k) b += s.at(n, k) * ca[k];
    return b;
  });
}

}  // namespace lambertfact
