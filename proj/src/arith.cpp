#include "lambertfact/arith.hpp"

#include <algorithm>
#include <mutex>

#include "lambertfact/errors.hpp"

namespace lambertfact {

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw DomainError("divisors: n must be positive");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int t_div(std::uint64_t n, std::uint64_t k) {
  if (n == 0 || k == 0) throw DomainError("t_div: arguments must be positive");
  return n % k == 0 ? 1 : 0;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw DomainError("mobius: n must be positive");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::uint64_t pentagonal_g(std::uint64_t j) {
  const std::uint64_t a = (j + 1) / 2;          // ceil(j/2)
  const std::uint64_t b = (3 * j + 2) / 2;      // ceil((3j+1)/2)
  return a * b / 2;
}

int pentagonal_sign(std::uint64_t j) { return ((j + 1) / 2) % 2 == 0 ? 1 : -1; }

std::uint64_t isqrt(std::uint64_t n) {
  if (n < 2) return n;
  mpz_class z(static_cast<unsigned long>(n));
  mpz_sqrt(z.get_mpz_t(), z.get_mpz_t());
  return z.get_ui();
}

std::int64_t pentagonal_bound(std::int64_t radicand, int b) {
  if (radicand < 0) return 0;
  const auto root = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(radicand)));
  const std::int64_t num = root - b;
  if (num < 0) return 0;
  return num / 6;
}

// ---------------------------------------------------------------------------

PartitionCache& PartitionCache::global() {
  static PartitionCache cache;
  return cache;
}

void PartitionCache::extend_locked(std::int64_t n) {
  while (static_cast<std::int64_t>(p_.size()) <= n) {
    const auto m = static_cast<std::uint64_t>(p_.size());
    while (pent_.back() <= m) pent_.push_back(pentagonal_g(pent_.size()));
    // p(m) = -sum_{j>=1, G_j <= m} (-1)^ceil(j/2) p(m - G_j)
    BigInt value = 0;
    for (std::size_t j = 1; j < pent_.size() && pent_[j] <= m; ++j) {
      if (pentagonal_sign(j) < 0) {
        value += p_[m - pent_[j]];
      } else {
        value -= p_[m - pent_[j]];
      }
    }
    p_.push_back(std::move(value));
  }
}

void PartitionCache::reserve(std::int64_t n) {
  {
    std::shared_lock lock(mutex_);
    if (static_cast<std::int64_t>(p_.size()) > n) return;
  }
  std::unique_lock lock(mutex_);
  extend_locked(n);
}

BigInt PartitionCache::p(std::int64_t n) {
  if (n < 0) return 0;
  reserve(n);
  std::shared_lock lock(mutex_);
  return p_[static_cast<std::size_t>(n)];
}

std::vector<BigInt> PartitionCache::table(std::int64_t n) {
  if (n < 0) return {};
  reserve(n);
  std::shared_lock lock(mutex_);
  return {p_.begin(), p_.begin() + n + 1};
}

std::size_t PartitionCache::size() const {
  std::shared_lock lock(mutex_);
  return p_.size();
}

void PartitionCache::adopt(std::vector<BigInt> values) {
  if (values.empty() || values[0] != 1) {
    throw IdentityViolation("partition cache: p(0) must be 1");
  }
  PartitionCache check;
  check.extend_locked(static_cast<std::int64_t>(values.size()) - 1);
  if (check.p_ != values) {
    throw IdentityViolation("partition cache: persisted table fails the pentagonal recurrence");
  }
  std::unique_lock lock(mutex_);
  if (values.size() > p_.size()) {
    p_ = std::move(values);
    pent_ = std::move(check.pent_);
  }
}

BigInt partition_p(std::int64_t n) { return PartitionCache::global().p(n); }

// ---------------------------------------------------------------------------

namespace {
BigInt ipow(std::uint64_t base, unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}
}  // namespace

Rational sigma(std::uint64_t n, std::int64_t alpha) {
  const auto ds = divisors(n);
  Rational total = 0;
  const auto e = static_cast<unsigned>(alpha < 0 ? -alpha : alpha);
  for (auto d : ds) {
    if (alpha >= 0) {
      total += Rational(ipow(d, e));
    } else {
      total += Rational(BigInt(1), ipow(d, e));
    }
  }
  total.canonicalize();
  return total;
}

BigInt totients(std::uint64_t n, unsigned t) {
  if (t == 0) throw DomainError("totients: t must be positive");
  BigInt total = 0;
  for (auto d : divisors(n)) {
    const int m = mobius(n / d);
    if (m == 0) continue;
    if (m > 0) {
      total += ipow(d, t);
    } else {
      total -= ipow(d, t);
    }
  }
  return total;
}

Real von_mangoldt(std::uint64_t n, unsigned precision) {
  if (n == 0) throw DomainError("von_mangoldt: n must be positive");
  if (n == 1) return Real(precision);
  std::uint64_t p = 0;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      p = q;
      break;
    }
  }
  if (p == 0) p = n;
  std::uint64_t m = n;
  while (m % p == 0) m /= p;
  if (m != 1) return Real(precision);
  return log(Real(static_cast<long>(p), precision));
}

unsigned omega_distinct(std::uint64_t n) {
  if (n == 0) throw DomainError("omega_distinct: n must be positive");
  unsigned count = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    ++count;
    while (n % p == 0) n /= p;
  }
  return count + (n > 1 ? 1 : 0);
}

std::vector<std::vector<BigInt>> stirling1_table(unsigned n) {
  std::vector<std::vector<BigInt>> c(n + 1, std::vector<BigInt>(n + 1, 0));
  c[0][0] = 1;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned m = 0; m <= i + 1; ++m) {
      BigInt v = BigInt(i) * c[i][m];
      if (m > 0) v += c[i][m - 1];
      c[i + 1][m] = v;
    }
  }
  return c;
}

std::vector<std::vector<BigInt>> stirling2_table(unsigned n) {
  std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(n + 1, 0));
  s[0][0] = 1;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned k = 1; k <= i + 1; ++k) s[i + 1][k] = BigInt(k) * s[i][k] + s[i][k - 1];
  }
  return s;
}

BigInt stirling1_unsigned(unsigned n, unsigned m) {
  if (m > n) return 0;
  return stirling1_table(n)[n][m];
}

BigInt stirling2(unsigned m, unsigned k) {
  if (k > m) return 0;
  return stirling2_table(m)[m][k];
}

BigInt falling_factorial(std::int64_t n, unsigned t) {
  BigInt r = 1;
  for (unsigned i = 0; i < t; ++i) r *= BigInt(static_cast<long>(n - static_cast<std::int64_t>(i)));
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (b < 0) return 0;
  if (a >= 0) {
    if (b > a) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
  }
  // a < 0: a (a-1) ... (a-b+1) / b!
  return falling_factorial(a, static_cast<unsigned>(b)) / factorial(static_cast<unsigned>(b));
}

}  // namespace lambertfact
