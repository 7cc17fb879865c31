#include <doctest.h>

#include <thread>

#include "lambertfact/arith.hpp"
#include "lambertfact/errors.hpp"
#include "lambertfact/qseries.hpp"
#include "oracles.hpp"

using namespace lambertfact;

TEST_CASE("divisors and t_div") {
  CHECK(divisors(1) == std::vector<std::uint64_t>{1});
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK_THROWS_AS(divisors(0), DomainError);
  for (std::uint64_t n = 1; n <= 300; ++n) CHECK(divisors(n) == oracle::divisors(n));
  CHECK(t_div(6, 3) == 1);
  CHECK(t_div(6, 4) == 0);
}

TEST_CASE("mobius") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(30) == -1);
  for (std::uint64_t n = 1; n <= 500; ++n) {
    CHECK(mobius(n) == oracle::mobius(n));
    int total = 0;
    for (auto d : divisors(n)) total += mobius(d);
    CHECK(total == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("interleaved pentagonal numbers") {
  const std::vector<std::uint64_t> expected{0, 1, 2, 5, 7, 12, 15, 22, 26, 35, 40};
  for (std::size_t j = 0; j < expected.size(); ++j) CHECK(pentagonal_g(j) == expected[j]);
  const std::vector<int> signs{1, -1, -1, 1, 1, -1, -1, 1, 1};
  for (std::size_t j = 0; j < signs.size(); ++j) CHECK(pentagonal_sign(j) == signs[j]);
}

TEST_CASE("integer square root and pentagonal bounds") {
  for (std::uint64_t n = 0; n <= 200000; ++n) {
    const auto r = isqrt(n);
    REQUIRE(r * r <= n);
    REQUIRE((r + 1) * (r + 1) > n);
  }
  CHECK(isqrt(std::uint64_t{1} << 62) == std::uint64_t{1} << 31);

  // largest j with 6j + b <= sqrt(R), found by squaring instead of rooting
  auto brute = [](std::int64_t radicand, int b) -> std::int64_t {
    if (radicand < 0) return 0;
    std::int64_t best = 0;
    for (std::int64_t j = 1; (6 * j + b) * (6 * j + b) <= radicand; ++j) best = j;
    return best;
  };
  for (std::int64_t r = -30; r <= 5000; ++r) {
    for (int b : {1, -1}) REQUIRE(pentagonal_bound(r, b) == brute(r, b));
  }
  // perfect-square radicands are where a floating floor can slip
  CHECK(pentagonal_bound(25, -1) == 1);
  CHECK(pentagonal_bound(25, 1) == 0);
  CHECK(pentagonal_bound(49, 1) == 1);
  CHECK(pentagonal_bound(-1, 1) == 0);
}

TEST_CASE("partition numbers") {
  CHECK(partition_p(0) == 1);
  CHECK(partition_p(6) == 11);
  CHECK(partition_p(-3) == 0);
  for (int n = 0; n <= 40; ++n) CHECK(partition_p(n) == oracle::partitions(n));
  const QSeries inv = series_reciprocal(pochhammer_qq(200));
  for (int n = 0; n <= 200; ++n) CHECK(Rational(partition_p(n)) == inv[n]);
}

TEST_CASE("partition cache is consistent under concurrent growth") {
  PartitionCache cache;
  std::vector<BigInt> results(8);
  {
    std::vector<std::jthread> threads;
    for (int i = 0; i < 8; ++i) {
      threads.emplace_back([&, i] { results[i] = cache.p(100 + 25 * i); });
    }
  }
  for (int i = 0; i < 8; ++i) CHECK(results[i] == partition_p(100 + 25 * i));
  CHECK(cache.size() >= 276);
  const auto table = cache.table(20);
  CHECK(table.size() == 21);
  CHECK(table[20] == 627);
}

TEST_CASE("partition cache adopt validates the recurrence") {
  PartitionCache cache;
  auto good = PartitionCache::global().table(30);
  cache.adopt(good);
  CHECK(cache.p(30) == 5604);
  auto bad = good;
  bad[17] += 1;
  CHECK_THROWS(cache.adopt(bad));
}

TEST_CASE("sigma reflection law") {
  CHECK(sigma(6, 1) == 12);
  CHECK(sigma(6, 0) == 4);
  CHECK(sigma(4, -1) == Rational(7, 4));
  for (std::uint64_t n = 1; n <= 200; ++n) {
    for (int alpha = -2; alpha <= 3; ++alpha) {
      BigInt na;
      mpz_ui_pow_ui(na.get_mpz_t(), n, static_cast<unsigned long>(alpha < 0 ? -alpha : alpha));
      const Rational scale = alpha < 0 ? Rational(1) / Rational(na) : Rational(na);
      REQUIRE(sigma(n, -alpha) * scale == sigma(n, alpha));
      REQUIRE(sigma(n, alpha) == oracle::sigma(n, alpha));
    }
  }
}

TEST_CASE("Jordan totients") {
  CHECK(euler_phi(10) == 4);
  CHECK(totients(4, 2) == 12);
  for (std::uint64_t n = 1; n <= 200; ++n) {
    REQUIRE(euler_phi(n) == oracle::phi(n));
    for (unsigned t = 1; t <= 3; ++t) {
      REQUIRE(totients(n, t) == oracle::jordan(n, t));
      BigInt total = 0;
      for (auto d : divisors(n)) total += totients(d, t);
      BigInt nt;
      mpz_ui_pow_ui(nt.get_mpz_t(), n, t);
      REQUIRE(total == nt);
    }
  }
}

TEST_CASE("von Mangoldt and omega") {
  const Real log2 = log(Real(2L, 128));
  CHECK(abs(von_mangoldt(8) - log2) < epsilon_bits(120, 128));
  CHECK(von_mangoldt(6).is_zero());
  CHECK(von_mangoldt(1).is_zero());
  CHECK(omega_distinct(1) == 0);
  CHECK(omega_distinct(30) == 3);
  for (std::uint64_t n = 1; n <= 500; ++n) REQUIRE(omega_distinct(n) == oracle::omega(n));
}

TEST_CASE("Stirling orthogonality") {
  for (unsigned n = 0; n <= 20; ++n) {
    for (unsigned m = 0; m <= 20; ++m) {
      BigInt total = 0;
      for (unsigned k = 0; k <= 20; ++k) {
        BigInt s1 = stirling1_unsigned(n, k);
        if ((n + k) % 2 == 1) s1 = -s1;
        total += s1 * stirling2(k, m);
      }
      REQUIRE(total == (n == m ? 1 : 0));
    }
  }
  CHECK(stirling1_unsigned(4, 2) == 11);
  CHECK(stirling2(4, 2) == 7);
}

TEST_CASE("binomial with negative upper argument") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(-2, 2) == 3);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(2, 5) == 0);
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(2, 3) == 0);
  CHECK(falling_factorial(-2, 2) == 6);
  CHECK(factorial(10) == 3628800);
}
