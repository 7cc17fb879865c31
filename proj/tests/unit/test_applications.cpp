#include <doctest.h>

#include <mpfr.h>

#include <cmath>

#include "lambertfact/applications.hpp"
#include "lambertfact/arith.hpp"
#include "lambertfact/errors.hpp"
#include "oracles.hpp"

using namespace lambertfact;

namespace {

const Rational& exact(const Scalar& x) { return std::get<Rational>(x); }

Real mpfr_zeta_value(long s, unsigned prec) {
  Real out(prec);
  Real arg(s, prec);
  mpfr_zeta(out.get(), arg.get(), MPFR_RNDN);
  return out;
}

Real pi_squared_over_six(unsigned prec) {
  Real pi(prec);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  return pi * pi / Real(6, prec);
}

}  // namespace

TEST_CASE("exotic sums, worked values") {
  CHECK(exact(exotic_sum(ExoticKind::kTotient, 10)) == 4);
  CHECK(exact(exotic_sum(ExoticKind::kJordan, 4, {1, 2})) == 12);
  CHECK(exact(exotic_sum(ExoticKind::kPowerS, 6, {2, 1})) == 36);
  const Real lambda8 = std::get<Real>(exotic_sum(ExoticKind::kVonMangoldt, 8));
  Real log2(128);
  mpfr_const_log2(log2.get(), MPFR_RNDN);
  CHECK(abs(lambda8 - log2) < epsilon_bits(83, 128));
}

TEST_CASE("exotic sums against oracles") {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    CAPTURE(n);
    REQUIRE(exact(exotic_sum(ExoticKind::kTotient, n)) == Rational(oracle::phi(n)));
    for (unsigned t = 2; t <= 3; ++t) {
      REQUIRE(exact(exotic_sum(ExoticKind::kJordan, n, {1, t})) == Rational(oracle::jordan(n, t)));
    }
    for (std::int64_t s = 0; s <= 3; ++s) {
      for (std::int64_t t = 1; t <= 2; ++t) {
        BigInt ns;
        mpz_ui_pow_ui(ns.get_mpz_t(), n, static_cast<unsigned long>(s));
        REQUIRE(exact(exotic_sum(ExoticKind::kPowerS, n, {s, t})) == Rational(ns));
      }
    }
  }
}

TEST_CASE("von Mangoldt sum") {
  const Real tol = epsilon_bits(66, 128);
  for (std::uint64_t n = 1; n <= 30; ++n) {
    CAPTURE(n);
    const auto f = oracle::factorize(n);
    Real expected(0L, 128);
    if (f.size() == 1) {
      Real p(static_cast<long>(f.begin()->first), 128);
      expected = log(p);
    }
    REQUIRE(abs(std::get<Real>(exotic_sum(ExoticKind::kVonMangoldt, n)) - expected) < tol);
  }
}

TEST_CASE("exotic kind names") {
  CHECK(parse_exotic_kind("von-mangoldt") == ExoticKind::kVonMangoldt);
  CHECK(parse_exotic_kind("power_s") == ExoticKind::kPowerS);
  CHECK(to_string(ExoticKind::kJordan) == "jordan");
  CHECK_THROWS_AS(parse_exotic_kind("liouville"), DomainError);
}

TEST_CASE("zeta series terms are exactly 1/n^s") {
  for (auto v : {ZetaVariant::kSigmaST, ZetaVariant::kSigmaSTShifted, ZetaVariant::kDerivT1}) {
    for (std::int64_t s = 2; s <= 4; ++s) {
      for (std::int64_t t = 1; t <= 2; ++t) {
        for (std::uint64_t n = 1; n <= 30; ++n) {
          BigInt ns;
          mpz_ui_pow_ui(ns.get_mpz_t(), n, static_cast<unsigned long>(s));
          REQUIRE(zeta_term(v, s, t, n) == Rational(1, 1) / Rational(ns));
        }
      }
    }
  }
  CHECK_THROWS_AS(zeta_term(ZetaVariant::kSigmaST, 1, 1, 3), DivergenceError);
}

TEST_CASE("zeta variant names") {
  for (auto v : {ZetaVariant::kSigmaST, ZetaVariant::kSigmaSTShifted, ZetaVariant::kDerivT1}) {
    CHECK(parse_zeta_variant(to_string(v)) == v);
  }
  CHECK_THROWS_AS(parse_zeta_variant("riemann"), DomainError);
}

TEST_CASE("zeta reference") {
  for (long s : {2L, 3L, 5L}) {
    CHECK(abs(zeta_reference(Real(s, 128)) - mpfr_zeta_value(s, 128)) < epsilon_bits(120, 128));
  }
  CHECK(abs(zeta_reference(Real(2, 128)) - pi_squared_over_six(128)) < epsilon_bits(120, 128));
  const Real s = Real::from_string("2.5", 128);
  Real expected(128);
  mpfr_zeta(expected.get(), s.get(), MPFR_RNDN);
  CHECK(abs(zeta_reference(s) - expected) < epsilon_bits(120, 128));
}

TEST_CASE("zeta partial sums") {
  const auto r = zeta_partial(ZetaVariant::kSigmaST, 2, 1, 100);
  REQUIRE(r.partial_sums.size() == 100);
  Rational harmonic = 0;
  for (long n = 1; n <= 100; ++n) harmonic += Rational(1, n * n);
  CHECK(exact(r.partial_sums.back()) == harmonic);
  CHECK(r.abs_errors.back() < Real(Rational(1, 100), 128));
  for (std::size_t i = 1; i < r.abs_errors.size(); ++i) CHECK(r.abs_errors[i] < r.abs_errors[i - 1]);

  const auto one = zeta_partial(ZetaVariant::kDerivT1, 3, 1, 1);
  CHECK(exact(one.terms.at(0)) == 1);
  CHECK(to_csv(one).rfind("n,term,partial_sum,abs_error\n1,1,1,", 0) == 0);
  const auto j = to_json(one);
  CHECK(j["variant"] == "deriv_t1");
  CHECK(j["rows"].size() == 1);

  const auto parallel = zeta_partial(ZetaVariant::kSigmaSTShifted, 3, 2, 40, 128, 3);
  const auto serial = zeta_partial(ZetaVariant::kSigmaSTShifted, 3, 2, 40, 128, 1);
  CHECK(to_csv(parallel) == to_csv(serial));
}

TEST_CASE("zeta terms for real s") {
  const Real s = Real::from_string("2.5", 128);
  for (std::uint64_t n = 1; n <= 12; ++n) {
    const Real expected = pow(Real(static_cast<long>(n), 128), -s);
    for (auto v : {ZetaVariant::kSigmaST, ZetaVariant::kSigmaSTShifted, ZetaVariant::kDerivT1}) {
      CHECK(abs(zeta_term_real(v, s, 1, n) - expected) < epsilon_bits(110, 128));
    }
  }
  const auto r = zeta_partial_real(ZetaVariant::kSigmaST, s, 1, 10);
  CHECK_FALSE(r.exact);
  CHECK(r.terms.size() == 10);
}

TEST_CASE("divisor-sum Dirichlet series") {
  const auto check = dirichlet_sigma_check(1, 4, 2000);
  const Real gap = abs(check.partial - check.closed_form);
  // tail of sum sigma_1(n)/n^4 is below zeta(2)/(2 N^2) * 2
  CHECK(gap < Real(Rational(1, 1000000), 128));
  const Real expected = mpfr_zeta_value(4, 128) * mpfr_zeta_value(3, 128);
  CHECK(abs(check.closed_form - expected) < epsilon_bits(120, 128));
}

TEST_CASE("omega via the inner sum") {
  CHECK(omega_exact(1) == 0);
  CHECK(omega_exact(12) == 2);
  CHECK(omega_exact(30) == 3);
  for (std::uint64_t n = 1; n <= 60; ++n) {
    REQUIRE(omega_inner_sum(n) == BigInt(1) << oracle::omega(n));
  }
  CHECK(omega_inner_sum(2, Form::kLiteral) == 4);
  const auto rows = omega_table(100, 3);
  REQUIRE(rows.size() == 100);
  for (const auto& row : rows) {
    CHECK(row.match);
    CHECK(row.omega_reference == oracle::omega(row.n));
  }
}

TEST_CASE("partition identities") {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    CHECK(partition_identity_check(PartitionIdentity::kPSigma1, n).pass);
    CHECK(partition_identity_check(PartitionIdentity::kPpSigma2, n).pass);
    for (std::uint64_t k = 1; k <= 4; ++k) {
      CHECK(partition_identity_check(PartitionIdentity::kPkRestricted, n, k).pass);
    }
  }
  const auto v = partition_identity_check(PartitionIdentity::kPSigma1, 5);
  CHECK(v.lhs == 35);
  REQUIRE(v.literal_pass.has_value());
  CHECK_FALSE(*partition_identity_check(PartitionIdentity::kPSigma1, 2).literal_pass);
  CHECK(to_json(v)["pass"] == true);
  CHECK_THROWS_AS(partition_identity_check(PartitionIdentity::kPkRestricted, 5, 0), DomainError);
  CHECK_THROWS_AS(parse_partition_identity("p_sigma3"), DomainError);
}

TEST_CASE("restricted and plane partition counts") {
  const auto pk = restricted_partitions(3, 30);
  for (int n = 0; n <= 30; ++n) REQUIRE(pk[n] == oracle::partitions_bounded(n, 3));
  const std::vector<long> known{1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500};
  const auto pp = plane_partitions(14);
  for (std::size_t n = 0; n < known.size(); ++n) CHECK(pp[n] == known[n]);
  for (int n = 0; n <= 14; ++n) REQUIRE(pp[n] == oracle::plane_partitions(n));
}
