#include <doctest.h>

#include "lambertfact/arith.hpp"
#include "lambertfact/catalog.hpp"
#include "lambertfact/errors.hpp"
#include "lambertfact/factorization.hpp"
#include "lambertfact/qseries.hpp"
#include "oracles.hpp"

using namespace lambertfact;

namespace {

FactorMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  FactorMatrix m(1, rows.size());
  for (std::size_t n = 0; n < rows.size(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) m.set(n + 1, k + 1, rows[n][k]);
  }
  return m;
}

BuildOptions unchecked() { return BuildOptions{false, 1}; }

}  // namespace

TEST_CASE("base matrix entries") {
  const auto s = s_base(30);
  CHECK(s.at(3, 1) == -1);
  CHECK(s.at(3, 2) == -1);
  CHECK(s.at(3, 3) == 1);
  for (int n = 1; n <= 25; ++n) {
    for (int k = 1; k <= n; ++k) {
      REQUIRE(s.at(n, k) == oracle::distinct_part_difference(n, k));
      REQUIRE(s.at(n, k) == Rational(s_base_combinatorial(n, k)));
    }
  }
  CHECK_THROWS_AS(s_base_combinatorial(41, 1), DomainError);
  CHECK_THROWS_AS(s_base_combinatorial(3, 4), DomainError);
}

TEST_CASE("parallel construction is deterministic") {
  CHECK(s_base(40, 1) == s_base(40, 4));
  const auto f = named_function("phi", 30);
  CHECK(hadamard_forward(f, 30, 1) == hadamard_forward(f, 30, 3));
}

TEST_CASE("divisor matrix and its inverse for n = 6") {
  const auto t = tdiv_matrix(6);
  CHECK(t == from_rows({{1}, {1, 1}, {1, 0, 1}, {1, 1, 0, 1}, {1, 0, 0, 0, 1}, {1, 1, 1, 0, 0, 1}}));
  CHECK(invert_lower_triangular(t) == from_rows({{1},
                                                 {-1, 1},
                                                 {-1, 0, 1},
                                                 {0, -1, 0, 1},
                                                 {-1, 0, 0, 0, 1},
                                                 {1, -1, -1, 0, 0, 1}}));
}

TEST_CASE("hadamard forward closed form, oracle and inverse") {
  for (const char* name : {"id", "phi", "npow:2", "delta1", "sigma1", "one"}) {
    CAPTURE(name);
    const auto f = named_function(name, 20);
    const auto fwd = hadamard_forward(f, 20);
    CHECK(fwd == hadamard_forward_oracle(f, 20));
    CHECK(multiply(fwd, hadamard_inverse(f, 20, unchecked())).is_identity());
  }
}

TEST_CASE("hadamard inverse needs nonzero divisor sums") {
  const auto mu = named_function("mu", 8);
  try {
    hadamard_inverse(mu, 8);
    FAIL("expected ZeroDivisorSumError");
  } catch (const ZeroDivisorSumError& e) {
    CHECK(e.index() == 2);
    CHECK(std::string(e.what()).find("f~(2) = 0") != std::string::npos);
  }
}

TEST_CASE("stilde") {
  const auto delta = named_function("delta1", 15);
  CHECK(stilde(delta, 15) == s_base(15));
  const auto g = named_function("phi", 15);
  const auto st = stilde(g, 15);
  const auto s = s_base(15);
  for (std::size_t n = 1; n <= 15; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      Rational expected = 0;
      for (std::size_t j = 1; j * k <= n; ++j) expected += s.at(n, j * k) * g(j);
      REQUIRE(st.at(n, k) == expected);
    }
  }
}

TEST_CASE("convolution factorization boundary term") {
  for (const char* name : {"delta1", "phi", "mu", "one", "id"}) {
    CAPTURE(name);
    const auto g = named_function(name, 16);
    const auto oracle = conv_forward_oracle(g, 16);
    CHECK(conv_forward_closed_form(g, 16, ConvBoundary::kZero) == oracle);
    CHECK(conv_forward(g, 16) == oracle);
    CHECK(multiply(oracle, conv_inverse(g, 16, unchecked())).is_identity());
  }
  // reading the empty divisor sum as 1 adds s_{n+1,k} to every row
  const auto phi = named_function("phi", 10);
  const auto one = conv_forward_closed_form(phi, 10, ConvBoundary::kOne);
  const auto zero = conv_forward_closed_form(phi, 10, ConvBoundary::kZero);
  const auto s = s_base(11);
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t k = 1; k <= n; ++k) REQUIRE(one.at(n, k) - zero.at(n, k) == s.at(n + 1, k));
  }
  CHECK(one != zero);
}

TEST_CASE("convolution inverse needs g(1) != 0") {
  ArithmeticTable g(8, [](std::uint64_t n) { return Rational(n == 1 ? 0 : 1); });
  CHECK_THROWS_AS(conv_inverse(g, 8), NonInvertibleError);
}

TEST_CASE("derivative matrices") {
  const auto d2 = deriv_matrix(2, 10);
  CHECK(d2.start() == 2);
  CHECK(d2.dim() == 9);
  for (unsigned t = 1; t <= 3; ++t) {
    const auto fwd = deriv_matrix(t, 20);
    CHECK(multiply(fwd, deriv_inverse(t, 20, unchecked())).is_identity());
    for (std::size_t n = t; n <= 20; ++n) CHECK(fwd.at(n, n) == Rational(falling_factorial(n, t)));
  }
  CHECK(deriv_inverse_t1(15) == invert_lower_triangular(deriv_matrix(1, 15)));
  CHECK_THROWS_AS(deriv_matrix(0, 5), DomainError);
  CHECK_THROWS_AS(deriv_matrix(4, 3), DomainError);
}

TEST_CASE("mixed derivative matrices") {
  CHECK(mixed_weight(1, 2) == 1);
  CHECK(mixed_weight(2, 2) == 2);
  CHECK(mixed_weight(3, 2) == 6);
  CHECK(mixed_weight(2, 3) == 1);
  for (unsigned j : {2u, 3u, 4u}) {
    const auto fwd = mixed_deriv_forward(j, 20);
    CHECK(multiply(fwd, mixed_deriv_inverse(j, 20, unchecked())).is_identity());
  }
  CHECK_THROWS_AS(mixed_deriv_forward(1, 5), DomainError);
}

TEST_CASE("related factorization and C matrix") {
  CHECK(related_fact_matrix(FactorMatrix::identity(1, 12)) == s_base(12));
  CHECK(c_matrix(20) == c_matrix_from_series(20));
  for (const char* name : {"delta1", "mu", "phi", "sigma1", "id"}) {
    CAPTURE(name);
    const auto a = named_function(name, 30);
    const auto b = reconstruct_b(a, 30);
    for (std::uint64_t n = 1; n <= 30; ++n) {
      Rational expected = 0;
      for (auto d : oracle::divisors(n)) expected += a(d);
      REQUIRE(b(n) == expected);
    }
  }
}

TEST_CASE("named matrix catalog") {
  for (const auto& kind : matrix_kinds()) {
    CAPTURE(kind);
    MatrixRequest r;
    r.kind = kind;
    r.N = 8;
    CHECK(build_matrix(r).is_lower_triangular());
  }
  MatrixRequest related{"related", 10, 1, 2, "id", "phi", {}};
  CHECK(build_matrix(related) == stilde(named_function("phi", 10), 10));
  CHECK_THROWS_AS(build_matrix({"nope", 4, 1, 2, "id", "phi", {}}), DomainError);
  CHECK_THROWS_AS(build_matrix({"base", 4, 1, 2, "bogus", "phi", {}}), DomainError);
}
