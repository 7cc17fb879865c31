#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lambertfact/types.hpp"

namespace lambertfact {

/// Exact prefix a_1 .. a_N of an arithmetic function. Index 0 is not part of
/// the table.
class ArithmeticTable {
 public:
  ArithmeticTable() = default;
  explicit ArithmeticTable(std::size_t size);
  ArithmeticTable(std::size_t size, const std::function<Rational(std::uint64_t)>& fn);

  std::size_t size() const { return values_.size(); }

  /// a_n for 1 <= n <= size(); throws std::out_of_range otherwise.
  const Rational& operator()(std::uint64_t n) const;
  void set(std::uint64_t n, Rational value);

  /// sum_{d|n} a_d.
  Rational divisor_sum(std::uint64_t n) const;
  /// Table of divisor sums (a * 1)(n).
  ArithmeticTable divisor_sums() const;
  /// Moebius inversion (a * mu)(n).
  ArithmeticTable mobius_inverse() const;
  /// Dirichlet convolution truncated to min size.
  ArithmeticTable convolve(const ArithmeticTable& other) const;

  ArithmeticTable operator+(const ArithmeticTable& other) const;

  friend bool operator==(const ArithmeticTable& a, const ArithmeticTable& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<Rational> values_;
};

/// Builds a table from a registered name: one, id, mu, phi, sigma1, delta1,
/// npow:k. Throws std::invalid_argument for anything else.
ArithmeticTable named_function(std::string_view name, std::size_t size);

/// True iff `name` resolves in the registry.
bool is_named_function(std::string_view name);

std::vector<std::string> registered_function_names();

}  // namespace lambertfact
