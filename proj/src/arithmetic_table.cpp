#include "lambertfact/arithmetic_table.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "lambertfact/arith.hpp"

namespace lambertfact {

ArithmeticTable::ArithmeticTable(std::size_t size) : values_(size, Rational(0)) {}

ArithmeticTable::ArithmeticTable(std::size_t size,
                                 const std::function<Rational(std::uint64_t)>& fn)
    : values_(size) {
  for (std::size_t n = 1; n <= size; ++n) values_[n - 1] = fn(n);
}

const Rational& ArithmeticTable::operator()(std::uint64_t n) const {
  if (n == 0 || n > values_.size()) {
    throw std::out_of_range("arithmetic table index " + std::to_string(n) + " outside 1.." +
                            std::to_string(values_.size()));
  }
  return values_[n - 1];
}

void ArithmeticTable::set(std::uint64_t n, Rational value) {
  if (n == 0 || n > values_.size()) throw std::out_of_range("arithmetic table index");
  value.canonicalize();
  values_[n - 1] = std::move(value);
}

Rational ArithmeticTable::divisor_sum(std::uint64_t n) const {
  Rational total = 0;
  for (auto d : divisors(n)) total += (*this)(d);
  return total;
}

ArithmeticTable ArithmeticTable::divisor_sums() const {
  ArithmeticTable out(size());
  for (std::size_t n = 1; n <= size(); ++n) out.values_[n - 1] = divisor_sum(n);
  return out;
}

ArithmeticTable ArithmeticTable::mobius_inverse() const {
  ArithmeticTable out(size());
  for (std::size_t n = 1; n <= size(); ++n) {
    Rational total = 0;
    for (auto d : divisors(n)) {
      const int m = mobius(n / d);
      if (m > 0) total += (*this)(d);
      if (m < 0) total -= (*this)(d);
    }
    out.values_[n - 1] = total;
  }
  return out;
}

ArithmeticTable ArithmeticTable::convolve(const ArithmeticTable& other) const {
  const std::size_t n_max = std::min(size(), other.size());
  ArithmeticTable out(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational total = 0;
    for (auto d : divisors(n)) total += (*this)(d) * other(n / d);
    out.values_[n - 1] = total;
  }
  return out;
}

ArithmeticTable ArithmeticTable::operator+(const ArithmeticTable& other) const {
  const std::size_t n_max = std::min(size(), other.size());
  ArithmeticTable out(n_max);
  for (std::size_t i = 0; i < n_max; ++i) out.values_[i] = values_[i] + other.values_[i];
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool parse_npow(std::string_view name, unsigned& power) {
  constexpr std::string_view prefix = "npow:";
  if (name.substr(0, prefix.size()) != prefix) return false;
  const auto digits = name.substr(prefix.size());
  if (digits.empty()) return false;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, power);
  return ec == std::errc() && ptr == end;
}

}  // namespace

bool is_named_function(std::string_view name) {
  unsigned power = 0;
  static const std::vector<std::string_view> fixed = {"one", "id", "mu", "phi", "sigma1",
                                                      "delta1"};
  return std::find(fixed.begin(), fixed.end(), name) != fixed.end() || parse_npow(name, power);
}

std::vector<std::string> registered_function_names() {
  return {"one", "id", "mu", "phi", "sigma1", "delta1", "npow:k"};
}

ArithmeticTable named_function(std::string_view name, std::size_t size) {
  if (name == "one") return ArithmeticTable(size, [](std::uint64_t) { return Rational(1); });
  if (name == "id") {
    return ArithmeticTable(size, [](std::uint64_t n) { return Rational(BigInt(static_cast<unsigned long>(n))); });
  }
  if (name == "mu") return ArithmeticTable(size, [](std::uint64_t n) { return Rational(mobius(n)); });
  if (name == "phi") return ArithmeticTable(size, [](std::uint64_t n) { return Rational(euler_phi(n)); });
  if (name == "sigma1") return ArithmeticTable(size, [](std::uint64_t n) { return sigma(n, 1); });
  if (name == "delta1") {
    return ArithmeticTable(size, [](std::uint64_t n) { return Rational(n == 1 ? 1 : 0); });
  }
  unsigned power = 0;
  if (parse_npow(name, power)) {
    return ArithmeticTable(size, [power](std::uint64_t n) {
      BigInt r;
      mpz_ui_pow_ui(r.get_mpz_t(), n, power);
      return Rational(r);
    });
  }
  throw std::invalid_argument("unknown arithmetic function '" + std::string(name) +
                              "' (expected one, id, mu, phi, sigma1, delta1, npow:k)");
}

}  // namespace lambertfact
