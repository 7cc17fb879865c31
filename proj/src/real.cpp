#include "lambertfact/real.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace lambertfact {

namespace {
unsigned wider(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

Real::Real(unsigned precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, unsigned precision) {
  mpfr_init2(value_, precision);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, unsigned precision) {
  mpfr_init2(value_, precision);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // MPFR has no move; swap with a freshly initialised minimal value.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::from_string(const std::string& text, unsigned precision) {
  Real r(precision);
  if (mpfr_set_str(r.value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a real number: " + text);
  }
  return r;
}

unsigned Real::precision() const {
  return static_cast<unsigned>(mpfr_get_prec(value_));
}

double Real::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string Real::to_string(int digits) const {
  if (mpfr_zero_p(value_)) return "0";
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
  return std::string(buf.data());
}

Real& Real::operator+=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

bool Real::is_zero() const { return mpfr_zero_p(value_) != 0; }

Real abs(const Real& x) {
  Real r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  Real r(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, const Real& exponent) {
  Real r(wider(base, exponent));
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}

Real epsilon_bits(long bits, unsigned precision) {
  Real r(1, precision);
  mpfr_div_2si(r.get(), r.get(), bits, MPFR_RNDN);
  return r;
}

}  // namespace lambertfact
