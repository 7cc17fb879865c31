#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lambertfact {

/// Argument outside the domain of a number-theoretic function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Lower-triangular matrix with a zero on its diagonal.
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(std::size_t row, const std::string& what)
      : std::runtime_error(what), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

/// A divisor sum f~(d) that must be inverted is zero.
class ZeroDivisorSumError : public DomainError {
 public:
  ZeroDivisorSumError(std::uint64_t d, const std::string& what)
      : DomainError(what), index_(d) {}
  std::uint64_t index() const noexcept { return index_; }

 private:
  std::uint64_t index_;
};

/// Power series whose constant term is zero.
class NonInvertibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Series parameter outside its region of convergence (s <= 1).
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An identity that must hold exactly did not. Indicates a bug, never bad input.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lambertfact
