#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lambertfact/types.hpp"

namespace lambertfact {

/// Lower-triangular block of exact rationals with rows and columns indexed
/// start .. start+dim-1. Entries above the diagonal are zero and cannot be set.
class FactorMatrix {
 public:
  FactorMatrix(std::size_t start, std::size_t dim);
  static FactorMatrix identity(std::size_t start, std::size_t dim);

  std::size_t start() const { return start_; }
  std::size_t dim() const { return dim_; }
  /// Last valid row/column index.
  std::size_t last() const { return start_ + dim_ - 1; }
  bool contains(std::size_t n) const { return n >= start_ && n <= last(); }

  /// Entry (n, k) in absolute indices; zero above the diagonal.
  const Rational& at(std::size_t n, std::size_t k) const;
  void set(std::size_t n, std::size_t k, Rational value);

  bool is_lower_triangular() const;
  bool is_identity() const;
  /// Largest numerator or denominator bit length over all entries.
  std::size_t max_entry_bits() const;

  friend bool operator==(const FactorMatrix& a, const FactorMatrix& b) {
    return a.start_ == b.start_ && a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t offset(std::size_t n, std::size_t k) const;

  std::size_t start_;
  std::size_t dim_;
  std::vector<Rational> entries_;  // dim x dim, row-major
};

struct EntryMismatch {
  std::size_t n;
  std::size_t k;
  Rational expected;
  Rational actual;
};

/// First entry (row-major) where a and b differ; requires equal shapes.
std::optional<EntryMismatch> first_mismatch(const FactorMatrix& expected,
                                            const FactorMatrix& actual);

/// Product of two lower-triangular blocks with the same start and dim.
FactorMatrix multiply(const FactorMatrix& a, const FactorMatrix& b);

/// (M v)_n for n in the block; v is indexed by absolute column (v[k - start]).
std::vector<Rational> apply(const FactorMatrix& m, const std::vector<Rational>& v);

/// Exact inverse by forward substitution. Throws SingularMatrixError naming
/// the first row with a zero diagonal entry.
FactorMatrix invert_lower_triangular(const FactorMatrix& m);

/// Leading sub-block with rows/columns start .. start+dim-1.
FactorMatrix leading_block(const FactorMatrix& m, std::size_t dim);

/// {"start", "dim", "entries": [[ "num/den", ... ], ...]}; full rows,
/// row-major, zeros above the diagonal included.
nlohmann::json to_json(const FactorMatrix& m);
FactorMatrix matrix_from_json(const nlohmann::json& j);

/// One line per row, comma separated, integers rendered without "/1".
std::string to_csv(const FactorMatrix& m);

/// Column-aligned text rendering for terminals.
std::string to_pretty(const FactorMatrix& m);

}  // namespace lambertfact
