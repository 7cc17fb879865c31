#include "lambertfact/factor_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lambertfact/errors.hpp"

namespace lambertfact {

namespace {
const Rational kZero(0);
}

FactorMatrix::FactorMatrix(std::size_t start, std::size_t dim)
    : start_(start), dim_(dim), entries_(dim * dim, Rational(0)) {
  if (start == 0) throw std::invalid_argument("FactorMatrix: start index must be positive");
}

FactorMatrix FactorMatrix::identity(std::size_t start, std::size_t dim) {
  FactorMatrix m(start, dim);
  for (std::size_t n = start; n < start + dim; ++n) m.set(n, n, 1);
  return m;
}

std::size_t FactorMatrix::offset(std::size_t n, std::size_t k) const {
  if (!contains(n) || !contains(k)) {
    throw std::out_of_range("FactorMatrix index (" + std::to_string(n) + "," +
                            std::to_string(k) + ") outside " + std::to_string(start_) + ".." +
                            std::to_string(last()));
  }
  return (n - start_) * dim_ + (k - start_);
}

const Rational& FactorMatrix::at(std::size_t n, std::size_t k) const {
  const auto off = offset(n, k);
  return k > n ? kZero : entries_[off];
}

void FactorMatrix::set(std::size_t n, std::size_t k, Rational value) {
  const auto off = offset(n, k);
  if (k > n) {
    if (sgn(value) == 0) return;
    throw std::invalid_argument("FactorMatrix: entry above the diagonal must be zero");
  }
  value.canonicalize();
  entries_[off] = std::move(value);
}

bool FactorMatrix::is_lower_triangular() const {
  for (std::size_t n = start_; n <= last(); ++n) {
    for (std::size_t k = n + 1; k <= last(); ++k) {
      if (sgn(entries_[offset(n, k)]) != 0) return false;
    }
  }
  return true;
}

bool FactorMatrix::is_identity() const {
  for (std::size_t n = start_; n <= last(); ++n) {
    for (std::size_t k = start_; k <= n; ++k) {
      if (at(n, k) != (n == k ? 1 : 0)) return false;
    }
  }
  return true;
}

std::size_t FactorMatrix::max_entry_bits() const {
  std::size_t bits = 0;
  for (const auto& e : entries_) {
    if (sgn(e) == 0) continue;
    bits = std::max({bits, mpz_sizeinbase(e.get_num_mpz_t(), 2),
                     mpz_sizeinbase(e.get_den_mpz_t(), 2)});
  }
  return bits;
}

std::optional<EntryMismatch> first_mismatch(const FactorMatrix& expected,
                                            const FactorMatrix& actual) {
  if (expected.start() != actual.start() || expected.dim() != actual.dim()) {
    throw std::invalid_argument("first_mismatch: shapes differ");
  }
  for (std::size_t n = expected.start(); n <= expected.last(); ++n) {
    for (std::size_t k = expected.start(); k <= n; ++k) {
      if (expected.at(n, k) != actual.at(n, k)) {
        return EntryMismatch{n, k, expected.at(n, k), actual.at(n, k)};
      }
    }
  }
  return std::nullopt;
}

FactorMatrix multiply(const FactorMatrix& a, const FactorMatrix& b) {
  if (a.start() != b.start() || a.dim() != b.dim()) {
    throw std::invalid_argument("multiply: blocks must share start and dim");
  }
  FactorMatrix out(a.start(), a.dim());
  for (std::size_t n = a.start(); n <= a.last(); ++n) {
    for (std::size_t k = a.start(); k <= n; ++k) {
      Rational acc = 0;
      for (std::size_t j = k; j <= n; ++j) {
        const auto& x = a.at(n, j);
        if (sgn(x) == 0) continue;
        const auto& y = b.at(j, k);
        if (sgn(y) == 0) continue;
        acc += x * y;
      }
      out.set(n, k, std::move(acc));
    }
  }
  return out;
}

std::vector<Rational> apply(const FactorMatrix& m, const std::vector<Rational>& v) {
  if (v.size() < m.dim()) throw std::invalid_argument("apply: vector shorter than block");
  std::vector<Rational> out(m.dim(), Rational(0));
  for (std::size_t n = m.start(); n <= m.last(); ++n) {
    Rational acc = 0;
    for (std::size_t k = m.start(); k <= n; ++k) acc += m.at(n, k) * v[k - m.start()];
    out[n - m.start()] = acc;
  }
  return out;
}

FactorMatrix invert_lower_triangular(const FactorMatrix& m) {
  for (std::size_t n = m.start(); n <= m.last(); ++n) {
    if (sgn(m.at(n, n)) == 0) {
      throw SingularMatrixError(n, "singular lower-triangular matrix: zero diagonal entry in row " +
                                       std::to_string(n));
    }
  }
  FactorMatrix inv(m.start(), m.dim());
  for (std::size_t k = m.start(); k <= m.last(); ++k) {
    inv.set(k, k, 1 / m.at(k, k));
    for (std::size_t n = k + 1; n <= m.last(); ++n) {
      Rational acc = 0;
      for (std::size_t j = k; j < n; ++j) {
        const auto& x = m.at(n, j);
        if (sgn(x) != 0) acc += x * inv.at(j, k);
      }
      inv.set(n, k, -acc / m.at(n, n));
    }
  }
  return inv;
}

FactorMatrix leading_block(const FactorMatrix& m, std::size_t dim) {
  if (dim > m.dim()) throw std::invalid_argument("leading_block: dim too large");
  FactorMatrix out(m.start(), dim);
  for (std::size_t n = m.start(); n <= out.last(); ++n) {
    for (std::size_t k = m.start(); k <= n; ++k) out.set(n, k, m.at(n, k));
  }
  return out;
}

nlohmann::json to_json(const FactorMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t n = m.start(); n <= m.last(); ++n) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = m.start(); k <= m.last(); ++k) row.push_back(to_fraction_string(m.at(n, k)));
    rows.push_back(std::move(row));
  }
  return {{"start", m.start()}, {"dim", m.dim()}, {"entries", std::move(rows)}};
}

FactorMatrix matrix_from_json(const nlohmann::json& j) {
  FactorMatrix m(j.at("start").get<std::size_t>(), j.at("dim").get<std::size_t>());
  const auto& rows = j.at("entries");
  if (rows.size() != m.dim()) throw std::invalid_argument("matrix json: row count != dim");
  for (std::size_t r = 0; r < m.dim(); ++r) {
    if (rows[r].size() != m.dim()) throw std::invalid_argument("matrix json: ragged row");
    for (std::size_t c = 0; c < m.dim(); ++c) {
      m.set(m.start() + r, m.start() + c, Rational(rows[r][c].get<std::string>()));
    }
  }
  return m;
}

std::string to_csv(const FactorMatrix& m) {
  std::ostringstream out;
  for (std::size_t n = m.start(); n <= m.last(); ++n) {
    for (std::size_t k = m.start(); k <= m.last(); ++k) {
      if (k != m.start()) out << ',';
      out << to_short_string(m.at(n, k));
    }
    out << '\n';
  }
  return out.str();
}

std::string to_pretty(const FactorMatrix& m) {
  std::size_t width = 1;
  for (std::size_t n = m.start(); n <= m.last(); ++n) {
    for (std::size_t k = m.start(); k <= n; ++k) width = std::max(width, to_short_string(m.at(n, k)).size());
  }
  std::ostringstream out;
  for (std::size_t n = m.start(); n <= m.last(); ++n) {
    for (std::size_t k = m.start(); k <= m.last(); ++k) {
      const auto s = to_short_string(m.at(n, k));
      out << std::string(width - s.size() + (k == m.start() ? 0 : 1), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace lambertfact
