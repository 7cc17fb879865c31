#pragma once

// Name-based access to every factorization matrix, shared by the command
// line tool and the Python module.

#include <cstddef>
#include <string>
#include <vector>

#include "lambertfact/factor_matrix.hpp"
#include "lambertfact/factorization.hpp"

namespace lambertfact {

struct MatrixRequest {
  std::string kind;
  std::size_t N = 12;
  unsigned t = 1;
  unsigned j = 2;
  std::string f = "id";
  std::string g = "phi";
  BuildOptions options;
};

/// base, tdiv, tdiv-inv, hadamard, hadamard-inv, stilde, conv, conv-inv,
/// deriv, deriv-inv, mixed, mixed-inv, c, related.
std::vector<std::string> matrix_kinds();

/// Builds the named matrix. "related" uses b_{j,k} = g(j/k) for k | j.
/// Throws DomainError for unknown kinds or function names.
FactorMatrix build_matrix(const MatrixRequest& request);

}  // namespace lambertfact
