#include "lambertfact/catalog.hpp"

#include "lambertfact/arithmetic_table.hpp"
#include "lambertfact/errors.hpp"

namespace lambertfact {

std::vector<std::string> matrix_kinds() {
  return {"base", "tdiv", "tdiv-inv", "hadamard", "hadamard-inv", "stilde", "conv",
          "conv-inv", "deriv", "deriv-inv", "mixed", "mixed-inv", "c", "related"};
}

FactorMatrix build_matrix(const MatrixRequest& r) {
  if (r.N == 0) throw DomainError("matrix: N must be at least 1");
  for (const auto* name : {&r.f, &r.g}) {
    if (!is_named_function(*name)) throw DomainError("unknown function '" + *name + "'");
  }
  const auto f = named_function(r.f, r.N);
  const auto g = named_function(r.g, r.N);
  const auto& k = r.kind;
  if (k == "base") return s_base(r.N, r.options.jobs);
  if (k == "tdiv") return tdiv_matrix(r.N);
  if (k == "tdiv-inv") return invert_lower_triangular(tdiv_matrix(r.N));
  if (k == "hadamard") return hadamard_forward(f, r.N, r.options.jobs);
  if (k == "hadamard-inv") return hadamard_inverse(f, r.N, r.options);
  if (k == "stilde") return stilde(g, r.N);
  if (k == "conv") return conv_forward(g, r.N, r.options);
  if (k == "conv-inv") return conv_inverse(g, r.N, r.options);
  if (k == "deriv") return deriv_matrix(r.t, r.N);
  if (k == "deriv-inv") return deriv_inverse(r.t, r.N, r.options);
  if (k == "mixed") return mixed_deriv_forward(r.j, r.N);
  if (k == "mixed-inv") return mixed_deriv_inverse(r.j, r.N, r.options);
  if (k == "c") return c_matrix(r.N);
  if (k == "related") {
    FactorMatrix b(1, r.N);
    for (std::size_t row = 1; row <= r.N; ++row) {
      for (std::size_t col = 1; col <= row; ++col) {
        if (row % col == 0) b.set(row, col, g(row / col));
      }
    }
    return related_fact_matrix(b);
  }
  throw DomainError("unknown matrix kind '" + k + "'");
}

}  // namespace lambertfact
