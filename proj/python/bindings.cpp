#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "lambertfact/applications.hpp"
#include "lambertfact/arith.hpp"
#include "lambertfact/catalog.hpp"
#include "lambertfact/derivatives.hpp"
#include "lambertfact/errors.hpp"
#include "lambertfact/verify.hpp"

namespace py = pybind11;
namespace lf = lambertfact;

namespace {

py::object to_py(const lf::BigInt& x) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::object to_py(const lf::Rational& x) {
  const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(x.get_num()), to_py(x.get_den()));
}

py::object to_py(const lf::Real& x) {
  const py::object decimal = py::module_::import("decimal").attr("Decimal");
  const int digits = static_cast<int>(x.precision() * 30103 / 100000) + 1;
  return decimal(x.to_string(digits));
}

py::object to_py(const lf::Scalar& x) {
  if (const auto* q = std::get_if<lf::Rational>(&x)) return to_py(*q);
  return to_py(std::get<lf::Real>(x));
}

py::object to_py(const nlohmann::json& j) {
  const py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

py::list matrix_rows(const lf::FactorMatrix& m) {
  py::list rows;
  for (std::size_t n = m.start(); n <= m.last(); ++n) {
    py::list row;
    for (std::size_t k = m.start(); k <= m.last(); ++k) row.append(to_py(m.at(n, k)));
    rows.append(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Lambert series factorization matrices and applications";

  auto domain = py::register_exception<lf::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<lf::ZeroDivisorSumError>(m, "ZeroDivisorSumError", domain.ptr());
  py::register_exception<lf::NonInvertibleError>(m, "NonInvertibleError", domain.ptr());
  py::register_exception<lf::DivergenceError>(m, "DivergenceError", domain.ptr());
  py::register_exception<lf::SingularMatrixError>(m, "SingularMatrixError",
                                                   PyExc_ZeroDivisionError);
  py::register_exception<lf::IdentityViolation>(m, "IdentityViolation", PyExc_ArithmeticError);

  m.def("partition_p", [](std::int64_t n) { return to_py(lf::partition_p(n)); }, py::arg("n"));
  m.def("divisors", &lf::divisors, py::arg("n"));
  m.def("mobius", &lf::mobius, py::arg("n"));
  m.def("sigma", [](std::uint64_t n, std::int64_t alpha) { return to_py(lf::sigma(n, alpha)); },
        py::arg("n"), py::arg("alpha") = 1);
  m.def("totient", [](std::uint64_t n, unsigned t) { return to_py(lf::totients(n, t)); },
        py::arg("n"), py::arg("t") = 1);
  m.def("function_names", &lf::registered_function_names);
  m.def("matrix_kinds", &lf::matrix_kinds);
  m.def("suite_names", &lf::suite_names);

  m.def(
      "matrix",
      [](const std::string& kind, std::size_t N, unsigned t, unsigned j, const std::string& f,
         const std::string& g, bool verify, unsigned jobs) {
        lf::MatrixRequest req{kind, N, t, j, f, g, {verify, jobs}};
        lf::FactorMatrix mat(1, 1);
        {
          py::gil_scoped_release release;
          mat = lf::build_matrix(req);
        }
        return py::make_tuple(mat.start(), matrix_rows(mat));
      },
      py::arg("kind"), py::arg("N"), py::arg("t") = 1, py::arg("j") = 2, py::arg("f") = "id",
      py::arg("g") = "phi", py::arg("verify") = true, py::arg("jobs") = 1,
      "Returns (start, rows) with rows[i][k] the entry at (start+i, start+k).");

  m.def(
      "verify",
      [](const std::string& suite, std::size_t N, const std::string& f, const std::string& g,
         unsigned t, unsigned j) {
        lf::VerifyConfig c;
        c.N = N;
        c.f = f;
        c.g = g;
        c.t = t;
        c.j = j;
        lf::VerificationReport rep;
        {
          py::gil_scoped_release release;
          rep = lf::run_suite(suite, c);
        }
        auto out = lf::to_json(rep);
        return to_py(out);
      },
      py::arg("suite") = "all", py::arg("N") = 12, py::arg("f") = "id", py::arg("g") = "phi",
      py::arg("t") = 1, py::arg("j") = 2);

  m.def(
      "exotic_sum",
      [](const std::string& kind, std::uint64_t n, std::int64_t s, std::int64_t t,
         unsigned precision) {
        return to_py(lf::exotic_sum(lf::parse_exotic_kind(kind), n, {s, t, precision}));
      },
      py::arg("kind"), py::arg("n"), py::arg("s") = 1, py::arg("t") = 1,
      py::arg("precision") = lf::kDefaultRealPrecision);
  m.def(
      "exotic_reference",
      [](const std::string& kind, std::uint64_t n, std::int64_t s, std::int64_t t,
         unsigned precision) {
        return to_py(lf::exotic_reference(lf::parse_exotic_kind(kind), n, {s, t, precision}));
      },
      py::arg("kind"), py::arg("n"), py::arg("s") = 1, py::arg("t") = 1,
      py::arg("precision") = lf::kDefaultRealPrecision);

  m.def(
      "zeta_term",
      [](const std::string& variant, std::int64_t s, std::int64_t t, std::uint64_t n) {
        return to_py(lf::zeta_term(lf::parse_zeta_variant(variant), s, t, n));
      },
      py::arg("variant"), py::arg("s"), py::arg("t"), py::arg("n"));
  m.def(
      "zeta_partial",
      [](const std::string& variant, std::int64_t s, std::int64_t t, std::size_t N,
         unsigned precision) {
        return to_py(
            lf::to_json(lf::zeta_partial(lf::parse_zeta_variant(variant), s, t, N, precision)));
      },
      py::arg("variant"), py::arg("s"), py::arg("t") = 1, py::arg("N") = 12,
      py::arg("precision") = lf::kDefaultRealPrecision);

  m.def("omega_exact", &lf::omega_exact, py::arg("n"));
  m.def(
      "omega_inner_sum",
      [](std::uint64_t n, bool literal) {
        return to_py(lf::omega_inner_sum(n, literal ? lf::Form::kLiteral : lf::Form::kStandard));
      },
      py::arg("n"), py::arg("literal") = false);

  m.def(
      "partition_identity_check",
      [](const std::string& which, std::uint64_t n, std::uint64_t k) {
        return to_py(lf::to_json(
            lf::partition_identity_check(lf::parse_partition_identity(which), n, k)));
      },
      py::arg("which"), py::arg("n"), py::arg("k") = 0);

  m.def(
      "a_t",
      [](unsigned t, std::size_t N, const std::string& f) {
        const lf::DerivParams params{t, N, lf::named_function(f, N)};
        const auto table = lf::a_t_table(params);
        py::list out;
        for (std::size_t n = 1; n <= N; ++n) out.append(to_py(table(n)));
        return out;
      },
      py::arg("t"), py::arg("N"), py::arg("f") = "id");
}
