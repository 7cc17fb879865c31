// lambertfact: factorization matrices, verification suites and the analytic
// applications from the command line.
//
// Exit codes: 0 success, 1 identity violation, 2 usage or configuration error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lambertfact/applications.hpp"
#include "lambertfact/arith.hpp"
#include "lambertfact/catalog.hpp"
#include "lambertfact/derivatives.hpp"
#include "lambertfact/errors.hpp"
#include "lambertfact/parallel.hpp"
#include "lambertfact/partition_store.hpp"
#include "lambertfact/verify.hpp"
#include "table.hpp"

namespace lf = lambertfact;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string kind;
  std::size_t N = 12;
  unsigned t = 1;
  std::string s = "2";
  unsigned j = 2;
  std::string f = "id";
  std::string g = "phi";
  std::string format = "json";
  unsigned precision = lf::kDefaultRealPrecision;
  unsigned jobs = 0;
  bool no_verify_build = false;
  std::size_t upto = 30;
  std::string variant = "sigma_st";
  std::string suite = "all";
};

void check_common(const RunConfig& c) {
  if (c.N == 0) throw UsageError("--N must be at least 1");
  if (c.precision < 64) throw UsageError("--precision must be at least 64 bits");
  for (const auto* name : {&c.f, &c.g}) {
    if (!lf::is_named_function(*name)) {
      std::string known;
      for (const auto& n : lf::registered_function_names()) known += " " + n;
      throw UsageError("unknown function '" + *name + "'; known:" + known + " npow:k");
    }
  }
}

unsigned jobs_of(const RunConfig& c) { return c.jobs == 0 ? lf::default_jobs() : c.jobs; }

void emit_table(const Table& t, const std::string& format, nlohmann::json meta = {}) {
  if (format == "csv") {
    std::cout << t.csv();
  } else if (format == "pretty") {
    std::cout << t.pretty();
  } else {
    if (meta.is_null()) meta = nlohmann::json::object();
    meta["rows"] = t.json();
    std::cout << meta.dump(2) << "\n";
  }
}

// -- matrix ---------------------------------------------------------------------

int cmd_matrix(const RunConfig& c) {
  check_common(c);
  lf::MatrixRequest req{c.kind, c.N, c.t, c.j, c.f, c.g, {!c.no_verify_build, jobs_of(c)}};
  const auto m = lf::build_matrix(req);
  if (c.format == "csv") {
    std::cout << lf::to_csv(m);
  } else if (c.format == "pretty") {
    std::cout << lf::to_pretty(m);
  } else {
    auto j = lf::to_json(m);
    j["kind"] = c.kind;
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

// -- verify ---------------------------------------------------------------------

int cmd_verify(const RunConfig& c) {
  check_common(c);
  lf::VerifyConfig vc;
  vc.N = c.N;
  vc.f = c.f;
  vc.g = c.g;
  vc.t = c.t;
  vc.j = c.j;
  vc.jobs = jobs_of(c);
  vc.precision = c.precision;
  const auto report = lf::run_suite(c.suite, vc);
  std::cout << lf::to_json(report).dump(2) << "\n";
  if (report.passed()) return kExitOk;
  if (const auto* bad = report.first_failure()) {
    std::cerr << "identity '" << bad->id << "' failed";
    if (bad->first_failure) {
      std::cerr << " at n = " << bad->first_failure->index << ": expected "
                << bad->first_failure->expected << ", got " << bad->first_failure->actual;
    }
    std::cerr << "\n";
  }
  return kExitViolation;
}

// -- zeta -----------------------------------------------------------------------

std::optional<std::int64_t> as_integer(const std::string& s) {
  static const std::regex integer(R"(\s*[+-]?\d+\s*)");
  if (!std::regex_match(s, integer)) return std::nullopt;
  return std::stoll(s);
}

int cmd_zeta(const RunConfig& c) {
  check_common(c);
  const auto variant = lf::parse_zeta_variant(c.variant);
  lf::ZetaReport report;
  if (auto si = as_integer(c.s)) {
    if (*si <= 1) throw UsageError("--s must exceed 1 (the series diverges otherwise)");
    report = lf::zeta_partial(variant, *si, c.t, c.N, c.precision, jobs_of(c));
  } else {
    lf::Real s(c.precision);
    try {
      s = lf::Real::from_string(c.s, c.precision);
    } catch (const std::exception&) {
      throw UsageError("--s must be a real number, got '" + c.s + "'");
    }
    if (s <= lf::Real(1L, c.precision)) {
      throw UsageError("--s must exceed 1 (the series diverges otherwise)");
    }
    report = lf::zeta_partial_real(variant, s, c.t, c.N, jobs_of(c));
  }
  if (c.format == "csv") {
    std::cout << lf::to_csv(report);
  } else if (c.format == "pretty") {
    Table t{{"n", "term", "partial_sum", "abs_error"}, {}};
    for (std::size_t i = 0; i < report.terms.size(); ++i) {
      t.add({std::to_string(i + 1), lf::to_string(report.terms[i], 25),
             lf::to_real(report.partial_sums[i], c.precision).to_string(25),
             report.abs_errors[i].to_string(10)});
    }
    std::cout << "# zeta(" << report.s << ") = " << report.reference.to_string(40) << "\n"
              << t.pretty();
  } else {
    std::cout << lf::to_json(report).dump(2) << "\n";
  }
  return kExitOk;
}

// -- exotic ---------------------------------------------------------------------

int cmd_exotic(const RunConfig& c) {
  check_common(c);
  if (c.upto == 0) throw UsageError("--upto must be at least 1");
  const auto kind = lf::parse_exotic_kind(c.kind.empty() ? "totient" : c.kind);
  lf::ExoticParams params;
  const auto s = as_integer(c.s);
  if (!s) throw UsageError("exotic sums need an integer --s");
  params.s = *s;
  params.t = c.t;
  params.precision = c.precision;
  lf::PartitionCache::global().reserve(static_cast<std::int64_t>(c.upto));

  const bool real = kind == lf::ExoticKind::kVonMangoldt;
  const lf::Real tol = lf::epsilon_bits(static_cast<long>(c.precision) - 32, c.precision);
  std::vector<lf::Scalar> values(c.upto, lf::Scalar(lf::Rational(0)));
  lf::parallel_for(c.upto, jobs_of(c),
                   [&](std::size_t i) { values[i] = lf::exotic_sum(kind, i + 1, params); });

  Table t{{"n", "value", "reference", "match"}, {}};
  if (real) t.headers.push_back("abs_deviation");
  bool all = true;
  lf::Real max_dev(0L, c.precision);
  for (std::size_t n = 1; n <= c.upto; ++n) {
    const auto& v = values[n - 1];
    const auto ref = lf::exotic_reference(kind, n, params);
    bool match = false;
    std::vector<std::string> row{std::to_string(n), lf::to_string(v, 30), lf::to_string(ref, 30)};
    if (real) {
      const lf::Real dev = lf::abs(std::get<lf::Real>(v) - std::get<lf::Real>(ref));
      if (dev > max_dev) max_dev = dev;
      match = dev <= tol;
      row.push_back(match ? "true" : "false");
      row.push_back(dev.to_string(6));
    } else {
      match = std::get<lf::Rational>(v) == std::get<lf::Rational>(ref);
      row.push_back(match ? "true" : "false");
    }
    all = all && match;
    t.add(std::move(row));
  }
  nlohmann::json meta = {{"kind", lf::to_string(kind)}, {"upto", c.upto}, {"all_match", all}};
  if (real) {
    meta["precision"] = c.precision;
    meta["max_abs_deviation"] = max_dev.to_string(6);
  }
  emit_table(t, c.format, meta);
  if (real && c.format != "json") std::cerr << "max abs deviation " << max_dev.to_string(6) << "\n";
  return all ? kExitOk : kExitViolation;
}

// -- omega ----------------------------------------------------------------------

int cmd_omega(const RunConfig& c) {
  check_common(c);
  if (c.upto == 0) throw UsageError("--upto must be at least 1");
  const auto rows = lf::omega_table(c.upto, jobs_of(c));
  Table t{{"n", "inner_sum", "omega_formula", "omega_reference", "match"}, {}};
  bool all = true;
  for (const auto& r : rows) {
    all = all && r.match;
    t.add({std::to_string(r.n), r.inner_sum.get_str(), std::to_string(r.omega_formula),
           std::to_string(r.omega_reference), r.match ? "true" : "false"});
  }
  emit_table(t, c.format, {{"upto", c.upto}, {"all_match", all}});
  return all ? kExitOk : kExitViolation;
}

// -- derivative -----------------------------------------------------------------

int cmd_derivative(const RunConfig& c) {
  check_common(c);
  if (c.N < c.t) throw UsageError("--N must be at least --t");
  const lf::DerivParams params{c.t, c.N, lf::named_function(c.f, c.N)};
  const auto at = lf::a_t_table(params);
  const auto oracle = lf::a_t_oracle(params);
  const auto coeffs = lf::a_t_lambert_coeffs(params);
  const auto report = lf::a_t_identities(params);
  Table t{{"n", "A_t", "series_coefficient", "lambert_coefficient"}, {}};
  for (std::size_t n = 1; n <= c.N; ++n) {
    t.add({std::to_string(n), lf::to_short_string(at(n)), lf::to_short_string(oracle[n]),
           lf::to_short_string(coeffs(n))});
  }
  if (c.format == "json") {
    nlohmann::json out = {{"t", c.t}, {"N", c.N}, {"f", c.f}, {"rows", t.json()},
                          {"identities", lf::to_json(report)}};
    std::cout << out.dump(2) << "\n";
  } else {
    emit_table(t, c.format);
  }
  return report.passed() ? kExitOk : kExitViolation;
}

// -- wiring ---------------------------------------------------------------------

void add_format(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--N", c.N, "Truncation order");
  sub->add_option("--precision", c.precision, "Bits for real-valued quantities (>= 64)");
  sub->add_option("--jobs", c.jobs, "Worker threads (0 = all cores)");
  add_format(sub, c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lambert series factorization theorems: matrices, identities and applications"};
  app.require_subcommand(1);
  RunConfig c;

  auto* matrix = app.add_subcommand("matrix", "Print a factorization matrix");
  add_common(matrix, c);
  matrix->add_option("--kind", c.kind, "Matrix kind")
      ->required()
      ->check(CLI::IsMember(lf::matrix_kinds()));
  matrix->add_option("--t", c.t, "Derivative order");
  matrix->add_option("--j", c.j, "Mixed derivative order (>= 2)");
  matrix->add_option("--f", c.f, "Function for hadamard kinds");
  matrix->add_option("--g", c.g, "Function for stilde, conv and related kinds");
  matrix->add_flag("--no-verify-build", c.no_verify_build,
                   "Skip the forward-times-inverse check on closed-form inverses");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_common(verify, c);
  verify->add_option("--suite", c.suite, "Suite name")->check(CLI::IsMember(lf::suite_names()));
  verify->add_option("--f", c.f, "First test function");
  verify->add_option("--g", c.g, "Second test function");
  verify->add_option("--t", c.t, "Derivative order");
  verify->add_option("--j", c.j, "Mixed derivative order (>= 2)");

  auto* zeta = app.add_subcommand("zeta", "Partial sums of the zeta series");
  add_common(zeta, c);
  zeta->add_option("--variant", c.variant, "sigma_st, sigma_st_shifted or deriv_t1");
  zeta->add_option("--s", c.s, "Exponent s > 1 (integer for exact terms)");
  zeta->add_option("--t", c.t, "Divisor-sum parameter t");

  auto* exotic = app.add_subcommand("exotic", "Exotic sums against their classical values");
  add_common(exotic, c);
  exotic->add_option("--kind", c.kind, "power_s, von_mangoldt, jordan or totient");
  exotic->add_option("--upto", c.upto, "Largest n");
  exotic->add_option("--s", c.s, "Exponent for power_s");
  exotic->add_option("--t", c.t, "Parameter t (jordan order, power_s divisor sum)");

  auto* omega = app.add_subcommand("omega", "Exact formula for omega(n)");
  add_format(omega, c);
  omega->add_option("--upto", c.upto, "Largest n");
  omega->add_option("--jobs", c.jobs, "Worker threads (0 = all cores)");

  auto* derivative = app.add_subcommand("derivative", "A_t(n) and its factorization identities");
  add_common(derivative, c);
  derivative->add_option("--t", c.t, "Derivative order");
  derivative->add_option("--f", c.f, "Coefficient function a");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::size_t warmed = 0;
  try {
    warmed = lf::warm_partition_cache();
  } catch (const std::exception& e) {
    std::cerr << "warning: ignoring partition cache: " << e.what() << "\n";
  }

  int code = kExitOk;
  try {
    if (*matrix) code = cmd_matrix(c);
    if (*verify) code = cmd_verify(c);
    if (*zeta) code = cmd_zeta(c);
    if (*exotic) code = cmd_exotic(c);
    if (*omega) code = cmd_omega(c);
    if (*derivative) code = cmd_derivative(c);
  } catch (const lf::IdentityViolation& e) {
    std::cerr << "identity violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lf::SingularMatrixError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (lf::PartitionCache::global().size() > warmed) lf::persist_partition_cache();
  } catch (const std::exception& e) {
    std::cerr << "warning: could not persist partition cache: " << e.what() << "\n";
  }
  return code;
}
