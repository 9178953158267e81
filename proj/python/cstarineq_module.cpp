#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "cstarineq/convexity.hpp"
#include "cstarineq/errors.hpp"
#include "cstarineq/inequalities.hpp"
#include "cstarineq/linalg.hpp"
#include "cstarineq/localization.hpp"
#include "cstarineq/matrix.hpp"
#include "cstarineq/scalar_function.hpp"
#include "cstarineq/state.hpp"
#include "cstarineq/suite.hpp"

namespace py = pybind11;

namespace {

using cstarineq::Complex;
using cstarineq::ComplexMatrix;
using PyMatrix = std::vector<std::vector<Complex>>;

ComplexMatrix to_matrix(const PyMatrix& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw cstarineq::ValidationError("matrix must be nonempty");
  }
  const std::size_t r = rows.size();
  const std::size_t c = rows.front().size();
  std::vector<Complex> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw cstarineq::ValidationError("matrix rows must have equal length");
    for (const Complex& z : row) entries.push_back(z);
  }
  return ComplexMatrix(r, c, std::move(entries));
}

PyMatrix from_matrix(const ComplexMatrix& m) {
  PyMatrix rows(m.rows(), std::vector<Complex>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

/// Catalog function whose domain covers spectra up to the given radius;
/// fractional powers live on [0, radius].
cstarineq::ScalarFunction build_function(const std::string& label, double radius) {
  bool nonnegative = label.rfind("negpow:", 0) == 0;
  if (!nonnegative && label.rfind("pow:", 0) == 0) {
    char* end = nullptr;
    const double p = std::strtod(label.c_str() + 4, &end);
    nonnegative = end != label.c_str() + 4 && *end == '\0' && p != std::floor(p);
  }
  if (nonnegative) return cstarineq::make_catalog_function(label, 0.0, radius);
  return cstarineq::make_catalog_function(label, -radius, radius);
}

py::dict report_dict(const cstarineq::InequalityReport& report) {
  py::dict d;
  d["family"] = cstarineq::family_name(report.family);
  if (report.exponent) d["exponent"] = *report.exponent;
  if (!report.function_label.empty()) d["function"] = report.function_label;
  d["is_scalar"] = report.is_scalar;
  if (report.is_scalar) {
    d["lhs"] = report.lhs_value;
    d["rhs"] = report.rhs_value;
    d["difference"] = report.difference_value;
  } else {
    d["lhs"] = from_matrix(report.lhs_matrix);
    d["rhs"] = from_matrix(report.rhs_matrix);
    d["difference"] = from_matrix(report.difference_matrix);
  }
  if (report.min_eigenvalue) d["min_eigenvalue"] = *report.min_eigenvalue;
  if (report.difference_det) d["difference_det"] = *report.difference_det;
  if (!report.pure_state_values.empty()) d["pure_state_values"] = report.pure_state_values;
  d["tolerance"] = report.tolerance;
  d["holds"] = report.holds;
  d["degenerate"] = report.degenerate;
  return d;
}

py::dict check_dict(const cstarineq::SuiteCheck& check) {
  py::dict d;
  d["module"] = check.module;
  d["name"] = check.name;
  d["pass"] = check.pass;
  d["trials"] = check.trials;
  d["failures"] = check.failures;
  d["worst"] = check.worst;
  d["detail"] = check.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_cstarineq, m) {
  m.doc() = "Numerical checks for operator power inequalities in matrix algebras";

  py::register_exception<cstarineq::Error>(m, "CstarineqError");

  m.def(
      "eig",
      [](const PyMatrix& matrix) {
        cstarineq::SpectralDecomposition d = cstarineq::hermitian_eig(to_matrix(matrix));
        return py::make_tuple(d.eigenvalues, from_matrix(d.eigenvectors));
      },
      py::arg("matrix"),
      "Eigenvalues (ascending) and unitary eigenvector columns of a Hermitian matrix.");

  m.def(
      "matrix_power",
      [](const PyMatrix& matrix, double r) {
        return from_matrix(cstarineq::matrix_power(to_matrix(matrix), r));
      },
      py::arg("matrix"), py::arg("r"),
      "M^r by spectral calculus; fractional r needs M positive semidefinite.");

  m.def(
      "matrix_function",
      [](const PyMatrix& matrix, const std::string& label, double lower, double upper) {
        return from_matrix(cstarineq::matrix_function(
            to_matrix(matrix), cstarineq::make_catalog_function(label, lower, upper)));
      },
      py::arg("matrix"), py::arg("label"), py::arg("lower"), py::arg("upper"),
      "f(M) for a catalog function on [lower, upper].");

  m.def(
      "operator_norm",
      [](const PyMatrix& matrix) { return cstarineq::operator_norm(to_matrix(matrix)); },
      py::arg("matrix"));

  m.def(
      "psd_verdict",
      [](const PyMatrix& matrix, std::optional<double> tol) {
        cstarineq::PsdVerdict v = tol ? cstarineq::psd_verdict(to_matrix(matrix), *tol)
                                      : cstarineq::psd_verdict(to_matrix(matrix));
        py::dict d;
        d["is_psd"] = v.is_psd;
        d["min_eigenvalue"] = v.min_eigenvalue;
        d["tolerance"] = v.tolerance;
        return d;
      },
      py::arg("matrix"), py::arg("tol") = py::none());

  m.def(
      "check_hilbert",
      [](const PyMatrix& t, const PyMatrix& x, double r, std::optional<double> tol) {
        return report_dict(cstarineq::check_hilbert_mccarty(to_matrix(t), to_matrix(x), r, tol));
      },
      py::arg("t"), py::arg("x"), py::arg("r"), py::arg("tol") = py::none());

  m.def(
      "check_mond_pecaric",
      [](const PyMatrix& t, const PyMatrix& rho, const PyMatrix& x, const std::string& f,
         std::optional<double> tol) {
        ComplexMatrix op = to_matrix(t);
        cstarineq::ScalarFunction fn = build_function(f, cstarineq::operator_norm(op) + 1.0);
        return report_dict(cstarineq::check_mond_pecaric_state(
            cstarineq::ModuleOperator{op}, cstarineq::make_state(to_matrix(rho)),
            cstarineq::ModuleElement{to_matrix(x)}, fn, tol));
      },
      py::arg("t"), py::arg("rho"), py::arg("x"), py::arg("f"), py::arg("tol") = py::none());

  m.def(
      "check_state",
      [](const PyMatrix& t, const PyMatrix& rho, const PyMatrix& x, double r,
         std::optional<double> tol) {
        return report_dict(cstarineq::check_state_mccarty(
            cstarineq::ModuleOperator{to_matrix(t)}, cstarineq::make_state(to_matrix(rho)),
            cstarineq::ModuleElement{to_matrix(x)}, r, tol));
      },
      py::arg("t"), py::arg("rho"), py::arg("x"), py::arg("r"), py::arg("tol") = py::none());

  m.def(
      "check_norm",
      [](const PyMatrix& t, const PyMatrix& x, double r, std::optional<double> tol) {
        return report_dict(cstarineq::check_norm_mccarty(
            cstarineq::ModuleOperator{to_matrix(t)}, cstarineq::ModuleElement{to_matrix(x)}, r,
            tol));
      },
      py::arg("t"), py::arg("x"), py::arg("r"), py::arg("tol") = py::none());

  m.def(
      "check_loewner",
      [](const PyMatrix& t, const PyMatrix& x, double r, std::optional<double> tol) {
        return report_dict(cstarineq::check_loewner_mccarty(
            cstarineq::ModuleOperator{to_matrix(t)}, cstarineq::ModuleElement{to_matrix(x)}, r,
            tol));
      },
      py::arg("t"), py::arg("x"), py::arg("r"), py::arg("tol") = py::none());

  m.def(
      "check_commutative",
      [](const std::vector<Complex>& t, const std::vector<Complex>& x, double r,
         std::optional<double> tol) {
        return report_dict(cstarineq::check_commutative_loewner(
            cstarineq::DiagonalAlgebraElement(t), cstarineq::DiagonalAlgebraElement(x), r, tol));
      },
      py::arg("t"), py::arg("x"), py::arg("r"), py::arg("tol") = py::none());

  m.def(
      "verify_counterexamples",
      []() {
        py::list reports;
        for (const auto& report : cstarineq::reproduce_paper_counterexamples()) {
          reports.append(report_dict(report));
        }
        return reports;
      },
      "Rerun the two built-in counterexample instances, asserting the recorded values.");

  m.def(
      "search",
      [](std::size_t dim, double r_min, double r_max, std::size_t trials, std::uint64_t seed,
         const std::string& dist, const std::string& family) {
        cstarineq::SearchConfig cfg;
        cfg.dim = dim;
        cfg.r_min = r_min;
        cfg.r_max = r_max;
        cfg.trials = trials;
        cfg.seed = seed;
        if (dist == "real-gaussian") {
          cfg.entry_distribution = cstarineq::EntryDistribution::real_gaussian;
        } else if (dist == "complex-gaussian") {
          cfg.entry_distribution = cstarineq::EntryDistribution::complex_gaussian;
        } else if (dist == "integer-small") {
          cfg.entry_distribution = cstarineq::EntryDistribution::integer_small;
        } else {
          throw cstarineq::UsageError("unknown distribution: " + dist);
        }
        cstarineq::SearchFamily fam;
        if (family == "loewner-r>1" || family == "loewner-r-greater-1") {
          fam = cstarineq::SearchFamily::loewner_r_greater_1;
        } else if (family == "loewner-r<1" || family == "loewner-r-less-1") {
          fam = cstarineq::SearchFamily::loewner_r_less_1;
        } else {
          throw cstarineq::UsageError("family " + family +
                                      " is not searchable; pick loewner-r>1 or loewner-r<1");
        }
        py::list findings;
        for (const auto& finding : cstarineq::search_counterexamples(cfg, fam)) {
          py::dict d;
          d["index"] = finding.index;
          d["r"] = finding.r;
          d["min_eigenvalue"] = finding.min_eigenvalue;
          d["tolerance"] = finding.tolerance;
          d["t"] = from_matrix(finding.t);
          d["x"] = from_matrix(finding.x);
          findings.append(d);
        }
        return findings;
      },
      py::arg("dim") = 2, py::arg("r_min") = 2.0, py::arg("r_max") = 3.0, py::arg("trials") = 0,
      py::arg("seed") = 0, py::arg("dist") = "integer-small", py::arg("family") = "loewner-r>1",
      "Seeded random search for ordered-version violations.");

  m.def(
      "gns_transport",
      [](std::size_t m_dim, std::size_t n_dim, const PyMatrix& rho, const PyMatrix& t,
         const std::string& f, std::size_t samples, std::uint64_t seed) {
        cstarineq::State state = cstarineq::make_state(to_matrix(rho));
        ComplexMatrix op = to_matrix(t);
        cstarineq::Localization loc = cstarineq::build_localization(m_dim, n_dim, state);
        cstarineq::ModuleOperator module_op{op};
        cstarineq::InducedOperator induced = cstarineq::induced_operator(loc, module_op);
        cstarineq::ScalarFunction fn = build_function(f, cstarineq::operator_norm(op) + 1.0);
        cstarineq::TransportReport report =
            cstarineq::verify_transport(loc, module_op, fn, samples, seed);
        py::dict d;
        d["dim_quotient"] = loc.dim_quotient;
        d["operator_norm_t"] = cstarineq::operator_norm(op);
        d["operator_norm_induced"] = cstarineq::operator_norm(induced.matrix);
        d["induced"] = from_matrix(induced.matrix);
        d["samples"] = report.samples;
        d["max_residual_linear"] = report.max_residual_linear;
        d["max_residual_function"] = report.max_residual_function;
        d["max_residual_pairing"] = report.max_residual_pairing;
        d["tolerance"] = report.tolerance;
        d["pass"] = report.pass;
        return d;
      },
      py::arg("m"), py::arg("n"), py::arg("rho"), py::arg("t"), py::arg("f"),
      py::arg("samples") = 2, py::arg("seed") = 0,
      "Verify operator transport through the state-induced quotient space.");

  m.def(
      "supporting_line",
      [](const std::string& f, double a, double b, double x0, double eps) {
        cstarineq::ScalarFunction fn = cstarineq::make_catalog_function(f, a, b);
        cstarineq::SupportingLine line = cstarineq::supporting_line(fn, x0, eps);
        py::dict d;
        d["slope"] = line.slope;
        d["intercept"] = line.intercept;
        d["x0"] = line.x0;
        d["epsilon"] = line.epsilon;
        d["min_margin"] = line.min_margin;
        d["touch_gap"] = line.touch_gap;
        return d;
      },
      py::arg("f"), py::arg("a"), py::arg("b"), py::arg("x0"), py::arg("eps"));

  m.def(
      "run_suite",
      [](std::uint64_t seed) {
        py::list checks;
        for (const auto& check : cstarineq::run_full_suite(seed)) {
          checks.append(check_dict(check));
        }
        return checks;
      },
      py::arg("seed") = cstarineq::kDefaultSuiteSeed,
      "Run every property suite and return one record per check.");
}
