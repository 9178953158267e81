#include "cstarineq/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cstarineq/convexity.hpp"
#include "cstarineq/errors.hpp"
#include "cstarineq/linalg.hpp"
#include "cstarineq/rng.hpp"

namespace cstarineq {

namespace {

double scalar_slack(double lhs, double rhs, std::optional<double> tol) {
  if (tol) return *tol;
  return 1e-8 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

void require_positive_exponent(double r) {
  if (!(r > 0.0)) throw PreconditionError("exponent must be positive");
}

void require_positive_operator(const ComplexMatrix& t) {
  if (!t.is_hermitian(hermitian_input_tolerance(t))) {
    throw PreconditionError("operator must be self-adjoint");
  }
  if (!psd_verdict(t).is_psd) throw PreconditionError("operator must be positive");
}

void require_nonzero(const ComplexMatrix& x) {
  if (x.is_zero()) throw PreconditionError("element must be nonzero");
}

double real_scalar(const ComplexMatrix& one_by_one) { return one_by_one(0, 0).real(); }

/// Orients a scalar comparison so that `difference >= 0` means "holds":
/// for r >= 1 the first quantity must not exceed the second; for r < 1
/// the direction reverses.
void finish_scalar(InequalityReport& report, double lhs, double rhs, double r,
                   std::optional<double> tol) {
  report.is_scalar = true;
  report.lhs_value = lhs;
  report.rhs_value = rhs;
  report.difference_value = r >= 1.0 ? rhs - lhs : lhs - rhs;
  report.tolerance = scalar_slack(lhs, rhs, tol);
  report.holds = report.difference_value >= -report.tolerance;
}

void finish_matrix(InequalityReport& report, const ComplexMatrix& lhs, const ComplexMatrix& rhs,
                   double r, std::optional<double> tol) {
  report.is_scalar = false;
  report.lhs_matrix = lhs;
  report.rhs_matrix = rhs;
  report.difference_matrix = r >= 1.0 ? rhs - lhs : lhs - rhs;
  const PsdVerdict verdict =
      tol ? psd_verdict(report.difference_matrix, *tol) : psd_verdict(report.difference_matrix);
  report.tolerance = verdict.tolerance;
  report.min_eigenvalue = verdict.min_eigenvalue;
  report.holds = verdict.is_psd;
  if (report.difference_matrix.rows() == 2) {
    const ComplexMatrix& c = report.difference_matrix;
    report.difference_det = (c(0, 0) * c(1, 1) - c(0, 1) * c(1, 0)).real();
  }
}

}  // namespace

std::string family_name(InequalityFamily family) {
  switch (family) {
    case InequalityFamily::hilbert_mccarty: return "hilbert-mccarty";
    case InequalityFamily::mond_pecaric_state: return "mond-pecaric-state";
    case InequalityFamily::state_mccarty: return "state-mccarty";
    case InequalityFamily::norm_mccarty: return "norm-mccarty";
    case InequalityFamily::loewner_mccarty: return "loewner-mccarty";
    case InequalityFamily::commutative_loewner: return "commutative-loewner";
  }
  return "unknown";
}

InequalityReport check_hilbert_mccarty(const ComplexMatrix& op, const ComplexMatrix& x,
                                       double r, std::optional<double> tol) {
  require_positive_exponent(r);
  require_positive_operator(op);
  if (x.cols() != 1 || x.rows() != op.rows()) {
    throw DimensionError("x must be a column vector matching the operator dimension");
  }
  require_nonzero(x);

  InequalityReport report;
  report.family = InequalityFamily::hilbert_mccarty;
  report.exponent = r;

  const double norm_sq = std::max(real_scalar(x.adjoint() * x), 0.0);
  const double mean = std::max(real_scalar(x.adjoint() * (op * x)), 0.0);
  const double mean_power = std::max(real_scalar(x.adjoint() * (matrix_power(op, r) * x)), 0.0);

  const double lhs = std::pow(mean, r);
  const double rhs = std::pow(norm_sq, r - 1.0) * mean_power;
  finish_scalar(report, lhs, rhs, r, tol);
  return report;
}

InequalityReport check_mond_pecaric_state(const ModuleOperator& t, const State& rho,
                                          const ModuleElement& x, const ScalarFunction& f,
                                          std::optional<double> tol) {
  if (!t.value.is_hermitian(hermitian_input_tolerance(t.value))) {
    throw PreconditionError("operator must be self-adjoint");
  }
  if (!convexity_check(f)) {
    throw PreconditionError("'" + f.label() + "' failed the convexity check");
  }
  if (t.value.rows() != x.value.rows() || rho.dim != x.value.cols()) {
    throw DimensionError("operator/element/state shapes do not line up");
  }

  InequalityReport report;
  report.family = InequalityFamily::mond_pecaric_state;
  report.function_label = f.label();

  const double weight = eval_state(rho, inner_product(x, x)).real();
  if (weight <= 1e-12) {
    report.degenerate = true;
    report.tolerance = tol ? *tol : 1e-8;
    report.holds = true;
    return report;
  }

  const ModuleElement x0{x.value * Complex(1.0 / std::sqrt(weight), 0.0)};
  const double mean = eval_state(rho, inner_product(op_apply(t, x0), x0)).real();
  const SpectralDecomposition spectrum = hermitian_eig(t.value);
  const double clamp_tol =
      1e-10 * std::max(1.0, std::max(std::abs(spectrum.eigenvalues.front()),
                                     std::abs(spectrum.eigenvalues.back())));
  const double lhs = f.eval_clamped(mean, clamp_tol);

  const ComplexMatrix f_of_t = matrix_function(t.value, f);
  const double rhs = eval_state(rho, inner_product(ModuleElement{f_of_t * x0.value}, x0)).real();

  // Convex f through a state always lands on the <= side.
  finish_scalar(report, lhs, rhs, 2.0, tol);
  return report;
}

InequalityReport check_state_mccarty(const ModuleOperator& t, const State& rho,
                                     const ModuleElement& x, double r,
                                     std::optional<double> tol) {
  require_positive_exponent(r);
  require_positive_operator(t.value);
  require_nonzero(x.value);
  if (t.value.rows() != x.value.rows() || rho.dim != x.value.cols()) {
    throw DimensionError("operator/element/state shapes do not line up");
  }

  InequalityReport report;
  report.family = InequalityFamily::state_mccarty;
  report.exponent = r;

  const double norm_x = operator_norm(x.value);
  const double mean = std::max(eval_state(rho, inner_product(op_apply(t, x), x)).real(), 0.0);
  const ComplexMatrix t_power = matrix_power(t.value, r);
  const double mean_power =
      std::max(eval_state(rho, inner_product(ModuleElement{t_power * x.value}, x)).real(), 0.0);

  const double lhs = std::pow(mean, r);
  const double rhs = std::pow(norm_x, 2.0 * (r - 1.0)) * mean_power;
  finish_scalar(report, lhs, rhs, r, tol);
  return report;
}

InequalityReport check_norm_mccarty(const ModuleOperator& t, const ModuleElement& x, double r,
                                    std::optional<double> tol) {
  require_positive_exponent(r);
  require_positive_operator(t.value);
  require_nonzero(x.value);
  if (t.value.rows() != x.value.rows()) {
    throw DimensionError("operator and element shapes do not line up");
  }

  InequalityReport report;
  report.family = InequalityFamily::norm_mccarty;
  report.exponent = r;

  const double norm_x = operator_norm(x.value);
  const double lhs = std::pow(operator_norm(inner_product(op_apply(t, x), x)), r);
  const ComplexMatrix t_power = matrix_power(t.value, r);
  const double rhs = std::pow(norm_x, 2.0 * (r - 1.0)) *
                     operator_norm(inner_product(ModuleElement{t_power * x.value}, x));
  finish_scalar(report, lhs, rhs, r, tol);
  return report;
}

InequalityReport check_loewner_mccarty(const ModuleOperator& t, const ModuleElement& x,
                                       double r, std::optional<double> tol) {
  require_positive_exponent(r);
  require_positive_operator(t.value);
  require_nonzero(x.value);
  if (!x.value.is_square() || x.value.rows() != t.value.rows()) {
    throw DimensionError("module-over-itself comparison needs square x of the operator size");
  }

  InequalityReport report;
  report.family = InequalityFamily::loewner_mccarty;
  report.exponent = r;

  const double norm_x = operator_norm(x.value);
  const ComplexMatrix witness = hermitian_part(x.value.adjoint() * (t.value * x.value));
  const ComplexMatrix lhs = matrix_power(witness, r);
  const ComplexMatrix t_power = matrix_power(t.value, r);
  const ComplexMatrix rhs =
      Complex(std::pow(norm_x, 2.0 * (r - 1.0)), 0.0) *
      hermitian_part(x.value.adjoint() * (t_power * x.value));
  finish_matrix(report, lhs, rhs, r, tol);
  return report;
}

InequalityReport check_commutative_loewner(const DiagonalAlgebraElement& t,
                                           const DiagonalAlgebraElement& x, double r,
                                           std::optional<double> tol) {
  require_positive_exponent(r);
  if (t.dim() != x.dim() || t.dim() == 0) {
    throw DimensionError("diagonal elements must share a positive dimension");
  }
  double t_scale = 0.0;
  for (Complex v : t.values()) t_scale = std::max(t_scale, std::abs(v));
  const double entry_tol = 1e-10 * std::max(1.0, t_scale);
  for (Complex v : t.values()) {
    if (std::abs(v.imag()) > entry_tol || v.real() < -entry_tol) {
      throw PreconditionError("diagonal operator must be entrywise nonnegative");
    }
  }
  bool x_zero = true;
  double norm_x = 0.0;
  for (Complex v : x.values()) {
    if (v != Complex(0.0, 0.0)) x_zero = false;
    norm_x = std::max(norm_x, std::abs(v));
  }
  if (x_zero) throw PreconditionError("element must be nonzero");

  InequalityReport report;
  report.family = InequalityFamily::commutative_loewner;
  report.exponent = r;

  const std::size_t n = t.dim();
  std::vector<Complex> lhs(n), rhs(n);
  const double weight = std::pow(norm_x, 2.0 * (r - 1.0));
  for (std::size_t k = 0; k < n; ++k) {
    const double tk = std::max(t.values()[k].real(), 0.0);
    const double xk_sq = std::norm(x.values()[k]);
    lhs[k] = std::pow(tk * xk_sq, r);
    rhs[k] = weight * std::pow(tk, r) * xk_sq;
  }
  finish_matrix(report, ComplexMatrix::diagonal(lhs), ComplexMatrix::diagonal(rhs), r, tol);
  report.pure_state_values.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    report.pure_state_values[k] = report.difference_matrix(k, k).real();
  }
  return report;
}

namespace {

void expect_close(const ComplexMatrix& got, const ComplexMatrix& want, double tol,
                  const std::string& what) {
  if (max_abs_diff(got, want) > tol) {
    throw ReproductionError(what + " deviates from the recorded value by " +
                            std::to_string(max_abs_diff(got, want)));
  }
}

}  // namespace

std::vector<InequalityReport> reproduce_paper_counterexamples() {
  // r = 3 instance.
  const ModuleOperator t1{ComplexMatrix::from_rows({{2, 1}, {1, 2}})};
  const ModuleElement x1{ComplexMatrix::from_rows({{1, 1}, {0, 1}})};
  InequalityReport first = check_loewner_mccarty(t1, x1, 3.0);
  expect_close(first.lhs_matrix, ComplexMatrix::from_rows({{98, 183}, {183, 342}}), 1e-9,
               "r=3 compressed power");
  expect_close(first.rhs_matrix,
               ComplexMatrix::from_rows({{95.9574, 185.0608}, {185.0608, 370.1215}}), 2e-3,
               "r=3 weighted power mean");
  expect_close(first.difference_matrix,
               ComplexMatrix::from_rows({{-2.0426, 2.0608}, {2.0608, 28.1215}}), 2e-3,
               "r=3 difference");
  if (first.holds) throw ReproductionError("r=3 instance unexpectedly satisfies the order");

  // r = 1/4 instance; the operator is singular PSD, so the fractional
  // power exercises the eigenvalue clamping path.
  const ModuleOperator t2{ComplexMatrix::from_rows({{125, 75}, {75, 45}})};
  const ModuleElement x2{ComplexMatrix::from_rows({{9, 9}, {1, -25}})};
  InequalityReport second = check_loewner_mccarty(t2, x2, 0.25);
  expect_close(second.lhs_matrix,
               ComplexMatrix::from_rows({{8.0901, -5.0563}, {-5.0563, 3.1602}}), 2e-3,
               "r=1/4 compressed power");
  expect_close(second.rhs_matrix,
               ComplexMatrix::from_rows({{1.7772, -1.1105}, {-1.1105, 0.6956}}), 2e-3,
               "r=1/4 weighted power mean");
  expect_close(second.difference_matrix,
               ComplexMatrix::from_rows({{6.3130, -3.9458}, {-3.9458, 2.4646}}), 2e-3,
               "r=1/4 difference");
  if (!second.difference_det || std::abs(*second.difference_det - (-0.0108)) > 2e-3) {
    throw ReproductionError("r=1/4 difference determinant deviates from -0.0108");
  }
  if (second.holds) throw ReproductionError("r=1/4 instance unexpectedly satisfies the order");

  return {first, second};
}

std::string distribution_name(EntryDistribution d) {
  switch (d) {
    case EntryDistribution::real_gaussian: return "real-gaussian";
    case EntryDistribution::complex_gaussian: return "complex-gaussian";
    case EntryDistribution::integer_small: return "integer-small";
  }
  return "unknown";
}

std::string search_family_name(SearchFamily f) {
  switch (f) {
    case SearchFamily::loewner_r_greater_1: return "loewner-r-greater-1";
    case SearchFamily::loewner_r_less_1: return "loewner-r-less-1";
  }
  return "unknown";
}

std::vector<SearchFinding> search_counterexamples(const SearchConfig& cfg, SearchFamily family) {
  if (cfg.dim == 0) throw UsageError("search dimension must be at least 1");
  if (!(cfg.r_min <= cfg.r_max)) throw UsageError("search needs r_min <= r_max");
  if (family == SearchFamily::loewner_r_greater_1) {
    if (!(cfg.r_min >= 1.0 + 1e-3)) {
      throw UsageError("r-greater-1 search needs r_min >= 1.001");
    }
  } else {
    if (!(cfg.r_max <= 1.0 - 1e-3) || !(cfg.r_min > 0.0)) {
      throw UsageError("r-less-1 search needs 0 < r_min and r_max <= 0.999");
    }
  }

  std::vector<SearchFinding> findings;
  for (std::size_t k = 0; k < cfg.trials; ++k) {
    Rng rng(mix_seed(cfg.seed, k));
    ComplexMatrix g, x;
    switch (cfg.entry_distribution) {
      case EntryDistribution::real_gaussian:
        g = random_real_gaussian(rng, cfg.dim, cfg.dim);
        x = random_real_gaussian(rng, cfg.dim, cfg.dim);
        break;
      case EntryDistribution::complex_gaussian:
        g = random_complex_gaussian(rng, cfg.dim, cfg.dim);
        x = random_complex_gaussian(rng, cfg.dim, cfg.dim);
        break;
      case EntryDistribution::integer_small:
        g = random_integer_small(rng, cfg.dim, cfg.dim);
        x = random_integer_small(rng, cfg.dim, cfg.dim);
        break;
    }
    const double r = rng.uniform(cfg.r_min, cfg.r_max);
    if (x.is_zero()) continue;
    const ComplexMatrix t = hermitian_part(g.adjoint() * g);

    const InequalityReport report = check_loewner_mccarty(ModuleOperator{t}, ModuleElement{x}, r);
    if (*report.min_eigenvalue < -10.0 * report.tolerance) {
      findings.push_back(SearchFinding{k, r, t, x, *report.min_eigenvalue, report.tolerance});
    }
  }
  std::stable_sort(findings.begin(), findings.end(),
                   [](const SearchFinding& a, const SearchFinding& b) {
                     if (a.min_eigenvalue != b.min_eigenvalue) {
                       return a.min_eigenvalue < b.min_eigenvalue;
                     }
                     return a.index < b.index;
                   });
  return findings;
}

}  // namespace cstarineq
