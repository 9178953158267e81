#include "cstarineq/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "cstarineq/convexity.hpp"
#include "cstarineq/errors.hpp"
#include "cstarineq/hilbert_module.hpp"
#include "cstarineq/inequalities.hpp"
#include "cstarineq/linalg.hpp"
#include "cstarineq/localization.hpp"
#include "cstarineq/matrix.hpp"
#include "cstarineq/rng.hpp"
#include "cstarineq/scalar_function.hpp"
#include "cstarineq/state.hpp"

namespace cstarineq {

namespace {

std::string fmtg(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

ComplexMatrix random_hermitian(Rng& rng, std::size_t n) {
  return hermitian_part(random_complex_gaussian(rng, n, n));
}

ComplexMatrix random_psd(Rng& rng, std::size_t n) {
  ComplexMatrix g = random_complex_gaussian(rng, n, n);
  return hermitian_part(g.adjoint() * g);
}

ComplexMatrix rebuild(const SpectralDecomposition& d) {
  ComplexMatrix scaled = d.eigenvectors;
  for (std::size_t j = 0; j < d.dim; ++j)
    for (std::size_t i = 0; i < d.dim; ++i) scaled(i, j) *= d.eigenvalues[j];
  return scaled * d.eigenvectors.adjoint();
}

/// coeffs[j] multiplies u^j; evaluated with matrix products only.
ComplexMatrix horner(const std::vector<double>& coeffs, const ComplexMatrix& m) {
  const std::size_t n = m.rows();
  ComplexMatrix acc = Complex(coeffs.back(), 0.0) * ComplexMatrix::identity(n);
  for (std::size_t j = coeffs.size() - 1; j-- > 0;) {
    acc = acc * m + Complex(coeffs[j], 0.0) * ComplexMatrix::identity(n);
  }
  return acc;
}

double draw_exponent(Rng& rng) {
  double r = 0.0;
  do {
    r = rng.uniform(0.1, 4.0);
  } while (std::abs(r - 1.0) < 1e-3);
  return r;
}

/// Runs `trials` bodies, counting failures and keeping the most adverse
/// margin. The body returns its margin; `ok` decides pass per trial.
template <typename Body>
SuiteCheck run_trials(std::string module, std::string name, std::size_t trials,
                      std::uint64_t base_seed, bool worst_is_min, const std::string& worst_label,
                      Body&& body) {
  SuiteCheck check;
  check.module = std::move(module);
  check.name = std::move(name);
  check.trials = trials;
  check.worst = worst_is_min ? std::numeric_limits<double>::infinity()
                             : -std::numeric_limits<double>::infinity();
  std::string first_error;
  for (std::size_t k = 0; k < trials; ++k) {
    try {
      Rng rng(mix_seed(base_seed, k));
      bool ok = true;
      const double margin = body(rng, k, ok);
      if (worst_is_min)
        check.worst = std::min(check.worst, margin);
      else
        check.worst = std::max(check.worst, margin);
      if (!ok) ++check.failures;
    } catch (const Error& e) {
      ++check.failures;
      if (first_error.empty()) first_error = std::string("trial ") + std::to_string(k) + ": " + e.what();
    }
  }
  check.pass = check.failures == 0;
  check.detail = worst_label + " " + fmtg(check.worst);
  if (!first_error.empty()) check.detail += "; " + first_error;
  return check;
}

// ---------------------------------------------------------------- linalg

SuiteCheck eig_reconstruction_check(std::uint64_t seed) {
  return run_trials("linalg-core", "eig-reconstruction", 500, mix_seed(seed, 10), false,
                    "max normalized residual", [](Rng& rng, std::size_t k, bool& ok) {
                      const std::size_t n = 1 + k % 6;
                      ComplexMatrix m = random_hermitian(rng, n);
                      SpectralDecomposition d = hermitian_eig(m);
                      const double residual =
                          max_abs_diff(rebuild(d), m) / std::max(1.0, m.max_abs());
                      ok = residual <= 1e-9;
                      return residual;
                    });
}

SuiteCheck power_roundtrip_check(std::uint64_t seed) {
  return run_trials("linalg-core", "power-roundtrip", 300, mix_seed(seed, 11), false,
                    "max normalized residual", [](Rng& rng, std::size_t k, bool& ok) {
                      const std::size_t n = 1 + k % 4;
                      const double p = static_cast<double>(2 + k % 3);
                      ComplexMatrix m = random_psd(rng, n);
                      ComplexMatrix root = matrix_power(m, 1.0 / p);
                      ComplexMatrix back = matrix_power(root, p);
                      const double residual =
                          max_abs_diff(back, m) / std::max(1.0, m.max_abs());
                      ok = residual <= 1e-7;
                      return residual;
                    });
}

SuiteCheck polynomial_calculus_check(std::uint64_t seed) {
  return run_trials(
      "linalg-core", "polynomial-calculus", 200, mix_seed(seed, 12), false,
      "max normalized residual", [](Rng& rng, std::size_t k, bool& ok) {
        const std::size_t n = 1 + k % 4;
        const std::size_t degree = 1 + k % 5;
        ComplexMatrix m = random_hermitian(rng, n);
        std::vector<double> coeffs(degree + 1);
        for (double& c : coeffs) c = rng.uniform(-2.0, 2.0);
        const double radius = operator_norm(m) + 1.0;
        ScalarFunction poly(
            [coeffs](double u) {
              double acc = coeffs.back();
              for (std::size_t j = coeffs.size() - 1; j-- > 0;) acc = acc * u + coeffs[j];
              return acc;
            },
            -radius, radius, "poly");
        ComplexMatrix via_calculus = matrix_function(m, poly);
        ComplexMatrix via_products = horner(coeffs, m);
        const double residual = max_abs_diff(via_calculus, via_products) /
                                std::max(1.0, via_products.max_abs());
        ok = residual <= 1e-8;
        return residual;
      });
}

SuiteCheck gram_psd_check(std::uint64_t seed) {
  return run_trials("linalg-core", "gram-psd", 500, mix_seed(seed, 13), false,
                    "max |negative part|", [](Rng& rng, std::size_t k, bool& ok) {
                      const std::size_t rows = 1 + k % 5;
                      const std::size_t cols = 1 + (k / 5) % 5;
                      ComplexMatrix g = random_complex_gaussian(rng, rows, cols);
                      PsdVerdict verdict = psd_verdict(hermitian_part(g.adjoint() * g));
                      ok = verdict.is_psd;
                      return std::max(0.0, -verdict.min_eigenvalue);
                    });
}

SuiteCheck norm_vs_spectrum_check(std::uint64_t seed) {
  return run_trials("linalg-core", "norm-vs-spectrum", 300, mix_seed(seed, 14), false,
                    "max |difference|", [](Rng& rng, std::size_t k, bool& ok) {
                      const std::size_t n = 1 + k % 6;
                      ComplexMatrix m = random_hermitian(rng, n);
                      SpectralDecomposition d = hermitian_eig(m);
                      double top = 0.0;
                      for (double lam : d.eigenvalues) top = std::max(top, std::abs(lam));
                      const double diff = std::abs(operator_norm(m) - top);
                      ok = diff <= 1e-9;
                      return diff;
                    });
}

// ----------------------------------------------------------------- state

SuiteCheck cauchy_schwarz_check(std::uint64_t seed) {
  return run_trials("cstar-state", "state-cauchy-schwarz", 500, mix_seed(seed, 20), false,
                    "max lhs - rhs", [](Rng& rng, std::size_t k, bool& ok) {
                      const std::size_t m = 1 + k % 3;
                      const std::size_t n = 1 + (k / 3) % 3;
                      ComplexMatrix x = random_complex_gaussian(rng, m, n);
                      ComplexMatrix y = random_complex_gaussian(rng, m, n);
                      State rho = random_state(n, mix_seed(rng.uniform_int(0, 1 << 30), k));
                      const Complex cross = eval_state(rho, x.adjoint() * y);
                      const double lhs = std::norm(cross);
                      const double rhs = eval_state(rho, x.adjoint() * x).real() *
                                         eval_state(rho, y.adjoint() * y).real();
                      ok = lhs <= rhs + 1e-9;
                      return lhs - rhs;
                    });
}

SuiteCheck state_positivity_check(std::uint64_t seed) {
  return run_trials("cstar-state", "state-positivity", 500, mix_seed(seed, 21), true,
                    "min value", [](Rng& rng, std::size_t k, bool& ok) {
                      const std::size_t n = 1 + k % 4;
                      ComplexMatrix a = random_psd(rng, n);
                      State rho = random_state(n, mix_seed(rng.uniform_int(0, 1 << 30), k));
                      const double value = eval_state(rho, a).real();
                      ok = value >= -1e-10;
                      return value;
                    });
}

SuiteCheck state_adjoint_check(std::uint64_t seed) {
  return run_trials("cstar-state", "state-adjoint-conjugation", 500, mix_seed(seed, 22), false,
                    "max |difference|", [](Rng& rng, std::size_t k, bool& ok) {
                      const std::size_t n = 1 + k % 4;
                      ComplexMatrix a = random_complex_gaussian(rng, n, n);
                      State rho = random_state(n, mix_seed(rng.uniform_int(0, 1 << 30), k));
                      const Complex direct = eval_state(rho, a.adjoint());
                      const Complex mirrored = std::conj(eval_state(rho, a));
                      const double diff = std::abs(direct - mirrored);
                      ok = diff <= 1e-10;
                      return diff;
                    });
}

SuiteCheck diagonal_multiplicative_check(std::uint64_t seed) {
  const double exponents[] = {0.25, 1.0 / 3.0, 0.5, 2.0, 3.0};
  return run_trials(
      "cstar-state", "diagonal-state-multiplicativity", 200, mix_seed(seed, 23), false,
      "max |difference|", [&exponents](Rng& rng, std::size_t k, bool& ok) {
        const std::size_t n = 1 + k % 4;
        std::vector<Complex> values(n);
        for (Complex& v : values) v = Complex(rng.uniform(0.0, 3.0), 0.0);
        ComplexMatrix d = ComplexMatrix::diagonal(values);
        double worst = 0.0;
        for (double s : exponents) {
          ComplexMatrix ds = matrix_power(d, s);
          for (const State& pure : pure_states_diagonal(n)) {
            const double lhs = eval_state(pure, ds).real();
            const double rhs = std::pow(eval_state(pure, d).real(), s);
            worst = std::max(worst, std::abs(lhs - rhs));
          }
        }
        ok = worst <= 1e-9;
        return worst;
      });
}

// ---------------------------------------------------------------- module

SuiteCheck inner_product_psd_check(std::uint64_t seed) {
  return run_trials("hilbert-module", "inner-product-psd", 500, mix_seed(seed, 30), false,
                    "max |negative part|", [](Rng& rng, std::size_t k, bool& ok) {
                      const std::size_t m = 1 + k % 4;
                      const std::size_t n = 1 + (k / 4) % 4;
                      ModuleElement x{random_complex_gaussian(rng, m, n)};
                      PsdVerdict verdict = psd_verdict(hermitian_part(inner_product(x, x)));
                      ok = verdict.is_psd;
                      return std::max(0.0, -verdict.min_eigenvalue);
                    });
}

SuiteCheck adjointability_check(std::uint64_t seed) {
  return run_trials("hilbert-module", "hermitian-adjointability", 500, mix_seed(seed, 31), false,
                    "max |difference|", [](Rng& rng, std::size_t k, bool& ok) {
                      const std::size_t m = 1 + k % 4;
                      const std::size_t n = 1 + (k / 4) % 4;
                      ModuleOperator t{random_hermitian(rng, m)};
                      ModuleElement x{random_complex_gaussian(rng, m, n)};
                      ModuleElement y{random_complex_gaussian(rng, m, n)};
                      const double diff = max_abs_diff(inner_product(op_apply(t, x), y),
                                                       inner_product(x, op_apply(t, y)));
                      ok = diff <= 1e-10;
                      return diff;
                    });
}

SuiteCheck module_norm_consistency_check(std::uint64_t seed) {
  return run_trials("hilbert-module", "norm-consistency", 300, mix_seed(seed, 32), false,
                    "max |difference|", [](Rng& rng, std::size_t k, bool& ok) {
                      const std::size_t m = 1 + k % 4;
                      const std::size_t n = 1 + (k / 4) % 4;
                      ModuleElement x{random_complex_gaussian(rng, m, n)};
                      const double via_norm = std::pow(operator_norm(x.value), 2.0);
                      const double via_inner =
                          operator_norm(hermitian_part(inner_product(x, x)));
                      const double diff = std::abs(via_norm - via_inner);
                      ok = diff <= 1e-9;
                      return diff;
                    });
}

SuiteCheck right_linearity_check(std::uint64_t seed) {
  return run_trials("hilbert-module", "right-linearity", 300, mix_seed(seed, 33), false,
                    "max |difference|", [](Rng& rng, std::size_t k, bool& ok) {
                      const std::size_t m = 1 + k % 4;
                      const std::size_t n = 1 + (k / 4) % 4;
                      ComplexMatrix x = random_complex_gaussian(rng, m, n);
                      ComplexMatrix y = random_complex_gaussian(rng, m, n);
                      ComplexMatrix z = random_complex_gaussian(rng, m, n);
                      ComplexMatrix a = random_complex_gaussian(rng, n, n);
                      ComplexMatrix b = random_complex_gaussian(rng, n, n);
                      ModuleElement combined{y * a + z * b};
                      ComplexMatrix lhs =
                          inner_product(ModuleElement{x}, combined);
                      ComplexMatrix rhs = inner_product(ModuleElement{x}, ModuleElement{y}) * a +
                                          inner_product(ModuleElement{x}, ModuleElement{z}) * b;
                      const double diff = max_abs_diff(lhs, rhs);
                      ok = diff <= 1e-10;
                      return diff;
                    });
}

// ---------------------------------------------------------- localization

SuiteCheck pairing_preservation_check(std::uint64_t seed) {
  return run_trials("localization", "pairing-preservation", 200, mix_seed(seed, 40), false,
                    "max |difference|", [](Rng& rng, std::size_t k, bool& ok) {
                      const std::size_t m = 1 + k % 3;
                      const std::size_t n = 1 + (k / 3) % 3;
                      State rho = random_state(n, mix_seed(rng.uniform_int(0, 1 << 30), k));
                      Localization loc = build_localization(m, n, rho);
                      ModuleElement x{random_complex_gaussian(rng, m, n)};
                      ModuleElement y{random_complex_gaussian(rng, m, n)};
                      const Complex quotient_side =
                          (iota(loc, x).adjoint() * iota(loc, y))(0, 0);
                      const Complex state_side = eval_state(rho, inner_product(x, y));
                      const double diff = std::abs(quotient_side - state_side);
                      ok = diff <= 1e-9;
                      return diff;
                    });
}

SuiteCheck induced_norm_bound_check(std::uint64_t seed) {
  return run_trials("localization", "induced-norm-bound", 200, mix_seed(seed, 41), false,
                    "max norm excess", [](Rng& rng, std::size_t k, bool& ok) {
                      const std::size_t m = 1 + k % 3;
                      const std::size_t n = 1 + (k / 3) % 3;
                      State rho = random_state(n, mix_seed(rng.uniform_int(0, 1 << 30), k));
                      Localization loc = build_localization(m, n, rho);
                      ModuleOperator t{random_hermitian(rng, m)};
                      InducedOperator induced = induced_operator(loc, t);
                      const double excess =
                          operator_norm(induced.matrix) - operator_norm(t.value);
                      ok = excess <= 1e-8;
                      return excess;
                    });
}

SuiteCheck positive_transport_check(std::uint64_t seed) {
  return run_trials("localization", "positive-transport", 200, mix_seed(seed, 42), false,
                    "max |negative part|", [](Rng& rng, std::size_t k, bool& ok) {
                      const std::size_t m = 1 + k % 3;
                      const std::size_t n = 1 + (k / 3) % 3;
                      State rho = random_state(n, mix_seed(rng.uniform_int(0, 1 << 30), k));
                      Localization loc = build_localization(m, n, rho);
                      ModuleOperator t{random_psd(rng, m)};
                      InducedOperator induced = induced_operator(loc, t);
                      PsdVerdict verdict = psd_verdict(induced.matrix);
                      ok = verdict.is_psd;
                      return std::max(0.0, -verdict.min_eigenvalue);
                    });
}

SuiteCheck polynomial_transport_check(std::uint64_t seed) {
  return run_trials(
      "localization", "polynomial-transport", 200, mix_seed(seed, 43), false,
      "max |difference|", [](Rng& rng, std::size_t k, bool& ok) {
        const std::size_t m = 1 + k % 3;
        const std::size_t n = 1 + (k / 3) % 3;
        State rho = random_state(n, mix_seed(rng.uniform_int(0, 1 << 30), k));
        Localization loc = build_localization(m, n, rho);
        ModuleOperator t{random_hermitian(rng, m)};
        InducedOperator induced = induced_operator(loc, t);
        const std::size_t degree = 1 + k % 4;
        std::vector<double> coeffs(degree + 1);
        for (double& c : coeffs) c = rng.uniform(-2.0, 2.0);
        ModuleElement x{random_complex_gaussian(rng, m, n)};
        ComplexMatrix lhs = horner(coeffs, induced.matrix) * iota(loc, x);
        ComplexMatrix rhs = iota(loc, ModuleElement{horner(coeffs, t.value) * x.value});
        const double diff = max_abs_diff(lhs, rhs);
        ok = diff <= 1e-8;
        return diff;
      });
}

}  // namespace

SuiteCheck gns_transport_check(std::uint64_t seed, std::size_t instances) {
  return run_trials(
      "localization", "gns-transport", instances, mix_seed(seed, 44), false,
      "max residual / tolerance", [](Rng& rng, std::size_t k, bool& ok) {
        const std::size_t m = 1 + k % 3;
        const std::size_t n = 1 + (k / 3) % 3;
        State rho = random_state(n, mix_seed(rng.uniform_int(0, 1 << 30), k));
        Localization loc = build_localization(m, n, rho);

        ModuleOperator t{random_hermitian(rng, m)};
        ModuleOperator tp{random_psd(rng, m)};
        const double radius = operator_norm(t.value) + 1.0;
        const double radius_p = operator_norm(tp.value) + 1.0;
        ScalarFunction cube([](double u) { return u * u * u; }, -radius, radius, "cube");
        ScalarFunction root([](double u) { return std::sqrt(u); }, 0.0, radius_p, "sqrt");
        ScalarFunction expf([](double u) { return std::exp(u); }, -radius, radius, "exp");

        double worst = 0.0;
        ok = true;
        std::size_t which = 0;
        for (const auto* entry : {&cube, &expf}) {
          TransportReport report =
              verify_transport(loc, t, *entry, 2, mix_seed(rng.uniform_int(0, 1 << 30), ++which));
          const double residual = std::max({report.max_residual_linear,
                                            report.max_residual_function,
                                            report.max_residual_pairing});
          worst = std::max(worst, residual / report.tolerance);
          ok = ok && report.pass;
        }
        TransportReport report =
            verify_transport(loc, tp, root, 2, mix_seed(rng.uniform_int(0, 1 << 30), 99));
        const double residual =
            std::max({report.max_residual_linear, report.max_residual_function,
                      report.max_residual_pairing});
        worst = std::max(worst, residual / report.tolerance);
        ok = ok && report.pass;
        return worst;
      });
}

// ------------------------------------------------------------- convexity

SuiteCheck supporting_line_catalog_check(std::uint64_t seed) {
  const char* labels[] = {"pow:1",      "pow:1.5",    "pow:2",      "pow:3", "negpow:0.25",
                          "negpow:0.5", "negpow:0.75", "exp",       "abs:0.75", "hinge:0.75"};
  SuiteCheck check;
  check.module = "convexity";
  check.name = "supporting-line-catalog";
  check.worst = std::numeric_limits<double>::infinity();
  std::string first_error;
  const double a = 0.0;
  const double b = 2.0;
  std::size_t label_index = 0;
  for (const char* label : labels) {
    ScalarFunction f = make_catalog_function(label, a, b);
    Rng rng(mix_seed(seed, 50 + label_index++));
    for (std::size_t k = 0; k < 50; ++k) {
      double x0 = 0.0;
      double eps = 1e-3;
      if (k == 0) {
        x0 = a;
      } else if (k == 1) {
        x0 = b;
      } else {
        x0 = rng.uniform(a, b);
        eps = std::pow(10.0, rng.uniform(-6.0, -1.0));
      }
      ++check.trials;
      try {
        SupportingLine line = supporting_line(f, x0, eps);
        check.worst = std::min(check.worst, line.min_margin);
        if (line.touch_gap >= eps) ++check.failures;
      } catch (const Error& e) {
        ++check.failures;
        if (first_error.empty())
          first_error = std::string(label) + " at x0 = " + fmtg(x0) + ": " + e.what();
      }
    }
  }
  check.pass = check.failures == 0;
  check.detail = std::string("min grid margin ") + fmtg(check.worst);
  if (!first_error.empty()) check.detail += "; " + first_error;
  return check;
}

namespace {

SuiteCheck quotient_monotonicity_check(std::uint64_t seed) {
  const char* labels[] = {"pow:2", "pow:3", "exp", "abs:0.75", "hinge:0.75"};
  return run_trials(
      "convexity", "quotient-monotonicity", 200, mix_seed(seed, 51), false,
      "max increase", [&labels](Rng& rng, std::size_t k, bool& ok) {
        ScalarFunction f = make_catalog_function(labels[k % 5], 0.0, 2.0);
        const double x0 = rng.uniform(0.05, 1.6);
        const double room = 2.0 - x0;
        const double scales[] = {0.2, 0.02, 0.002, 0.0002};
        double previous = std::numeric_limits<double>::infinity();
        double worst = -std::numeric_limits<double>::infinity();
        for (double s : scales) {
          const double h = room * s;
          const double quotient = (f.eval(x0 + h) - f.eval(x0)) / h;
          worst = std::max(worst, quotient - previous);
          previous = quotient;
        }
        ok = worst <= 1e-10;
        return worst;
      });
}

SuiteCheck one_sided_order_check(std::uint64_t seed) {
  const char* labels[] = {"pow:2", "pow:3", "exp", "abs:0.75", "hinge:0.75"};
  return run_trials("convexity", "one-sided-derivative-order", 200, mix_seed(seed, 52), false,
                    "max left - right", [&labels](Rng& rng, std::size_t k, bool& ok) {
                      ScalarFunction f = make_catalog_function(labels[k % 5], 0.0, 2.0);
                      const double x0 = rng.uniform(0.1, 1.9);
                      const double left = one_sided_derivative(f, x0, Side::left);
                      const double right = one_sided_derivative(f, x0, Side::right);
                      ok = left <= right + 1e-6;
                      return left - right;
                    });
}

// ---------------------------------------------------------- inequalities

SuiteCheck theorem_hilbert_check(std::uint64_t seed) {
  return run_trials("inequalities", "theorem-hilbert-mccarty", 1000, mix_seed(seed, 60), true,
                    "min difference", [](Rng& rng, std::size_t k, bool& ok) {
                      const std::size_t n = 1 + k % 4;
                      ComplexMatrix op = random_psd(rng, n);
                      ComplexMatrix x = random_complex_gaussian(rng, n, 1);
                      const double r = draw_exponent(rng);
                      InequalityReport report = check_hilbert_mccarty(op, x, r);
                      ok = report.holds;
                      return report.difference_value;
                    });
}

SuiteCheck theorem_mond_pecaric_check(std::uint64_t seed) {
  return run_trials(
      "inequalities", "theorem-mond-pecaric", 1000, mix_seed(seed, 61), true, "min difference",
      [](Rng& rng, std::size_t k, bool& ok) {
        const std::size_t m = 1 + k % 3;
        const std::size_t n = 1 + (k / 3) % 3;
        // Labels needing a nonnegative domain pair with a PSD operator.
        const std::size_t kind = k % 8;
        const bool nonneg = kind >= 5;
        ModuleOperator t{nonneg ? random_psd(rng, m) : random_hermitian(rng, m)};
        State rho = random_state(n, mix_seed(rng.uniform_int(0, 1 << 30), k));
        ModuleElement x{random_complex_gaussian(rng, m, n)};
        const double radius = operator_norm(t.value) + 1.0;
        const double lo = nonneg ? 0.0 : -radius;
        ScalarFunction f = [&]() {
          switch (kind) {
            case 0:
              return make_catalog_function("id", lo, radius);
            case 1:
              return make_catalog_function("pow:2", lo, radius);
            case 2:
              return make_catalog_function("exp", lo, radius);
            case 3:
              return make_catalog_function("abs:" + fmtg(rng.uniform(-radius, radius)), lo,
                                           radius);
            case 4:
              return make_catalog_function("hinge:" + fmtg(rng.uniform(-radius, radius)), lo,
                                           radius);
            case 5:
              return make_catalog_function("pow:1.5", lo, radius);
            case 6:
              return make_catalog_function("pow:3", lo, radius);
            default:
              return make_catalog_function("negpow:" + fmtg(rng.uniform(0.1, 0.9)), lo, radius);
          }
        }();
        InequalityReport report = check_mond_pecaric_state(t, rho, x, f);
        ok = report.holds;
        return report.difference_value;
      });
}

SuiteCheck theorem_state_check(std::uint64_t seed) {
  return run_trials("inequalities", "theorem-state-mccarty", 1000, mix_seed(seed, 62), true,
                    "min difference", [](Rng& rng, std::size_t k, bool& ok) {
                      const std::size_t m = 1 + k % 3;
                      const std::size_t n = 1 + (k / 3) % 3;
                      ModuleOperator t{random_psd(rng, m)};
                      State rho = random_state(n, mix_seed(rng.uniform_int(0, 1 << 30), k));
                      ModuleElement x{random_complex_gaussian(rng, m, n)};
                      const double r = draw_exponent(rng);
                      InequalityReport report = check_state_mccarty(t, rho, x, r);
                      ok = report.holds;
                      return report.difference_value;
                    });
}

SuiteCheck theorem_norm_check(std::uint64_t seed) {
  return run_trials("inequalities", "theorem-norm-mccarty", 1000, mix_seed(seed, 63), true,
                    "min difference", [](Rng& rng, std::size_t k, bool& ok) {
                      const std::size_t m = 1 + k % 4;
                      const std::size_t n = 1 + (k / 4) % 4;
                      ModuleOperator t{random_psd(rng, m)};
                      ModuleElement x{random_complex_gaussian(rng, m, n)};
                      const double r = draw_exponent(rng);
                      InequalityReport report = check_norm_mccarty(t, x, r);
                      ok = report.holds;
                      return report.difference_value;
                    });
}

SuiteCheck theorem_commutative_check(std::uint64_t seed) {
  return run_trials("inequalities", "theorem-commutative-loewner", 1000, mix_seed(seed, 64), true,
                    "min eigenvalue", [](Rng& rng, std::size_t k, bool& ok) {
                      const std::size_t n = 1 + k % 4;
                      std::vector<Complex> tv(n), xv(n);
                      for (Complex& v : tv) v = Complex(rng.uniform(0.0, 4.0), 0.0);
                      for (Complex& v : xv) v = rng.complex_normal();
                      DiagonalAlgebraElement t(tv), x(xv);
                      const double r = draw_exponent(rng);
                      InequalityReport report = check_commutative_loewner(t, x, r);
                      ok = report.holds;
                      return report.min_eigenvalue.value_or(0.0);
                    });
}

SuiteCheck scalar_reduction_check(std::uint64_t seed) {
  return run_trials(
      "inequalities", "scalar-reduction", 500, mix_seed(seed, 65), false, "verdict mismatches",
      [](Rng& rng, std::size_t, bool& ok) {
        const double g = rng.normal();
        ComplexMatrix t(1, 1, {Complex(g * g, 0.0)});
        ComplexMatrix x(1, 1, {rng.complex_normal()});
        const double r = draw_exponent(rng);
        InequalityReport ordered = check_loewner_mccarty(ModuleOperator{t}, ModuleElement{x}, r);
        InequalityReport plain = check_hilbert_mccarty(t, x, r);
        ok = ordered.holds == plain.holds;
        return ok ? 0.0 : 1.0;
      });
}

SuiteCheck diagonal_reduction_check(std::uint64_t seed) {
  return run_trials(
      "inequalities", "diagonal-reduction", 500, mix_seed(seed, 66), false, "verdict mismatches",
      [](Rng& rng, std::size_t k, bool& ok) {
        const std::size_t n = 1 + k % 4;
        std::vector<Complex> tv(n), xv(n);
        for (Complex& v : tv) v = Complex(rng.uniform(0.0, 4.0), 0.0);
        for (Complex& v : xv) v = rng.complex_normal();
        DiagonalAlgebraElement t(tv), x(xv);
        const double r = draw_exponent(rng);
        InequalityReport commutative = check_commutative_loewner(t, x, r);
        InequalityReport ordered =
            check_loewner_mccarty(ModuleOperator{t.to_matrix()}, ModuleElement{x.to_matrix()}, r);
        ok = commutative.holds && ordered.holds == commutative.holds;
        return ok ? 0.0 : 1.0;
      });
}

SuiteCheck unit_exponent_check(std::uint64_t seed) {
  return run_trials(
      "inequalities", "unit-exponent-equality", 500, mix_seed(seed, 67), false,
      "max |difference|", [](Rng& rng, std::size_t k, bool& ok) {
        const std::size_t m = 1 + k % 3;
        const std::size_t n = 1 + (k / 3) % 3;
        double value = 0.0;
        switch (k % 5) {
          case 0: {
            ComplexMatrix op = random_psd(rng, m);
            ComplexMatrix x = random_complex_gaussian(rng, m, 1);
            value = std::abs(check_hilbert_mccarty(op, x, 1.0).difference_value);
            break;
          }
          case 1: {
            ModuleOperator t{random_hermitian(rng, m)};
            State rho = random_state(n, mix_seed(rng.uniform_int(0, 1 << 30), k));
            ModuleElement x{random_complex_gaussian(rng, m, n)};
            const double radius = operator_norm(t.value) + 1.0;
            ScalarFunction identity = make_catalog_function("id", -radius, radius);
            value = std::abs(check_mond_pecaric_state(t, rho, x, identity).difference_value);
            break;
          }
          case 2: {
            ModuleOperator t{random_psd(rng, m)};
            State rho = random_state(n, mix_seed(rng.uniform_int(0, 1 << 30), k));
            ModuleElement x{random_complex_gaussian(rng, m, n)};
            value = std::abs(check_state_mccarty(t, rho, x, 1.0).difference_value);
            break;
          }
          case 3: {
            ModuleOperator t{random_psd(rng, m)};
            ModuleElement x{random_complex_gaussian(rng, m, n)};
            value = std::abs(check_norm_mccarty(t, x, 1.0).difference_value);
            break;
          }
          default: {
            ModuleOperator t{random_psd(rng, m)};
            ModuleElement x{random_complex_gaussian(rng, m, m)};
            value = check_loewner_mccarty(t, x, 1.0).difference_matrix.max_abs();
            break;
          }
        }
        ok = value <= 1e-10;
        return value;
      });
}

SuiteCheck norm_domination_check(std::uint64_t seed) {
  return run_trials(
      "inequalities", "norm-domination", 500, mix_seed(seed, 68), false, "implication failures",
      [](Rng& rng, std::size_t k, bool& ok) {
        const std::size_t m = 1 + k % 3;
        ModuleOperator t{random_psd(rng, m)};
        ModuleElement x{random_complex_gaussian(rng, m, m)};
        const double r = draw_exponent(rng);
        InequalityReport ordered = check_loewner_mccarty(t, x, r);
        if (!ordered.holds) {
          ok = true;
          return 0.0;
        }
        InequalityReport norm = check_norm_mccarty(t, x, r);
        ok = norm.holds;
        return ok ? 0.0 : 1.0;
      });
}

}  // namespace

std::vector<SuiteCheck> run_linalg_suite(std::uint64_t seed) {
  return {eig_reconstruction_check(seed), power_roundtrip_check(seed),
          polynomial_calculus_check(seed), gram_psd_check(seed), norm_vs_spectrum_check(seed)};
}

std::vector<SuiteCheck> run_state_suite(std::uint64_t seed) {
  return {cauchy_schwarz_check(seed), state_positivity_check(seed), state_adjoint_check(seed),
          diagonal_multiplicative_check(seed)};
}

std::vector<SuiteCheck> run_module_suite(std::uint64_t seed) {
  return {inner_product_psd_check(seed), adjointability_check(seed),
          module_norm_consistency_check(seed), right_linearity_check(seed)};
}

std::vector<SuiteCheck> run_localization_suite(std::uint64_t seed) {
  return {pairing_preservation_check(seed), induced_norm_bound_check(seed),
          positive_transport_check(seed), polynomial_transport_check(seed),
          gns_transport_check(seed, 200)};
}

std::vector<SuiteCheck> run_convexity_suite(std::uint64_t seed) {
  return {supporting_line_catalog_check(seed), quotient_monotonicity_check(seed),
          one_sided_order_check(seed)};
}

std::vector<SuiteCheck> run_theorem_family_checks(std::uint64_t seed) {
  return {theorem_hilbert_check(seed), theorem_mond_pecaric_check(seed),
          theorem_state_check(seed), theorem_norm_check(seed), theorem_commutative_check(seed)};
}

std::vector<SuiteCheck> run_reduction_checks(std::uint64_t seed) {
  return {scalar_reduction_check(seed), diagonal_reduction_check(seed)};
}

std::vector<SuiteCheck> run_inequality_suite(std::uint64_t seed) {
  std::vector<SuiteCheck> checks = run_theorem_family_checks(seed);
  for (SuiteCheck& check : run_reduction_checks(seed)) checks.push_back(std::move(check));
  checks.push_back(unit_exponent_check(seed));
  checks.push_back(norm_domination_check(seed));
  return checks;
}

std::vector<SuiteCheck> run_full_suite(std::uint64_t seed) {
  std::vector<SuiteCheck> checks;
  for (auto runner : {run_linalg_suite, run_state_suite, run_module_suite,
                      run_localization_suite, run_convexity_suite, run_inequality_suite}) {
    for (SuiteCheck& check : runner(seed)) checks.push_back(std::move(check));
  }
  return checks;
}

bool suite_passed(const std::vector<SuiteCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const SuiteCheck& check) { return check.pass; });
}

}  // namespace cstarineq
