#include "cstarineq/localization.hpp"

#include <cmath>
#include <string>

#include "cstarineq/errors.hpp"
#include "cstarineq/linalg.hpp"
#include "cstarineq/rng.hpp"

namespace cstarineq {

namespace {

ComplexMatrix flatten(const ComplexMatrix& x) {
  ComplexMatrix out(x.rows() * x.cols(), 1);
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(i * x.cols() + j, 0) = x(i, j);
  return out;
}

ComplexMatrix unflatten(const ComplexMatrix& column, std::size_t m, std::size_t n) {
  ComplexMatrix out(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = column(i * n + j, 0);
  return out;
}

ModuleElement matrix_unit(std::size_t m, std::size_t n, std::size_t i, std::size_t j) {
  ComplexMatrix e(m, n);
  e(i, j) = 1.0;
  return ModuleElement{e};
}

double column_norm(const ComplexMatrix& column) { return column.frobenius_norm(); }

void check_element_shape(const Localization& loc, const ModuleElement& x) {
  if (x.value.rows() != loc.m || x.value.cols() != loc.n) {
    throw DimensionError("module element of shape " + std::to_string(x.value.rows()) + "x" +
                         std::to_string(x.value.cols()) + " in a " + std::to_string(loc.m) +
                         "x" + std::to_string(loc.n) + " module");
  }
}

}  // namespace

Localization build_localization(std::size_t m, std::size_t n, const State& rho) {
  if (m == 0 || n == 0) throw PreconditionError("module shape must be at least 1x1");
  if (rho.dim != n) {
    throw DimensionError("state dimension " + std::to_string(rho.dim) +
                         " does not match module column count " + std::to_string(n));
  }

  const std::size_t count = m * n;
  ComplexMatrix gram(count, count);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ModuleElement left = matrix_unit(m, n, i, j);
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          const ModuleElement right = matrix_unit(m, n, k, l);
          gram(i * n + j, k * n + l) = eval_state(rho, inner_product(left, right));
        }
      }
    }
  }
  gram = hermitian_part(gram);

  const SpectralDecomposition d = hermitian_eig(gram);
  const double top = std::max(d.eigenvalues.back(), 0.0);
  const double rank_tol = 1e-9 * top;

  std::size_t rank = 0;
  for (double v : d.eigenvalues)
    if (v > rank_tol) ++rank;

  ComplexMatrix basis(count, rank);
  std::size_t col = 0;
  for (std::size_t k = d.dim; k-- > 0;) {  // descending eigenvalue order
    if (d.eigenvalues[k] <= rank_tol) continue;
    const double scale = 1.0 / std::sqrt(d.eigenvalues[k]);
    for (std::size_t i = 0; i < count; ++i) basis(i, col) = scale * d.eigenvectors(i, k);
    ++col;
  }

  Localization loc{m, n, rho, rank, gram, basis};
  const ComplexMatrix overlap = basis.adjoint() * (gram * basis);
  if (max_abs_diff(overlap, ComplexMatrix::identity(rank)) > 1e-8) {
    throw NumericalError("quotient basis is not orthonormal under the Gram form");
  }
  return loc;
}

ComplexMatrix iota(const Localization& loc, const ModuleElement& x) {
  check_element_shape(loc, x);
  return loc.basis.adjoint() * (loc.gram * flatten(x.value));
}

InducedOperator induced_operator(const Localization& loc, const ModuleOperator& t) {
  if (!t.value.is_square() || t.value.rows() != loc.m) {
    throw DimensionError("operator must be " + std::to_string(loc.m) + "x" +
                         std::to_string(loc.m));
  }
  const std::size_t rank = loc.dim_quotient;
  ComplexMatrix induced(rank, rank);
  for (std::size_t a = 0; a < rank; ++a) {
    ComplexMatrix rep(loc.m * loc.n, 1);
    for (std::size_t i = 0; i < rep.rows(); ++i) rep(i, 0) = loc.basis(i, a);
    const ModuleElement moved{t.value * unflatten(rep, loc.m, loc.n)};
    const ComplexMatrix coords = iota(loc, moved);
    for (std::size_t i = 0; i < rank; ++i) induced(i, a) = coords(i, 0);
  }

  const double op_norm_t = operator_norm(t.value);

  // The defining identity must already hold on every matrix unit.
  for (std::size_t i = 0; i < loc.m; ++i) {
    for (std::size_t j = 0; j < loc.n; ++j) {
      const ModuleElement unit = matrix_unit(loc.m, loc.n, i, j);
      const ComplexMatrix lhs = induced * iota(loc, unit);
      const ComplexMatrix rhs = iota(loc, op_apply(ModuleOperator{t.value}, unit));
      if (column_norm(lhs - rhs) > 1e-9 * std::max(1.0, op_norm_t)) {
        throw NumericalError("induced operator does not transport the matrix units");
      }
    }
  }

  const bool hermitian_input = t.value.is_hermitian(hermitian_input_tolerance(t.value));
  if (hermitian_input) {
    if (!induced.is_hermitian(1e-9 * std::max(1.0, induced.max_abs()))) {
      throw NumericalError("induced operator of a Hermitian input is not Hermitian");
    }
    induced = hermitian_part(induced);
  }
  if (operator_norm(induced) > op_norm_t + 1e-8) {
    throw NumericalError("induced operator norm exceeds the input operator norm");
  }
  return InducedOperator{induced};
}

TransportReport verify_transport(const Localization& loc, const ModuleOperator& t,
                                 const ScalarFunction& f, std::size_t samples,
                                 std::uint64_t seed) {
  const InducedOperator induced = induced_operator(loc, t);
  const ComplexMatrix f_of_t = matrix_function(t.value, f);
  const ComplexMatrix f_of_induced = matrix_function(induced.matrix, f);

  TransportReport report;
  report.samples = samples;
  report.tolerance = 1e-8 * std::max({1.0, operator_norm(t.value), f.sup_abs()});

  for (std::size_t k = 0; k < samples; ++k) {
    Rng rng(mix_seed(seed, k));
    const ModuleElement x{random_complex_gaussian(rng, loc.m, loc.n)};
    const ModuleElement y{random_complex_gaussian(rng, loc.m, loc.n)};
    const ComplexMatrix ix = iota(loc, x);
    const ComplexMatrix iy = iota(loc, y);

    const double ra = column_norm(induced.matrix * ix - iota(loc, op_apply(t, x)));
    const double rb =
        column_norm(f_of_induced * ix - iota(loc, ModuleElement{f_of_t * x.value}));
    const Complex pair_quotient = ((induced.matrix * ix).adjoint() * iy)(0, 0);
    const Complex pair_module = eval_state(loc.state, inner_product(op_apply(t, x), y));
    const double rc = std::abs(pair_quotient - pair_module);

    report.max_residual_linear = std::max(report.max_residual_linear, ra);
    report.max_residual_function = std::max(report.max_residual_function, rb);
    report.max_residual_pairing = std::max(report.max_residual_pairing, rc);
  }
  report.pass = report.max_residual_linear <= report.tolerance &&
                report.max_residual_function <= report.tolerance &&
                report.max_residual_pairing <= report.tolerance;
  return report;
}

}  // namespace cstarineq
