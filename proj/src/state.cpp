#include "cstarineq/state.hpp"

#include <cmath>
#include <utility>

#include "cstarineq/errors.hpp"
#include "cstarineq/linalg.hpp"
#include "cstarineq/rng.hpp"

namespace cstarineq {

DiagonalAlgebraElement::DiagonalAlgebraElement(std::vector<Complex> values)
    : values_(std::move(values)) {
  for (Complex z : values_) {
    if (!(std::isfinite(z.real()) && std::isfinite(z.imag()))) {
      throw ValidationError("non-finite diagonal entry");
    }
  }
}

bool DiagonalAlgebraElement::is_self_adjoint(double tol) const {
  for (Complex z : values_) {
    if (std::abs(z.imag()) > tol) return false;
  }
  return true;
}

State make_state(const ComplexMatrix& density) {
  if (!density.is_square() || density.rows() == 0) {
    throw ValidationError("density matrix must be square and non-empty");
  }
  if (!density.is_hermitian(hermitian_input_tolerance(density))) {
    throw ValidationError("density matrix is not Hermitian within tolerance");
  }
  const PsdVerdict verdict = psd_verdict(density);
  if (!verdict.is_psd) {
    throw ValidationError("density matrix is not PSD: min eigenvalue " +
                          std::to_string(verdict.min_eigenvalue));
  }
  const Complex tr = density.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > 1e-10) {
    throw ValidationError("density matrix trace is not 1 within 1e-10");
  }
  return State{density.rows(), density};
}

Complex eval_state(const State& rho, const ComplexMatrix& a) {
  if (!a.is_square() || a.rows() != rho.dim) {
    throw DimensionError("state of dim " + std::to_string(rho.dim) +
                         " applied to a " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " element");
  }
  Complex acc = 0.0;
  for (std::size_t i = 0; i < rho.dim; ++i)
    for (std::size_t k = 0; k < rho.dim; ++k) acc += rho.density(i, k) * a(k, i);
  return acc;
}

State eigenvector_state(const ComplexMatrix& a) {
  const SpectralDecomposition d = hermitian_eig(a);
  if (d.dim == 0) throw PreconditionError("eigenvector state of an empty matrix");
  std::size_t pick = 0;
  for (std::size_t k = 1; k < d.dim; ++k) {
    if (std::abs(d.eigenvalues[k]) > std::abs(d.eigenvalues[pick])) pick = k;
  }
  ComplexMatrix density(d.dim, d.dim);
  for (std::size_t i = 0; i < d.dim; ++i)
    for (std::size_t j = 0; j < d.dim; ++j)
      density(i, j) = d.eigenvectors(i, pick) * std::conj(d.eigenvectors(j, pick));
  return make_state(hermitian_part(density));
}

double norm_via_states(const ComplexMatrix& a, std::size_t trials, std::uint64_t seed) {
  double best = std::abs(eval_state(eigenvector_state(a), a));
  for (std::size_t k = 0; k < trials; ++k) {
    const State rho = random_state(a.rows(), mix_seed(seed, k));
    best = std::max(best, std::abs(eval_state(rho, a)));
  }
  return best;
}

std::vector<State> pure_states_diagonal(std::size_t n) {
  std::vector<State> states;
  states.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    ComplexMatrix density(n, n);
    density(k, k) = 1.0;
    states.push_back(State{n, density});
  }
  return states;
}

State random_state(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw PreconditionError("random state needs dimension >= 1");
  Rng rng(seed);
  const ComplexMatrix g = random_complex_gaussian(rng, n, n);
  ComplexMatrix h = g.adjoint() * g;
  const double tr = h.trace().real();
  if (!(tr > 0.0)) throw NumericalError("degenerate Gaussian sample for random state");
  h *= Complex(1.0 / tr, 0.0);
  return make_state(hermitian_part(h));
}

}  // namespace cstarineq
