#pragma once

#include <cstdint>
#include <vector>

#include "cstarineq/matrix.hpp"

namespace cstarineq {

/// A state on M_n(C), represented by its density matrix: a PSD matrix
/// with unit trace. Evaluation is a -> trace(density * a).
struct State {
  std::size_t dim = 0;
  ComplexMatrix density;
};

/// An element of the diagonal subalgebra of M_n(C).
class DiagonalAlgebraElement {
 public:
  explicit DiagonalAlgebraElement(std::vector<Complex> values);

  std::size_t dim() const { return values_.size(); }
  const std::vector<Complex>& values() const { return values_; }
  ComplexMatrix to_matrix() const { return ComplexMatrix::diagonal(values_); }

  /// All imaginary parts within tol of zero.
  bool is_self_adjoint(double tol) const;

 private:
  std::vector<Complex> values_;
};

/// Validates and wraps a density matrix. Throws ValidationError unless
/// the matrix is Hermitian within tolerance, PSD at the default verdict
/// tolerance, and has trace within 1e-10 of 1.
State make_state(const ComplexMatrix& density);

/// trace(density * a). Real for Hermitian a (up to roundoff).
Complex eval_state(const State& rho, const ComplexMatrix& a);

/// The pure state projecting onto a unit eigenvector of a Hermitian
/// matrix with eigenvalue of maximal modulus, so |eval| = operator norm.
State eigenvector_state(const ComplexMatrix& a);

/// max |rho(a)| over the eigenvector state of `a` and `trials` seeded
/// random states. Deterministic in (a, trials, seed).
double norm_via_states(const ComplexMatrix& a, std::size_t trials, std::uint64_t seed);

/// The n coordinate evaluations: states with density e_k e_k^T. These
/// are exactly the multiplicative states of the diagonal subalgebra.
std::vector<State> pure_states_diagonal(std::size_t n);

/// D = G* G / trace(G* G) for a seeded complex Gaussian G. Deterministic
/// in (n, seed).
State random_state(std::size_t n, std::uint64_t seed);

}  // namespace cstarineq
