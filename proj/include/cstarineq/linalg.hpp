#pragma once

#include <vector>

#include "cstarineq/matrix.hpp"
#include "cstarineq/scalar_function.hpp"

namespace cstarineq {

/// Eigensystem of a Hermitian matrix: M = V diag(eigenvalues) V*.
struct SpectralDecomposition {
  std::size_t dim = 0;
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unitary; column k belongs to eigenvalues[k]
};

/// Verdict of a positive-semidefiniteness test.
struct PsdVerdict {
  bool is_psd = false;
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;
};

/// Tolerance under which an input matrix is accepted as Hermitian:
/// 1e-10 * max(1, max_abs).
double hermitian_input_tolerance(const ComplexMatrix& m);

/// Full eigensystem of a Hermitian matrix via cyclic complex Jacobi
/// rotations. Deterministic; throws SymmetryError if the input is not
/// Hermitian within hermitian_input_tolerance, NumericalError if the
/// off-diagonal mass has not fallen below 1e-12 * frobenius_norm within
/// 100 sweeps.
SpectralDecomposition hermitian_eig(const ComplexMatrix& m);

/// f(M) = V diag(f(lambda)) V* for Hermitian M. Eigenvalues within
/// 1e-10 * max(1, |lambda|_max) of the domain boundary are clamped onto
/// it; eigenvalues farther outside raise DomainError. The result is
/// symmetrized before returning.
ComplexMatrix matrix_function(const ComplexMatrix& m, const ScalarFunction& f);

/// M^r via the spectral decomposition. Integer r is applied directly to
/// the eigenvalues. Non-integer r requires the matrix to be positive
/// semidefinite up to clamping: eigenvalues in [-clamp_tol, 0) with
/// clamp_tol = 1e-10 * max(1, |lambda|_max) are treated as 0, anything
/// below raises NegativityError. M^0 is the identity.
ComplexMatrix matrix_power(const ComplexMatrix& m, double r);

/// PSD test with explicit tolerance: is_psd iff min eigenvalue >= -tol.
PsdVerdict psd_verdict(const ComplexMatrix& m, double tol);

/// PSD test at the default tolerance 1e-9 * max(1, |lambda|_max).
PsdVerdict psd_verdict(const ComplexMatrix& m);

/// Largest singular value, computed as sqrt of the top eigenvalue of
/// M* M. Works for rectangular inputs.
double operator_norm(const ComplexMatrix& m);

}  // namespace cstarineq
