#pragma once

#include <cstdint>

#include "cstarineq/hilbert_module.hpp"
#include "cstarineq/matrix.hpp"
#include "cstarineq/scalar_function.hpp"
#include "cstarineq/state.hpp"

namespace cstarineq {

/// The inner-product space obtained from C^{m x n} by composing the
/// module inner product with a state and quotienting out the null
/// vectors. Coefficients are taken over the standard matrix units
/// e_{ij}, flattened as k = i * n + j.
struct Localization {
  std::size_t m = 0;
  std::size_t n = 0;
  State state;
  std::size_t dim_quotient = 0;
  ComplexMatrix gram;   // (m n) x (m n), entries rho(<e_k, e_l>)
  ComplexMatrix basis;  // (m n) x dim_quotient, orthonormal under gram
};

/// The compression of a module operator to the quotient space.
struct InducedOperator {
  ComplexMatrix matrix;  // dim_quotient x dim_quotient
};

/// Residuals of the localization identities on random samples.
struct TransportReport {
  std::size_t samples = 0;
  double max_residual_linear = 0.0;    // |T iota(x) - iota(t x)|
  double max_residual_function = 0.0;  // |f(T) iota(x) - iota(f(t) x)|
  double max_residual_pairing = 0.0;   // |<T iota(x), iota(y)> - rho(<t x, y>)|
  double tolerance = 0.0;
  bool pass = false;
};

/// Builds the quotient space for the given module shape and state. The
/// Gram matrix of the matrix units is diagonalized; eigenvectors with
/// eigenvalue above 1e-9 * |G| survive and are scaled to unit length.
Localization build_localization(std::size_t m, std::size_t n, const State& rho);

/// Coordinates of the class of x in the orthonormal quotient basis,
/// returned as a dim_quotient x 1 column.
ComplexMatrix iota(const Localization& loc, const ModuleElement& x);

/// The operator T with T iota(x) = iota(t x). Assembled by transporting
/// the quotient basis and verified against the standard matrix units;
/// for Hermitian t the result is Hermitian and satisfies
/// |T| <= |t| + 1e-8.
InducedOperator induced_operator(const Localization& loc, const ModuleOperator& t);

/// Checks the three transport identities (linear action, functional
/// calculus, pairing) on seeded random samples. Tolerance is
/// 1e-8 * max(1, |t|, sup|f|).
TransportReport verify_transport(const Localization& loc, const ModuleOperator& t,
                                 const ScalarFunction& f, std::size_t samples,
                                 std::uint64_t seed);

}  // namespace cstarineq
