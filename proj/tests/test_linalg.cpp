#include <doctest.h>

#include <cmath>

#include "cstarineq/errors.hpp"
#include "cstarineq/linalg.hpp"
#include "cstarineq/matrix.hpp"
#include "cstarineq/scalar_function.hpp"

using namespace cstarineq;

namespace {

ComplexMatrix rebuild(const SpectralDecomposition& d) {
  ComplexMatrix scaled = d.eigenvectors;
  for (std::size_t j = 0; j < d.dim; ++j)
    for (std::size_t i = 0; i < d.dim; ++i) scaled(i, j) *= d.eigenvalues[j];
  return scaled * d.eigenvectors.adjoint();
}

}  // namespace

TEST_CASE("eigenvalues of a symmetric 2x2 with known spectrum") {
  ComplexMatrix m = ComplexMatrix::from_rows({{2.0, 1.0}, {1.0, 2.0}});
  SpectralDecomposition d = hermitian_eig(m);
  REQUIRE(d.eigenvalues.size() == 2);
  CHECK(d.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(max_abs_diff(rebuild(d), m) <= 1e-12);
}

TEST_CASE("eigenvalues of a complex hermitian matrix") {
  ComplexMatrix m = ComplexMatrix::from_rows({{Complex(2, 0), Complex(0, -1)},
                                              {Complex(0, 1), Complex(2, 0)}});
  SpectralDecomposition d = hermitian_eig(m);
  CHECK(d.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(max_abs_diff(rebuild(d), m) <= 1e-12);
}

TEST_CASE("rank-one matrix keeps one eigenvalue near zero") {
  // Exactly singular: second column is 0.6 times the first.
  ComplexMatrix m = ComplexMatrix::from_rows({{125.0, 75.0}, {75.0, 45.0}});
  SpectralDecomposition d = hermitian_eig(m);
  CHECK(std::abs(d.eigenvalues[0]) <= 1e-10);
  CHECK(d.eigenvalues[1] == doctest::Approx(170.0).epsilon(1e-12));
}

TEST_CASE("one by one matrices decompose trivially") {
  SpectralDecomposition d = hermitian_eig(ComplexMatrix::from_rows({{5.0}}));
  CHECK(d.eigenvalues[0] == doctest::Approx(5.0));
  CHECK(std::abs(d.eigenvectors(0, 0)) == doctest::Approx(1.0));
}

TEST_CASE("non-hermitian input is rejected") {
  ComplexMatrix m = ComplexMatrix::from_rows({{1.0, 2.0}, {0.0, 1.0}});
  CHECK_THROWS_AS(hermitian_eig(m), SymmetryError);
}

TEST_CASE("integer powers match repeated products") {
  ComplexMatrix m = ComplexMatrix::from_rows({{2.0, 1.0}, {1.0, 2.0}});
  ComplexMatrix cubed = matrix_power(m, 3.0);
  CHECK(cubed(0, 0).real() == doctest::Approx(14.0).epsilon(1e-12));
  CHECK(cubed(0, 1).real() == doctest::Approx(13.0).epsilon(1e-12));
  CHECK(cubed(1, 1).real() == doctest::Approx(14.0).epsilon(1e-12));
  CHECK(max_abs_diff(cubed, m * m * m) <= 1e-9);
}

TEST_CASE("square root of a diagonal matrix") {
  ComplexMatrix m = ComplexMatrix::diagonal({Complex(1, 0), Complex(4, 0)});
  ComplexMatrix root = matrix_power(m, 0.5);
  CHECK(root(0, 0).real() == doctest::Approx(1.0));
  CHECK(root(1, 1).real() == doctest::Approx(2.0));
  CHECK(std::abs(root(0, 1)) <= 1e-15);
}

TEST_CASE("fractional power of an exactly singular psd matrix") {
  // Rank one, so m^(1/4) = trace^(-3/4) * m up to the clamped null direction.
  ComplexMatrix m = ComplexMatrix::from_rows({{125.0, 75.0}, {75.0, 45.0}});
  ComplexMatrix quarter = matrix_power(m, 0.25);
  const double scale = std::pow(170.0, -0.75);
  CHECK(quarter(0, 0).real() == doctest::Approx(125.0 * scale).epsilon(1e-3));
  CHECK(quarter(0, 1).real() == doctest::Approx(75.0 * scale).epsilon(1e-3));
  CHECK(quarter(1, 1).real() == doctest::Approx(45.0 * scale).epsilon(1e-3));
}

TEST_CASE("power edge cases") {
  ComplexMatrix m = ComplexMatrix::from_rows({{2.0, 1.0}, {1.0, 2.0}});
  CHECK(max_abs_diff(matrix_power(m, 0.0), ComplexMatrix::identity(2)) <= 1e-15);

  ComplexMatrix indefinite = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  CHECK_THROWS_AS(matrix_power(indefinite, 0.5), NegativityError);
  CHECK(max_abs_diff(matrix_power(indefinite, 2.0), ComplexMatrix::identity(2)) <= 1e-12);
}

TEST_CASE("scalar calculus applies the function to the spectrum") {
  ComplexMatrix m = ComplexMatrix::diagonal({Complex(0, 0), Complex(std::log(2.0), 0)});
  ScalarFunction expf([](double u) { return std::exp(u); }, -1.0, 1.0, "exp");
  ComplexMatrix result = matrix_function(m, expf);
  CHECK(result(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(result(1, 1).real() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("spectrum outside the function domain is rejected") {
  ComplexMatrix m = ComplexMatrix::diagonal({Complex(5, 0)});
  ScalarFunction f([](double u) { return u; }, -1.0, 1.0, "id");
  CHECK_THROWS_AS(matrix_function(m, f), DomainError);
}

TEST_CASE("psd verdicts") {
  CHECK(psd_verdict(ComplexMatrix::from_rows({{2.0, 1.0}, {1.0, 2.0}})).is_psd);
  PsdVerdict bad = psd_verdict(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}));
  CHECK_FALSE(bad.is_psd);
  CHECK(bad.min_eigenvalue == doctest::Approx(-1.0).epsilon(1e-12));
  // A large explicit tolerance can accept the same matrix.
  CHECK(psd_verdict(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}), 2.0).is_psd);
}

TEST_CASE("operator norm handles rectangular input") {
  CHECK(operator_norm(ComplexMatrix::from_rows({{3.0}})) == doctest::Approx(3.0));
  CHECK(operator_norm(ComplexMatrix::from_rows({{0.0, 2.0}, {0.0, 0.0}})) ==
        doctest::Approx(2.0));
  ComplexMatrix column(2, 1, {Complex(3, 0), Complex(4, 0)});
  CHECK(operator_norm(column) == doctest::Approx(5.0));
}
