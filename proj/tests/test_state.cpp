#include <doctest.h>

#include <cmath>

#include "cstarineq/errors.hpp"
#include "cstarineq/linalg.hpp"
#include "cstarineq/state.hpp"

using namespace cstarineq;

TEST_CASE("density matrices must be psd with unit trace") {
  CHECK_THROWS_AS(make_state(ComplexMatrix::diagonal({Complex(0.5, 0), Complex(0.6, 0)})),
                  ValidationError);
  CHECK_THROWS_AS(make_state(ComplexMatrix::diagonal({Complex(1.5, 0), Complex(-0.5, 0)})),
                  ValidationError);
  CHECK_THROWS_AS(make_state(ComplexMatrix::from_rows({{0.5, 0.2}, {0.0, 0.5}})),
                  ValidationError);
  State rho = make_state(ComplexMatrix::diagonal({Complex(0.25, 0), Complex(0.75, 0)}));
  CHECK(rho.dim == 2);
}

TEST_CASE("evaluation is the weighted trace") {
  State rho = make_state(ComplexMatrix::diagonal({Complex(0.5, 0), Complex(0.5, 0)}));
  ComplexMatrix a = ComplexMatrix::diagonal({Complex(1, 0), Complex(3, 0)});
  CHECK(eval_state(rho, a).real() == doctest::Approx(2.0));
  CHECK(eval_state(rho, a).imag() == doctest::Approx(0.0));
}

TEST_CASE("eigenvector state reaches the norm of a hermitian matrix") {
  ComplexMatrix a = ComplexMatrix::from_rows({{2.0, 1.0}, {1.0, 2.0}});
  State top = eigenvector_state(a);
  CHECK(std::abs(eval_state(top, a)) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("state sampling never exceeds the norm and the eigenvector state attains it") {
  ComplexMatrix a = ComplexMatrix::from_rows({{1.0, -2.0}, {-2.0, 1.0}});
  const double norm = operator_norm(a);
  const double sampled = norm_via_states(a, 50, 11);
  CHECK(sampled <= norm + 1e-9);
  CHECK(sampled == doctest::Approx(norm).epsilon(1e-9));
}

TEST_CASE("coordinate states pick out diagonal entries") {
  std::vector<State> pures = pure_states_diagonal(3);
  REQUIRE(pures.size() == 3);
  ComplexMatrix a = ComplexMatrix::diagonal({Complex(4, 0), Complex(5, 0), Complex(6, 0)});
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(eval_state(pures[k], a).real() == doctest::Approx(4.0 + static_cast<double>(k)));
  }
}

TEST_CASE("random states are reproducible and valid") {
  State first = random_state(3, 99);
  State second = random_state(3, 99);
  CHECK(max_abs_diff(first.density, second.density) == 0.0);
  CHECK(first.density.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(psd_verdict(first.density).is_psd);
}

TEST_CASE("diagonal algebra elements expose self-adjointness") {
  DiagonalAlgebraElement real({Complex(1, 0), Complex(2, 0)});
  CHECK(real.is_self_adjoint(1e-12));
  DiagonalAlgebraElement mixed({Complex(1, 0.5)});
  CHECK_FALSE(mixed.is_self_adjoint(1e-12));
}
