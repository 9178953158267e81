#include <doctest.h>

#include "cstarineq/errors.hpp"
#include "cstarineq/hilbert_module.hpp"
#include "cstarineq/matrix.hpp"

using namespace cstarineq;

TEST_CASE("inner product is the adjoint pairing") {
  ModuleElement x{ComplexMatrix::from_rows({{1.0, 1.0}, {0.0, 1.0}})};
  ComplexMatrix gram = inner_product(x, x);
  CHECK(gram(0, 0) == Complex(1, 0));
  CHECK(gram(0, 1) == Complex(1, 0));
  CHECK(gram(1, 0) == Complex(1, 0));
  CHECK(gram(1, 1) == Complex(2, 0));
}

TEST_CASE("inner product requires matching shapes") {
  ModuleElement x{ComplexMatrix(2, 2)};
  ModuleElement y{ComplexMatrix(3, 2)};
  CHECK_THROWS_AS(inner_product(x, y), DimensionError);
}

TEST_CASE("operators act by left multiplication") {
  ModuleOperator t{ComplexMatrix::from_rows({{2.0, 1.0}, {1.0, 2.0}})};
  ModuleElement x{ComplexMatrix::from_rows({{1.0}, {0.0}})};
  ModuleElement tx = op_apply(t, x);
  CHECK(tx.value(0, 0) == Complex(2, 0));
  CHECK(tx.value(1, 0) == Complex(1, 0));
}

TEST_CASE("positive operators produce psd witnesses") {
  ModuleOperator t{ComplexMatrix::from_rows({{2.0, 1.0}, {1.0, 2.0}})};
  ModuleElement x{ComplexMatrix::from_rows({{1.0, 1.0}, {0.0, 1.0}})};
  PsdVerdict verdict = positivity_witness(t, x);
  CHECK(verdict.is_psd);
}

TEST_CASE("negative operators are rejected as witnesses") {
  ModuleOperator t{ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}})};
  ModuleElement x{ComplexMatrix::identity(2)};
  CHECK_THROWS_AS(positivity_witness(t, x), PreconditionError);
}
