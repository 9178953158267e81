#include <doctest.h>

#include <cmath>
#include <limits>

#include "cstarineq/convexity.hpp"
#include "cstarineq/errors.hpp"
#include "cstarineq/scalar_function.hpp"

using namespace cstarineq;

TEST_CASE("catalog labels build the advertised functions") {
  ScalarFunction square = make_catalog_function("pow:2", 0.0, 2.0);
  CHECK(square.eval(1.5) == doctest::Approx(2.25));
  ScalarFunction neg_root = make_catalog_function("negpow:0.5", 0.0, 4.0);
  CHECK(neg_root.eval(4.0) == doctest::Approx(-2.0));
  ScalarFunction hinge = make_catalog_function("hinge:1", 0.0, 3.0);
  CHECK(hinge.eval(0.5) == doctest::Approx(0.0));
  CHECK(hinge.eval(2.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(make_catalog_function("sin", 0.0, 1.0), UsageError);
  // Fractional powers need a nonnegative domain.
  CHECK_THROWS_AS(make_catalog_function("pow:1.5", -1.0, 1.0), UsageError);
}

TEST_CASE("convexity check accepts the catalog and rejects a concave function") {
  CHECK(convexity_check(make_catalog_function("pow:2", 0.0, 2.0)));
  CHECK(convexity_check(make_catalog_function("negpow:0.5", 0.0, 2.0)));
  CHECK(convexity_check(make_catalog_function("abs:1", 0.0, 2.0)));
  ScalarFunction concave([](double u) { return -u * u; }, 0.0, 1.0, "concave");
  CHECK_FALSE(convexity_check(concave));
}

TEST_CASE("one-sided derivatives agree where the function is smooth") {
  ScalarFunction square = make_catalog_function("pow:2", 0.0, 2.0);
  const double left = one_sided_derivative(square, 1.0, Side::left);
  const double right = one_sided_derivative(square, 1.0, Side::right);
  CHECK(left == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(right == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(left <= right + 1e-6);
}

TEST_CASE("kinks split the one-sided derivatives") {
  ScalarFunction kink = make_catalog_function("abs:1", 0.0, 2.0);
  CHECK(one_sided_derivative(kink, 1.0, Side::left) == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(one_sided_derivative(kink, 1.0, Side::right) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("infinite slope at the boundary is reported as such") {
  ScalarFunction neg_root = make_catalog_function("negpow:0.5", 0.0, 1.0);
  CHECK(one_sided_derivative(neg_root, 0.0, Side::right) ==
        -std::numeric_limits<double>::infinity());
}

TEST_CASE("supporting line under a smooth point") {
  ScalarFunction square = make_catalog_function("pow:2", 0.0, 2.0);
  SupportingLine line = supporting_line(square, 1.0, 1e-4);
  CHECK(line.min_margin >= 0.0);
  CHECK(line.touch_gap >= 0.0);
  CHECK(line.touch_gap < 1e-4);
  CHECK(line.slope == doctest::Approx(2.0).epsilon(1e-2));
}

TEST_CASE("supporting line at a kink stays inside the subdifferential") {
  ScalarFunction kink = make_catalog_function("abs:1", 0.0, 2.0);
  SupportingLine line = supporting_line(kink, 1.0, 1e-5);
  CHECK(line.min_margin >= 0.0);
  CHECK(line.touch_gap < 1e-5);
  CHECK(line.slope >= -1.0 - 1e-9);
  CHECK(line.slope <= 1.0 + 1e-9);
}

TEST_CASE("supporting line survives an infinite right derivative") {
  // The slope toward the interior blows down to -inf at the left endpoint.
  ScalarFunction neg_root = make_catalog_function("negpow:0.5", 0.0, 1.0);
  SupportingLine line = supporting_line(neg_root, 0.0, 1e-3);
  CHECK(line.min_margin >= 0.0);
  CHECK(line.touch_gap < 1e-3);
}

TEST_CASE("base points outside the domain are rejected") {
  ScalarFunction square = make_catalog_function("pow:2", 0.0, 2.0);
  CHECK_THROWS_AS(supporting_line(square, 3.0, 1e-4), DomainError);
  CHECK_THROWS_AS(supporting_line(square, 1.0, 0.0), PreconditionError);
}
