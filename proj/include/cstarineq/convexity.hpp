#pragma once

#include "cstarineq/scalar_function.hpp"

namespace cstarineq {

enum class Side { left, right };

/// A line l(x) = slope * x + intercept that stays below f on the domain
/// grid (within slack) and comes within epsilon of f at x0.
struct SupportingLine {
  double slope = 0.0;
  double intercept = 0.0;
  double x0 = 0.0;
  double epsilon = 0.0;
  double min_margin = 0.0;  // min over the verification grid of f - l
  double touch_gap = 0.0;   // f(x0) - l(x0), always < epsilon
};

/// Midpoint convexity on grid pairs: f((u+v)/2) <= (f(u)+f(v))/2 plus
/// slack 1e-12 * (1 + |f(u)| + |f(v)|). All pairs are tested for grids
/// up to 201 points; larger grids are subsampled to ~201 nodes first.
bool convexity_check(const ScalarFunction& f, int grid_points = kDefaultConvexityGridPoints);

/// One-sided derivative estimated from difference quotients at offsets
/// 1e-2..1e-8 times the domain width, finished with one extrapolation
/// step. Returns +/-infinity when the quotients blow past 1e8 or keep
/// growing geometrically toward it; convex use cases make that a clean
/// trichotomy. Requires room on the requested side of x0.
double one_sided_derivative(const ScalarFunction& f, double x0, Side side);

/// Constructs a supporting line for a convex f at x0, including the
/// endpoint cases with infinite one-sided derivative, and verifies both
/// line conditions on a 10001-point grid before returning.
SupportingLine supporting_line(const ScalarFunction& f, double x0, double epsilon);

}  // namespace cstarineq
