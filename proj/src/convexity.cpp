#include "cstarineq/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "cstarineq/errors.hpp"

namespace cstarineq {

namespace {

constexpr double kDivergenceThreshold = 1e8;
constexpr double kDivergenceGrowthRatio = 1.5;
constexpr int kBracketGridPoints = 1001;
constexpr int kMaxBracketHalvings = 60;
constexpr int kMaxSecantShrinks = 50;

double infinity() { return std::numeric_limits<double>::infinity(); }

/// Conservative slope estimate: the plain secant over a short interval
/// on the requested side. For convex f a left secant never exceeds the
/// left derivative and a right secant never falls below the right one,
/// so lines built from it stay supporting outside the secant span.
/// `shrink` scales the interval down when the span itself misbehaves.
double secant_slope(const ScalarFunction& f, double x0, Side side, double shrink) {
  const double width = f.upper() - f.lower();
  const double room = side == Side::left ? x0 - f.lower() : f.upper() - x0;
  const double h = std::min(1e-6 * width, 0.5 * room) * shrink;
  if (!(h > 0.0) || x0 - h == x0 || x0 + h == x0) {
    throw NumericalError("secant interval collapsed at " + std::to_string(x0));
  }
  if (side == Side::left) return (f.eval(x0) - f.eval(x0 - h)) / h;
  return (f.eval(x0 + h) - f.eval(x0)) / h;
}

struct LineCheck {
  double min_margin;
  double touch_gap;
  double scale;
};

LineCheck check_line(const ScalarFunction& f, double slope, double intercept, double x0) {
  LineCheck out{infinity(), 0.0, 1.0};
  for (double u : uniform_grid(f.lower(), f.upper(), kValidationGridPoints)) {
    const double fu = f.eval(u);
    out.scale = std::max(out.scale, std::abs(fu));
    out.min_margin = std::min(out.min_margin, fu - (slope * u + intercept));
  }
  out.touch_gap = f.eval(x0) - (slope * x0 + intercept);
  return out;
}

/// Shrinks brackets [edge, edge + sign*delta] until f stays within
/// epsilon/2 of f(edge) on it, then returns the bracket grid minimizer,
/// which is a strictly interior touch point for the endpoint cases.
double bracket_minimizer(const ScalarFunction& f, double edge, double sign, double epsilon) {
  const double width = f.upper() - f.lower();
  const double f_edge = f.eval(edge);
  for (int k = 1; k <= kMaxBracketHalvings; ++k) {
    const double delta = width * std::ldexp(1.0, -k);
    const double lo = sign > 0 ? edge : edge - delta;
    const double hi = sign > 0 ? edge + delta : edge;
    double max_dev = 0.0;
    double best = edge;
    double best_value = f_edge;
    for (double u : uniform_grid(lo, hi, kBracketGridPoints)) {
      const double fu = f.eval(u);
      max_dev = std::max(max_dev, std::abs(fu - f_edge));
      if (fu < best_value) {
        best_value = fu;
        best = u;
      }
    }
    if (max_dev < 0.5 * epsilon && best != edge) return best;
  }
  throw NumericalError("no usable bracket near the domain endpoint at " + std::to_string(edge));
}

}  // namespace

bool convexity_check(const ScalarFunction& f, int grid_points) {
  if (grid_points < 2) throw PreconditionError("convexity check needs at least 2 grid points");
  std::vector<double> nodes = uniform_grid(f.lower(), f.upper(), grid_points);
  if (grid_points > kDefaultConvexityGridPoints) {
    std::vector<double> sampled;
    const int stride = (grid_points + kDefaultConvexityGridPoints - 1) / kDefaultConvexityGridPoints;
    for (std::size_t i = 0; i < nodes.size(); i += static_cast<std::size_t>(stride)) {
      sampled.push_back(nodes[i]);
    }
    if (sampled.back() != nodes.back()) sampled.push_back(nodes.back());
    nodes = std::move(sampled);
  }

  std::vector<double> values(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) values[i] = f.eval(nodes[i]);

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const double mid = f.eval(0.5 * (nodes[i] + nodes[j]));
      const double slack = 1e-12 * (1.0 + std::abs(values[i]) + std::abs(values[j]));
      if (mid > 0.5 * (values[i] + values[j]) + slack) return false;
    }
  }
  return true;
}

double one_sided_derivative(const ScalarFunction& f, double x0, Side side) {
  if (x0 < f.lower() || x0 > f.upper()) throw DomainError("derivative point outside the domain");
  const double width = f.upper() - f.lower();
  const double room = side == Side::left ? x0 - f.lower() : f.upper() - x0;
  if (!(room > 0.0)) {
    throw PreconditionError("no room inside the domain on the requested side");
  }

  const double f0 = f.eval(x0);
  const double base = std::min(1e-2 * width, 0.5 * room);
  std::vector<double> quotients;
  for (int k = 0; k <= 6; ++k) {
    const double h = base * std::pow(10.0, -k);
    const double q = side == Side::left ? (f0 - f.eval(x0 - h)) / h : (f.eval(x0 + h) - f0) / h;
    quotients.push_back(q);
  }

  const std::size_t last = quotients.size() - 1;
  const double q_last = quotients[last];
  const double q_prev = quotients[last - 1];
  const double q_prev2 = quotients[last - 2];
  if (std::abs(q_last) >= kDivergenceThreshold) {
    return q_last > 0 ? infinity() : -infinity();
  }
  const bool same_sign = (q_last > 0) == (q_prev > 0) && (q_prev > 0) == (q_prev2 > 0);
  const bool growing = std::abs(q_last) >= kDivergenceGrowthRatio * std::abs(q_prev) &&
                       std::abs(q_prev) >= kDivergenceGrowthRatio * std::abs(q_prev2);
  if (same_sign && growing && q_last != 0.0) {
    return q_last > 0 ? infinity() : -infinity();
  }
  return q_last + (q_last - q_prev) / 9.0;
}

SupportingLine supporting_line(const ScalarFunction& f, double x0, double epsilon) {
  if (!(epsilon > 0.0)) throw PreconditionError("epsilon must be positive");
  if (x0 < f.lower() || x0 > f.upper()) throw DomainError("x0 outside the domain");
  if (!convexity_check(f)) {
    throw PreconditionError("'" + f.label() + "' failed the convexity check");
  }

  // Endpoint cases with an infinite inward derivative anchor the line at
  // an interior near-minimizer instead of x0 itself.
  double anchor = x0;
  Side side = Side::left;
  if (x0 > f.lower() && x0 < f.upper()) {
    side = Side::left;
  } else if (x0 == f.lower()) {
    const double d_right = one_sided_derivative(f, x0, Side::right);
    if (std::isfinite(d_right)) {
      side = Side::right;
    } else if (d_right < 0) {
      anchor = bracket_minimizer(f, f.lower(), +1.0, epsilon);
      side = Side::left;
    } else {
      throw NumericalError("right derivative diverges upward at the left endpoint");
    }
  } else {
    const double d_left = one_sided_derivative(f, x0, Side::left);
    if (std::isfinite(d_left)) {
      side = Side::left;
    } else if (d_left > 0) {
      const double dip = bracket_minimizer(f, f.upper(), -1.0, epsilon);
      anchor = 0.5 * (dip + f.upper());
      side = Side::left;
    } else {
      throw NumericalError("left derivative diverges downward at the right endpoint");
    }
  }

  // The secant span may cut above f inside itself (the chord sits above a
  // convex function there), which shows up as a negative margin or an
  // oversized touch gap after the intercept drop. Shrinking the span
  // shrinks that defect quadratically, so retry until the line passes.
  for (int k = 0; k <= kMaxSecantShrinks; ++k) {
    double slope = 0.0;
    try {
      slope = secant_slope(f, anchor, side, std::ldexp(1.0, -k));
    } catch (const NumericalError&) {
      break;
    }
    double intercept = f.eval(anchor) - slope * anchor;
    LineCheck check = check_line(f, slope, intercept, x0);
    if (check.min_margin < -0.5e-9 * check.scale) {
      intercept += check.min_margin - 1e-12 * check.scale;
      check = check_line(f, slope, intercept, x0);
    }
    if (check.min_margin >= -1e-9 * check.scale && check.touch_gap < epsilon) {
      return SupportingLine{slope, intercept, x0, epsilon, check.min_margin, check.touch_gap};
    }
  }
  throw NumericalError("no supporting line within epsilon at " + std::to_string(x0));
}

}  // namespace cstarineq
