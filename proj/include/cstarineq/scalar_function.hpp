#pragma once

#include <functional>
#include <string>
#include <vector>

namespace cstarineq {

inline constexpr int kValidationGridPoints = 10001;
inline constexpr int kDefaultConvexityGridPoints = 201;

/// Uniform grid of `count` points covering [lo, hi], endpoints included.
std::vector<double> uniform_grid(double lo, double hi, int count);

/// A real function of one variable together with the closed interval it
/// lives on. Construction checks that the evaluator is finite on a
/// 10001-point grid of the interval.
class ScalarFunction {
 public:
  ScalarFunction(std::function<double(double)> evaluator, double lower, double upper,
                 std::string label);

  double lower() const { return lower_; }
  double upper() const { return upper_; }
  const std::string& label() const { return label_; }

  /// Evaluate at a point of the domain. Throws DomainError outside the
  /// domain or when the evaluator returns a non-finite value.
  double eval(double u) const;

  /// Evaluate, pulling points within `tol` of the domain back onto the
  /// nearest endpoint first. Points farther outside raise DomainError.
  double eval_clamped(double u, double tol) const;

  /// Largest |f| over the validation grid.
  double sup_abs() const;

 private:
  std::function<double(double)> evaluator_;
  double lower_, upper_;
  std::string label_;
};

/// Builds a function from the catalog by label:
///   "id"        u
///   "pow:R"     u^R          (R >= 0; fractional R requires lower >= 0)
///   "negpow:R"  -u^R         (0 < R < 1; requires lower >= 0)
///   "exp"       e^u
///   "abs:C"     |u - C|
///   "hinge:C"   max(0, u - C)
/// Unknown labels or invalid parameters raise UsageError.
ScalarFunction make_catalog_function(const std::string& label, double lower, double upper);

}  // namespace cstarineq
