#include "cstarineq/scalar_function.hpp"

#include <cmath>
#include <utility>

#include "cstarineq/errors.hpp"

namespace cstarineq {

std::vector<double> uniform_grid(double lo, double hi, int count) {
  if (count < 2) throw PreconditionError("grid needs at least 2 points");
  std::vector<double> g(static_cast<std::size_t>(count));
  double step = (hi - lo) / static_cast<double>(count - 1);
  for (int k = 0; k < count; ++k) g[static_cast<std::size_t>(k)] = lo + step * k;
  g.back() = hi;
  return g;
}

ScalarFunction::ScalarFunction(std::function<double(double)> evaluator, double lower,
                               double upper, std::string label)
    : evaluator_(std::move(evaluator)), lower_(lower), upper_(upper), label_(std::move(label)) {
  if (!evaluator_) throw ValidationError("scalar function '" + label_ + "' has no evaluator");
  if (!(std::isfinite(lower_) && std::isfinite(upper_) && lower_ < upper_)) {
    throw ValidationError("scalar function '" + label_ + "' needs a finite interval with lower < upper");
  }
  for (double u : uniform_grid(lower_, upper_, kValidationGridPoints)) {
    if (!std::isfinite(evaluator_(u))) {
      throw ValidationError("scalar function '" + label_ + "' is not finite at u=" +
                            std::to_string(u));
    }
  }
}

double ScalarFunction::eval(double u) const { return eval_clamped(u, 0.0); }

double ScalarFunction::eval_clamped(double u, double tol) const {
  if (u < lower_) {
    if (u < lower_ - tol) {
      throw DomainError("'" + label_ + "' evaluated at u=" + std::to_string(u) +
                        " below domain start " + std::to_string(lower_));
    }
    u = lower_;
  } else if (u > upper_) {
    if (u > upper_ + tol) {
      throw DomainError("'" + label_ + "' evaluated at u=" + std::to_string(u) +
                        " above domain end " + std::to_string(upper_));
    }
    u = upper_;
  }
  double y = evaluator_(u);
  if (!std::isfinite(y)) {
    throw DomainError("'" + label_ + "' is non-finite at u=" + std::to_string(u));
  }
  return y;
}

double ScalarFunction::sup_abs() const {
  double m = 0.0;
  for (double u : uniform_grid(lower_, upper_, kValidationGridPoints)) {
    m = std::max(m, std::abs(evaluator_(u)));
  }
  return m;
}

namespace {

double parse_parameter(const std::string& label, const std::string& text) {
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw UsageError("");
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad numeric parameter '" + text + "' in function label '" + label + "'");
  }
}

}  // namespace

ScalarFunction make_catalog_function(const std::string& label, double lower, double upper) {
  std::string head = label;
  std::string param;
  if (auto colon = label.find(':'); colon != std::string::npos) {
    head = label.substr(0, colon);
    param = label.substr(colon + 1);
  }

  if (head == "id") {
    return {[](double u) { return u; }, lower, upper, label};
  }
  if (head == "exp") {
    return {[](double u) { return std::exp(u); }, lower, upper, label};
  }
  if (head == "pow") {
    double r = parse_parameter(label, param);
    if (r < 0.0) throw UsageError("pow exponent must be >= 0 in '" + label + "'");
    bool integral = (r == std::round(r));
    if (!integral && lower < 0.0) {
      throw UsageError("'" + label + "' needs a domain within [0, inf)");
    }
    return {[r](double u) { return std::pow(u, r); }, lower, upper, label};
  }
  if (head == "negpow") {
    double r = parse_parameter(label, param);
    if (!(r > 0.0 && r < 1.0)) throw UsageError("negpow exponent must be in (0,1) in '" + label + "'");
    if (lower < 0.0) throw UsageError("'" + label + "' needs a domain within [0, inf)");
    return {[r](double u) { return -std::pow(u, r); }, lower, upper, label};
  }
  if (head == "abs") {
    double c0 = parse_parameter(label, param);
    return {[c0](double u) { return std::abs(u - c0); }, lower, upper, label};
  }
  if (head == "hinge") {
    double c0 = parse_parameter(label, param);
    return {[c0](double u) { return std::max(0.0, u - c0); }, lower, upper, label};
  }
  throw UsageError("unknown function label '" + label + "'");
}

}  // namespace cstarineq
