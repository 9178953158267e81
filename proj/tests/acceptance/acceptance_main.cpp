// Acceptance gate: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "cstarineq/convexity.hpp"
#include "cstarineq/errors.hpp"
#include "cstarineq/inequalities.hpp"
#include "cstarineq/linalg.hpp"
#include "cstarineq/localization.hpp"
#include "cstarineq/matrix.hpp"
#include "cstarineq/scalar_function.hpp"
#include "cstarineq/state.hpp"
#include "cstarineq/suite.hpp"

using namespace cstarineq;

namespace {

int g_failures = 0;

class Criterion {
 public:
  explicit Criterion(int number, std::string label, double time_limit_seconds)
      : number_(number),
        label_(std::move(label)),
        limit_(time_limit_seconds),
        start_(std::chrono::steady_clock::now()) {}

  void require(bool condition, const std::string& what) {
    if (!condition && reason_.empty()) reason_ = what;
  }

  void finish() {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (elapsed >= limit_ && reason_.empty()) {
      reason_ = "runtime " + std::to_string(elapsed) + " s exceeds " + std::to_string(limit_) +
                " s";
    }
    if (reason_.empty()) {
      std::printf("PASS %d: %s (%.3f s)\n", number_, label_.c_str(), elapsed);
    } else {
      std::printf("FAIL %d: %s: %s (%.3f s)\n", number_, label_.c_str(), reason_.c_str(),
                  elapsed);
      ++g_failures;
    }
  }

 private:
  int number_;
  std::string label_;
  std::string reason_;
  double limit_;
  std::chrono::steady_clock::time_point start_;
};

bool within(double value, double target, double tol) {
  return std::abs(value - target) <= tol;
}

bool matrix_within(const ComplexMatrix& m, const std::vector<std::vector<double>>& target,
                   double tol) {
  if (m.rows() != target.size()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.cols() != target[i].size()) return false;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - Complex(target[i][j], 0.0)) > tol) return false;
    }
  }
  return true;
}

void criterion_1(const std::vector<InequalityReport>& reports) {
  Criterion c(1, "counterexample reproduction at r = 3", 1.0);
  if (reports.size() != 2) {
    c.require(false, "expected exactly 2 built-in instances");
    c.finish();
    return;
  }
  const InequalityReport& report = reports[0];
  c.require(matrix_within(report.lhs_matrix, {{98, 183}, {183, 342}}, 1e-9),
            "A deviates from [[98,183],[183,342]]");
  c.require(matrix_within(report.rhs_matrix,
                          {{95.9574, 185.0608}, {185.0608, 370.1215}}, 2e-3),
            "B deviates from the recorded four-decimal values");
  c.require(matrix_within(report.difference_matrix,
                          {{-2.0426, 2.0608}, {2.0608, 28.1215}}, 2e-3),
            "C deviates from the recorded four-decimal values");
  c.require(!report.holds, "difference unexpectedly verdicts PSD");
  c.finish();
}

void criterion_2(const std::vector<InequalityReport>& reports) {
  Criterion c(2, "counterexample reproduction at r = 1/4", 1.0);
  const InequalityReport& report = reports[1];
  c.require(report.difference_det.has_value(), "difference determinant missing");
  if (report.difference_det) {
    c.require(within(*report.difference_det, -0.0108, 2e-3),
              "det(C) = " + std::to_string(*report.difference_det) +
                  " outside -0.0108 +- 2e-3");
  }
  c.require(!report.holds, "difference unexpectedly verdicts PSD");
  c.finish();
}

void criterion_3() {
  Criterion c(3, "theorem families hold on 1000 seeded instances each", 30.0);
  for (const SuiteCheck& check : run_theorem_family_checks(kDefaultSuiteSeed)) {
    c.require(check.trials == 1000, check.name + " ran " + std::to_string(check.trials) +
                                        " trials instead of 1000");
    c.require(check.failures == 0,
              check.name + ": " + std::to_string(check.failures) + " violations");
  }
  c.finish();
}

void criterion_4() {
  Criterion c(4, "operator transport through the state quotient", 20.0);
  SuiteCheck transport = gns_transport_check(kDefaultSuiteSeed, 200);
  c.require(transport.pass, "transport residuals: " + transport.detail);
  c.require(transport.trials == 200, "expected 200 transport instances");

  // Norm bound held instance by instance.
  bool norm_ok = false;
  for (const SuiteCheck& check : run_localization_suite(kDefaultSuiteSeed)) {
    if (check.name == "induced-norm-bound") norm_ok = check.pass;
  }
  c.require(norm_ok, "induced operator norm exceeded the bound");

  State faithful = make_state(
      ComplexMatrix::diagonal({Complex(0.5, 0), Complex(0.5, 0)}));
  c.require(build_localization(2, 2, faithful).dim_quotient == 4,
            "faithful 2x2 state should keep dimension 4");
  State offdiag = make_state(ComplexMatrix::from_rows({{0.6, 0.2}, {0.2, 0.4}}));
  c.require(build_localization(2, 2, offdiag).dim_quotient == 4,
            "strictly positive 2x2 state should keep dimension 4");
  State rank_one = make_state(ComplexMatrix::diagonal({Complex(1, 0), Complex(0, 0)}));
  c.require(build_localization(2, 2, rank_one).dim_quotient == 2,
            "rank-one 2x2 state should collapse to dimension 2");
  c.finish();
}

void criterion_5() {
  Criterion c(5, "supporting lines across the convex catalog", 10.0);
  SuiteCheck catalog = supporting_line_catalog_check(kDefaultSuiteSeed);
  c.require(catalog.pass, "catalog: " + catalog.detail);

  // Infinite one-sided derivatives at the endpoints, outside the catalog.
  try {
    ScalarFunction down([](double u) { return -std::sqrt(u); }, 0.0, 1.0, "-sqrt(u)");
    c.require(one_sided_derivative(down, 0.0, Side::right) ==
                  -std::numeric_limits<double>::infinity(),
              "-sqrt(u) should have right derivative -inf at 0");
    SupportingLine at_zero = supporting_line(down, 0.0, 1e-3);
    c.require(at_zero.touch_gap < 1e-3, "-sqrt(u) line misses the base point");

    ScalarFunction up([](double u) { return -std::sqrt(1.0 - u); }, 0.0, 1.0, "-sqrt(1-u)");
    c.require(one_sided_derivative(up, 1.0, Side::left) ==
                  std::numeric_limits<double>::infinity(),
              "-sqrt(1-u) should have left derivative +inf at 1");
    SupportingLine at_one = supporting_line(up, 1.0, 1e-3);
    c.require(at_one.touch_gap < 1e-3, "-sqrt(1-u) line misses the base point");
  } catch (const Error& e) {
    c.require(false, std::string("endpoint construction failed: ") + e.what());
  }
  c.finish();
}

void criterion_6() {
  Criterion c(6, "scalar and diagonal reductions agree", 30.0);
  for (const SuiteCheck& check : run_reduction_checks(kDefaultSuiteSeed)) {
    c.require(check.trials == 500, check.name + " ran " + std::to_string(check.trials) +
                                       " trials instead of 500");
    c.require(check.failures == 0,
              check.name + ": " + std::to_string(check.failures) + " mismatches");
  }
  c.finish();
}

// Frozen regression values for the pinned search run. kSearchPinned keeps
// the criterion reporting observed values until the first brute-force run
// locks them in.
constexpr bool kSearchPinned = true;
constexpr std::size_t kExpectedFindings = 85241;
constexpr std::size_t kTopIndex = 67934;
constexpr double kTopR = 3.4949470224188262;
constexpr double kTopMinEigenvalue = -10431636408.244633;
const std::vector<std::vector<double>> kTopT = {{34, -10}, {-10, 50}};
const std::vector<std::vector<double>> kTopX = {{5, -5}, {-3, 0}};

void criterion_7() {
  Criterion c(7, "pinned search run reproduces the frozen findings", 60.0);
  SearchConfig cfg;
  cfg.dim = 2;
  cfg.r_min = 2.5;
  cfg.r_max = 3.5;
  cfg.trials = 100000;
  cfg.seed = 1;
  cfg.entry_distribution = EntryDistribution::integer_small;
  std::vector<SearchFinding> findings =
      search_counterexamples(cfg, SearchFamily::loewner_r_greater_1);

  if (!kSearchPinned) {
    std::printf("  observed: %zu findings\n", findings.size());
    if (!findings.empty()) {
      const SearchFinding& top = findings.front();
      std::printf("  top: index=%zu r=%.17g min_eig=%.17g\n", top.index, top.r,
                  top.min_eigenvalue);
      std::printf("  top t = [[%.17g,%.17g],[%.17g,%.17g]]\n", top.t(0, 0).real(),
                  top.t(0, 1).real(), top.t(1, 0).real(), top.t(1, 1).real());
      std::printf("  top x = [[%.17g,%.17g],[%.17g,%.17g]]\n", top.x(0, 0).real(),
                  top.x(0, 1).real(), top.x(1, 0).real(), top.x(1, 1).real());
    }
    c.require(false, "regression values not yet frozen");
    c.finish();
    return;
  }

  c.require(findings.size() == kExpectedFindings,
            "finding count " + std::to_string(findings.size()) + " != " +
                std::to_string(kExpectedFindings));
  if (!findings.empty() && kExpectedFindings > 0) {
    const SearchFinding& top = findings.front();
    c.require(top.index == kTopIndex, "top finding index moved");
    c.require(within(top.r, kTopR, 1e-12), "top finding exponent moved");
    c.require(within(top.min_eigenvalue, kTopMinEigenvalue,
                     1e-6 * std::abs(kTopMinEigenvalue)),
              "top finding eigenvalue moved");
    c.require(matrix_within(top.t, kTopT, 1e-12), "top finding operator moved");
    c.require(matrix_within(top.x, kTopX, 1e-12), "top finding element moved");
  }
  c.finish();
}

}  // namespace

int main() {
  std::vector<InequalityReport> reproduced;
  try {
    reproduced = reproduce_paper_counterexamples();
  } catch (const Error& e) {
    std::printf("FAIL 1: counterexample reproduction threw: %s\n", e.what());
    std::printf("FAIL 2: counterexample reproduction threw: %s\n", e.what());
    g_failures += 2;
  }
  if (reproduced.size() == 2) {
    criterion_1(reproduced);
    criterion_2(reproduced);
  }
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", g_failures);
  return 1;
}
