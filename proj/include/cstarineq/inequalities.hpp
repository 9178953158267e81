#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cstarineq/hilbert_module.hpp"
#include "cstarineq/matrix.hpp"
#include "cstarineq/scalar_function.hpp"
#include "cstarineq/state.hpp"

namespace cstarineq {

enum class InequalityFamily {
  hilbert_mccarty,
  mond_pecaric_state,
  state_mccarty,
  norm_mccarty,
  loewner_mccarty,
  commutative_loewner,
};

std::string family_name(InequalityFamily family);

/// Outcome of one inequality check. Scalar families fill the *_value
/// fields; ordered (matrix) families fill the *_matrix fields plus the
/// verdict data. The difference is always oriented so that a
/// nonnegative value (PSD matrix) means the inequality holds.
struct InequalityReport {
  InequalityFamily family{};
  std::optional<double> exponent;
  std::string function_label;

  bool is_scalar = true;
  double lhs_value = 0.0;
  double rhs_value = 0.0;
  double difference_value = 0.0;

  ComplexMatrix lhs_matrix;
  ComplexMatrix rhs_matrix;
  ComplexMatrix difference_matrix;
  std::optional<double> min_eigenvalue;
  std::optional<double> difference_det;       // recorded for 2x2 differences
  std::vector<double> pure_state_values;      // commutative family only

  double tolerance = 0.0;
  bool holds = false;
  bool degenerate = false;  // the state annihilated <x, x>
};

/// Plain Hilbert-space power inequality for a PSD operator and a
/// nonzero vector: <Tx,x>^r vs |x|^{2(r-1)} <T^r x,x>, direction
/// flipping at r = 1.
InequalityReport check_hilbert_mccarty(const ComplexMatrix& op, const ComplexMatrix& x,
                                       double r, std::optional<double> tol = std::nullopt);

/// Jensen-type inequality through a state: f(rho<t x0,x0>) <=
/// rho<f(t) x0,x0> for convex f and x0 = x normalized to rho<x,x> = 1.
/// When rho annihilates <x,x> the report records a degenerate pass.
InequalityReport check_mond_pecaric_state(const ModuleOperator& t, const State& rho,
                                          const ModuleElement& x, const ScalarFunction& f,
                                          std::optional<double> tol = std::nullopt);

/// Power inequality for the scalars rho(<t x, x>) and rho(<t^r x, x>),
/// with the |x|^{2(r-1)} weight; direction flips at r = 1.
InequalityReport check_state_mccarty(const ModuleOperator& t, const State& rho,
                                     const ModuleElement& x, double r,
                                     std::optional<double> tol = std::nullopt);

/// Power inequality for the norms |<t x, x>| and |<t^r x, x>|.
InequalityReport check_norm_mccarty(const ModuleOperator& t, const ModuleElement& x, double r,
                                    std::optional<double> tol = std::nullopt);

/// Ordered version inside M_n(C) (module over itself): compares
/// (x* t x)^r against |x|^{2(r-1)} x* t^r x in the PSD order. This is
/// the conjectured strengthening that fails; the report's difference
/// matrix and minimal eigenvalue witness the failure when it does.
InequalityReport check_loewner_mccarty(const ModuleOperator& t, const ModuleElement& x,
                                       double r, std::optional<double> tol = std::nullopt);

/// Same ordered comparison in the diagonal (commutative) subalgebra,
/// where it does hold. Also records the difference evaluated at every
/// coordinate state.
InequalityReport check_commutative_loewner(const DiagonalAlgebraElement& t,
                                           const DiagonalAlgebraElement& x, double r,
                                           std::optional<double> tol = std::nullopt);

/// Reruns the two built-in 2x2 counterexample instances and asserts the
/// recorded values (throwing ReproductionError on any mismatch):
///   r = 3:   x = [[1,1],[0,1]], t = [[2,1],[1,2]]
///   r = 1/4: x = [[9,9],[1,-25]], t = [[125,75],[75,45]]
std::vector<InequalityReport> reproduce_paper_counterexamples();

enum class EntryDistribution { real_gaussian, complex_gaussian, integer_small };
enum class SearchFamily { loewner_r_greater_1, loewner_r_less_1 };

std::string distribution_name(EntryDistribution d);
std::string search_family_name(SearchFamily f);

struct SearchConfig {
  std::size_t dim = 2;
  double r_min = 2.0;
  double r_max = 3.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  EntryDistribution entry_distribution = EntryDistribution::integer_small;
};

struct SearchFinding {
  std::size_t index = 0;
  double r = 0.0;
  ComplexMatrix t;
  ComplexMatrix x;
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;
};

/// Seeded random search for ordered-version violations. Every candidate
/// derives its own generator from (seed, index), so the finding set does
/// not depend on evaluation order. A candidate is a finding when the
/// difference's minimal eigenvalue is below -10x the verdict tolerance.
/// Findings are sorted most negative first.
std::vector<SearchFinding> search_counterexamples(const SearchConfig& cfg, SearchFamily family);

}  // namespace cstarineq
