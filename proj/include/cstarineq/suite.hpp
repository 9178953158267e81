#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cstarineq {

/// Outcome of one property check: `trials` instances were run and
/// `failures` of them violated the property. `worst` is the most
/// adverse margin seen (its meaning is check-specific and repeated in
/// `detail`).
struct SuiteCheck {
  std::string module;
  std::string name;
  bool pass = false;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double worst = 0.0;
  std::string detail;
};

inline constexpr std::uint64_t kDefaultSuiteSeed = 424242;

/// Eigensystem reconstruction, fractional-power round trips, polynomial
/// calculus against Horner products, Gram positivity, norm vs spectrum.
std::vector<SuiteCheck> run_linalg_suite(std::uint64_t seed = kDefaultSuiteSeed);

/// Cauchy-Schwarz through a state, positivity on PSD arguments,
/// conjugation under adjoints, multiplicativity of coordinate states on
/// the diagonal algebra.
std::vector<SuiteCheck> run_state_suite(std::uint64_t seed = kDefaultSuiteSeed);

/// Inner-product positivity, adjointability of Hermitian operators,
/// norm consistency, right-linearity over the algebra.
std::vector<SuiteCheck> run_module_suite(std::uint64_t seed = kDefaultSuiteSeed);

/// Pairing preservation, the induced-operator norm bound, positivity
/// transport, polynomial transport, and the three-identity transport
/// check over random shapes and functions.
std::vector<SuiteCheck> run_localization_suite(std::uint64_t seed = kDefaultSuiteSeed);

/// Supporting lines across the whole catalog, difference-quotient
/// monotonicity, and the one-sided derivative order at interior points.
std::vector<SuiteCheck> run_convexity_suite(std::uint64_t seed = kDefaultSuiteSeed);

/// Theorem families on random valid instances, the scalar and diagonal
/// reductions, equality at exponent 1, and norm domination.
std::vector<SuiteCheck> run_inequality_suite(std::uint64_t seed = kDefaultSuiteSeed);

/// All of the above, concatenated in a fixed order.
std::vector<SuiteCheck> run_full_suite(std::uint64_t seed = kDefaultSuiteSeed);

bool suite_passed(const std::vector<SuiteCheck>& checks);

/// The five theorem-family checks alone (1000 seeded instances each).
std::vector<SuiteCheck> run_theorem_family_checks(std::uint64_t seed = kDefaultSuiteSeed);

/// The scalar (1x1) and diagonal reduction checks alone (500 instances each).
std::vector<SuiteCheck> run_reduction_checks(std::uint64_t seed = kDefaultSuiteSeed);

/// Transport residual check over `instances` random localization
/// instances (shapes up to 3x3) with cubic, square-root, and exponential
/// calculus.
SuiteCheck gns_transport_check(std::uint64_t seed, std::size_t instances);

/// Supporting lines for every catalog function at 50 (x0, epsilon)
/// pairs per function, interior and endpoint alike.
SuiteCheck supporting_line_catalog_check(std::uint64_t seed);

}  // namespace cstarineq
