#pragma once

// Randomized verification suites over the inequalities the library relies
// on. Margins are lhs - rhs; +inf - +inf counts as 0.

#include <cstdint>
#include <string>

#include <json.hpp>

namespace bvgamma {

constexpr std::uint64_t kDefaultSeed = 20240531;

struct SuiteResult {
  std::string suite;
  std::size_t count = 0;
  std::size_t finite = 0;  // cases where both sides were finite
  double min_margin = 0.0;
  std::size_t failures = 0;
  nlohmann::json witness;  // first failing case, or null

  bool pass() const { return failures == 0; }
  nlohmann::json to_json() const;
};

/// F_k(c, u) - F_k(c, Mu) for random integer arrangements with up to 20
/// pieces and values in {0..6}, k in {1..5}, c(s) = 1 / s^2.
SuiteResult rearrangement_suite(std::size_t count, std::uint64_t seed, double tolerance = 1e-10);

/// Telescopic margins for random (l, a, b) with n <= max_n; cases with
/// b = a must have margin exactly 0.
SuiteResult telescopic_suite(std::size_t count, std::uint64_t seed, double tolerance = 1e-10, int max_n = 24);

/// theta against its rescaled packages for 2 <= m <= 8 on `points` points.
SuiteResult domination_suite(int points = 10000, double tolerance = 1e-12);

/// Lambda(u) >= Lambda(Tu) >= Lambda(STu) >= Lambda(MSTu) for random step
/// functions and the laws phi_1, psi_2, theta_3.
SuiteResult chain_suite(std::size_t count, std::uint64_t seed, double tolerance = 1e-10);

/// Strip functional of random monotone staircases against delta L_k of
/// their gaps, k in {1..6}; margin is the relative difference (negated).
SuiteResult strip_suite(std::size_t count, std::uint64_t seed, double tolerance = 1e-12);

}  // namespace bvgamma
