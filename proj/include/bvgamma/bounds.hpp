#pragma once

// Lower bounds for shape factors K(phi) = (Gamma-liminf factor) / N(phi),
// each with the chain of identities and estimates it was assembled from.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bvgamma/interaction.hpp"
#include "bvgamma/minprob.hpp"

namespace bvgamma {

struct BoundStep {
  std::string statement;
  double constant = 0.0;
};

struct BoundReport {
  std::string law;
  double N = 0.0;
  std::optional<Rational> N_exact;
  double K_lower = 0.0;
  std::vector<BoundStep> chain;
  bool dimension_uniform = true;

  nlohmann::json to_json() const;
};

struct GammaFactor {
  double value = 0.0;
  std::optional<double> analytic;   // package bound, for packaged laws
  std::optional<double> empirical;  // optimizer proxy
  std::string basis;                // "analytic" or "empirical"
  std::vector<std::pair<int, double>> proxies;  // (n, I_n / (n - m) / 2)
};

/// Coefficient c with Gamma-liminf >= G_d c TV. Uses the package bound
/// when the law has dyadic packages and the optimizer proxy
/// min_n I_n / (2 (n - m)) over max(m+1, n_max/2) <= n <= n_max, whichever
/// is larger.
GammaFactor gamma_liminf_factor(const law::PiecewiseConstant& law, int n_max, const MinOptions& options = {});

/// K(psi_m) >= m log 2 / H_{2^m - 1}; H exact for m <= 12.
BoundReport psi_bound(int m);

struct DominationReport {
  int m = 0;
  double min_margin = 0.0;
  double witness = 0.0;  // t at the minimal margin
  bool pass = true;
};

/// theta(t) - theta_m((2^(m-1) - 1) t) / 2^(m-1) on `points` uniform points
/// of [0, 4] plus the case boundaries 1 and 2.
DominationReport domination_check(int m, int points = 10000, double tolerance = 1e-12);

struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// K(theta) = 1. Throws BoundError when a domination probe fails.
BoundReport theta_bound(int m_cap = 8, int points = 10000);

/// K(zeta) = 1. Throws BoundError on a representation mismatch (with the
/// failing probe) or when series and quadrature disagree beyond 1e-8.
BoundReport zeta_bound(const law::DyadicAffine& zeta);

struct CounterexampleReport {
  Rational c2;
  double N_psi = 0.0;
  double K_psi_lower = 0.0;
  double eps = 0.0;
  double N_phi_eps = 0.0;
  double external_limit = 0.0;  // claimed limit of K(phi_eps), not computed
  bool phi_eps_dominates = false;
  double min_gap = 0.0;
  bool strict_gap = false;

  nlohmann::json to_json() const;
};

CounterexampleReport counterexample_table(double eps = 0.01);

/// Dispatch on the law: packaged and piecewise constant laws through
/// gamma_liminf_factor, theta and zeta through their exact chains,
/// rescaled laws through their inner law.
BoundReport bound_for_law(const InteractionLaw& law, int n_max = 48, const MinOptions& options = {});

std::string format_table(const std::vector<BoundReport>& reports);

}  // namespace bvgamma
