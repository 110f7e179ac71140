#pragma once

// Non-local energies of step functions and smooth functions on an interval.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "bvgamma/interaction.hpp"
#include "bvgamma/stepfn.hpp"

namespace bvgamma {

struct EnergyResult {
  double value = 0.0;  // +inf is a legitimate value
  Method method = Method::exact;
  double error_estimate = 0.0;

  bool infinite() const;
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Interval = std::pair<double, double>;

/// delta * int_I int_J (y - x)^-2 dy dx for I left of J.
EnergyResult rect_interaction(Interval I, Interval J, double delta);

struct HostilityKernel {
  std::function<double(double)> c;
  bool nonincreasing = true;
  /// Set when c(s) = coefficient / s^2; pair integrals are then closed form.
  std::optional<double> inverse_square;
  /// Whether int_0 c diverges, so that adjacent pieces give +inf.
  bool diverges_on_contact = true;

  static HostilityKernel inverse_square_kernel(double coefficient);
  static HostilityKernel general(std::function<double(double)> c, bool diverges_on_contact);
};

/// Checks that c is nonincreasing on a grid of (0, length).
bool check_nonincreasing(const HostilityKernel& c, double length, int samples = 1000);

/// Total k-hostility F_k(c, u) of an integer-valued step function.
EnergyResult hostility(const HostilityKernel& c, const StepFunction& u, int k);

/// Lambda_delta(phi, u, (a, b)) of a step function, summed over pairs of pieces.
EnergyResult lambda_step(const InteractionLaw& law, const StepFunction& u, double delta);

/// The strip functional of a nondecreasing lattice staircase, extended by
/// constants outside its breakpoints, over the transitions inside [c, d].
EnergyResult lambda_strip(const law::PiecewiseConstant& law, const StepFunction& u, Interval window, double delta);

struct SmoothFunction {
  std::function<double(double)> u;
  std::function<double(double)> du;
};

/// sin^2(pi x) on (0, 1): total variation 2.
SmoothFunction smooth_bump();

/// int_a^b |u'| by adaptive quadrature.
double total_variation(const SmoothFunction& f, double a, double b);

struct QuadratureOptions {
  double tol = 1e-6;
  std::uint64_t max_evaluations = 400'000'000;
};

/// Lambda_delta of a smooth function by nested adaptive quadrature.
/// Throws ConvergenceError when the evaluation budget runs out or the
/// error estimate stays above tol.
EnergyResult lambda_quad(const InteractionLaw& law, const SmoothFunction& f, Interval domain, double delta,
                         const QuadratureOptions& options = {});

/// G_d: exact for d <= 3, Monte-Carlo with standard error otherwise.
EnergyResult geometric_constant(int d, std::uint64_t samples = 1'000'000, std::uint64_t seed = 12345);

/// "inf" for +inf, shortest round-trip decimal otherwise.
std::string format_number(double x);

}  // namespace bvgamma
