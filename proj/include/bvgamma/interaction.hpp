#pragma once

// Interaction laws: the weight functions phi deciding how much a pair of
// points contributes to the non-local energy, together with their scale
// factors N(phi) = int_0^inf phi(t) / t^2 dt.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bvgamma/exact.hpp"

namespace bvgamma {

enum class Method { exact, series, quadrature, montecarlo };

std::string_view to_string(Method m);

class InteractionLaw;

namespace law {

/// phi_k: zero on [0, k], one on (k, inf).
struct Model {
  int k = 1;
};

/// sum_k lambda_k phi_k with lambda_1..lambda_m nonnegative, not all zero.
class PiecewiseConstant {
 public:
  explicit PiecewiseConstant(std::vector<Rational> weights);

  const std::vector<Rational>& weights() const { return weights_; }
  const std::vector<double>& weights_double() const { return approx_; }

  /// lambda_k for 1 <= k <= size(); zero beyond.
  double weight(int k) const;
  const Rational& exact_weight(int k) const;

  /// Largest k with lambda_k != 0.
  int max_index() const { return max_index_; }
  /// Smallest k with lambda_k != 0 (the support index mu).
  int min_support_index() const { return min_index_; }

  double operator()(double t) const;
  /// phi(j) for an integer argument, computed without floating comparisons.
  double at_level(long j) const;

  /// Sum of the weights, the supremum of the law.
  double total() const { return prefix_.back(); }

 private:
  std::vector<Rational> weights_;
  std::vector<double> approx_;
  std::vector<double> prefix_;  // prefix_[i] = lambda_1 + ... + lambda_i
  int max_index_ = 0;
  int min_index_ = 0;
};

/// Weights constant on dyadic packages: lambda_k = a_j for 2^(j-1) <= k < 2^j.
struct PackagedDyadic {
  std::vector<Rational> packages;
};

/// theta: 0 on [0,1], t - 1 on [1,2], 1 on [2, inf).
struct AffineTheta {};

enum class LeftFill { zero, geometric };

/// zeta: zeta(0) = 0, zeta(2^z) = f(z), affine on every [2^z, 2^(z+1)].
/// f is given on a contiguous range [z_min, z_max], continued as the
/// constant f(z_max) on the right and by the left fill on the left
/// (zero, or f(z) = f(z_min) * ratio^(z - z_min)).
class DyadicAffine {
 public:
  DyadicAffine(std::map<int, double> nodes, LeftFill left = LeftFill::zero, double left_ratio = 4.0);

  double f(int z) const;
  double operator()(double t) const;

  int z_min() const { return nodes_.begin()->first; }
  int z_max() const { return nodes_.rbegin()->first; }
  const std::map<int, double>& nodes() const { return nodes_; }
  LeftFill left_fill() const { return left_; }
  double left_ratio() const { return ratio_; }
  double sup() const { return nodes_.rbegin()->second; }

  /// sup over the validated range of f(-n) * 4^n; finite by construction.
  double decay_witness() const;

 private:
  std::map<int, double> nodes_;
  LeftFill left_;
  double ratio_;
};

struct Scaled {
  std::shared_ptr<const InteractionLaw> inner;
  double alpha = 1.0;
  double beta = 1.0;
};

struct SampleSource {
  enum class Rule { linear, step };
  std::vector<double> t;
  std::vector<double> values;
  Rule rule = Rule::linear;
};

struct PhiEpsSource {
  double eps = 0.0;
};

/// A law known through a closure. Breaks are the points where the law
/// may fail to be smooth; sup is an upper bound for its values
/// (+inf when unknown).
struct Tabulated {
  std::string name;
  std::function<double(double)> fn;
  std::vector<double> breaks;
  double sup = 0.0;
  std::variant<std::monostate, PhiEpsSource, SampleSource> source;
};

}  // namespace law

class InteractionLaw {
 public:
  using Variant = std::variant<law::Model, law::PiecewiseConstant, law::PackagedDyadic, law::AffineTheta,
                               law::DyadicAffine, law::Scaled, law::Tabulated>;

  static InteractionLaw model(int k);
  static InteractionLaw piecewise_constant(std::vector<Rational> weights);
  static InteractionLaw packaged_dyadic(std::vector<Rational> packages);
  static InteractionLaw affine_theta();
  static InteractionLaw dyadic_affine(law::DyadicAffine zeta);
  static InteractionLaw tabulated(law::Tabulated table);
  static InteractionLaw scaled(InteractionLaw inner, double alpha, double beta);
  static InteractionLaw from_samples(std::vector<double> t, std::vector<double> values,
                                     law::SampleSource::Rule rule);
  /// Closure-backed law; cannot be serialized.
  static InteractionLaw from_function(std::string name, std::function<double(double)> fn,
                                      std::vector<double> breaks, double sup);

  const Variant& variant() const { return v_; }

  double operator()(double t) const;

  /// An upper bound b with phi <= b everywhere (+inf if unknown).
  double sup() const;

  /// Points in (0, inf) where the law may be discontinuous or kinked.
  std::vector<double> breakpoints() const;

  /// Weights lambda_k when the law is Model, PiecewiseConstant or PackagedDyadic.
  std::optional<law::PiecewiseConstant> as_piecewise_constant() const;

  std::string describe() const;

 private:
  explicit InteractionLaw(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

double evaluate(const InteractionLaw& law, double t);

// -- admissibility -------------------------------------------------------

struct AdmissibilityReport {
  std::vector<double> grid;

  bool nonzero = false;

  bool monotone = true;
  std::optional<std::pair<double, double>> monotone_witness;  // t1 < t2 with phi(t1) > phi(t2)

  bool quadratic = true;
  double a = 0.0;  // smallest grid-certified a with phi(t) <= a t^2 on [0,1]
  std::optional<double> quadratic_witness;

  bool bounded = true;
  double b = 0.0;  // max of phi on the grid
  std::optional<double> bounded_witness;

  bool pass() const { return nonzero && monotone && quadratic && bounded; }
};

struct AdmissibilityOptions {
  /// Relative growth over the last octave of the grid above which the law
  /// is not certified bounded.
  double plateau_tolerance = 1e-4;
};

/// A sorted probe grid: 0, a fine uniform grid on [0, 4], and log-spaced
/// points from 1e-6 to 1e6.
std::vector<double> default_probe_grid();

AdmissibilityReport check_admissible(const InteractionLaw& law, const std::vector<double>& grid,
                                     const AdmissibilityOptions& options = {});

// -- scale factor --------------------------------------------------------

struct ScaleFactor {
  double value = 0.0;  // +inf when the integral diverges
  std::optional<Rational> exact;
  Method method = Method::exact;
  double error_estimate = 0.0;

  bool divergent() const;
};

ScaleFactor scale_factor(const InteractionLaw& law);

/// The series sum_z (f(z+1) - f(z)) 2^(-z), truncated once the partial sum
/// stabilizes below 1e-12.
double dyadic_series(const law::DyadicAffine& zeta);

/// N(phi) by adaptive quadrature, whatever the variant.
ScaleFactor scale_factor_quadrature(const InteractionLaw& law);

// -- constructions -------------------------------------------------------

/// t -> alpha * law(beta * t).
InteractionLaw rescale(const InteractionLaw& law, double alpha, double beta);

int min_support_index(const law::PiecewiseConstant& law);
int min_support_index(const InteractionLaw& law);

law::PiecewiseConstant expand_packaged(const law::PackagedDyadic& law);

/// Packages a_j when the weights are equal on every dyadic block
/// [2^(j-1), 2^j - 1]; nullopt otherwise.
std::optional<std::vector<Rational>> as_packaged(const law::PiecewiseConstant& law);

/// psi_m = phi_1 + ... + phi_(2^m - 1).
InteractionLaw psi(int m);
/// theta_m = phi_(2^(m-1)) + ... + phi_(2^m - 1).
InteractionLaw theta_package(int m);

/// Normalizing constant 1 / (1 + eps) of phi_eps.
double phi_eps_constant(double eps);
/// c * eps * t^2 on [0,1], c on (1, inf), with c such that N = 1.
InteractionLaw phi_eps(double eps);

}  // namespace bvgamma
