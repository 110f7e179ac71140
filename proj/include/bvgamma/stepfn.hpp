#pragma once

// Step functions on an interval and the operators used to simplify them
// before estimating energies: truncation, vertical segmentation and the
// nondecreasing rearrangement.

#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace bvgamma {

/// n nonnegative step lengths.
using LengthTuple = std::vector<double>;

/// values[i] holds on (breakpoints[i], breakpoints[i+1]); point values at
/// breakpoints are irrelevant.
class StepFunction {
 public:
  StepFunction(std::vector<double> breakpoints, std::vector<double> values);

  const std::vector<double>& breakpoints() const { return x_; }
  const std::vector<double>& values() const { return v_; }
  std::size_t pieces() const { return v_.size(); }
  double left() const { return x_.front(); }
  double right() const { return x_.back(); }
  double length(std::size_t i) const { return x_[i + 1] - x_[i]; }

  /// Value of the piece containing x; at a breakpoint, the piece to the right.
  double operator()(double x) const;

  bool nondecreasing() const;

 private:
  std::vector<double> x_;
  std::vector<double> v_;
};

StepFunction canonicalize(const StepFunction& u);

/// T_{A,B}: values clamped to [A, B]. Rejects A >= B.
StepFunction truncate(const StepFunction& u, double A, double B);

/// S_delta: every value v becomes delta * floor(v / delta).
StepFunction segment(const StepFunction& u, double delta);

/// M: sorts the pieces by value on the same interval, merging ties.
StepFunction rearrange(const StepFunction& u);

double oscillation(const StepFunction& u);
double total_variation(const StepFunction& u);

/// (value, measure of its level set), sorted by value, equal values merged.
std::vector<std::pair<double, double>> level_measures(const StepFunction& u);

/// Integer levels v / delta; throws unless every value is on the lattice
/// (relative tolerance 1e-12).
std::vector<long> lattice_levels(const StepFunction& u, double delta);

/// Abscissae of the level transitions of a nondecreasing lattice-valued u.
/// A jump of j levels contributes j equal abscissae.
std::vector<double> transitions(const StepFunction& u, double delta);

/// Lengths between consecutive transitions; skipped levels give zeros.
LengthTuple gaps(const StepFunction& u, double delta);

/// Nondecreasing staircase whose first transition sits at 0 and whose
/// transitions are spaced by the given lengths. Flat tails of length
/// `tail` on both sides; starts from the lattice value `base`.
StepFunction staircase(const LengthTuple& lengths, double delta, double base = 0.0, double tail = 1.0);

nlohmann::json to_json(const StepFunction& u);
StepFunction step_function_from_json(const nlohmann::json& j);

/// Rows "x,v"; the value of the last row is ignored. A header line is
/// skipped if it does not parse as numbers.
StepFunction step_function_from_csv(std::string_view text);

}  // namespace bvgamma
