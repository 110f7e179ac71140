#pragma once

// The multi-variable minimum problems: window sums S_{i,k}, the log-ratio
// energies L_k, the weighted objective P_{n,phi} and its infimum I_n(phi).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bvgamma/interaction.hpp"
#include "bvgamma/stepfn.hpp"

namespace bvgamma {

/// S_{i,k} for i = 1..n-k+1 (returned 0-based). Rejects k < 1 or k > n.
std::vector<double> window_sums(const LengthTuple& l, int k);

/// True iff no k consecutive entries vanish (and none is negative).
bool in_domain(const LengthTuple& l, int k);

/// L_k(l) = sum_i log(S_{i,k+1}^2 / (S_{i,k} S_{i+1,k})), needs n >= k+1 and l in D_{n,k}.
double L(const LengthTuple& l, int k);

/// Summands of L_{k,p}; each is nonnegative.
std::vector<double> L_general_terms(const LengthTuple& l, int k, double p);
double L_general(const LengthTuple& l, int k, double p);

class MinProblem {
 public:
  MinProblem(law::PiecewiseConstant law, int n);

  int n() const { return n_; }
  int mu() const { return law_.min_support_index(); }
  int m() const { return law_.max_index(); }
  const law::PiecewiseConstant& law() const { return law_; }

  /// P_{n,phi}(l); rejects l outside D_{n,mu}.
  double objective(const LengthTuple& l) const;

  /// P in the form sum 2 log S_{i,k+1} - log S_{i,k} - log S_{i+1,k}, with
  /// the gradient with respect to l. Requires all window sums positive.
  double objective_and_gradient(const LengthTuple& l, std::vector<double>* gradient) const;

 private:
  law::PiecewiseConstant law_;
  int n_;
};

struct MinOptions {
  int starts = 64;
  std::uint64_t seed = 20240531;
  int max_iterations = 400;
  int max_period = 12;
  int polish_top = 8;
  int polish_sweeps = 3;
  std::uint64_t evaluation_budget = 200'000'000;
};

struct StartTrace {
  std::string tag;
  double initial = 0.0;
  double final = 0.0;
  int iterations = 0;
  bool monotone = true;
};

struct MinResult {
  double value = 0.0;
  LengthTuple minimizer;  // normalized to sum 1
  int starts = 0;
  std::string tag;  // "period-p" or "smooth"
  std::vector<StartTrace> traces;
  std::uint64_t evaluations = 0;
  bool budget_exhausted = false;

  nlohmann::json to_json(std::size_t max_traces = 16) const;
};

/// Best value found for I_n(phi); an upper bound with its certificate.
MinResult minimize(const MinProblem& problem, const MinOptions& options = {});

/// sum_k 2 (n - k) lambda_k log((k+1)/k): the objective at all-equal lengths.
double all_equal_value(const law::PiecewiseConstant& law, int n);

struct TelescopicReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
};

/// sum_{j=a}^{b} L_j minus the telescoped lower bound; needs a <= b <= n-1.
TelescopicReport verify_telescopic(const LengthTuple& l, int a, int b);

/// (n - 2^m + 1) 2 log 2, the bound on sum_{k=2^(m-1)}^{2^m-1} L_k.
double package_sum_bound(int n, int m);

/// sum_j a_j (n - 2^j + 1) 2 log 2 over packages with a_j > 0.
double packaged_lower_bound(const std::vector<Rational>& packages, int n);

}  // namespace bvgamma
