#include "bvgamma/minprob.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>
#include <ceres/ceres.h>

#include "bvgamma/parallel.hpp"

namespace bvgamma {

namespace {

// log(S_num^2 / (d1 d2)) with S_num = d1 + e1 = d2 + e2.
double log_ratio_term(double e1, double d1, double e2, double d2) { return std::log1p(e1 / d1) + std::log1p(e2 / d2); }

void check_tuple(const LengthTuple& l) {
  for (double x : l)
    if (!(x >= 0.0) || !std::isfinite(x)) throw std::invalid_argument("lengths must be finite and nonnegative");
}

double L_unchecked(const LengthTuple& l, int k, const std::vector<double>& S) {
  const int n = static_cast<int>(l.size());
  double sum = 0.0;
  for (int i = 0; i + k < n; ++i)
    sum += log_ratio_term(l[static_cast<std::size_t>(i + k)], S[static_cast<std::size_t>(i)], l[static_cast<std::size_t>(i)],
                          S[static_cast<std::size_t>(i + 1)]);
  return sum;
}

LengthTuple normalized(LengthTuple l) {
  const double total = std::accumulate(l.begin(), l.end(), 0.0);
  for (double& x : l) x /= total;
  return l;
}

}  // namespace

std::vector<double> window_sums(const LengthTuple& l, int k) {
  const int n = static_cast<int>(l.size());
  if (k < 1 || k > n) throw std::invalid_argument("window length must satisfy 1 <= k <= n");
  std::vector<double> S(static_cast<std::size_t>(n - k + 1));
  for (int i = 0; i + k <= n; ++i) {
    double s = 0.0;
    for (int h = 0; h < k; ++h) s += l[static_cast<std::size_t>(i + h)];
    S[static_cast<std::size_t>(i)] = s;
  }
  return S;
}

bool in_domain(const LengthTuple& l, int k) {
  if (k < 1) throw std::invalid_argument("window length must be positive");
  int zeros = 0;
  for (double x : l) {
    if (!(x >= 0.0)) return false;
    zeros = x == 0.0 ? zeros + 1 : 0;
    if (zeros >= k) return false;
  }
  return true;
}

double L(const LengthTuple& l, int k) {
  check_tuple(l);
  if (k < 1 || static_cast<int>(l.size()) < k + 1) throw std::invalid_argument("L_k needs n >= k + 1");
  if (!in_domain(l, k)) throw std::invalid_argument("tuple has k consecutive zero entries");
  return L_unchecked(l, k, window_sums(l, k));
}

std::vector<double> L_general_terms(const LengthTuple& l, int k, double p) {
  check_tuple(l);
  if (!(p > 1.0)) throw std::invalid_argument("L_{k,p} needs p > 1");
  if (k < 1 || static_cast<int>(l.size()) < k + 1) throw std::invalid_argument("L_{k,p} needs n >= k + 1");
  if (!in_domain(l, k)) throw std::invalid_argument("tuple has k consecutive zero entries");
  const auto S = window_sums(l, k);
  const auto T = window_sums(l, k + 1);
  std::vector<double> terms;
  // 1/D^(p-1) - 1/T^(p-1) = T^(1-p) expm1((p-1) log(T/D)), written to avoid cancellation.
  auto part = [p](double t, double d) { return std::pow(t, 1.0 - p) * std::expm1((p - 1.0) * std::log(t / d)) / (p - 1.0); };
  for (std::size_t i = 0; i < T.size(); ++i) terms.push_back(part(T[i], S[i]) + part(T[i], S[i + 1]));
  return terms;
}

double L_general(const LengthTuple& l, int k, double p) {
  const auto t = L_general_terms(l, k, p);
  return std::accumulate(t.begin(), t.end(), 0.0);
}

MinProblem::MinProblem(law::PiecewiseConstant law, int n) : law_(std::move(law)), n_(n) {
  if (n < law_.max_index() + 1) throw std::invalid_argument("the minimum problem needs n >= m + 1");
}

double MinProblem::objective(const LengthTuple& l) const {
  check_tuple(l);
  if (static_cast<int>(l.size()) != n_) throw std::invalid_argument("tuple length differs from n");
  if (!in_domain(l, mu())) throw std::invalid_argument("tuple outside the domain D_{n,mu}");
  double total = 0.0;
  for (int k = mu(); k <= m(); ++k) {
    const double w = law_.weight(k);
    if (w != 0.0) total += w * L_unchecked(l, k, window_sums(l, k));
  }
  return total;
}

double MinProblem::objective_and_gradient(const LengthTuple& l, std::vector<double>* gradient) const {
  const int n = n_;
  std::vector<double> prefix(static_cast<std::size_t>(n) + 1, 0.0);
  for (int i = 0; i < n; ++i) prefix[static_cast<std::size_t>(i) + 1] = prefix[static_cast<std::size_t>(i)] + l[static_cast<std::size_t>(i)];
  // The sums of gradients are assembled through a difference array.
  std::vector<double> diff(static_cast<std::size_t>(n) + 1, 0.0);
  auto window = [&](int i, int k) {
    double s = 0.0;
    for (int h = 0; h < k; ++h) s += l[static_cast<std::size_t>(i + h)];
    return s;
  };
  double value = 0.0;
  for (int k = mu(); k <= m(); ++k) {
    const double w = law_.weight(k);
    if (w == 0.0) continue;
    std::vector<double> S(static_cast<std::size_t>(n - k + 1));
    for (int i = 0; i + k <= n; ++i) S[static_cast<std::size_t>(i)] = window(i, k);
    for (int i = 0; i + k < n; ++i) {
      const double T = S[static_cast<std::size_t>(i)] + l[static_cast<std::size_t>(i + k)];
      const double A = S[static_cast<std::size_t>(i)];
      const double B = S[static_cast<std::size_t>(i + 1)];
      value += w * (2.0 * std::log(T) - std::log(A) - std::log(B));
      if (gradient) {
        diff[static_cast<std::size_t>(i)] += w * 2.0 / T;
        diff[static_cast<std::size_t>(i + k + 1)] -= w * 2.0 / T;
        diff[static_cast<std::size_t>(i)] -= w / A;
        diff[static_cast<std::size_t>(i + k)] += w / A;
        diff[static_cast<std::size_t>(i + 1)] -= w / B;
        diff[static_cast<std::size_t>(i + k + 1)] += w / B;
      }
    }
  }
  if (gradient) {
    gradient->assign(static_cast<std::size_t>(n), 0.0);
    double run = 0.0;
    for (int j = 0; j < n; ++j) {
      run += diff[static_cast<std::size_t>(j)];
      (*gradient)[static_cast<std::size_t>(j)] = run;
    }
  }
  return value;
}

double all_equal_value(const law::PiecewiseConstant& law, int n) {
  double total = 0.0;
  for (int k = law.min_support_index(); k <= law.max_index(); ++k) {
    const double w = law.weight(k);
    if (w != 0.0 && n > k) total += w * 2.0 * (n - k) * std::log1p(1.0 / k);
  }
  return total;
}

nlohmann::json MinResult::to_json(std::size_t max_traces) const {
  nlohmann::json t = nlohmann::json::array();
  for (std::size_t i = 0; i < traces.size() && i < max_traces; ++i) {
    const auto& s = traces[i];
    t.push_back({{"tag", s.tag}, {"initial", s.initial}, {"final", s.final}, {"iterations", s.iterations}, {"monotone", s.monotone}});
  }
  return {{"value", value},
          {"minimizer", minimizer},
          {"starts", starts},
          {"tag", tag},
          {"evaluations", evaluations},
          {"budget_exhausted", budget_exhausted},
          {"traces", t},
          {"traces_total", traces.size()}};
}

namespace {

struct Candidate {
  LengthTuple l;
  double value = std::numeric_limits<double>::infinity();
  std::string tag;
};

// P(exp(s)) restricted to the coordinates in `free`; the others stay fixed.
class LogObjective final : public ceres::FirstOrderFunction {
 public:
  LogObjective(const MinProblem& pb, LengthTuple base, std::vector<int> free, std::atomic<std::uint64_t>& evals)
      : pb_(pb), base_(std::move(base)), free_(std::move(free)), evals_(evals) {}

  bool Evaluate(const double* s, double* cost, double* gradient) const override {
    evals_.fetch_add(1, std::memory_order_relaxed);
    LengthTuple l = base_;
    for (std::size_t i = 0; i < free_.size(); ++i) l[static_cast<std::size_t>(free_[i])] = std::exp(s[i]);
    std::vector<double> g;
    const double v = pb_.objective_and_gradient(l, gradient ? &g : nullptr);
    if (!std::isfinite(v)) return false;
    *cost = v;
    if (gradient) {
      for (std::size_t i = 0; i < free_.size(); ++i) {
        const auto j = static_cast<std::size_t>(free_[i]);
        gradient[i] = g[j] * l[j];
        if (!std::isfinite(gradient[i])) return false;
      }
    }
    return true;
  }
  int NumParameters() const override { return static_cast<int>(free_.size()); }

 private:
  const MinProblem& pb_;
  LengthTuple base_;
  std::vector<int> free_;
  std::atomic<std::uint64_t>& evals_;
};

// L-BFGS over the positive coordinates of `start`, in log coordinates.
Candidate smooth_descent(const MinProblem& pb, const LengthTuple& start, const MinOptions& options,
                         std::atomic<std::uint64_t>& evals, StartTrace* trace) {
  std::vector<int> free;
  std::vector<double> s;
  const double scale = *std::max_element(start.begin(), start.end());
  LengthTuple base = start;
  for (std::size_t i = 0; i < start.size(); ++i) {
    base[i] = start[i] / scale;
    if (start[i] > 0.0) {
      free.push_back(static_cast<int>(i));
      s.push_back(std::log(base[i]));
    }
  }
  ceres::GradientProblem problem(new LogObjective(pb, base, free, evals));
  ceres::GradientProblemSolver::Options opts;
  opts.logging_type = ceres::SILENT;
  opts.max_num_iterations = options.max_iterations;
  opts.function_tolerance = 1e-15;
  opts.gradient_tolerance = 1e-13;
  opts.parameter_tolerance = 1e-14;
  ceres::GradientProblemSolver::Summary summary;
  ceres::Solve(opts, problem, s.data(), &summary);

  LengthTuple l = base;
  for (std::size_t i = 0; i < free.size(); ++i) l[static_cast<std::size_t>(free[i])] = std::exp(s[i]);
  if (trace) {
    trace->initial = summary.initial_cost;
    trace->final = summary.final_cost;
    trace->iterations = static_cast<int>(summary.iterations.size()) - 1;
    for (std::size_t i = 1; i < summary.iterations.size(); ++i)
      if (summary.iterations[i].cost > summary.iterations[i - 1].cost) trace->monotone = false;
  }
  Candidate c;
  c.l = normalized(l);
  if (in_domain(c.l, pb.mu())) c.value = pb.objective(c.l);
  return c;
}

// Golden-section style line minimizations along each positive coordinate.
void coordinate_polish(const MinProblem& pb, Candidate& c, int sweeps, std::atomic<std::uint64_t>& evals) {
  LengthTuple l = c.l;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (l[j] <= 0.0) continue;
      const double s0 = std::log(l[j]);
      auto f = [&](double s) {
        evals.fetch_add(1, std::memory_order_relaxed);
        LengthTuple t = l;
        t[j] = std::exp(s);
        const double v = pb.objective_and_gradient(t, nullptr);
        return std::isfinite(v) ? v : std::numeric_limits<double>::max();
      };
      boost::uintmax_t iters = 100;
      const auto r = boost::math::tools::brent_find_minima(f, s0 - 4.0, s0 + 4.0, 40, iters);
      if (r.second < f(s0)) l[j] = std::exp(r.first);
    }
  }
  LengthTuple n = normalized(l);
  if (in_domain(n, pb.mu())) {
    const double v = pb.objective(n);
    if (v < c.value) {
      c.l = std::move(n);
      c.value = v;
    }
  }
}

// Binary words of length p that are not powers of a shorter word.
bool primitive(unsigned word, int p) {
  for (int d = 1; d < p; ++d) {
    if (p % d) continue;
    bool periodic = true;
    for (int i = d; i < p && periodic; ++i) periodic = ((word >> i) & 1u) == ((word >> (i - d)) & 1u);
    if (periodic) return false;
  }
  return true;
}

}  // namespace

MinResult minimize(const MinProblem& pb, const MinOptions& options) {
  const int n = pb.n();
  std::atomic<std::uint64_t> evals{0};
  std::vector<Candidate> candidates;

  // Periodic 0/1 seeds, evaluated exactly (zeros included).
  const int max_p = std::min({pb.m() + 1, options.max_period, n});
  for (int p = 1; p <= max_p; ++p) {
    for (unsigned word = 1; word < (1u << p); ++word) {
      if (!primitive(word, p)) continue;
      LengthTuple l(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) l[static_cast<std::size_t>(i)] = (word >> (i % p)) & 1u ? 1.0 : 0.0;
      if (!in_domain(l, pb.mu())) continue;
      evals.fetch_add(1, std::memory_order_relaxed);
      Candidate c{normalized(l), 0.0, "period-" + std::to_string(p)};
      c.value = pb.objective(c.l);
      candidates.push_back(std::move(c));
    }
  }

  // Smooth multi-start in log coordinates.
  const auto starts = static_cast<std::size_t>(std::max(options.starts, 0));
  std::vector<Candidate> smooth(starts);
  std::vector<StartTrace> traces(starts);
  std::atomic<bool> exhausted{false};
  parallel_for(starts, [&](std::size_t i) {
    if (evals.load() >= options.evaluation_budget) {
      exhausted = true;
      return;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.5);
    LengthTuple l(static_cast<std::size_t>(n));
    for (double& x : l) x = std::exp(normal(rng));
    traces[i].tag = "smooth";
    smooth[i] = smooth_descent(pb, l, options, evals, &traces[i]);
    smooth[i].tag = "smooth";
  });
  for (auto& c : smooth)
    if (std::isfinite(c.value)) candidates.push_back(std::move(c));

  // Polish the best few on their supports.
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return candidates[x].value < candidates[y].value; });
  const std::size_t top = std::min(order.size(), static_cast<std::size_t>(std::max(options.polish_top, 0)));
  parallel_for(top, [&](std::size_t r) {
    if (evals.load() >= options.evaluation_budget) {
      exhausted = true;
      return;
    }
    Candidate& c = candidates[order[r]];
    Candidate refined = smooth_descent(pb, c.l, options, evals, nullptr);
    if (refined.value < c.value) {
      c.l = std::move(refined.l);
      c.value = refined.value;
    }
    coordinate_polish(pb, c, options.polish_sweeps, evals);
  });

  MinResult result;
  const Candidate* best = nullptr;
  for (const auto& c : candidates)
    if (!best || c.value < best->value - 1e-12 * std::abs(best->value)) best = &c;
  if (!best) throw std::runtime_error("no admissible candidate found");
  result.minimizer = best->l;
  result.value = pb.objective(result.minimizer);
  result.tag = best->tag;
  result.starts = static_cast<int>(starts);
  result.traces = std::move(traces);
  result.evaluations = evals.load();
  result.budget_exhausted = exhausted || result.evaluations > options.evaluation_budget;
  return result;
}

TelescopicReport verify_telescopic(const LengthTuple& l, int a, int b) {
  check_tuple(l);
  const int n = static_cast<int>(l.size());
  if (a < 1 || a > b || b > n - 1) throw std::invalid_argument("telescopic inequality needs 1 <= a <= b <= n-1");
  if (!in_domain(l, a)) throw std::invalid_argument("tuple outside the domain D_{n,a}");
  TelescopicReport r;
  for (int j = a; j <= b; ++j) r.lhs += L_unchecked(l, j, window_sums(l, j));
  // S_{i,b+1} = S_{i,a} + S_{i+a,b+1-a} = S_{i,b+1-a} + S_{i+b-a+1,a}
  const auto Sa = window_sums(l, a);
  const auto Sc = window_sums(l, b + 1 - a);
  for (int i = 0; i + b < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    const auto shift = static_cast<std::size_t>(b - a + 1);
    r.rhs += log_ratio_term(Sc[u + static_cast<std::size_t>(a)], Sa[u], Sc[u], Sa[u + shift]);
  }
  r.margin = r.lhs - r.rhs;
  return r;
}

double package_sum_bound(int n, int m) { return (n - std::ldexp(1.0, m) + 1.0) * 2.0 * std::numbers::ln2; }

double packaged_lower_bound(const std::vector<Rational>& packages, int n) {
  double total = 0.0;
  for (std::size_t j = 0; j < packages.size(); ++j)
    if (packages[j] > 0) total += to_double(packages[j]) * package_sum_bound(n, static_cast<int>(j) + 1);
  return total;
}

}  // namespace bvgamma
