#include "bvgamma/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "bvgamma/bounds.hpp"
#include "bvgamma/energy.hpp"
#include "bvgamma/minprob.hpp"
#include "bvgamma/stepfn.hpp"

namespace bvgamma {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double margin_of(double lhs, double rhs) {
  if (std::isinf(rhs)) return std::isinf(lhs) ? 0.0 : -kInf;
  if (std::isinf(lhs)) return kInf;
  return lhs - rhs;
}

std::vector<double> random_breakpoints(std::mt19937_64& rng, std::size_t pieces) {
  std::exponential_distribution<double> len(1.0);
  std::vector<double> x{0.0};
  for (std::size_t i = 0; i < pieces; ++i) x.push_back(x.back() + 0.05 + len(rng));
  return x;
}

void record(SuiteResult& r, double margin, double tolerance, const nlohmann::json& witness_case) {
  r.min_margin = std::min(r.min_margin, margin);
  if (margin < -tolerance) {
    if (r.failures == 0) r.witness = witness_case;
    ++r.failures;
  }
}

}  // namespace

nlohmann::json SuiteResult::to_json() const {
  return {{"suite", suite}, {"count", count},       {"finite", finite},
          {"min_margin", min_margin}, {"failures", failures}, {"witness", witness}};
}

SuiteResult rearrangement_suite(std::size_t count, std::uint64_t seed, double tolerance) {
  SuiteResult r{"rearrange", count, 0, kInf, 0, nullptr};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pieces(1, 20), value(0, 6), kdist(1, 5);
  const auto kernel = HostilityKernel::inverse_square_kernel(1.0);
  for (std::size_t c = 0; c < count; ++c) {
    const auto n = static_cast<std::size_t>(pieces(rng));
    std::vector<double> v(n);
    for (auto& y : v) y = value(rng);
    const StepFunction u(random_breakpoints(rng, n), v);
    const int k = kdist(rng);
    const double lhs = hostility(kernel, u, k).value;
    const double rhs = hostility(kernel, rearrange(u), k).value;
    if (std::isfinite(lhs) && std::isfinite(rhs)) ++r.finite;
    record(r, margin_of(lhs, rhs), tolerance, {{"u", to_json(u)}, {"k", k}, {"F_u", lhs}, {"F_Mu", rhs}});
  }
  return r;
}

SuiteResult telescopic_suite(std::size_t count, std::uint64_t seed, double tolerance, int max_n) {
  SuiteResult r{"telescope", count, 0, kInf, 0, nullptr};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> ndist(2, max_n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::exponential_distribution<double> len(1.0);
  for (std::size_t c = 0; c < count; ++c) {
    const int n = ndist(rng);
    const int a = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const int b = c % 10 == 0 ? a : std::uniform_int_distribution<int>(a, n - 1)(rng);
    LengthTuple l(static_cast<std::size_t>(n));
    do {
      for (auto& x : l) x = unit(rng) < 0.25 ? 0.0 : std::exp(3.0 * (unit(rng) - 0.5)) * len(rng);
    } while (!in_domain(l, a));
    const auto t = verify_telescopic(l, a, b);
    ++r.finite;
    const nlohmann::json w{{"l", l}, {"a", a}, {"b", b}, {"lhs", t.lhs}, {"rhs", t.rhs}, {"margin", t.margin}};
    if (b == a && t.margin != 0.0) {
      if (r.failures == 0) r.witness = w;
      ++r.failures;
    }
    record(r, t.margin, tolerance, w);
  }
  return r;
}

SuiteResult domination_suite(int points, double tolerance) {
  SuiteResult r{"domination", 0, 0, kInf, 0, nullptr};
  for (int m = 2; m <= 8; ++m) {
    const auto d = domination_check(m, points, tolerance);
    r.count += static_cast<std::size_t>(points) + 7;
    r.finite += static_cast<std::size_t>(points) + 7;
    record(r, d.min_margin, tolerance, {{"m", m}, {"t", d.witness}, {"margin", d.min_margin}});
  }
  return r;
}

SuiteResult chain_suite(std::size_t count, std::uint64_t seed, double tolerance) {
  SuiteResult r{"chain", count, 0, kInf, 0, nullptr};
  const InteractionLaw laws[] = {InteractionLaw::model(1),
                                 InteractionLaw::piecewise_constant({Rational(1), Rational(1), Rational(1)}),
                                 InteractionLaw::piecewise_constant(expand_packaged(law::PackagedDyadic{{0, 0, 1}}).weights())};
  const char* names[] = {"phi1", "psi2", "theta3"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pieces(1, 20);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t c = 0; c < count; ++c) {
    const double delta = 0.2 + 1.3 * unit(rng);
    const auto n = static_cast<std::size_t>(pieces(rng));
    std::vector<double> v{4.0 * unit(rng) - 1.0};
    while (v.size() < n) v.push_back(v.back() + delta * (2.6 * unit(rng) - 1.3));
    const StepFunction u(random_breakpoints(rng, n), v);
    double A = 4.0 * unit(rng) - 1.5, B = 4.0 * unit(rng) - 1.5;
    if (A > B) std::swap(A, B);
    if (B - A < 1e-3) B = A + 1e-3;
    const StepFunction tu = truncate(u, A, B);
    const StepFunction stu = segment(tu, delta);
    const StepFunction mstu = rearrange(stu);
    for (std::size_t li = 0; li < 3; ++li) {
      const double e0 = lambda_step(laws[li], u, delta).value;
      const double e1 = lambda_step(laws[li], tu, delta).value;
      const double e2 = lambda_step(laws[li], stu, delta).value;
      const double e3 = lambda_step(laws[li], mstu, delta).value;
      if (std::isfinite(e0)) ++r.finite;
      const nlohmann::json w{{"law", names[li]}, {"delta", delta}, {"A", A}, {"B", B}, {"u", to_json(u)},
                             {"energies", {e0, e1, e2, e3}}};
      const double m = std::min({margin_of(e0, e1), margin_of(e1, e2), margin_of(e2, e3)});
      record(r, m, tolerance, w);
    }
  }
  return r;
}

SuiteResult strip_suite(std::size_t count, std::uint64_t seed, double tolerance) {
  SuiteResult r{"strip", count, 0, kInf, 0, nullptr};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::exponential_distribution<double> len(1.0);
  for (std::size_t c = 0; c < count; ++c) {
    const int k = 1 + static_cast<int>(c % 6);
    const int n = std::uniform_int_distribution<int>(k + 1, 30)(rng);
    const double delta = 0.1 + 1.9 * unit(rng);
    LengthTuple lengths(static_cast<std::size_t>(n));
    for (auto& x : lengths) x = unit(rng) < 0.15 ? 0.0 : len(rng);
    const double base = delta * std::floor(10.0 * unit(rng) - 5.0);
    const StepFunction u = staircase(lengths, delta, base, 1.0);
    std::vector<Rational> w(static_cast<std::size_t>(k), Rational(0));
    w.back() = 1;
    const law::PiecewiseConstant model(w);
    const double total = u.right() - u.left();
    const double strip = lambda_strip(model, u, {u.left() - total, u.right() + total}, delta).value;
    const LengthTuple g = gaps(u, delta);
    const nlohmann::json witness{{"k", k}, {"delta", delta}, {"gaps", g}, {"strip", strip}};
    if (!in_domain(g, k)) {
      if (!std::isinf(strip)) {
        if (r.failures == 0) r.witness = witness;
        ++r.failures;
      }
      continue;
    }
    ++r.finite;
    const double expected = delta * L(g, k);
    const double rel = std::abs(strip - expected) / std::max(std::abs(expected), 1e-300);
    record(r, -rel, tolerance, witness);
  }
  return r;
}

}  // namespace bvgamma
