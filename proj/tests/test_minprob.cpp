#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bvgamma/minprob.hpp"
#include "oracles.hpp"

using namespace bvgamma;

namespace {
law::PiecewiseConstant pc(std::initializer_list<int> xs) {
  std::vector<Rational> w;
  for (int x : xs) w.emplace_back(x);
  return law::PiecewiseConstant(w);
}
LengthTuple random_tuple(std::mt19937_64& rng, int n, double zero_p = 0.0) {
  std::uniform_real_distribution<double> u(0.01, 3.0), coin(0, 1);
  LengthTuple l(n);
  for (auto& x : l) x = coin(rng) < zero_p ? 0.0 : u(rng);
  return l;
}
}  // namespace

TEST_CASE("window sums") {
  CHECK(window_sums({1, 1, 1}, 2) == std::vector<double>{2, 2});
  CHECK(window_sums({1, 0, 0, 1}, 3) == std::vector<double>{1, 1});
  CHECK_THROWS(window_sums({1, 1}, 3));
  CHECK_THROWS(window_sums({1, 1}, 0));
  std::mt19937_64 rng(1);
  for (int c = 0; c < 200; ++c) {
    const auto l = random_tuple(rng, 12);
    for (int k = 1; k < 12; ++k) {
      const auto a = window_sums(l, k), b = window_sums(l, k + 1);
      for (std::size_t i = 0; i < b.size(); ++i) CHECK(b[i] == doctest::Approx(a[i] + l[i + k]).epsilon(1e-14));
    }
  }
}

TEST_CASE("domain") {
  CHECK(in_domain({1, 0, 0, 1}, 3));
  CHECK_FALSE(in_domain({1, 0, 0, 1}, 2));
  CHECK(in_domain({1, 2, 3}, 1));
  std::mt19937_64 rng(2);
  std::bernoulli_distribution bit(0.6);
  for (int c = 0; c < 10000; ++c) {
    LengthTuple l(1 + c % 10);
    for (auto& x : l) x = bit(rng) ? 1.0 : 0.0;
    const int k = 1 + c % 4;
    CHECK(in_domain(l, k) == !oracle::has_zero_run(l, k));
  }
}

TEST_CASE("L_k") {
  CHECK(L({1, 1, 1}, 1) == doctest::Approx(2 * std::log(4.0)).epsilon(1e-15));
  CHECK_THROWS(L({1, 0, 1}, 1));
  CHECK_THROWS(L({1, 1}, 2));
  std::mt19937_64 rng(3);
  for (int c = 0; c < 300; ++c) {
    const auto l = random_tuple(rng, 3 + c % 14, 0.2);
    for (int k = 1; k + 1 <= static_cast<int>(l.size()); ++k) {
      if (!in_domain(l, k)) continue;
      CHECK(L(l, k) == doctest::Approx(oracle::L(l, k)).epsilon(1e-12));
      LengthTuple scaled = l;
      for (auto& x : scaled) x *= 7.3;
      CHECK(L(scaled, k) == doctest::Approx(L(l, k)).epsilon(1e-13));
    }
  }
  // the period-3 pattern against all-equal for k = 3
  LengthTuple pattern(12, 0.0), ones(12, 1.0);
  for (int i = 0; i < 12; i += 3) pattern[i] = 1;
  CHECK(L(pattern, 3) == doctest::Approx(oracle::L(pattern, 3)).epsilon(1e-14));
  CHECK(L(pattern, 3) == doctest::Approx(3 * std::log(4.0)).epsilon(1e-14));
  CHECK(L(ones, 3) == doctest::Approx(9 * std::log(16.0 / 9)).epsilon(1e-14));
}

TEST_CASE("L_k,p") {
  CHECK(L_general(LengthTuple(6, 1.0), 1, 2) == doctest::Approx(5).epsilon(1e-14));
  CHECK_THROWS(L_general({1, 1, 1}, 1, 1.0));
  std::mt19937_64 rng(4);
  for (int c = 0; c < 200; ++c) {
    const auto l = random_tuple(rng, 4 + c % 10);
    for (int k = 1; k < static_cast<int>(l.size()); ++k) {
      for (double p : {1.5, 2.0, 3.0})
        for (double term : L_general_terms(l, k, p)) CHECK(term >= 0);
      CHECK(L_general(l, k, 1 + 1e-6) == doctest::Approx(L(l, k)).epsilon(1e-4));
    }
  }
}

TEST_CASE("objective") {
  std::mt19937_64 rng(5);
  const MinProblem phi1(pc({1}), 9);
  const MinProblem psi2(pc({1, 1, 1}), 9);
  for (int c = 0; c < 50; ++c) {
    const auto l = random_tuple(rng, 9);
    CHECK(phi1.objective(l) == doctest::Approx(L(l, 1)).epsilon(1e-13));
    CHECK(psi2.objective(l) == doctest::Approx(L(l, 1) + L(l, 2) + L(l, 3)).epsilon(1e-13));
    LengthTuple s = l;
    for (auto& x : s) x *= 0.01;
    CHECK(psi2.objective(s) == doctest::Approx(psi2.objective(l)).epsilon(1e-13));
    // gradient against central differences
    std::vector<double> g;
    psi2.objective_and_gradient(l, &g);
    for (int i = 0; i < 9; ++i) {
      LengthTuple up = l, dn = l;
      const double h = 1e-6 * l[i];
      up[i] += h;
      dn[i] -= h;
      const double fd = (psi2.objective(up) - psi2.objective(dn)) / (2 * h);
      CHECK(g[i] == doctest::Approx(fd).epsilon(1e-5).scale(1e-6));
    }
  }
  CHECK(all_equal_value(pc({1, 1, 1}), 64) == doctest::Approx(oracle::all_equal({1, 1, 1}, 64)).epsilon(1e-14));
  CHECK(all_equal_value(pc({1, 1, 1}), 64) / 64 == doctest::Approx(4 * std::numbers::ln2).epsilon(0.05));
  CHECK_THROWS(MinProblem(pc({0, 0, 1}), 3));
}

TEST_CASE("minimize on the model law") {
  for (int n = 2; n <= 16; ++n) {
    const auto r = minimize(MinProblem(pc({1}), n));
    const double exact = (n - 1) * std::log(4.0);
    CHECK(r.value >= exact * (1 - 1e-12));
    CHECK(r.value - exact <= 1e-8 * exact);
    for (double x : r.minimizer) CHECK(x == doctest::Approx(1.0 / n).epsilon(1e-5));
  }
}

TEST_CASE("minimize finds the period-3 pattern") {
  const auto law = pc({0, 0, 1});
  const auto r = minimize(MinProblem(law, 12));
  CHECK(r.tag == "period-3");
  CHECK(r.value == doctest::Approx(3 * std::log(4.0)).epsilon(1e-10));
  CHECK(r.value < all_equal_value(law, 12));
  // rescaled seeds change nothing
  MinOptions o;
  o.seed = 17;
  CHECK(minimize(MinProblem(law, 12), o).value == doctest::Approx(r.value).epsilon(1e-10));
}

TEST_CASE("minimize on psi_2") {
  const auto law = pc({1, 1, 1});
  const int n = 32;
  const auto r = minimize(MinProblem(law, n));
  CHECK(r.value >= (n - 4 + 1) * 2 * 2 * std::numbers::ln2);
  CHECK(std::abs(r.value - n * 4 * std::numbers::ln2) <= 0.1 * n * 4 * std::numbers::ln2);
  CHECK(r.value <= all_equal_value(law, n) + 1e-9);
  for (const auto& t : r.traces) {
    CHECK(t.monotone);
    CHECK(t.final <= t.initial + 1e-12);
  }
  CHECK_FALSE(r.budget_exhausted);
  MinOptions tiny;
  tiny.evaluation_budget = 50;
  CHECK(minimize(MinProblem(law, n), tiny).budget_exhausted);
}

TEST_CASE("telescopic inequality") {
  std::mt19937_64 rng(6);
  for (int c = 0; c < 500; ++c) {
    const int n = 3 + c % 20;
    const auto l = random_tuple(rng, n);
    const int a = 1 + c % (n - 1);
    const int b = a + c % (n - a);
    const auto r = verify_telescopic(l, a, b);
    CHECK(r.margin >= -1e-10);
    double lhs = 0;
    for (int j = a; j <= b; ++j) lhs += oracle::L(l, j);
    CHECK(r.lhs == doctest::Approx(lhs).epsilon(1e-11));
    if (a == b) CHECK(r.margin == 0.0);
  }
}

TEST_CASE("package bounds") {
  std::mt19937_64 rng(7);
  for (int m = 1; m <= 3; ++m) {
    const int a = 1 << (m - 1), b = (1 << m) - 1;
    for (int c = 0; c < 100; ++c) {
      const int n = b + 1 + c % 12;
      const auto l = random_tuple(rng, n);
      double sum = 0;
      for (int j = a; j <= b; ++j) sum += L(l, j);
      CHECK(sum >= package_sum_bound(n, m) - 1e-10);
    }
  }
  CHECK(package_sum_bound(10, 2) == doctest::Approx(7 * 2 * std::numbers::ln2));
  // sandwich on random tuples for a packaged law
  const std::vector<Rational> packs{Rational(1), Rational(2)};
  const MinProblem pb(pc({1, 2, 2}), 20);
  for (int c = 0; c < 100; ++c) {
    const auto l = random_tuple(rng, 20);
    CHECK(pb.objective(l) >= packaged_lower_bound(packs, 20) - 1e-10);
  }
  CHECK(packaged_lower_bound(packs, 20) == doctest::Approx((20 - 1) * 2 * std::numbers::ln2 + 2 * (20 - 3) * 2 * std::numbers::ln2));
}

TEST_CASE("result json") {
  const auto r = minimize(MinProblem(pc({1}), 5));
  const auto j = r.to_json(2);
  CHECK(j["tag"] == r.tag);
  CHECK(j["minimizer"].size() == 5);
  CHECK(j["traces"].size() <= 2);
}
