#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bvgamma/stepfn.hpp"

using namespace bvgamma;

TEST_CASE("construction is validated") {
  CHECK_THROWS(StepFunction({0, 1}, {}));
  CHECK_THROWS(StepFunction({0, 1, 1}, {1, 2}));
  CHECK_THROWS(StepFunction({0, 1}, {1, 2}));
  const StepFunction u({0, 1, 3}, {2, 5});
  CHECK(u(0.5) == 2);
  CHECK(u(2.0) == 5);
}

TEST_CASE("truncate, segment, rearrange") {
  const StepFunction u({0, 1, 2, 3}, {-1, 5, 2});
  CHECK(truncate(u, 0, 3).values() == std::vector<double>{0, 3, 2});
  const StepFunction inside({0, 1, 2}, {0.5, 1.5});
  CHECK(truncate(inside, 0, 3).values() == inside.values());
  CHECK_THROWS(truncate(u, 3, 3));

  CHECK(segment(StepFunction({0, 1}, {2.7}), 1).values() == std::vector<double>{2});
  CHECK(segment(StepFunction({0, 1}, {-0.3}), 0.5).values() == std::vector<double>{-0.5});

  const auto r = rearrange(StepFunction({0, 1, 2, 3}, {3, 1, 2}));
  CHECK(r.values() == std::vector<double>{1, 2, 3});
  CHECK(r.breakpoints() == std::vector<double>{0, 1, 2, 3});
  const StepFunction mono({0, 0.5, 2}, {1, 4});
  CHECK(rearrange(mono).values() == mono.values());
  CHECK(rearrange(mono).breakpoints() == mono.breakpoints());

  // ties merge and the level measures are preserved
  const auto t = rearrange(StepFunction({0, 1, 3, 4, 4.5}, {2, 0, 2, 1}));
  CHECK(t.values() == std::vector<double>{0, 1, 2});
  CHECK(t.breakpoints() == std::vector<double>{0, 2, 2.5, 4.5});
}

TEST_CASE("rearrangement preserves distribution on random inputs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pieces(1, 15), val(0, 5);
  std::uniform_real_distribution<double> len(0.1, 2.0);
  for (int c = 0; c < 200; ++c) {
    const int p = pieces(rng);
    std::vector<double> x{0}, v;
    for (int i = 0; i < p; ++i) {
      x.push_back(x.back() + len(rng));
      v.push_back(val(rng));
    }
    const StepFunction u(x, v);
    const auto r = rearrange(u);
    CHECK(r.nondecreasing());
    CHECK(r.right() == doctest::Approx(u.right()).epsilon(1e-14));
    for (int level = 0; level <= 5; ++level) {
      double mu = 0, mr = 0;
      for (std::size_t i = 0; i < u.pieces(); ++i) mu += u.values()[i] == level ? u.length(i) : 0;
      for (std::size_t i = 0; i < r.pieces(); ++i) mr += r.values()[i] == level ? r.length(i) : 0;
      CHECK(mr == doctest::Approx(mu).epsilon(1e-12));
    }
    CHECK(total_variation(r) == doctest::Approx(oscillation(u)).epsilon(1e-14));
    CHECK(total_variation(r) <= total_variation(u) + 1e-12);
  }
}

TEST_CASE("oscillation and total variation") {
  CHECK(oscillation(StepFunction({0, 1}, {4})) == 0);
  CHECK(oscillation(StepFunction({0, 1, 2, 3, 4}, {0, 1, 0, 1})) == 1);
  CHECK(total_variation(StepFunction({0, 1, 2, 3}, {0, 1, 0})) == 2);
  const auto s = staircase({1, 1, 1, 1}, 0.25);
  CHECK(total_variation(s) == doctest::Approx(5 * 0.25));
}

TEST_CASE("gaps and staircases") {
  const double d = 0.5;
  const StepFunction u({-1, 0, 1, 2, 3, 4}, {0, d, 2 * d, 3 * d, 4 * d});
  CHECK(transitions(u, d) == std::vector<double>{0, 1, 2, 3});
  CHECK(gaps(u, d) == LengthTuple{1, 1, 1});

  const StepFunction jump({-1, 0, 1, 2}, {0, d, 3 * d});
  const auto g = gaps(jump, d);
  CHECK(g == LengthTuple{1, 0});

  const auto s = staircase({0.5, 0, 2}, d, 1.0);
  CHECK(gaps(s, d) == LengthTuple{0.5, 0, 2});
  CHECK(s.values().front() == 1.0);
  CHECK_THROWS(gaps(StepFunction({0, 1, 2}, {0, 0.3}), d));
  CHECK_THROWS(transitions(StepFunction({0, 1, 2}, {1, 0}), 1));
}

TEST_CASE("io") {
  const StepFunction u({0, 0.5, 2}, {1, -3});
  const auto back = step_function_from_json(to_json(u));
  CHECK(back.breakpoints() == u.breakpoints());
  CHECK(back.values() == u.values());
  const auto csv = step_function_from_csv("x,v\n0,1\n0.5,-3\n2,0\n");
  CHECK(csv.breakpoints() == u.breakpoints());
  CHECK(csv.values() == u.values());
  CHECK_THROWS(step_function_from_csv("x,v\n0,1\n"));
}
