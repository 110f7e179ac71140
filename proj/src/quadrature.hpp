#pragma once

// Thin wrapper over Boost's adaptive Gauss-Kronrod rule.

#include <cmath>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

namespace bvgamma::detail {

struct QuadValue {
  double value = 0.0;
  double error = 0.0;
};

template <class F>
QuadValue integrate(F&& f, double a, double b, double tol, unsigned max_depth = 15) {
  if (!(b > a)) return {};
  double error = 0.0;
  const double v =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(std::forward<F>(f), a, b, max_depth, tol, &error);
  return {v, error};
}

/// Root of g in [a, b], given a sign change, to full double precision.
template <class G>
double find_root(G&& g, double a, double b) {
  const double ga = g(a), gb = g(b);
  if (ga == 0.0) return a;
  if (gb == 0.0) return b;
  boost::uintmax_t iterations = 200;
  const auto r = boost::math::tools::toms748_solve(g, a, b, ga, gb, boost::math::tools::eps_tolerance<double>(), iterations);
  return 0.5 * (r.first + r.second);
}

}  // namespace bvgamma::detail
