#pragma once

// Independent reference computations for the tests. Nothing here calls
// into the library.

#include <cmath>
#include <functional>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                          double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6 * (fm + 4 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15 * tol) return left + right + (left + right - whole) / 15;
  return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

/// Adaptive Simpson.
inline double simpson(const std::function<double(double)>& f, double a, double b, double tol = 1e-12, int depth = 40) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return simpson_rec(f, a, b, fa, fm, fb, (b - a) / 6 * (fa + 4 * fm + fb), tol, depth);
}

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  std::vector<double> x(n), w(n);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = z;
    w[i] = 2 / ((1 - z * z) * dp * dp);
  }
  return {x, w};
}

/// Tensor Gauss-Legendre on [a1,a2] x [b1,b2], each side split in `panels`.
inline double gauss_2d(const std::function<double(double, double)>& f, double a1, double a2, double b1, double b2,
                       int order = 20, int panels = 8) {
  const auto [x, w] = gauss_legendre(order);
  double s = 0;
  const double hx = (a2 - a1) / panels, hy = (b2 - b1) / panels;
  for (int pi = 0; pi < panels; ++pi)
    for (int pj = 0; pj < panels; ++pj)
      for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) {
          const double xx = a1 + hx * (pi + 0.5 * (x[i] + 1));
          const double yy = b1 + hy * (pj + 0.5 * (x[j] + 1));
          s += w[i] * w[j] * f(xx, yy);
        }
  return s * hx * hy / 4;
}

/// delta * int_I int_J (y - x)^-2 by quadrature, for separated intervals.
inline double rect(double a1, double a2, double b1, double b2, double delta) {
  return delta * gauss_2d([](double x, double y) { return 1.0 / ((y - x) * (y - x)); }, a1, a2, b1, b2);
}

inline double window(const std::vector<double>& l, int i, int k) {
  double s = 0;
  for (int h = 0; h < k; ++h) s += l[i + h];
  return s;
}

/// L_k straight from the ratio S_{i,k+1}^2 / (S_{i,k} S_{i+1,k}).
inline double L(const std::vector<double>& l, int k) {
  const int n = static_cast<int>(l.size());
  double s = 0;
  for (int i = 0; i + k < n; ++i) {
    const double big = window(l, i, k + 1);
    s += std::log(big * big / (window(l, i, k) * window(l, i + 1, k)));
  }
  return s;
}

inline bool has_zero_run(const std::vector<double>& l, int k) {
  int run = 0;
  for (double v : l) {
    run = v == 0 ? run + 1 : 0;
    if (run >= k) return true;
  }
  return false;
}

/// sum_k lambda_k sum_i log((k+1)^2 / k^2) at all-equal lengths.
inline double all_equal(const std::vector<double>& lambda, int n) {
  double s = 0;
  for (std::size_t k = 1; k <= lambda.size(); ++k)
    if (static_cast<int>(k) < n) s += lambda[k - 1] * (n - static_cast<int>(k)) * std::log(std::pow((k + 1.0) / k, 2));
  return s;
}

/// int over S^{d-1} of |<e, sigma>|, through polar angle integration.
inline double sphere_constant(int d) {
  if (d == 1) return 2.0;
  const double area = 2 * std::pow(std::numbers::pi, (d - 1) / 2.0) / std::tgamma((d - 1) / 2.0);
  const double inner = simpson([d](double t) { return std::abs(std::cos(t)) * std::pow(std::sin(t), d - 2); }, 0,
                               std::numbers::pi / 2, 1e-14) * 2;
  return area * inner;
}

/// int_0^inf phi(t)/t^2 with t = 1/s on the tail.
inline double scale_factor(const std::function<double(double)>& phi, double split, double tail_sup,
                           double tol = 1e-13) {
  const double head = simpson([&](double t) { return t == 0 ? 0.0 : phi(t) / (t * t); }, 0, split, tol);
  const double tail = simpson([&](double s) { return s == 0 ? tail_sup : phi(1 / s); }, 0, 1 / split, tol);
  return head + tail;
}

}  // namespace oracle
