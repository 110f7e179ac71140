#include "bvgamma/energy.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "bvgamma/parallel.hpp"
#include "quadrature.hpp"

namespace bvgamma {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

EnergyResult infinite_result(Method m = Method::exact) { return {kInf, m, 0.0}; }

void require_positive(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw std::invalid_argument("delta must be positive and finite");
}

// int_I int_J c(y - x) dy dx for I = (a1, a2) left of J = (b1, b2), as
// int c(s) w(s) ds with w the overlap length of I and J - s.
double kernel_pair_integral(const HostilityKernel& c, Interval I, Interval J, double& error) {
  const auto [a1, a2] = I;
  const auto [b1, b2] = J;
  auto weight = [&](double s) { return std::max(0.0, std::min(a2, b2 - s) - std::max(a1, b1 - s)); };
  std::vector<double> nodes{b1 - a2, b1 - a1, b2 - a2, b2 - a1};
  std::sort(nodes.begin(), nodes.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const auto q = detail::integrate([&](double s) { return c.c(s) * weight(s); }, nodes[i], nodes[i + 1], 1e-12, 20);
    total += q.value;
    error += q.error;
  }
  return total;
}

}  // namespace

bool EnergyResult::infinite() const { return std::isinf(value); }

EnergyResult rect_interaction(Interval I, Interval J, double delta) {
  require_positive(delta);
  auto [a1, a2] = I;
  auto [b1, b2] = J;
  if (!(a2 > a1) || !(b2 > b1)) throw std::invalid_argument("intervals must have positive length");
  if (b1 < a1) {
    std::swap(a1, b1);
    std::swap(a2, b2);
  }
  if (a2 > b1) throw std::invalid_argument("intervals overlap");
  const double g = b1 - a2;
  if (g == 0.0) return infinite_result();
  const double p = a2 - a1;
  const double q = b2 - b1;
  // (g + p)(g + q) / (g (g + p + q)) = 1 + pq / (g (g + p + q))
  return {delta * std::log1p(p * q / (g * (g + p + q))), Method::exact, 0.0};
}

HostilityKernel HostilityKernel::inverse_square_kernel(double coefficient) {
  if (!(coefficient > 0.0)) throw std::invalid_argument("kernel coefficient must be positive");
  HostilityKernel k;
  k.c = [coefficient](double s) { return coefficient / (s * s); };
  k.inverse_square = coefficient;
  k.diverges_on_contact = true;
  return k;
}

HostilityKernel HostilityKernel::general(std::function<double(double)> c, bool diverges_on_contact) {
  HostilityKernel k;
  k.c = std::move(c);
  k.diverges_on_contact = diverges_on_contact;
  return k;
}

bool check_nonincreasing(const HostilityKernel& c, double length, int samples) {
  double prev = kInf;
  for (int i = 1; i <= samples; ++i) {
    const double v = c.c(length * i / samples);
    if (v > prev) return false;
    prev = v;
  }
  return true;
}

EnergyResult hostility(const HostilityKernel& c, const StepFunction& u, int k) {
  if (k < 1) throw std::invalid_argument("hostility index must be positive");
  const auto levels = lattice_levels(u, 1.0);
  const Method method = c.inverse_square ? Method::exact : Method::quadrature;
  double total = 0.0;
  double error = 0.0;
  const std::size_t n = u.pieces();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(levels[i] - levels[j]) <= k) continue;
      const Interval I{u.breakpoints()[i], u.breakpoints()[i + 1]};
      const Interval J{u.breakpoints()[j], u.breakpoints()[j + 1]};
      if (j == i + 1 && c.diverges_on_contact) return infinite_result(method);
      if (c.inverse_square)
        total += 2.0 * rect_interaction(I, J, *c.inverse_square).value;
      else
        total += 2.0 * kernel_pair_integral(c, I, J, error);
    }
  }
  return {total, method, 2.0 * error};
}

EnergyResult lambda_step(const InteractionLaw& law, const StepFunction& u, double delta) {
  require_positive(delta);
  // Integer levels make the threshold comparisons of step laws exact.
  std::optional<law::PiecewiseConstant> pc = law.as_piecewise_constant();
  std::vector<long> levels;
  if (pc) {
    try {
      levels = lattice_levels(u, delta);
    } catch (const std::invalid_argument&) {
      levels.clear();
    }
  }
  const std::size_t n = u.pieces();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double w = levels.empty() ? law(std::abs(u.values()[j] - u.values()[i]) / delta)
                                      : pc->at_level(levels[j] - levels[i]);
      if (w == 0.0) continue;
      if (j == i + 1) return infinite_result();
      const Interval I{u.breakpoints()[i], u.breakpoints()[i + 1]};
      const Interval J{u.breakpoints()[j], u.breakpoints()[j + 1]};
      total += 2.0 * w * rect_interaction(I, J, delta).value;
    }
  }
  return {total, Method::exact, 0.0};
}

EnergyResult lambda_strip(const law::PiecewiseConstant& law, const StepFunction& u, Interval window, double delta) {
  require_positive(delta);
  if (!(window.second > window.first)) throw std::invalid_argument("window must be a nonempty interval");
  const auto all = transitions(u, delta);
  std::vector<double> x;
  for (double t : all)
    if (t >= window.first && t <= window.second) x.push_back(t);
  // x[0..L-1] are x_alpha..x_beta; the term of index j uses x[j-1..j+k].
  double total = 0.0;
  for (int k = law.min_support_index(); k <= law.max_index(); ++k) {
    const double lambda = law.weight(k);
    if (lambda == 0.0) continue;
    double sum = 0.0;
    const long L = static_cast<long>(x.size());
    for (long j = 1; j + k < L; ++j) {
      const double left = x[j + k - 1] - x[j - 1];
      const double right = x[j + k] - x[j];
      if (left == 0.0 || right == 0.0) return infinite_result();
      sum += std::log1p((x[j + k] - x[j + k - 1]) / left) + std::log1p((x[j] - x[j - 1]) / right);
    }
    total += lambda * sum;
  }
  return {delta * total, Method::exact, 0.0};
}

SmoothFunction smooth_bump() {
  using std::numbers::pi;
  return {[](double x) {
            const double s = std::sin(pi * x);
            return s * s;
          },
          [](double x) { return pi * std::sin(2.0 * pi * x); }};
}

double total_variation(const SmoothFunction& f, double a, double b) {
  double total = 0.0;
  const int panels = 64;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + (b - a) * i / panels;
    const double hi = a + (b - a) * (i + 1) / panels;
    total += detail::integrate([&](double x) { return std::abs(f.du(x)); }, lo, hi, 1e-13).value;
  }
  return total;
}

namespace {

// Pieces of [a, top] on which x -> |u(x+s) - u(x)| is monotone.
std::vector<double> monotone_cuts(const SmoothFunction& f, double a, double top, double s) {
  auto D = [&](double x) { return f.u(x + s) - f.u(x); };
  auto dD = [&](double x) { return f.du(x + s) - f.du(x); };
  constexpr int kGrid = 512;
  std::vector<double> cuts{a};
  auto add_roots = [&](const auto& g) {
    double x0 = a, g0 = g(a);
    bool prev_zero = g0 == 0.0;
    for (int i = 1; i <= kGrid; ++i) {
      const double x1 = a + (top - a) * i / kGrid;
      const double g1 = g(x1);
      if (g1 == 0.0) {
        if (!prev_zero) cuts.push_back(x1);
        prev_zero = true;
        continue;  // keep the last nonzero sample as reference
      }
      prev_zero = false;
      if ((g0 < 0.0 && g1 > 0.0) || (g0 > 0.0 && g1 < 0.0)) cuts.push_back(detail::find_root(g, x0, x1));
      x0 = x1;
      g0 = g1;
    }
  };
  add_roots(dD);
  add_roots(D);
  cuts.push_back(top);
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

// int_lo^hi g via s = lo + (hi - lo) p(v), p(v) = 3v^2 - 2v^3, which
// smooths square-root behaviour at both ends.
template <class G>
detail::QuadValue integrate_smoothstep(G&& g, double lo, double hi, double tol, unsigned depth) {
  const double w = hi - lo;
  return detail::integrate(
      [&](double v) {
        const double p = v * v * (3.0 - 2.0 * v);
        return g(lo + w * p) * 6.0 * w * v * (1.0 - v);
      },
      0.0, 1.0, tol, depth);
}

}  // namespace

EnergyResult lambda_quad(const InteractionLaw& law, const SmoothFunction& f, Interval domain, double delta,
                         const QuadratureOptions& options) {
  require_positive(delta);
  const auto [a, b] = domain;
  if (!(b > a)) throw std::invalid_argument("domain must be a nonempty interval");
  const double length = b - a;

  double lip = 0.0;
  for (int i = 0; i <= 4000; ++i) lip = std::max(lip, std::abs(f.du(a + length * i / 4000.0)));
  lip *= 1.01;
  if (lip == 0.0) return {0.0, Method::quadrature, 0.0};

  std::vector<double> unit_grid;
  for (int i = 0; i <= 2000; ++i) unit_grid.push_back(i / 2000.0);
  const double quad_a = check_admissible(law, unit_grid).a;

  // Diagonal band s < h: phi(t) <= a t^2 bounds the integrand by a Lip^2 (b - a) / delta.
  double h = 0.0;
  double band_error = 0.0;
  if (quad_a == 0.0) {
    h = delta / lip;  // |u(x+s) - u(x)| / delta < 1 there, where phi vanishes
  } else {
    h = options.tol * delta / (20.0 * length * quad_a * lip * lip);
    band_error = 2.0 * h * quad_a * lip * lip * length / delta;
  }
  if (h >= length) return {0.0, Method::quadrature, band_error};

  std::atomic<std::uint64_t> evaluations{0};
  const std::uint64_t budget = options.max_evaluations;
  auto count_evals = [&](std::uint64_t n) {
    if (evaluations.fetch_add(n, std::memory_order_relaxed) + n > budget)
      throw ConvergenceError("lambda_quad: evaluation budget exhausted");
  };
  const std::vector<double> law_breaks = law.breakpoints();

  // max_x |u(x+s) - u(x)| / delta
  auto peak = [&](double s) {
    const auto cuts = monotone_cuts(f, a, b - s, s);
    count_evals(4 * 512);
    double m = 0.0;
    for (double x : cuts) m = std::max(m, std::abs(f.u(x + s) - f.u(x)));
    return m / delta;
  };

  // Outer nodes: dyadic shells from h, plus the s where the peak increment
  // or the increment at either end crosses a breakpoint of the law (the
  // x-integral has a square-root onset or a kink there).
  auto at_left = [&](double s) { return std::abs(f.u(a + s) - f.u(a)) / delta; };
  auto at_right = [&](double s) { return std::abs(f.u(b) - f.u(b - s)) / delta; };
  std::vector<double> nodes{h};
  while (nodes.back() * 2.0 < length) nodes.push_back(nodes.back() * 2.0);
  nodes.push_back(length);
  {
    constexpr int kScan = 1024;
    std::vector<double> grid;
    for (int i = 0; i <= kScan; ++i) grid.push_back(h * std::pow(length / h, static_cast<double>(i) / kScan));
    grid.back() = std::nextafter(length, a);  // the x-range is empty at s = b - a
    auto add_events = [&](const auto& event) {
      std::vector<double> vals;
      for (double s : grid) vals.push_back(event(s));
      for (double t : law_breaks)
        for (int i = 0; i < kScan; ++i)
          if ((vals[i] < t) != (vals[i + 1] < t))
            nodes.push_back(detail::find_root([&](double s) { return event(s) - t; }, grid[i], grid[i + 1]));
    };
    add_events(peak);
    add_events(at_left);
    add_events(at_right);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  }

  // For fixed s the x-integrand is phi(|D(x)| / delta), D(x) = u(x+s) - u(x),
  // split where |D| / delta crosses a breakpoint of the law.
  auto inner = [&](double s, double& error_density) {
    const double top = b - s;
    if (!(top > a)) return 0.0;
    auto absD = [&](double x) { return std::abs(f.u(x + s) - f.u(x)) / delta; };
    const auto cuts = monotone_cuts(f, a, top, s);
    count_evals(4 * 512);
    std::vector<double> pieces;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double lo = cuts[i], hi = cuts[i + 1];
      pieces.push_back(lo);
      const double t0 = absD(lo), t1 = absD(hi);
      for (double t : law_breaks)
        if (t > std::min(t0, t1) && t < std::max(t0, t1))
          pieces.push_back(detail::find_root([&](double x) { return absD(x) - t; }, lo, hi));
    }
    pieces.push_back(top);
    std::sort(pieces.begin(), pieces.end());

    double value = 0.0, error = 0.0;
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
      if (!(pieces[i + 1] > pieces[i])) continue;
      const auto q = detail::integrate([&](double x) { return law(absD(x)); }, pieces[i], pieces[i + 1], 1e-12, 10);
      count_evals(15);
      value += q.value;
      error += q.error;
    }
    error_density = std::max(error_density, 2.0 * delta / (s * s) * error);
    return value;
  };

  const std::size_t count = nodes.size() - 1;
  std::vector<double> values(count), errors(count);
  parallel_for(count, [&](std::size_t i) {
    double density = 0.0;
    const auto q = integrate_smoothstep([&](double s) { return 2.0 * delta / (s * s) * inner(s, density); }, nodes[i],
                                        nodes[i + 1], 1e-11, 12);
    values[i] = q.value;
    // inner errors bounded pointwise, integrated over the panel
    errors[i] = q.error + density * (nodes[i + 1] - nodes[i]);
  });

  double value = 0.0, error = band_error;
  for (std::size_t i = 0; i < count; ++i) {
    value += values[i];
    error += errors[i];
  }
  if (error > options.tol)
    throw ConvergenceError("lambda_quad: error estimate " + format_number(error) + " above tolerance " +
                           format_number(options.tol));
  return {value, Method::quadrature, error};
}

EnergyResult geometric_constant(int d, std::uint64_t samples, std::uint64_t seed) {
  using std::numbers::pi;
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  if (d == 1) return {2.0, Method::exact, 0.0};
  if (d == 2) return {4.0, Method::exact, 0.0};
  if (d == 3) return {2.0 * pi, Method::exact, 0.0};
  if (samples < 2) throw std::invalid_argument("Monte-Carlo needs at least two samples");

  // G_d = |S^(d-1)| E|<v, e_1>| for v uniform on the sphere.
  const double area = 2.0 * std::pow(pi, d / 2.0) / std::tgamma(d / 2.0);
  constexpr std::size_t kChunks = 64;
  std::vector<double> sums(kChunks), squares(kChunks);
  std::vector<std::uint64_t> counts(kChunks);
  parallel_for(kChunks, [&](std::size_t c) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(c)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;
    const std::uint64_t n = samples / kChunks + (c < samples % kChunks ? 1 : 0);
    double s = 0.0, s2 = 0.0;
    std::vector<double> v(static_cast<std::size_t>(d));
    for (std::uint64_t i = 0; i < n; ++i) {
      double norm2 = 0.0;
      for (auto& x : v) {
        x = normal(rng);
        norm2 += x * x;
      }
      const double y = std::abs(v[0]) / std::sqrt(norm2);
      s += y;
      s2 += y * y;
    }
    sums[c] = s;
    squares[c] = s2;
    counts[c] = n;
  });
  double s = 0.0, s2 = 0.0;
  std::uint64_t n = 0;
  for (std::size_t c = 0; c < kChunks; ++c) {
    s += sums[c];
    s2 += squares[c];
    n += counts[c];
  }
  const double mean = s / static_cast<double>(n);
  const double var = (s2 - static_cast<double>(n) * mean * mean) / static_cast<double>(n - 1);
  return {area * mean, Method::montecarlo, area * std::sqrt(std::max(var, 0.0) / static_cast<double>(n))};
}

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace bvgamma
