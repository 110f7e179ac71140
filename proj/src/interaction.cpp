#include "bvgamma/interaction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "quadrature.hpp"

namespace bvgamma {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double theta_value(double t) {
  if (t <= 1.0) return 0.0;
  if (t <= 2.0) return t - 1.0;
  return 1.0;
}

std::string join_rationals(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::exact:
      return "exact";
    case Method::series:
      return "series";
    case Method::quadrature:
      return "quadrature";
    case Method::montecarlo:
      return "montecarlo";
  }
  return "unknown";
}

namespace law {

PiecewiseConstant::PiecewiseConstant(std::vector<Rational> weights) : weights_(std::move(weights)) {
  approx_.reserve(weights_.size());
  prefix_.reserve(weights_.size() + 1);
  prefix_.push_back(0.0);
  // Prefix sums in long double so that at_level() of long lists stays accurate.
  long double running = 0.0L;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 0) throw std::invalid_argument("interaction weights must be nonnegative");
    const double w = to_double(weights_[i]);
    approx_.push_back(w);
    running += w;
    prefix_.push_back(static_cast<double>(running));
    if (weights_[i] != 0) {
      if (min_index_ == 0) min_index_ = static_cast<int>(i) + 1;
      max_index_ = static_cast<int>(i) + 1;
    }
  }
  if (max_index_ == 0) throw std::invalid_argument("interaction law must not vanish identically");
}

double PiecewiseConstant::weight(int k) const {
  if (k < 1 || k > static_cast<int>(approx_.size())) return 0.0;
  return approx_[static_cast<std::size_t>(k - 1)];
}

const Rational& PiecewiseConstant::exact_weight(int k) const {
  static const Rational zero = 0;
  if (k < 1 || k > static_cast<int>(weights_.size())) return zero;
  return weights_[static_cast<std::size_t>(k - 1)];
}

double PiecewiseConstant::operator()(double t) const {
  if (!(t > 1.0)) return 0.0;
  // phi_k(t) = 1 iff k < t, i.e. k <= ceil(t) - 1.
  const double c = std::ceil(t) - 1.0;
  if (c >= static_cast<double>(max_index_)) return prefix_[static_cast<std::size_t>(max_index_)];
  return prefix_[static_cast<std::size_t>(c)];
}

double PiecewiseConstant::at_level(long j) const {
  if (j < 0) j = -j;
  if (j <= 1) return 0.0;
  const long idx = std::min<long>(j - 1, max_index_);
  return prefix_[static_cast<std::size_t>(idx)];
}

DyadicAffine::DyadicAffine(std::map<int, double> nodes, LeftFill left, double left_ratio)
    : nodes_(std::move(nodes)), left_(left), ratio_(left_ratio) {
  if (nodes_.empty()) throw std::invalid_argument("dyadic-affine law needs at least one node");
  int expected = nodes_.begin()->first;
  double prev = 0.0;
  bool positive = false;
  for (const auto& [z, v] : nodes_) {
    if (z != expected) throw std::invalid_argument("dyadic-affine nodes must cover a contiguous range of z");
    if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("dyadic-affine values must be finite and >= 0");
    if (v < prev) throw std::invalid_argument("dyadic-affine values must be nondecreasing in z");
    positive = positive || v > 0.0;
    prev = v;
    ++expected;
  }
  if (!positive) throw std::invalid_argument("interaction law must not vanish identically");
  if (left_ == LeftFill::geometric) {
    // f(-n) 4^n stays bounded only when the left tail decays at least like 4^z.
    if (!(ratio_ >= 4.0) || !std::isfinite(ratio_))
      throw std::invalid_argument("geometric left fill needs ratio >= 4 for quadratic behaviour at the origin");
  }
}

double DyadicAffine::f(int z) const {
  if (z > z_max()) return nodes_.rbegin()->second;
  if (z >= z_min()) return nodes_.at(z);
  if (left_ == LeftFill::zero) return 0.0;
  return nodes_.begin()->second * std::pow(ratio_, static_cast<double>(z - z_min()));
}

double DyadicAffine::operator()(double t) const {
  if (!(t > 0.0)) return 0.0;
  if (std::isinf(t)) return sup();
  int e = 0;
  const double mant = std::frexp(t, &e);  // t = mant * 2^e, mant in [0.5, 1)
  const int z = e - 1;
  const double s = 2.0 * mant - 1.0;  // position inside [2^z, 2^(z+1)), exact
  const double lo = f(z);
  const double hi = f(z + 1);
  return lo + s * (hi - lo);
}

double DyadicAffine::decay_witness() const {
  double w = 0.0;
  for (const auto& [z, v] : nodes_)
    if (z < 0) w = std::max(w, v * std::pow(4.0, -z));
  if (left_ == LeftFill::geometric) {
    // Beyond the nodes f(z) 4^(-z) = f(z_min) 4^(-z_min) (4/ratio)^(z_min - z) <= its value at z_min.
    const int z0 = std::min(z_min(), 0);
    w = std::max(w, f(z0) * std::pow(4.0, -z0));
  }
  return w;
}

}  // namespace law

InteractionLaw InteractionLaw::model(int k) {
  if (k < 1) throw std::invalid_argument("model law index must be a positive integer");
  return InteractionLaw(law::Model{k});
}

InteractionLaw InteractionLaw::piecewise_constant(std::vector<Rational> weights) {
  return InteractionLaw(law::PiecewiseConstant(std::move(weights)));
}

InteractionLaw InteractionLaw::packaged_dyadic(std::vector<Rational> packages) {
  bool positive = false;
  for (const auto& a : packages) {
    if (a < 0) throw std::invalid_argument("package weights must be nonnegative");
    positive = positive || a > 0;
  }
  if (!positive) throw std::invalid_argument("interaction law must not vanish identically");
  if (packages.size() > 30) throw std::invalid_argument("at most 30 dyadic packages are supported");
  return InteractionLaw(law::PackagedDyadic{std::move(packages)});
}

InteractionLaw InteractionLaw::affine_theta() { return InteractionLaw(law::AffineTheta{}); }

InteractionLaw InteractionLaw::dyadic_affine(law::DyadicAffine zeta) { return InteractionLaw(std::move(zeta)); }

InteractionLaw InteractionLaw::tabulated(law::Tabulated table) {
  if (!table.fn) throw std::invalid_argument("tabulated law needs an evaluation rule");
  std::sort(table.breaks.begin(), table.breaks.end());
  return InteractionLaw(std::move(table));
}

InteractionLaw InteractionLaw::scaled(InteractionLaw inner, double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta))
    throw std::invalid_argument("rescaling factors must be positive and finite");
  return InteractionLaw(law::Scaled{std::make_shared<const InteractionLaw>(std::move(inner)), alpha, beta});
}

InteractionLaw InteractionLaw::from_samples(std::vector<double> t, std::vector<double> values,
                                            law::SampleSource::Rule rule) {
  if (t.empty() || t.size() != values.size()) throw std::invalid_argument("sample grid and values must match");
  for (std::size_t i = 1; i < t.size(); ++i)
    if (!(t[i] > t[i - 1])) throw std::invalid_argument("sample grid must be strictly increasing");
  if (t.front() < 0.0) throw std::invalid_argument("sample grid must start at t >= 0");
  law::SampleSource src{t, values, rule};
  auto fn = [t, values, rule](double x) {
    if (rule == law::SampleSource::Rule::step) {
      // value of the last node strictly below x (lower semicontinuous steps)
      const auto it = std::lower_bound(t.begin(), t.end(), x);
      if (it == t.begin()) return values.front();
      return values[static_cast<std::size_t>(it - t.begin()) - 1];
    }
    if (x <= t.front()) return t.front() > 0.0 ? values.front() * (x / t.front()) : values.front();
    if (x >= t.back()) return values.back();
    const auto it = std::upper_bound(t.begin(), t.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - t.begin());
    const double w = (x - t[i - 1]) / (t[i] - t[i - 1]);
    return values[i - 1] + w * (values[i] - values[i - 1]);
  };
  law::Tabulated table{"tabulated", fn, t, *std::max_element(values.begin(), values.end()), src};
  return tabulated(std::move(table));
}

InteractionLaw InteractionLaw::from_function(std::string name, std::function<double(double)> fn,
                                             std::vector<double> breaks, double sup) {
  return tabulated(law::Tabulated{std::move(name), std::move(fn), std::move(breaks), sup, std::monostate{}});
}

double InteractionLaw::operator()(double t) const {
  return std::visit(Overloaded{
                        [t](const law::Model& m) { return t > m.k ? 1.0 : 0.0; },
                        [t](const law::PiecewiseConstant& p) { return p(t); },
                        [t](const law::PackagedDyadic& p) {
                          // phi_k(t) = 1 iff k < t; count the package members below t.
                          if (!(t > 1.0)) return 0.0;
                          double sum = 0.0;
                          for (std::size_t j = 0; j < p.packages.size(); ++j) {
                            const double lo = std::ldexp(1.0, static_cast<int>(j));
                            const double hi = std::ldexp(1.0, static_cast<int>(j) + 1) - 1.0;
                            if (!(t > lo)) break;
                            const double count = std::min(hi, std::ceil(t) - 1.0) - lo + 1.0;
                            sum += to_double(p.packages[j]) * count;
                          }
                          return sum;
                        },
                        [t](const law::AffineTheta&) { return theta_value(t); },
                        [t](const law::DyadicAffine& z) { return z(t); },
                        [t](const law::Scaled& s) { return s.alpha * (*s.inner)(s.beta * t); },
                        [t](const law::Tabulated& tab) { return tab.fn(t); },
                    },
                    v_);
}

double InteractionLaw::sup() const {
  return std::visit(Overloaded{
                        [](const law::Model&) { return 1.0; },
                        [](const law::PiecewiseConstant& p) { return p.total(); },
                        [](const law::PackagedDyadic& p) {
                          double s = 0.0;
                          for (std::size_t j = 0; j < p.packages.size(); ++j)
                            s += to_double(p.packages[j]) * std::ldexp(1.0, static_cast<int>(j));
                          return s;
                        },
                        [](const law::AffineTheta&) { return 1.0; },
                        [](const law::DyadicAffine& z) { return z.sup(); },
                        [](const law::Scaled& s) { return s.alpha * s.inner->sup(); },
                        [](const law::Tabulated& tab) { return tab.sup; },
                    },
                    v_);
}

std::vector<double> InteractionLaw::breakpoints() const {
  return std::visit(Overloaded{
                        [](const law::Model& m) { return std::vector<double>{static_cast<double>(m.k)}; },
                        [](const law::PiecewiseConstant& p) {
                          std::vector<double> b;
                          for (int k = 1; k <= p.max_index(); ++k)
                            if (p.weight(k) != 0.0) b.push_back(k);
                          return b;
                        },
                        [](const law::PackagedDyadic& p) {
                          std::vector<double> b;
                          const double top = std::ldexp(1.0, static_cast<int>(p.packages.size())) - 1.0;
                          for (double k = 1.0; k <= top; k += 1.0) b.push_back(k);
                          return b;
                        },
                        [](const law::AffineTheta&) { return std::vector<double>{1.0, 2.0}; },
                        [](const law::DyadicAffine& z) {
                          std::vector<double> b;
                          const int lo = z.left_fill() == law::LeftFill::zero ? z.z_min() - 1 : std::max(z.z_min() - 64, -60);
                          for (int k = lo; k <= z.z_max() + 1; ++k) b.push_back(std::ldexp(1.0, k));
                          return b;
                        },
                        [](const law::Scaled& s) {
                          auto b = s.inner->breakpoints();
                          for (auto& x : b) x /= s.beta;
                          return b;
                        },
                        [](const law::Tabulated& tab) { return tab.breaks; },
                    },
                    v_);
}

std::optional<law::PiecewiseConstant> InteractionLaw::as_piecewise_constant() const {
  if (const auto* m = std::get_if<law::Model>(&v_)) {
    std::vector<Rational> w(static_cast<std::size_t>(m->k), Rational(0));
    w.back() = 1;
    return law::PiecewiseConstant(std::move(w));
  }
  if (const auto* p = std::get_if<law::PiecewiseConstant>(&v_)) return *p;
  if (const auto* p = std::get_if<law::PackagedDyadic>(&v_)) return expand_packaged(*p);
  return std::nullopt;
}

std::string InteractionLaw::describe() const {
  return std::visit(Overloaded{
                        [](const law::Model& m) { return "phi:" + std::to_string(m.k); },
                        [](const law::PiecewiseConstant& p) { return "pca:[" + join_rationals(p.weights()) + "]"; },
                        [](const law::PackagedDyadic& p) { return "pca2:[" + join_rationals(p.packages) + "]"; },
                        [](const law::AffineTheta&) { return std::string("theta"); },
                        [](const law::DyadicAffine& z) {
                          std::ostringstream os;
                          os << "zeta[z=" << z.z_min() << ".." << z.z_max() << "]";
                          return os.str();
                        },
                        [](const law::Scaled& s) {
                          std::ostringstream os;
                          os.precision(17);
                          os << "scaled(" << s.alpha << "," << s.beta << "," << s.inner->describe() << ")";
                          return os.str();
                        },
                        [](const law::Tabulated& tab) { return tab.name; },
                    },
                    v_);
}

double evaluate(const InteractionLaw& law, double t) {
  if (t < 0.0) throw std::invalid_argument("interaction laws are defined on t >= 0");
  return law(t);
}

// -- admissibility -------------------------------------------------------

std::vector<double> default_probe_grid() {
  std::vector<double> g;
  g.push_back(0.0);
  for (int i = 1; i <= 4000; ++i) g.push_back(4.0 * i / 4000.0);
  for (int i = 0; i <= 1200; ++i) g.push_back(std::pow(10.0, -6.0 + 12.0 * i / 1200.0));
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

AdmissibilityReport check_admissible(const InteractionLaw& law, const std::vector<double>& grid,
                                     const AdmissibilityOptions& options) {
  if (grid.empty()) throw std::invalid_argument("probe grid must be nonempty");
  if (!std::is_sorted(grid.begin(), grid.end())) throw std::invalid_argument("probe grid must be sorted");
  if (grid.front() < 0.0) throw std::invalid_argument("probe grid must lie in [0, inf)");

  AdmissibilityReport r;
  r.grid = grid;
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = law(grid[i]);

  // (i) monotonicity
  for (std::size_t i = 0; i < grid.size(); ++i) {
    r.nonzero = r.nonzero || v[i] > 0.0;
    if (i > 0 && v[i] < v[i - 1] - 1e-12 * std::max(1.0, std::abs(v[i - 1])) && r.monotone) {
      r.monotone = false;
      r.monotone_witness = std::make_pair(grid[i - 1], grid[i]);
    }
  }

  // (ii) phi(t) <= a t^2 on [0, 1]
  double min_positive = 0.0;
  for (std::size_t i = 0; i < grid.size() && grid[i] <= 1.0; ++i) {
    const double t = grid[i];
    if (t == 0.0) {
      if (v[i] > 0.0) {
        r.quadratic = false;
        r.quadratic_witness = 0.0;
      }
      continue;
    }
    if (min_positive == 0.0) min_positive = t;
    r.a = std::max(r.a, v[i] / (t * t));
  }
  if (r.quadratic && min_positive > 0.0) {
    // A ratio phi(t)/t^2 that keeps growing towards the origin is not
    // certified: compare the first two decades of the grid.
    double first = 0.0, second = 0.0;
    double first_arg = min_positive;
    for (std::size_t i = 0; i < grid.size() && grid[i] <= 1.0; ++i) {
      const double t = grid[i];
      if (t <= 0.0) continue;
      const double ratio = v[i] / (t * t);
      if (t < 10.0 * min_positive) {
        if (ratio > first) {
          first = ratio;
          first_arg = t;
        }
      } else if (t < 100.0 * min_positive) {
        second = std::max(second, ratio);
      }
    }
    if (first > 0.0 && first > 2.0 * second) {
      r.quadratic = false;
      r.quadratic_witness = first_arg;
    }
  }

  // (iii) phi <= b
  r.b = *std::max_element(v.begin(), v.end());
  const double declared = law.sup();
  const double top = grid.back();
  const auto half = std::upper_bound(grid.begin(), grid.end(), top / 2.0);
  if (half == grid.begin() || top <= 0.0) {
    r.bounded = false;
    r.bounded_witness = top;
  } else {
    const double v_half = v[static_cast<std::size_t>(half - grid.begin()) - 1];
    const double growth = v.back() - v_half;
    if (growth > options.plateau_tolerance * std::max(std::abs(v.back()), 1e-300)) {
      r.bounded = false;
      r.bounded_witness = top;
    }
  }
  if (r.bounded && std::isfinite(declared)) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (v[i] > declared * (1.0 + 1e-12)) {
        r.bounded = false;
        r.bounded_witness = grid[i];
        break;
      }
    }
  }
  return r;
}

// -- scale factor --------------------------------------------------------

bool ScaleFactor::divergent() const { return std::isinf(value); }

double dyadic_series(const law::DyadicAffine& zeta) {
  // Terms vanish for z >= z_max; the left tail either stops at z_min - 1
  // or decays like (2 / ratio)^|z|.
  long double sum = 0.0L;
  for (int z = zeta.z_max() - 1; z >= zeta.z_min() - 1; --z)
    sum += static_cast<long double>(zeta.f(z + 1) - zeta.f(z)) * std::ldexp(1.0L, -z);
  if (zeta.left_fill() == law::LeftFill::geometric) {
    for (int z = zeta.z_min() - 2; z > -100000; --z) {
      const long double term = static_cast<long double>(zeta.f(z + 1) - zeta.f(z)) * std::ldexp(1.0L, -z);
      sum += term;
      if (std::abs(term) < 1e-12L * std::max(1.0L, std::abs(sum)) * 1e-3L) break;
    }
  }
  return static_cast<double>(sum);
}

ScaleFactor scale_factor_quadrature(const InteractionLaw& law) {
  const double sup = law.sup();
  const double top = std::isfinite(sup) && sup > 0.0 ? std::max(std::ldexp(1.0, 40), 1e12 * sup) : std::ldexp(1.0, 40);
  const int lo_exp = -40;
  const int hi_exp = static_cast<int>(std::ceil(std::log2(top)));

  std::vector<double> nodes;
  for (int e = lo_exp; e <= hi_exp; ++e) nodes.push_back(std::ldexp(1.0, e));
  for (double b : law.breakpoints())
    if (b > nodes.front() && b < nodes.back()) nodes.push_back(b);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  auto integrand = [&law](double t) { return law(t) / (t * t); };

  ScaleFactor out;
  out.method = Method::quadrature;
  long double total = 0.0L;
  double error = 0.0;
  double first_shell = 0.0, last_shell = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const auto q = detail::integrate(integrand, nodes[i], nodes[i + 1], 1e-13);
    total += q.value;
    error += q.error;
    if (nodes[i + 1] <= 2.0 * nodes.front()) first_shell += q.value;
    if (nodes[i] >= nodes.back() / 2.0) last_shell += q.value;
  }
  if (first_shell > 1e-9 || last_shell > 1e-9) {
    out.value = kInf;
    out.error_estimate = kInf;
    return out;
  }
  // Below the first node phi(t)/t^2 <= a, so the piece is at most a * 2^-40;
  // above the last node the tail is at most sup / top.
  const double head = law(nodes.front()) / nodes.front();
  out.value = static_cast<double>(total);
  out.error_estimate = error + head + (std::isfinite(sup) ? sup / nodes.back() : 0.0);
  return out;
}

ScaleFactor scale_factor(const InteractionLaw& law) {
  constexpr std::size_t kExactLimit = 4095;  // largest expansion summed in exact arithmetic
  return std::visit(
      Overloaded{
          [](const law::Model& m) {
            ScaleFactor s;
            s.exact = Rational(1, m.k);
            s.value = 1.0 / m.k;
            return s;
          },
          [](const law::PiecewiseConstant& p) {
            ScaleFactor s;
            Rational n = 0;
            for (int k = 1; k <= p.max_index(); ++k)
              if (p.exact_weight(k) != 0) n += p.exact_weight(k) / k;
            s.exact = n;
            s.value = to_double(n);
            return s;
          },
          [](const law::PackagedDyadic& p) {
            const std::size_t size = (std::size_t{1} << p.packages.size()) - 1;
            ScaleFactor s;
            if (size <= kExactLimit) {
              Rational n = 0;
              for (std::size_t j = 0; j < p.packages.size(); ++j) {
                if (p.packages[j] == 0) continue;
                const unsigned lo = 1u << j, hi = (1u << (j + 1)) - 1;
                Rational block = 0;
                for (unsigned k = lo; k <= hi; ++k) block += Rational(1, k);
                n += p.packages[j] * block;
              }
              s.exact = n;
              s.value = to_double(n);
              return s;
            }
            long double total = 0.0L;
            for (std::size_t j = 0; j < p.packages.size(); ++j) {
              const unsigned long lo = 1UL << j, hi = (1UL << (j + 1)) - 1;
              long double block = 0.0L;
              for (unsigned long k = hi; k >= lo; --k) block += 1.0L / static_cast<long double>(k);
              total += static_cast<long double>(to_double(p.packages[j])) * block;
            }
            s.value = static_cast<double>(total);
            return s;
          },
          [](const law::AffineTheta&) {
            ScaleFactor s;
            s.value = std::numbers::ln2;
            return s;
          },
          [](const law::DyadicAffine& z) {
            ScaleFactor s;
            s.method = Method::series;
            s.value = std::numbers::ln2 * dyadic_series(z);
            s.error_estimate = 1e-12 * s.value;
            return s;
          },
          [](const law::Scaled& sc) {
            ScaleFactor s = scale_factor(*sc.inner);
            s.value *= sc.alpha * sc.beta;
            s.error_estimate *= sc.alpha * sc.beta;
            s.exact.reset();
            return s;
          },
          [&law](const law::Tabulated&) { return scale_factor_quadrature(law); },
      },
      law.variant());
}

// -- constructions -------------------------------------------------------

InteractionLaw rescale(const InteractionLaw& law, double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta))
    throw std::invalid_argument("rescaling factors must be positive and finite");
  return InteractionLaw::scaled(law, alpha, beta);
}

int min_support_index(const law::PiecewiseConstant& law) { return law.min_support_index(); }

int min_support_index(const InteractionLaw& law) {
  const auto p = law.as_piecewise_constant();
  if (!p) throw std::invalid_argument("support index is defined for piecewise constant laws only");
  return p->min_support_index();
}

law::PiecewiseConstant expand_packaged(const law::PackagedDyadic& law) {
  std::vector<Rational> w;
  for (std::size_t j = 0; j < law.packages.size(); ++j) {
    const std::size_t count = std::size_t{1} << j;
    w.insert(w.end(), count, law.packages[j]);
  }
  return law::PiecewiseConstant(std::move(w));
}

std::optional<std::vector<Rational>> as_packaged(const law::PiecewiseConstant& law) {
  std::vector<Rational> a;
  const int m = law.max_index();
  for (int j = 1;; ++j) {
    const int lo = 1 << (j - 1);
    const int hi = (1 << j) - 1;
    if (lo > m) break;
    const Rational& first = law.exact_weight(lo);
    for (int k = lo + 1; k <= hi; ++k)
      if (law.exact_weight(k) != first) return std::nullopt;
    a.push_back(first);
  }
  return a;
}

InteractionLaw psi(int m) {
  if (m < 1) throw std::invalid_argument("psi_m needs m >= 1");
  return InteractionLaw::packaged_dyadic(std::vector<Rational>(static_cast<std::size_t>(m), Rational(1)));
}

InteractionLaw theta_package(int m) {
  if (m < 1) throw std::invalid_argument("theta_m needs m >= 1");
  std::vector<Rational> a(static_cast<std::size_t>(m), Rational(0));
  a.back() = 1;
  return InteractionLaw::packaged_dyadic(std::move(a));
}

double phi_eps_constant(double eps) {
  if (!(eps > 0.0) || eps > 1.0) throw std::invalid_argument("phi_eps needs 0 < eps <= 1");
  return 1.0 / (1.0 + eps);
}

InteractionLaw phi_eps(double eps) {
  const double c = phi_eps_constant(eps);
  std::ostringstream name;
  name.precision(17);
  name << "phieps:" << eps;
  auto fn = [c, eps](double t) { return t <= 1.0 ? c * eps * t * t : c; };
  return InteractionLaw::tabulated(law::Tabulated{name.str(), fn, {1.0}, c, law::PhiEpsSource{eps}});
}

}  // namespace bvgamma
