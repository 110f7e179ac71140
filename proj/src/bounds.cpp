#include "bvgamma/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "bvgamma/energy.hpp"

namespace bvgamma {

namespace {

constexpr double kLn2 = std::numbers::ln2;

double theta_of(double t) {
  if (t <= 1.0) return 0.0;
  if (t <= 2.0) return t - 1.0;
  return 1.0;
}

}  // namespace

nlohmann::json BoundReport::to_json() const {
  nlohmann::json chain_json = nlohmann::json::array();
  for (const auto& s : chain) chain_json.push_back({{"statement", s.statement}, {"constant", s.constant}});
  nlohmann::json j{{"law", law}, {"N", N}, {"K_lower", K_lower}, {"chain", chain_json}, {"dimension_uniform", dimension_uniform}};
  if (N_exact) j["N_exact"] = to_string(*N_exact);
  return j;
}

GammaFactor gamma_liminf_factor(const law::PiecewiseConstant& law, int n_max, const MinOptions& options) {
  GammaFactor g;
  if (const auto packages = as_packaged(law)) {
    Rational sum = 0;
    for (const auto& a : *packages) sum += a;
    g.analytic = kLn2 * to_double(sum);
  }
  const int m = law.max_index();
  // small n are dominated by the two ends; only the upper half of the range
  // enters the minimum
  const int tail_from = std::max(m + 1, n_max / 2);
  for (int n = m + 1; n <= n_max; ++n) {
    const MinResult r = minimize(MinProblem(law, n), options);
    const double proxy = r.value / (2.0 * (n - m));
    g.proxies.emplace_back(n, proxy);
    if (n >= tail_from) g.empirical = g.empirical ? std::min(*g.empirical, proxy) : proxy;
  }
  if (!g.analytic && !g.empirical) throw std::invalid_argument("n_max must exceed the largest weighted index");
  if (g.analytic && (!g.empirical || *g.analytic >= *g.empirical)) {
    g.value = *g.analytic;
    g.basis = "analytic";
  } else {
    g.value = *g.empirical;
    g.basis = "empirical";
  }
  return g;
}

BoundReport psi_bound(int m) {
  if (m < 1) throw std::invalid_argument("psi_m needs m >= 1");
  if (m > 40) throw std::invalid_argument("psi_m supported for m <= 40");
  BoundReport r;
  r.law = "psi:" + std::to_string(m);
  const unsigned long top = (1UL << m) - 1;
  if (m <= 12) {
    r.N_exact = harmonic(static_cast<unsigned>(top));
    r.N = to_double(*r.N_exact);
  } else {
    r.N = harmonic_double(top);
  }
  const double gamma = m * kLn2;
  r.K_lower = gamma / r.N;
  r.chain = {{"package sum bound: sum of L_k over a dyadic package >= (n - 2^j + 1) 2 log 2", 2.0 * kLn2},
             {"liminf I_n / n >= 2 log 2 * (number of packages)", 2.0 * m * kLn2},
             {"Gamma-liminf factor = liminf I_n / (2n)", gamma},
             {"scale factor N = H_(2^m - 1)", r.N},
             {"shape factor K >= factor / N", r.K_lower}};
  return r;
}

DominationReport domination_check(int m, int points, double tolerance) {
  if (m < 2) throw std::invalid_argument("domination needs m >= 2");
  const auto theta_m = theta_package(m);
  const double scale = std::ldexp(1.0, m - 1);
  const double beta = scale - 1.0;
  DominationReport r;
  r.m = m;
  r.min_margin = std::numeric_limits<double>::infinity();
  auto probe = [&](double t) {
    const double margin = theta_of(t) - theta_m(beta * t) / scale;
    if (margin < r.min_margin) {
      r.min_margin = margin;
      r.witness = t;
    }
  };
  for (int i = 0; i <= points; ++i) probe(4.0 * i / points);
  // case boundaries of the comparison, and their neighbours
  for (double t : {1.0, 2.0}) {
    probe(t);
    probe(std::nextafter(t, 0.0));
    probe(std::nextafter(t, 4.0));
  }
  r.pass = r.min_margin >= -tolerance;
  return r;
}

BoundReport theta_bound(int m_cap, int points) {
  if (m_cap < 2) throw std::invalid_argument("theta bound needs a cap m >= 2");
  BoundReport r;
  r.law = "theta";
  for (int m = 2; m <= m_cap; ++m) {
    const auto d = domination_check(m, points);
    if (!d.pass) {
      std::ostringstream os;
      os << "domination fails for m = " << m << " at t = " << format_number(d.witness) << " (margin "
         << format_number(d.min_margin) << ")";
      throw BoundError(os.str());
    }
  }
  const double cap_scale = std::ldexp(1.0, m_cap - 1);
  const ScaleFactor N = scale_factor(InteractionLaw::affine_theta());
  r.N = N.value;
  const double gamma = kLn2;
  r.K_lower = gamma / r.N;
  r.chain = {{"theta dominates theta_m((2^(m-1) - 1) t) / 2^(m-1), checked for 2 <= m <= " + std::to_string(m_cap), 1.0},
             {"package bound for theta_m: factor >= log 2", kLn2},
             {"rescaling: factor(theta_hat_m) = (2^(m-1) - 1) / 2^(m-1) factor(theta_m), at the cap", (cap_scale - 1.0) / cap_scale * kLn2},
             {"supremum over m of the rescaled bounds", gamma},
             {"scale factor N(theta) = log 2", r.N},
             {"shape factor K >= factor / N", r.K_lower}};
  return r;
}

BoundReport zeta_bound(const law::DyadicAffine& zeta) {
  BoundReport r;
  r.law = InteractionLaw::dyadic_affine(zeta).describe();

  // zeta(t) = sum_z (f(z+1) - f(z)) theta(2^-z t)
  const int z_lo = zeta.left_fill() == law::LeftFill::zero ? zeta.z_min() - 1 : zeta.z_min() - 600;
  std::vector<double> probes;
  for (int i = 0; i <= 2000; ++i) probes.push_back(std::ldexp(1.0, zeta.z_min() - 8) * std::pow(2.0, (zeta.z_max() - zeta.z_min() + 16) * i / 2000.0));
  for (int z = zeta.z_min() - 2; z <= zeta.z_max() + 2; ++z) {
    probes.push_back(std::ldexp(1.0, z));
    probes.push_back(1.5 * std::ldexp(1.0, z));
  }
  for (double t : probes) {
    double sum = 0.0;
    for (int z = z_lo; z <= zeta.z_max(); ++z) sum += (zeta.f(z + 1) - zeta.f(z)) * theta_of(std::ldexp(t, -z));
    const double direct = zeta(t);
    if (std::abs(sum - direct) > 1e-12 * std::max(1.0, std::abs(direct))) {
      std::ostringstream os;
      os << "representation mismatch at t = " << format_number(t) << ": " << format_number(direct) << " vs "
         << format_number(sum);
      throw BoundError(os.str());
    }
  }

  const double series = dyadic_series(zeta);
  const double by_series = kLn2 * series;
  const InteractionLaw as_law = InteractionLaw::dyadic_affine(zeta);
  const ScaleFactor by_quadrature = scale_factor_quadrature(as_law);
  if (std::abs(by_series - by_quadrature.value) > 1e-8 * by_series) {
    std::ostringstream os;
    os << "scale factor mismatch: series " << format_number(by_series) << " vs quadrature "
       << format_number(by_quadrature.value);
    throw BoundError(os.str());
  }
  r.N = by_series;
  const double gamma = kLn2 * series;
  r.K_lower = gamma / r.N;
  r.chain = {{"representation zeta = sum_z (f(z+1) - f(z)) theta(2^-z t), checked on probes", static_cast<double>(probes.size())},
             {"series sum_z (f(z+1) - f(z)) 2^-z", series},
             {"scale factor by quadrature", by_quadrature.value},
             {"factor(zeta) >= sum of rescaled theta factors = log 2 * series", gamma},
             {"scale factor N(zeta) = log 2 * series", r.N},
             {"shape factor K >= factor / N", r.K_lower}};
  return r;
}

nlohmann::json CounterexampleReport::to_json() const {
  return {{"c2", to_string(c2)},
          {"N_psi", N_psi},
          {"K_psi_lower", K_psi_lower},
          {"eps", eps},
          {"N_phi_eps", N_phi_eps},
          {"K_phi_eps_limit_external_claim", external_limit},
          {"phi_eps_dominates_on_unit_interval", phi_eps_dominates},
          {"min_gap", min_gap},
          {"strict_gap", strict_gap}};
}

CounterexampleReport counterexample_table(double eps) {
  CounterexampleReport r;
  r.eps = eps;
  const Rational H3 = harmonic(3);
  r.c2 = Rational(1) / H3;
  const auto psi2 = InteractionLaw::piecewise_constant({Rational(1), Rational(1), Rational(1)});
  r.N_psi = to_double(r.c2 * *scale_factor(psi2).exact);
  r.K_psi_lower = psi_bound(2).K_lower;  // rescaling leaves K unchanged
  const auto phi = phi_eps(eps);
  r.N_phi_eps = scale_factor(phi).value;
  r.external_limit = kLn2;
  const double c2 = to_double(r.c2);
  r.phi_eps_dominates = true;
  r.min_gap = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 10000; ++i) {
    const double t = i / 10000.0;
    const double gap = phi(t) - c2 * psi2(t);
    r.min_gap = std::min(r.min_gap, gap);
    if (!(gap > 0.0)) r.phi_eps_dominates = false;
  }
  r.strict_gap = r.K_psi_lower > kLn2;
  return r;
}

BoundReport bound_for_law(const InteractionLaw& law, int n_max, const MinOptions& options) {
  const auto& v = law.variant();
  if (std::holds_alternative<law::AffineTheta>(v)) return theta_bound();
  if (const auto* z = std::get_if<law::DyadicAffine>(&v)) return zeta_bound(*z);
  if (const auto* s = std::get_if<law::Scaled>(&v)) {
    BoundReport r = bound_for_law(*s->inner, n_max, options);
    const double ab = s->alpha * s->beta;
    const double gamma = r.K_lower * r.N * ab;
    r.law = law.describe();
    r.N *= ab;
    r.N_exact.reset();
    r.chain.push_back({"rescaling multiplies factor and N by alpha beta", ab});
    r.chain.push_back({"shape factor K >= factor / N", gamma / r.N});
    r.K_lower = gamma / r.N;
    return r;
  }
  const auto pc = law.as_piecewise_constant();
  if (!pc) throw std::invalid_argument("no lower-bound chain is available for law '" + law.describe() + "'");
  if (const auto* p = std::get_if<law::PackagedDyadic>(&v)) {
    bool psi_shape = true;
    for (const auto& a : p->packages) psi_shape = psi_shape && a == 1;
    if (psi_shape) return psi_bound(static_cast<int>(p->packages.size()));
  }
  BoundReport r;
  r.law = law.describe();
  const ScaleFactor N = scale_factor(law);
  r.N = N.value;
  r.N_exact = N.exact;
  // Laws with huge expansions only get the analytic route.
  const int cap = pc->max_index() + 1 > n_max ? 0 : n_max;
  const GammaFactor g = gamma_liminf_factor(*pc, cap, options);
  if (g.analytic) r.chain.push_back({"package bound: factor >= log 2 * sum a_j", *g.analytic});
  if (g.empirical) r.chain.push_back({"optimizer proxy min_n I_n / (2 (n - m)), n_max / 2 <= n <= " + std::to_string(n_max) + " (empirical)", *g.empirical});
  r.chain.push_back({"Gamma-liminf factor (" + g.basis + ")", g.value});
  r.chain.push_back({"scale factor N", r.N});
  r.K_lower = g.value / r.N;
  r.chain.push_back({"shape factor K >= factor / N", r.K_lower});
  return r;
}

std::string format_table(const std::vector<BoundReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << "law " << r.law << "\n";
    os << "  N        " << format_number(r.N);
    if (r.N_exact) os << " (" << to_string(*r.N_exact) << ")";
    os << "\n  K_lower  " << format_number(r.K_lower) << (r.dimension_uniform ? "  (every dimension)" : "") << "\n";
    for (const auto& s : r.chain) os << "    - " << s.statement << ": " << format_number(s.constant) << "\n";
  }
  return os.str();
}

}  // namespace bvgamma
