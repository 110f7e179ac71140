#include "bvgamma/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bvgamma/bounds.hpp"
#include "bvgamma/energy.hpp"
#include "bvgamma/law_io.hpp"
#include "bvgamma/minprob.hpp"
#include "bvgamma/suites.hpp"

namespace bvgamma {

namespace {

using nlohmann::json;

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string fmt(double x) { return format_number(x); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string json_scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return fmt(v.get<double>());
  throw ConfigError("unsupported config value " + v.dump());
}

// Appends the keys of the --config file that were not given as flags.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  auto it = std::find(args.begin(), args.end(), "--config");
  if (it == args.end()) return args;
  if (std::next(it) == args.end()) throw ConfigError("--config needs a path");
  const std::string path = *std::next(it);
  args.erase(it, std::next(it, 2));
  json cfg;
  try {
    cfg = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ConfigError("invalid config '" + path + "': " + e.what());
  }
  if (!cfg.is_object()) throw ConfigError("config must be a JSON object");
  if (cfg.contains("command")) {
    std::vector<std::string> cmd;
    for (const auto& c : cfg["command"].is_array() ? cfg["command"] : json::array({cfg["command"]}))
      cmd.push_back(c.get<std::string>());
    const bool has_command = !args.empty() && args.front().rfind("--", 0) != 0;
    if (!has_command) args.insert(args.begin(), cmd.begin(), cmd.end());
  }
  for (const auto& [key, value] : cfg.items()) {
    if (key == "command") continue;
    const std::string flag = "--" + key;
    if (std::find(args.begin(), args.end(), flag) != args.end()) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
      continue;
    }
    std::string text;
    if (value.is_array()) {
      for (const auto& v : value) text += (text.empty() ? "" : ",") + json_scalar(v);
    } else {
      text = json_scalar(value);
    }
    args.push_back(flag);
    args.push_back(text);
  }
  return args;
}

double parse_double(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw ConfigError("not a number: '" + s + "'");
  }
  if (pos != s.size()) throw ConfigError("not a number: '" + s + "'");
  return v;
}

int parse_int(const std::string& s) {
  const double v = parse_double(s);
  if (v != std::floor(v) || std::abs(v) > 1e9) throw ConfigError("not an integer: '" + s + "'");
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

StepFunction load_step_function(const std::string& path) {
  const std::string text = read_file(path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return step_function_from_csv(text);
  return step_function_from_json(json::parse(text));
}

SmoothFunction named_function(const std::string& name) {
  if (name == "bump") return smooth_bump();
  if (name == "linear") return {[](double x) { return x; }, [](double) { return 1.0; }};
  throw ConfigError("unknown function '" + name + "' (bump, linear)");
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// -- law ----------------------------------------------------------------------

struct LawArgs {
  std::string spec;
  std::vector<std::string> report;
  std::vector<double> probes;
  bool as_json = false;
};

int cmd_law(const LawArgs& a, std::ostream& out) {
  const InteractionLaw law = parse_law_spec(a.spec);
  std::vector<std::string> report = a.report;
  if (report.empty()) report = a.probes.empty() ? std::vector<std::string>{"N", "admissible"} : std::vector<std::string>{};
  json j{{"law", law.describe()}};
  int status = 0;
  bool first = true;
  auto section = [&]() {
    if (!first && !a.as_json) out << "\n";
    first = false;
  };
  for (const auto& r : report) {
    if (r == "N") {
      const ScaleFactor N = scale_factor(law);
      if (a.as_json) {
        j["N"] = {{"value", N.value}, {"method", to_string(N.method)}, {"error_estimate", N.error_estimate}};
        if (N.exact) j["N"]["exact"] = to_string(*N.exact);
      } else {
        section();
        out << "N_exact,N,method,error_estimate\n"
            << (N.exact ? to_string(*N.exact) : "") << "," << fmt(N.value) << "," << to_string(N.method) << ","
            << fmt(N.error_estimate) << "\n";
      }
    } else if (r == "admissible") {
      const auto rep = check_admissible(law, default_probe_grid());
      if (!rep.pass()) status = 1;
      auto wit = [](const std::optional<double>& w) { return w ? fmt(*w) : std::string(); };
      const std::string mono = rep.monotone_witness
                                   ? fmt(rep.monotone_witness->first) + " " + fmt(rep.monotone_witness->second)
                                   : std::string();
      if (a.as_json) {
        j["admissible"] = {{"pass", rep.pass()},
                           {"nonzero", rep.nonzero},
                           {"monotone", rep.monotone},
                           {"quadratic", rep.quadratic},
                           {"a", rep.a},
                           {"bounded", rep.bounded},
                           {"b", rep.b},
                           {"grid_points", rep.grid.size()}};
      } else {
        section();
        out << "condition,pass,constant,witness\n";
        out << "nonzero," << rep.nonzero << ",,\n";
        out << "monotone," << rep.monotone << ",," << mono << "\n";
        out << "quadratic," << rep.quadratic << "," << fmt(rep.a) << "," << wit(rep.quadratic_witness) << "\n";
        out << "bounded," << rep.bounded << "," << fmt(rep.b) << "," << wit(rep.bounded_witness) << "\n";
      }
    } else if (r == "table") {
      json rows = json::array();
      if (!a.as_json) {
        section();
        out << "t,phi\n";
      }
      for (int i = 0; i <= 32; ++i) {
        const double t = i / 8.0;
        if (a.as_json)
          rows.push_back({t, law(t)});
        else
          out << fmt(t) << "," << fmt(law(t)) << "\n";
      }
      if (a.as_json) j["table"] = rows;
    } else {
      throw ConfigError("unknown report '" + r + "' (N, admissible, table)");
    }
  }
  if (!a.probes.empty()) {
    json rows = json::array();
    if (!a.as_json) {
      section();
      out << "t,phi\n";
    }
    for (double t : a.probes) {
      if (t < 0.0) throw ConfigError("probe points must be >= 0");
      if (a.as_json)
        rows.push_back({{"t", t}, {"phi", law(t)}});
      else
        out << fmt(t) << "," << fmt(law(t)) << "\n";
    }
    if (a.as_json) j["probes"] = rows;
  }
  if (a.as_json) emit_json(out, j);
  return status;
}

// -- minprob ------------------------------------------------------------------

struct MinArgs {
  std::string law;
  std::string n;
  MinOptions options;
  bool dump = false;
  bool as_json = false;
};

int cmd_minprob(const MinArgs& a, std::ostream& out) {
  const InteractionLaw law = parse_law_spec(a.law);
  const auto pc = law.as_piecewise_constant();
  if (!pc) throw ConfigError("minprob needs a piecewise constant law");
  const auto ns = parse_int_list(a.n);
  int status = 0;
  json rows = json::array();
  if (!a.as_json) out << "n,value,value_over_n,tag,partial" << (a.dump ? ",minimizer" : "") << "\n";
  for (int n : ns) {
    const MinResult r = minimize(MinProblem(*pc, n), a.options);
    if (r.budget_exhausted) status = 1;
    if (a.as_json) {
      json j = r.to_json();
      j["n"] = n;
      if (!a.dump) j.erase("minimizer");
      rows.push_back(j);
    } else {
      out << n << "," << fmt(r.value) << "," << fmt(r.value / n) << "," << r.tag << "," << (r.budget_exhausted ? 1 : 0);
      if (a.dump) {
        out << ",";
        for (std::size_t i = 0; i < r.minimizer.size(); ++i) out << (i ? " " : "") << fmt(r.minimizer[i]);
      }
      out << "\n";
    }
  }
  if (a.as_json) emit_json(out, rows);
  return status;
}

// -- verify -------------------------------------------------------------------

int emit_suite(const SuiteResult& r, bool as_json, std::ostream& out) {
  if (as_json) {
    emit_json(out, r.to_json());
  } else {
    out << "suite,count,finite,min_margin,failures\n"
        << r.suite << "," << r.count << "," << r.finite << "," << fmt(r.min_margin + 0.0) << "," << r.failures << "\n";
    if (!r.pass()) out << "witness," << r.witness.dump() << "\n";
  }
  return r.pass() ? 0 : 1;
}

// -- bounds -------------------------------------------------------------------

int emit_reports(const std::vector<BoundReport>& reports, const std::string& format, std::ostream& out) {
  int status = 0;
  for (const auto& r : reports)
    if (!(r.K_lower > 0.0) || r.K_lower > 1.0 + 1e-12) status = 1;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    emit_json(out, arr);
  } else if (format == "table") {
    out << format_table(reports);
  } else {
    out << "law,N_exact,N,K_lower\n";
    for (const auto& r : reports)
      out << r.law << "," << (r.N_exact ? to_string(*r.N_exact) : "") << "," << fmt(r.N) << "," << fmt(r.K_lower) << "\n";
  }
  return status;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = parse_int(text.substr(0, dots));
    const int hi = parse_int(text.substr(dots + 2));
    if (lo > hi) throw ConfigError("empty range '" + text + "'");
    for (int i = lo; i <= hi; ++i) out.push_back(i);
    return out;
  }
  for (const auto& s : split(text, ',')) out.push_back(parse_int(s));
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

std::vector<double> parse_delta_list(const std::string& text) {
  std::vector<double> out;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    for (const auto& s : split(text, ',')) out.push_back(parse_double(s));
    if (out.empty()) throw ConfigError("empty list");
    return out;
  }
  double a = parse_double(text.substr(0, dots));
  double b = parse_double(text.substr(dots + 2));
  if (!(a > 0.0) || !(b > 0.0)) throw ConfigError("delta ranges need positive endpoints");
  const double hi = std::max(a, b), lo = std::min(a, b);
  for (int e = static_cast<int>(std::floor(std::log10(hi))) + 1; e >= static_cast<int>(std::floor(std::log10(lo))) - 1; --e) {
    for (int mant : {3, 1}) {
      // going through the decimal text gives the same double as the literal
      const double x = std::stod(std::to_string(mant) + "e" + std::to_string(e));
      if (x <= hi * (1 + 1e-12) && x >= lo * (1 - 1e-12)) out.push_back(x);
    }
  }
  return out;
}

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-local total variation energies, interaction laws and shape-factor bounds", "bvgamma"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");
  std::string config_path;  // consumed before parsing; listed for --help
  app.add_option("--config", config_path, "JSON file with default flag values (command line flags win)");

  // law
  LawArgs law_args;
  std::string law_report;
  std::string probe_text;
  auto* law_cmd = app.add_subcommand("law", "Evaluate a law, its scale factor and admissibility");
  law_cmd->add_option("--spec", law_args.spec, "Law spec, e.g. phi1, phi:3, pca:[1,1,1], psi:2, theta")->required();
  law_cmd->add_option("--report", law_report, "Comma separated: N, admissible, table");
  law_cmd->add_option("--probe", probe_text, "Comma separated points t at which to evaluate the law");
  law_cmd->add_flag("--json", law_args.as_json, "Emit JSON");

  // minprob
  MinArgs min_args;
  min_args.n = "8";
  auto* min_cmd = app.add_subcommand("minprob", "Upper bounds for I_n(phi) by multi-start minimization");
  min_cmd->add_option("--law", min_args.law, "Piecewise constant law spec")->required();
  min_cmd->add_option("--n", min_args.n, "n values: 8, 16,32,64 or 4..12");
  min_cmd->add_option("--starts", min_args.options.starts, "Smooth starts per n");
  min_cmd->add_option("--seed", min_args.options.seed, "Seed for the starting points");
  min_cmd->add_option("--budget", min_args.options.evaluation_budget, "Objective evaluation budget per n");
  min_cmd->add_option("--max-iterations", min_args.options.max_iterations, "Iterations per smooth start");
  min_cmd->add_flag("--dump-minimizer", min_args.dump, "Include the minimizer");
  min_cmd->add_flag("--json", min_args.as_json, "Emit JSON");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Randomized inequality suites");
  verify_cmd->require_subcommand(1);
  std::size_t count = 0;
  std::uint64_t seed = kDefaultSeed;
  double tolerance = -1.0;
  int points = 10000;
  bool verify_json = false;
  auto add_common = [&](CLI::App* c, bool randomized) {
    if (randomized) {
      c->add_option("--count", count, "Number of random cases");
      c->add_option("--seed", seed, "Seed (default " + std::to_string(kDefaultSeed) + ")");
    } else {
      c->add_option("--points", points, "Grid points on [0, 4]");
    }
    c->add_option("--tolerance", tolerance, "Accepted negative margin");
    c->add_flag("--json", verify_json, "Emit JSON");
  };
  auto* v_rearrange = verify_cmd->add_subcommand("rearrange", "Rearrangement lowers total hostility");
  auto* v_telescope = verify_cmd->add_subcommand("telescope", "Telescopic lower bound for sums of L_k");
  auto* v_domination = verify_cmd->add_subcommand("domination", "theta against rescaled dyadic packages");
  auto* v_chain = verify_cmd->add_subcommand("chain", "Truncation, segmentation, rearrangement lower the energy");
  auto* v_strip = verify_cmd->add_subcommand("strip", "Strip functional against delta L_k of the gaps");
  add_common(v_rearrange, true);
  add_common(v_telescope, true);
  add_common(v_domination, false);
  add_common(v_chain, true);
  add_common(v_strip, true);

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Shape-factor lower bounds");
  bounds_cmd->require_subcommand(1);
  std::string format = "csv";
  std::string m_range = "1..12";
  std::string bounds_spec;
  int n_max = 48;
  int m_cap = 8;
  double eps = 0.01;
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "csv, json or table")->check(CLI::IsMember({"csv", "json", "table"}));
    c->add_flag_callback("--json", [&]() { format = "json"; }, "Emit JSON");
  };
  auto* b_psi = bounds_cmd->add_subcommand("psi", "K(psi_m) for a range of m");
  b_psi->add_option("--m", m_range, "m values: 1..12 or a list");
  add_format(b_psi);
  auto* b_theta = bounds_cmd->add_subcommand("theta", "K(theta) = 1");
  b_theta->add_option("--m-cap", m_cap, "Largest m in the domination check");
  add_format(b_theta);
  auto* b_zeta = bounds_cmd->add_subcommand("zeta", "K(zeta) = 1 for a dyadic-affine law");
  b_zeta->add_option("--spec", bounds_spec, "zeta:@file.json")->required();
  add_format(b_zeta);
  auto* b_law = bounds_cmd->add_subcommand("law", "Lower bound for any supported law");
  b_law->add_option("--spec", bounds_spec, "Law spec")->required();
  b_law->add_option("--n-max", n_max, "Largest n for the optimizer proxy");
  add_format(b_law);
  auto* b_counter = bounds_cmd->add_subcommand("counterexample", "Data of the strict-inequality example");
  b_counter->add_option("--eps", eps, "epsilon of phi_eps");
  b_counter->add_flag("--json", verify_json, "Emit JSON");

  // energy
  auto* energy_cmd = app.add_subcommand("energy", "Energies of smooth and step functions, geometric constants");
  energy_cmd->require_subcommand(1);
  std::string energy_law = "phi1";
  std::string energy_u = "bump";
  std::string deltas = "1e-1..1e-3";
  double tol = 1e-6;
  std::string dims = "1..4";
  std::uint64_t samples = 1'000'000;
  bool energy_json = false;
  auto* e_pointwise = energy_cmd->add_subcommand("pointwise", "Lambda_delta of a smooth function over a delta sweep");
  e_pointwise->add_option("--law", energy_law, "Law spec");
  e_pointwise->add_option("--u", energy_u, "bump (sin^2(pi x)) or linear, on (0, 1)");
  e_pointwise->add_option("--deltas", deltas, "1e-1..1e-3 or a list");
  e_pointwise->add_option("--tol", tol, "Absolute quadrature tolerance");
  e_pointwise->add_flag("--json", energy_json, "Emit JSON");
  auto* e_step = energy_cmd->add_subcommand("step", "Exact Lambda_delta of a step function");
  e_step->add_option("--law", energy_law, "Law spec");
  e_step->add_option("--u", energy_u, "Step function file (.json or .csv)")->required();
  e_step->add_option("--deltas", deltas, "Deltas");
  e_step->add_flag("--json", energy_json, "Emit JSON");
  auto* e_geom = energy_cmd->add_subcommand("geometric", "Geometric constants G_d");
  e_geom->add_option("--d", dims, "Dimensions: 1..4 or a list");
  e_geom->add_option("--samples", samples, "Monte-Carlo samples for d >= 4");
  e_geom->add_option("--seed", seed, "Monte-Carlo seed");
  e_geom->add_flag("--json", energy_json, "Emit JSON");

  try {
    std::vector<std::string> args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (law_cmd->parsed()) {
      if (!law_report.empty()) law_args.report = split(law_report, ',');
      for (const auto& s : split(probe_text, ',')) law_args.probes.push_back(parse_double(s));
      return cmd_law(law_args, out);
    }
    if (min_cmd->parsed()) return cmd_minprob(min_args, out);
    if (verify_cmd->parsed()) {
      auto tol_or = [&](double d) { return tolerance >= 0.0 ? tolerance : d; };
      if (v_rearrange->parsed()) return emit_suite(rearrangement_suite(count ? count : 1000, seed, tol_or(1e-10)), verify_json, out);
      if (v_telescope->parsed()) return emit_suite(telescopic_suite(count ? count : 10000, seed, tol_or(1e-10)), verify_json, out);
      if (v_domination->parsed()) return emit_suite(domination_suite(points, tol_or(1e-12)), verify_json, out);
      if (v_chain->parsed()) return emit_suite(chain_suite(count ? count : 500, seed, tol_or(1e-10)), verify_json, out);
      if (v_strip->parsed()) return emit_suite(strip_suite(count ? count : 200, seed, tol_or(1e-12)), verify_json, out);
    }
    if (bounds_cmd->parsed()) {
      if (b_psi->parsed()) {
        std::vector<BoundReport> reports;
        const auto ms = parse_int_list(m_range);
        if (format == "csv") {
          int status = 0;
          out << "m,N_exact,N,K_lower\n";
          for (int m : ms) {
            const auto r = psi_bound(m);
            if (!(r.K_lower > 0.0) || r.K_lower > 1.0 + 1e-12) status = 1;
            out << m << "," << (r.N_exact ? to_string(*r.N_exact) : "") << "," << fmt(r.N) << "," << fmt(r.K_lower) << "\n";
          }
          return status;
        }
        for (int m : ms) reports.push_back(psi_bound(m));
        return emit_reports(reports, format, out);
      }
      if (b_theta->parsed()) return emit_reports({theta_bound(m_cap)}, format, out);
      if (b_zeta->parsed()) {
        const auto law = parse_law_spec(bounds_spec);
        const auto* z = std::get_if<law::DyadicAffine>(&law.variant());
        if (!z) throw ConfigError("bounds zeta needs a zeta:@file.json spec");
        return emit_reports({zeta_bound(*z)}, format, out);
      }
      if (b_law->parsed()) return emit_reports({bound_for_law(parse_law_spec(bounds_spec), n_max)}, format, out);
      if (b_counter->parsed()) {
        const auto r = counterexample_table(eps);
        if (verify_json) {
          emit_json(out, r.to_json());
        } else {
          out << "quantity,value\n";
          out << "c2," << to_string(r.c2) << "\n";
          out << "N_psi," << fmt(r.N_psi) << "\n";
          out << "K_psi_lower," << fmt(r.K_psi_lower) << "\n";
          out << "eps," << fmt(r.eps) << "\n";
          out << "N_phi_eps," << fmt(r.N_phi_eps) << "\n";
          out << "K_phi_eps_limit_external_claim," << fmt(r.external_limit) << "\n";
          out << "phi_eps_dominates," << r.phi_eps_dominates << "\n";
          out << "min_gap_on_unit_interval," << fmt(r.min_gap) << "\n";
          out << "strict_gap," << r.strict_gap << "\n";
        }
        return r.phi_eps_dominates && r.strict_gap ? 0 : 1;
      }
    }
    if (energy_cmd->parsed()) {
      if (e_pointwise->parsed()) {
        const auto law = parse_law_spec(energy_law);
        const auto f = named_function(energy_u);
        const double N = scale_factor(law).value;
        const double tv = total_variation(f, 0.0, 1.0);
        const double target = 2.0 * N * tv;
        json rows = json::array();
        if (!energy_json) out << "delta,value,method,error_estimate,ratio\n";
        for (double d : parse_delta_list(deltas)) {
          const auto r = lambda_quad(law, f, {0.0, 1.0}, d, {tol});
          if (energy_json)
            rows.push_back({{"delta", d}, {"value", r.value}, {"method", to_string(r.method)}, {"error_estimate", r.error_estimate}, {"ratio", r.value / target}});
          else
            out << fmt(d) << "," << fmt(r.value) << "," << to_string(r.method) << "," << fmt(r.error_estimate) << ","
                << fmt(r.value / target) << "\n";
        }
        if (energy_json) emit_json(out, rows);
        return 0;
      }
      if (e_step->parsed()) {
        const auto law = parse_law_spec(energy_law);
        const auto u = load_step_function(energy_u);
        json rows = json::array();
        if (!energy_json) out << "delta,value,method,error_estimate\n";
        for (double d : parse_delta_list(deltas)) {
          const auto r = lambda_step(law, u, d);
          if (energy_json)
            rows.push_back({{"delta", d}, {"value", fmt(r.value)}, {"method", to_string(r.method)}, {"error_estimate", r.error_estimate}});
          else
            out << fmt(d) << "," << fmt(r.value) << "," << to_string(r.method) << "," << fmt(r.error_estimate) << "\n";
        }
        if (energy_json) emit_json(out, rows);
        return 0;
      }
      if (e_geom->parsed()) {
        json rows = json::array();
        if (!energy_json) out << "d,value,method,error_estimate\n";
        for (int d : parse_int_list(dims)) {
          const auto r = geometric_constant(d, samples, seed);
          if (energy_json)
            rows.push_back({{"d", d}, {"value", r.value}, {"method", to_string(r.method)}, {"error_estimate", r.error_estimate}});
          else
            out << d << "," << fmt(r.value) << "," << to_string(r.method) << "," << fmt(r.error_estimate) << "\n";
        }
        if (energy_json) emit_json(out, rows);
        return 0;
      }
    }
  } catch (const BoundError& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const ConvergenceError& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace bvgamma
