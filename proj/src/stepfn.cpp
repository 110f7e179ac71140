#include "bvgamma/stepfn.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace bvgamma {

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : x_(std::move(breakpoints)), v_(std::move(values)) {
  if (v_.empty()) throw std::invalid_argument("a step function needs at least one piece");
  if (x_.size() != v_.size() + 1) throw std::invalid_argument("need exactly one more breakpoint than values");
  for (std::size_t i = 0; i + 1 < x_.size(); ++i)
    if (!(x_[i + 1] > x_[i])) throw std::invalid_argument("breakpoints must be strictly increasing");
  for (double x : x_)
    if (!std::isfinite(x)) throw std::invalid_argument("breakpoints must be finite");
  for (double v : v_)
    if (!std::isfinite(v)) throw std::invalid_argument("values must be finite");
}

double StepFunction::operator()(double x) const {
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  if (it == x_.begin()) return v_.front();
  const std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
  return v_[std::min(i, v_.size() - 1)];
}

bool StepFunction::nondecreasing() const { return std::is_sorted(v_.begin(), v_.end()); }

StepFunction canonicalize(const StepFunction& u) {
  std::vector<double> x{u.breakpoints().front()};
  std::vector<double> v;
  for (std::size_t i = 0; i < u.pieces(); ++i) {
    if (!v.empty() && v.back() == u.values()[i]) {
      x.back() = u.breakpoints()[i + 1];
    } else {
      v.push_back(u.values()[i]);
      x.push_back(u.breakpoints()[i + 1]);
    }
  }
  return StepFunction(std::move(x), std::move(v));
}

StepFunction truncate(const StepFunction& u, double A, double B) {
  if (!(A < B)) throw std::invalid_argument("truncation needs A < B");
  std::vector<double> v = u.values();
  for (double& y : v) y = std::clamp(y, A, B);
  return StepFunction(u.breakpoints(), std::move(v));
}

StepFunction segment(const StepFunction& u, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("segmentation step must be positive");
  std::vector<double> v = u.values();
  for (double& y : v) y = delta * std::floor(y / delta);
  return StepFunction(u.breakpoints(), std::move(v));
}

std::vector<std::pair<double, double>> level_measures(const StepFunction& u) {
  std::map<double, double> m;
  for (std::size_t i = 0; i < u.pieces(); ++i) m[u.values()[i]] += u.length(i);
  return {m.begin(), m.end()};
}

StepFunction rearrange(const StepFunction& u) {
  const auto levels = level_measures(u);
  std::vector<double> x{u.left()};
  std::vector<double> v;
  double pos = u.left();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    pos += levels[i].second;
    v.push_back(levels[i].first);
    x.push_back(i + 1 == levels.size() ? u.right() : pos);
  }
  return StepFunction(std::move(x), std::move(v));
}

double oscillation(const StepFunction& u) {
  const auto [lo, hi] = std::minmax_element(u.values().begin(), u.values().end());
  return *hi - *lo;
}

double total_variation(const StepFunction& u) {
  double tv = 0.0;
  for (std::size_t i = 1; i < u.pieces(); ++i) tv += std::abs(u.values()[i] - u.values()[i - 1]);
  return tv;
}

std::vector<long> lattice_levels(const StepFunction& u, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("lattice step must be positive");
  std::vector<long> out;
  out.reserve(u.pieces());
  for (double v : u.values()) {
    const double q = v / delta;
    const double r = std::round(q);
    if (std::abs(q - r) > 1e-12 * std::max(1.0, std::abs(q)))
      throw std::invalid_argument("value " + std::to_string(v) + " is not on the delta lattice");
    out.push_back(static_cast<long>(r));
  }
  return out;
}

std::vector<double> transitions(const StepFunction& u, double delta) {
  if (!u.nondecreasing()) throw std::invalid_argument("transitions need a nondecreasing step function");
  const auto lv = lattice_levels(u, delta);
  std::vector<double> x;
  for (std::size_t i = 1; i < lv.size(); ++i)
    for (long j = lv[i - 1]; j < lv[i]; ++j) x.push_back(u.breakpoints()[i]);
  return x;
}

LengthTuple gaps(const StepFunction& u, double delta) {
  const auto x = transitions(u, delta);
  LengthTuple out;
  for (std::size_t i = 1; i < x.size(); ++i) out.push_back(x[i] - x[i - 1]);
  return out;
}

StepFunction staircase(const LengthTuple& lengths, double delta, double base, double tail) {
  if (!(delta > 0.0) || !(tail > 0.0)) throw std::invalid_argument("staircase needs delta > 0 and tail > 0");
  const double b = delta * std::round(base / delta);
  std::vector<double> x{-tail, 0.0};
  std::vector<double> v{b};
  long level = 1;
  double pos = 0.0;
  for (double len : lengths) {
    if (!(len >= 0.0) || !std::isfinite(len)) throw std::invalid_argument("lengths must be finite and >= 0");
    if (len == 0.0) {
      ++level;
      continue;
    }
    v.push_back(b + delta * static_cast<double>(level));
    pos += len;
    x.push_back(pos);
    ++level;
  }
  v.push_back(b + delta * static_cast<double>(level));
  x.push_back(pos + tail);
  return StepFunction(std::move(x), std::move(v));
}

nlohmann::json to_json(const StepFunction& u) {
  return nlohmann::json{{"breakpoints", u.breakpoints()}, {"values", u.values()}};
}

StepFunction step_function_from_json(const nlohmann::json& j) {
  return StepFunction(j.at("breakpoints").get<std::vector<double>>(), j.at("values").get<std::vector<double>>());
}

namespace {

bool parse_double(std::string_view s, double& out) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) return false;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

}  // namespace

StepFunction step_function_from_csv(std::string_view text) {
  std::vector<double> x, v;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto comma = line.find(',');
    double a = 0.0, b = 0.0;
    const bool ok = comma != std::string::npos && parse_double(std::string_view(line).substr(0, comma), a) &&
                    parse_double(std::string_view(line).substr(comma + 1), b);
    if (!ok) {
      if (first) {
        first = false;
        continue;
      }
      throw std::invalid_argument("malformed CSV row '" + line + "'");
    }
    first = false;
    x.push_back(a);
    v.push_back(b);
  }
  if (x.size() < 2) throw std::invalid_argument("CSV step function needs at least two rows");
  v.pop_back();
  return StepFunction(std::move(x), std::move(v));
}

}  // namespace bvgamma
