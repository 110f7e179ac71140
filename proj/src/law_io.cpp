#include "bvgamma/law_io.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>
#include <string>

namespace bvgamma {

namespace {

std::string trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<Rational> parse_list(std::string_view body) {
  const std::string s = trimmed(body);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("expected a bracketed list, got '" + s + "'");
  std::vector<Rational> out;
  std::string_view inner(s.data() + 1, s.size() - 2);
  while (!inner.empty()) {
    const auto comma = inner.find(',');
    out.push_back(parse_rational(inner.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  if (out.empty()) throw std::invalid_argument("empty weight list");
  return out;
}

int parse_positive_int(std::string_view s) {
  const Rational r = parse_rational(s);
  if (r < 1 || boost::multiprecision::denominator(r) != 1 || r > 1000000)
    throw std::invalid_argument("expected a positive integer, got '" + std::string(s) + "'");
  return r.convert_to<int>();
}

law::DyadicAffine zeta_from_json(const nlohmann::json& j) {
  std::map<int, double> nodes;
  for (const auto& pair : j.at("f")) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("f entries must be [z, f(z)] pairs");
    const int z = pair[0].get<int>();
    if (!nodes.emplace(z, pair[1].get<double>()).second) throw std::invalid_argument("duplicate z in f");
  }
  const std::string left = j.value("left", "zero-left");
  const std::string right = j.value("right", "constant-right");
  if (right != "constant-right") throw std::invalid_argument("unsupported right fill '" + right + "'");
  law::LeftFill fill;
  if (left == "zero-left")
    fill = law::LeftFill::zero;
  else if (left == "geometric-left")
    fill = law::LeftFill::geometric;
  else
    throw std::invalid_argument("unsupported left fill '" + left + "'");
  return law::DyadicAffine(std::move(nodes), fill, j.value("left_ratio", 4.0));
}

std::vector<std::string> rational_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

std::vector<Rational> rationals_from_json(const nlohmann::json& j) {
  std::vector<Rational> out;
  for (const auto& x : j) {
    if (x.is_string())
      out.push_back(parse_rational(x.get<std::string>()));
    else if (x.is_number_integer())
      out.push_back(Rational(x.get<long long>()));
    else
      out.push_back(from_double(x.get<double>()));
  }
  return out;
}

}  // namespace

InteractionLaw parse_law_spec(std::string_view text) {
  const std::string spec = trimmed(text);
  if (spec == "phi1") return InteractionLaw::model(1);
  if (spec == "theta") return InteractionLaw::affine_theta();
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("unknown law spec '" + spec + "'");
  const std::string head = spec.substr(0, colon);
  const std::string_view rest = std::string_view(spec).substr(colon + 1);
  if (head == "phi") return InteractionLaw::model(parse_positive_int(rest));
  if (head == "pca") return InteractionLaw::piecewise_constant(parse_list(rest));
  if (head == "pca2") return InteractionLaw::packaged_dyadic(parse_list(rest));
  if (head == "psi") return psi(parse_positive_int(rest));
  if (head == "phieps") return phi_eps(to_double(parse_rational(rest)));
  if (head == "zeta") {
    if (rest.empty() || rest.front() != '@') throw std::invalid_argument("zeta spec must be zeta:@file.json");
    const std::string path(rest.substr(1));
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    const auto j = nlohmann::json::parse(in);
    if (j.contains("variant")) {
      auto law = law_from_json(j);
      if (!std::holds_alternative<law::DyadicAffine>(law.variant()))
        throw std::invalid_argument("zeta file must describe a DyadicAffine law");
      return law;
    }
    return InteractionLaw::dyadic_affine(zeta_from_json(j));
  }
  throw std::invalid_argument("unknown law spec '" + spec + "'");
}

nlohmann::json law_to_json(const InteractionLaw& law) {
  using nlohmann::json;
  const auto& v = law.variant();
  if (const auto* m = std::get_if<law::Model>(&v)) return json{{"variant", "Model"}, {"k", m->k}};
  if (const auto* p = std::get_if<law::PiecewiseConstant>(&v))
    return json{{"variant", "PiecewiseConstant"}, {"weights", rational_strings(p->weights())}};
  if (const auto* p = std::get_if<law::PackagedDyadic>(&v))
    return json{{"variant", "PackagedDyadic"}, {"packages", rational_strings(p->packages)}};
  if (std::holds_alternative<law::AffineTheta>(v)) return json{{"variant", "AffineTheta"}};
  if (const auto* z = std::get_if<law::DyadicAffine>(&v)) {
    json f = json::array();
    for (const auto& [k, val] : z->nodes()) f.push_back(json::array({k, val}));
    json out{{"variant", "DyadicAffine"}, {"f", f}, {"right", "constant-right"}};
    if (z->left_fill() == law::LeftFill::zero) {
      out["left"] = "zero-left";
    } else {
      out["left"] = "geometric-left";
      out["left_ratio"] = z->left_ratio();
    }
    return out;
  }
  if (const auto* s = std::get_if<law::Scaled>(&v))
    return json{{"variant", "Scaled"}, {"inner", law_to_json(*s->inner)}, {"alpha", s->alpha}, {"beta", s->beta}};
  const auto& tab = std::get<law::Tabulated>(v);
  if (const auto* e = std::get_if<law::PhiEpsSource>(&tab.source)) return json{{"variant", "PhiEps"}, {"eps", e->eps}};
  if (const auto* s = std::get_if<law::SampleSource>(&tab.source))
    return json{{"variant", "Tabulated"},
                {"t", s->t},
                {"values", s->values},
                {"rule", s->rule == law::SampleSource::Rule::step ? "step" : "linear"}};
  throw std::invalid_argument("law '" + tab.name + "' is closure-backed and cannot be serialized");
}

InteractionLaw law_from_json(const nlohmann::json& j) {
  const std::string variant = j.at("variant").get<std::string>();
  if (variant == "Model") return InteractionLaw::model(j.at("k").get<int>());
  if (variant == "PiecewiseConstant") return InteractionLaw::piecewise_constant(rationals_from_json(j.at("weights")));
  if (variant == "PackagedDyadic") return InteractionLaw::packaged_dyadic(rationals_from_json(j.at("packages")));
  if (variant == "AffineTheta") return InteractionLaw::affine_theta();
  if (variant == "DyadicAffine") return InteractionLaw::dyadic_affine(zeta_from_json(j));
  if (variant == "Scaled")
    return InteractionLaw::scaled(law_from_json(j.at("inner")), j.at("alpha").get<double>(), j.at("beta").get<double>());
  if (variant == "PhiEps") return phi_eps(j.at("eps").get<double>());
  if (variant == "Tabulated") {
    const std::string rule = j.value("rule", "linear");
    if (rule != "linear" && rule != "step") throw std::invalid_argument("unknown tabulation rule '" + rule + "'");
    return InteractionLaw::from_samples(j.at("t").get<std::vector<double>>(), j.at("values").get<std::vector<double>>(),
                                        rule == "step" ? law::SampleSource::Rule::step : law::SampleSource::Rule::linear);
  }
  throw std::invalid_argument("unknown law variant '" + variant + "'");
}

}  // namespace bvgamma
