#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "bvgamma/cli.hpp"

using namespace bvgamma;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  const char* dir = std::getenv("BVGAMMA_TEST_DATA");
  return std::string(dir ? dir : "tests/data") + "/" + name;
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("range parsing") {
  CHECK(parse_int_list("4..7") == std::vector<int>{4, 5, 6, 7});
  CHECK(parse_int_list("16,32,64") == std::vector<int>{16, 32, 64});
  CHECK(parse_delta_list("1e-1..1e-3") == std::vector<double>{1e-1, 3e-2, 1e-2, 3e-3, 1e-3});
  CHECK(parse_delta_list("0.5,0.25") == std::vector<double>{0.5, 0.25});
  CHECK_THROWS(parse_int_list("7..4"));
  CHECK_THROWS(parse_delta_list("0..1"));
}

TEST_CASE("law") {
  auto r = run({"law", "--spec", "phi1", "--report", "N"});
  CHECK(r.code == 0);
  CHECK(csv(r.out)[1][0] == "1");
  r = run({"law", "--spec", "psi:2", "--report", "N"});
  CHECK(csv(r.out)[1][0] == "11/6");
  CHECK(std::stod(csv(r.out)[1][1]) == doctest::Approx(11.0 / 6).epsilon(1e-15));
  r = run({"law", "--spec", "theta", "--probe", "1.5"});
  CHECK(csv(r.out)[1][1] == "0.5");
  r = run({"law", "--spec", "phi1", "--json"});
  CHECK(r.out.find("\"admissible\"") != std::string::npos);
  r = run({"law", "--spec", "zeta:@" + data("zeta_theta.json"), "--report", "N"});
  CHECK(r.code == 0);
  CHECK(std::stod(csv(r.out)[1][1]) == doctest::Approx(std::numbers::ln2).epsilon(1e-12));
  CHECK(run({"law", "--spec", "bogus"}).code == 2);
  CHECK(run({"law"}).code == 2);
  CHECK(run({"law", "--spec", "phi1", "--report", "nope"}).code == 2);
}

TEST_CASE("minprob") {
  auto r = run({"minprob", "--law", "phi1", "--n", "8"});
  CHECK(r.code == 0);
  const auto rows = csv(r.out);
  CHECK(std::stod(rows[1][1]) == doctest::Approx(7 * std::log(4.0)).epsilon(1e-8));
  r = run({"minprob", "--law", "phi:3", "--n", "12"});
  CHECK(csv(r.out)[1][3] == "period-3");
  r = run({"minprob", "--law", "psi:2", "--n", "16,32,64"});
  const auto psi = csv(r.out);
  REQUIRE(psi.size() == 4);
  double prev = 0;
  for (int i = 1; i <= 3; ++i) {
    const double per = std::stod(psi[i][2]);
    CHECK(per > prev);
    CHECK(per < 4 * std::numbers::ln2);
    CHECK(std::abs(per - 4 * std::numbers::ln2) < std::abs(prev - 4 * std::numbers::ln2));
    prev = per;
  }
  r = run({"minprob", "--law", "phi1", "--n", "6", "--dump-minimizer", "--json"});
  CHECK(r.out.find("\"minimizer\"") != std::string::npos);
  CHECK(run({"minprob", "--law", "theta"}).code == 2);
  CHECK(run({"minprob", "--law", "psi:2", "--n", "20", "--budget", "10"}).code == 1);
}

TEST_CASE("verify") {
  auto r = run({"verify", "rearrange", "--count", "1000", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(std::stod(csv(r.out)[1][3]) >= -1e-10);
  r = run({"verify", "telescope", "--count", "10000"});
  CHECK(r.code == 0);
  CHECK(std::stod(csv(r.out)[1][3]) >= -1e-10);
  CHECK(run({"verify", "chain", "--count", "500"}).code == 0);
  CHECK(run({"verify", "domination"}).code == 0);
  CHECK(run({"verify", "strip", "--count", "50", "--json"}).code == 0);
  CHECK(run({"verify"}).code == 2);
}

TEST_CASE("bounds") {
  auto r = run({"bounds", "psi", "--m", "1..12"});
  CHECK(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 13);
  CHECK(std::stod(rows[12][3]) > 0.9);
  CHECK(rows[2][1] == "11/6");
  r = run({"bounds", "theta"});
  CHECK(r.code == 0);
  CHECK(csv(r.out)[1][3] == "1");
  r = run({"bounds", "zeta", "--spec", "zeta:@" + data("zeta_geometric.json"), "--json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"K_lower\": 1") != std::string::npos);
  r = run({"bounds", "law", "--spec", "pca:[1,1,1]", "--format", "table"});
  CHECK(r.code == 0);
  CHECK(r.out.find("K_lower") != std::string::npos);
  r = run({"bounds", "counterexample", "--eps", "0.01"});
  CHECK(r.code == 0);
  CHECK(r.out.find("c2,6/11") != std::string::npos);
  CHECK(run({"bounds", "zeta", "--spec", "theta"}).code == 2);
}

TEST_CASE("energy") {
  auto r = run({"energy", "pointwise", "--law", "phi1", "--u", "bump", "--deltas", "1e-1..1e-3"});
  CHECK(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 6);
  double prev = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double ratio = std::stod(rows[i][4]);
    CHECK(ratio > prev);
    prev = ratio;
  }
  CHECK(prev > 0.95);
  r = run({"energy", "step", "--u", data("staircase.csv"), "--deltas", "0.1"});
  CHECK(r.code == 0);
  r = run({"energy", "step", "--u", data("jump.json"), "--deltas", "0.1"});
  CHECK(csv(r.out)[1][1] == "inf");
  r = run({"energy", "geometric", "--d", "1..3"});
  CHECK(csv(r.out)[1][1] == "2");
  CHECK(csv(r.out)[2][1] == "4");
  CHECK(run({"energy", "step", "--u", data("missing.json")}).code == 2);
  CHECK(run({"energy", "pointwise", "--deltas", "1e-3", "--tol", "1e-30"}).code == 1);
}

TEST_CASE("config files") {
  auto r = run({"--config", data("minprob_config.json")});
  CHECK(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1][0] == "4");
  // flags on the command line win over the file
  r = run({"minprob", "--n", "9", "--config", data("minprob_config.json")});
  CHECK(csv(r.out)[1][0] == "9");
  CHECK(run({"--config", data("missing.json")}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
