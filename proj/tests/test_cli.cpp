#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "edp/commands.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

const fs::path kTmp = fs::temp_directory_path() / "edp_cli_tests";

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RunResult run(const std::string& args) {
  fs::create_directories(kTmp);
  const fs::path out = kTmp / "stdout.txt";
  const std::string cmd = std::string(EDP_DIRAC_BIN) + " " + args + " > " +
                          out.string() + " 2> " + (kTmp / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return {status == -1 ? -1 : (status >> 8) & 0xff, slurp(out)};
}

fs::path write_config(const std::string& name, const nlohmann::json& j) {
  fs::create_directories(kTmp);
  const fs::path p = kTmp / name;
  std::ofstream(p) << j.dump(2);
  return p;
}

nlohmann::json linear_config() {
  return {{"potential",
           {{"lambda", {{"kind", "linear"}, {"alpha", 1.0}}},
            {"mu", {{"kind", "constant"}, {"value", 1.5}}}}},
          {"k_y", 2.0},
          {"epsilon", 1},
          {"n_max", 3}};
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("config validation errors") {
  auto j = linear_config();
  j.erase("k_y");
  CHECK_THROWS_AS(edp::run_config_from_json(j), edp::ConfigError);

  j = linear_config();
  j["grid"] = {{"points", 1}};
  CHECK_THROWS_AS(edp::run_config_from_json(j), edp::ConfigError);

  j = linear_config();
  j["epsilon"] = 2;
  CHECK_THROWS_AS(edp::run_config_from_json(j), edp::ConfigError);

  j = linear_config();
  j["output"] = {{"format", "xml"}};
  CHECK_THROWS_AS(edp::run_config_from_json(j), edp::ConfigError);

  j = linear_config();
  j["potential"]["lambda"]["kind"] = "cubic";
  CHECK_THROWS_AS(edp::run_config_from_json(j), edp::ConfigError);

  CHECK_NOTHROW(edp::run_config_from_json(linear_config()));
}

TEST_CASE("level list parsing") {
  CHECK(edp::parse_level_list("0,2,5") == std::vector<int>{0, 2, 5});
  CHECK(edp::parse_level_list("1..4") == std::vector<int>{1, 2, 3, 4});
  CHECK(edp::parse_level_list("").empty());
  CHECK_THROWS_AS(edp::parse_level_list("3..1"), edp::ConfigError);
  CHECK_THROWS_AS(edp::parse_level_list("a,b"), edp::ConfigError);
}

TEST_CASE("spectrum emits one row per level plus a header") {
  auto j = linear_config();
  j["n_max"] = 19;
  const auto cfg = write_config("spectrum.json", j);
  const auto r = run("spectrum --config " + cfg.string());
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 21);
  CHECK(r.out.rfind("n,E,kappa,", 0) == 0);
}

TEST_CASE("spectrum output is deterministic") {
  const auto cfg = write_config("det.json", linear_config());
  const auto a = run("spectrum --config " + cfg.string() + " --verify");
  const auto b = run("spectrum --config " + cfg.string() + " --verify");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("json spectrum round-trips byte for byte") {
  auto j = linear_config();
  j["output"] = {{"format", "json"},
                 {"path", (kTmp / "spectrum_out.json").string()}};
  const auto cfg = write_config("json.json", j);
  const auto r = run("spectrum --config " + cfg.string());
  CHECK(r.exit_code == 0);
  const std::string written = slurp(kTmp / "spectrum_out.json");
  CHECK(edp::reemit_spectrum_json((kTmp / "spectrum_out.json").string()) ==
        written);
  const auto parsed = nlohmann::json::parse(written);
  REQUIRE(parsed.size() == 4);
  CHECK(parsed[0]["n"] == 0);
  CHECK(parsed[0]["E"].get<double>() == doctest::Approx(1.8228756555322954));
}

TEST_CASE("empty density request emits only the header") {
  const auto cfg = write_config("density.json", linear_config());
  const auto r = run("density --config " + cfg.string() + " --levels \"\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "x\n");
}

TEST_CASE("density rows cover the grid and are peak-normalized") {
  auto j = linear_config();
  j["grid"] = {{"x_min", -6.0}, {"x_max", 6.0}, {"points", 121}};
  const auto cfg = write_config("density2.json", j);
  const auto r = run("density --config " + cfg.string() + " --levels 0,1");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 122);
  std::istringstream is(r.out);
  std::string header;
  std::getline(is, header);
  CHECK(header == "x,density_plus_n0,density_minus_n0,"
                  "density_plus_n1,density_minus_n1");
  double peak = 0.0;
  for (std::string line; std::getline(is, line);) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    peak = std::max(peak, std::stod(line.substr(c1 + 1, c2 - c1 - 1)));
  }
  CHECK(peak == doctest::Approx(1.0));
}

TEST_CASE("norm reports positive values for the example") {
  const auto cfg = write_config("norm.json", linear_config());
  const auto r = run("norm --config " + cfg.string() + " --levels 0..2");
  CHECK(r.exit_code == 0);
  std::istringstream is(r.out);
  std::string header;
  std::getline(is, header);
  int rows = 0;
  for (std::string line; std::getline(is, line); ++rows) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const auto c3 = line.find(',', c2 + 1);
    CHECK(std::stod(line.substr(c2 + 1, c3 - c2 - 1)) > 0.0);
  }
  CHECK(rows == 3);
}

TEST_CASE("bad config exits with code 2") {
  auto j = linear_config();
  j.erase("k_y");
  const auto cfg = write_config("bad.json", j);
  CHECK(run("spectrum --config " + cfg.string()).exit_code == 2);
  CHECK(run("spectrum --config " + (kTmp / "missing.json").string()).exit_code ==
        2);
  CHECK(run("spectrum").exit_code == 2);  // missing required --config
}

TEST_CASE("solver failures exit with code 3") {
  const auto cfg = write_config("shelf.json", linear_config());
  // k_y below the constant mu shelf: no real decay rate anywhere
  CHECK(run("spectrum --config " + cfg.string() + " --k-y 1.0").exit_code == 3);
}

TEST_CASE("verify fails on an inadmissible profile") {
  auto j = linear_config();
  j["potential"]["mu"] = {{"kind", "linear"}, {"alpha", 0.5}};
  const auto cfg = write_config("inadmissible.json", j);
  const auto r = run("verify --config " + cfg.string());
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("FAIL sign_condition_admissible") != std::string::npos);
}

TEST_CASE("verify passes on the linear example") {
  auto j = linear_config();
  j["n_max"] = 1;
  const auto cfg = write_config("verify.json", j);
  const auto r = run("verify --config " + cfg.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS n1_oracle_energy") != std::string::npos);
}
