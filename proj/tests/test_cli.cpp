#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include <elastic_landau/cli.hpp>
#include <elastic_landau/error.hpp>

using namespace elastic_landau;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("spectrum csv") {
  const auto r = invoke({"spectrum", "--omega", "0.1", "--phi-ac", "1.5707963267948966", "--n-max", "0",
                         "--l-min", "0", "--l-max", "0", "--s-set", "1"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"n", "l", "s", "phi_ac", "method", "energy"});
  CHECK(rows[1][4] == "analytic");
  CHECK(std::stod(rows[1][5]) == doctest::Approx(0.65125).epsilon(1e-14));
}

TEST_CASE("unbound system exits 2") {
  const auto cfg = temp_file("el_unbound.json", R"({"omega": 0.0, "k": 1.0})");
  const auto r = invoke({"spectrum", "--config", cfg});
  CHECK(r.code == 2);
  CHECK(r.err.find("unbound") != std::string::npos);
  CHECK(r.err.find("free") != std::string::npos);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

TEST_CASE("validation errors exit 1") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"bogus"}).code == 1);
  CHECK(invoke({"spectrum", "--m", "-1"}).code == 1);
  CHECK(invoke({"spectrum", "--s-set", "2"}).code == 1);
  CHECK(invoke({"spectrum", "--format", "xml"}).code == 1);
  CHECK(invoke({"hardwall", "--omega", "0.1"}).code == 1);  // no wall radius
  CHECK(invoke({"spectrum", "--config", "/nonexistent/c.json"}).code == 1);

  const auto unknown = temp_file("el_unknown.json", R"({"omega": 0.1, "colour": 3})");
  const auto r = invoke({"spectrum", "--config", unknown});
  CHECK(r.code == 1);
  CHECK(r.err.find("colour") != std::string::npos);

  const auto typed = temp_file("el_typed.json", R"({"n_max": "two"})");
  CHECK(invoke({"spectrum", "--config", typed}).code == 1);
  const auto broken = temp_file("el_broken.json", R"({"omega": )");
  CHECK(invoke({"spectrum", "--config", broken}).code == 1);
}

TEST_CASE("config values and flag overrides") {
  cli::RunConfig cfg;
  cli::apply_config_json(nlohmann::json::parse(R"({
    "m": 2.0, "omega": 0.2, "rho_b": 5.0, "n_max": 1, "l_min": -1, "l_max": 3, "s_set": [-1],
    "phi_sweep": {"start": 0.0, "stop": 1.0, "steps": 5}, "occupation": [[0, 1, 1], [1, -1, -1]],
    "output_format": "json", "one_sided": true
  })"), cfg);
  CHECK(cfg.params.m == 2.0);
  CHECK(cfg.rho_b == 5.0);
  CHECK(cfg.s_set == std::vector<Spin>{Spin::down});
  CHECK(cfg.phi_sweep->steps == 5);
  CHECK(cfg.occupation->size() == 2);
  CHECK(cfg.output_format == cli::OutputFormat::json);
  CHECK_NOTHROW(cfg.validate());
  CHECK_THROWS_AS(cli::apply_config_json(nlohmann::json::parse(R"({"phi_sweep": {"start": 0, "end": 1}})"), cfg),
                  DomainError);

  const auto file = temp_file("el_override.json", R"({"omega": 0.2, "n_max": 0, "l_min": 0, "l_max": 0, "s_set": [1]})");
  const auto r = invoke({"spectrum", "--config", file, "--omega", "0.1"});
  REQUIRE(r.code == 0);
  CHECK(std::stod(parse_csv(r.out)[1][5]) == doctest::Approx(0.1 + 1.05 * 1.05 / 2).epsilon(1e-14));

  SUBCASE("burgers vector and density define omega") {
    const auto b = invoke({"spectrum", "--b-z", "0.2", "--areal-density", "1", "--n-max", "0", "--l-min", "0",
                           "--l-max", "0", "--s-set", "1"});
    REQUIRE(b.code == 0);
    CHECK(std::stod(parse_csv(b.out)[1][5]) == doctest::Approx(0.1 + 1.05 * 1.05 / 2).epsilon(1e-14));
  }
}

TEST_CASE("sweep rows are periodic under the l shift") {
  const auto cfg = temp_file("el_sweep.json", R"({
    "omega": 0.1, "n_max": 1, "l_min": -3, "l_max": 3,
    "phi_sweep": {"start": 0.0, "stop": 12.566370614359172, "steps": 9}
  })");
  const auto r = invoke({"sweep", "--config", cfg});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  const std::size_t per_phase = 2 * 7 * 2;
  REQUIRE(rows.size() == 1 + 9 * per_phase);

  std::map<std::tuple<int, int, int, int>, double> energy;  // (phase index, n, l, s)
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const int step = static_cast<int>((i - 1) / per_phase);
    energy[{step, std::stoi(rows[i][0]), std::stoi(rows[i][1]), std::stoi(rows[i][2])}] = std::stod(rows[i][5]);
  }
  int compared = 0;
  for (const auto& [key, e] : energy) {
    const auto [step, n, l, s] = key;
    if (step + 4 > 8) continue;
    const auto partner = energy.find({step, n, l + s, s});
    if (partner == energy.end()) continue;
    CHECK(std::abs(energy.at({step + 4, n, l, s}) - partner->second) <= 1e-12);
    ++compared;
  }
  CHECK(compared > 100);
}

TEST_CASE("current output") {
  const auto r = invoke({"current", "--omega", "0.1", "--phi-ac", "1.5707963267948966", "--occupation",
                         "0,0,1;0,-1,1"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  CHECK(rows[0] == std::vector<std::string>{"n", "l", "s", "phi_ac", "contribution", "total"});
  REQUIRE(rows.size() == 3);
  CHECK(std::stod(rows[1][5]) == doctest::Approx(0.1 / std::numbers::pi).epsilon(1e-14));

  const auto kink = invoke({"current", "--omega", "0.1", "--phi-ac", "0", "--occupation", "0,0,1"});
  CHECK(kink.code == 2);

  const auto sided = invoke({"current", "--omega", "0.1", "--phi-ac", "0", "--occupation", "0,0,1", "--one-sided"});
  REQUIRE(sided.code == 0);
  const auto srows = parse_csv(sided.out);
  CHECK(srows[0].back() == "right");
  CHECK(std::stod(srows[1][6]) == doctest::Approx(0.1 / std::numbers::pi));
  CHECK(std::stod(srows[1][7]) == 0.0);
}

TEST_CASE("geometry-verify") {
  const auto r = invoke({"geometry-verify", "--omega", "0.1"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() > 1);
  CHECK(rows[1][0] == "S0");
  CHECK(std::stod(rows[1][1]) == doctest::Approx(-0.4).epsilon(1e-7));
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].back() == "PASS");
}

TEST_CASE("oracle-verify json") {
  const auto r = invoke({"oracle-verify", "--omega", "0.05", "--phi-ac", "1.8849555921538759", "--n-max", "1",
                         "--l-min", "-1", "--l-max", "1", "--points", "1000", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "oracle-verify");
  CHECK(doc["passed"] == true);
  CHECK(doc["rows"].size() == 12);
  CHECK(doc["rows"][0]["status"] == "PASS");
}

TEST_CASE("hardwall and phase commands, output file, determinism") {
  const std::vector<std::string> args{"hardwall", "--omega", "0.05", "--rho-b", "8", "--method", "exact",
                                      "--n-max", "1", "--phi-ac", "0.4"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(parse_csv(a.out)[1][4] == "hardwall_exact");

  const auto path = (std::filesystem::temp_directory_path() / "el_out.csv").string();
  auto with_out = args;
  with_out.insert(with_out.end(), {"--out", path});
  REQUIRE(invoke(with_out).out.empty());
  std::ifstream in(path);
  const std::string file((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(file == a.out);

  const auto phase = invoke({"phase", "--mu", "1", "--lambda", "0.25", "--l-min", "0", "--l-max", "0", "--s-set", "1"});
  REQUIRE(phase.code == 0);
  CHECK(parse_csv(phase.out)[0] == std::vector<std::string>{"l", "s", "phi_ac", "gamma"});
  CHECK(std::stod(parse_csv(phase.out)[1][3]) == doctest::Approx(0.25).epsilon(1e-15));
}
