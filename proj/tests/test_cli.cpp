// End-to-end checks of the command-line tool: spawns the built binary and
// inspects exit codes and emitted files.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

using nlohmann::json;

const std::string kCli = HYPERWALK_CLI_PATH;
const std::string kData = HYPERWALK_DATA_DIR;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = kCli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 512> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
    r.output.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const std::string& name) {
  return std::string(HYPERWALK_TMP_DIR) + "/" + name;
}

std::vector<std::array<std::string, 3>> parse_csv(const std::string& text) {
  std::vector<std::array<std::string, 3>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("step,", 0) == 0) continue;
    std::array<std::string, 3> row;
    std::stringstream ls(line);
    std::getline(ls, row[0], ',');
    std::getline(ls, row[1], ',');
    std::getline(ls, row[2], ',');
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST_CASE("simulate emits a deterministic distribution table") {
  const auto r = run_cli("simulate --spec " + kData +
                         "/line_identity.json --steps 3 --state "
                         "'{\"coin\": 0, \"position\": 5}'");
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.output);
  CHECK(rows.size() == 4 * 8);  // steps 0..3, eight positions each

  double mass_at_2 = 0.0;
  for (const auto& row : rows)
    if (row[0] == "3" && row[1] == "2") mass_at_2 = std::stod(row[2]);
  CHECK(mass_at_2 == 1.0);

  const auto again = run_cli("simulate --spec " + kData +
                             "/line_identity.json --steps 3 --state "
                             "'{\"coin\": 0, \"position\": 5}'");
  CHECK(again.output == r.output);  // byte-identical
}

TEST_CASE("hadamard line walk puts half the mass on each side") {
  const auto r = run_cli("simulate --spec " + kData +
                         "/line_hadamard.json --steps 1 --state "
                         "'{\"coin\": 0, \"position\": 7}'");
  REQUIRE(r.exit_code == 0);
  int halves = 0;
  for (const auto& row : parse_csv(r.output))
    if (row[0] == "1" && std::abs(std::stod(row[2]) - 0.5) < 1e-12) ++halves;
  CHECK(halves == 2);
}

TEST_CASE("simulated hyperwalk distributions sum to one per step") {
  const auto r = run_cli("simulate --spec " + kData +
                         "/fig3_hyperwalk.json --steps 5 --state "
                         "'{\"vertex\": 0, \"edge\": 0}'");
  REQUIRE(r.exit_code == 0);
  std::array<double, 6> sums{};
  for (const auto& row : parse_csv(r.output))
    sums[std::stoul(row[0])] += std::stod(row[2]);
  for (double s : sums) CHECK(s == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("transform reports the staggered incidence size") {
  const auto r = run_cli("transform --spec " + kData +
                         "/fig3_generalized_hyperwalk.json "
                         "--transform staggered-from-generalized-hyperwalk");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.output);
  CHECK(doc["sizes"]["vertices"] == 7);
  CHECK(doc["sizes"]["basis"] == 7);
  CHECK(doc["target"]["model"] == "staggered");
}

TEST_CASE("the worked size chain reproduces 7, 21, 168, 336") {
  const auto r = run_cli(
      "chain-size --spec " + kData +
      "/fig3_generalized_hyperwalk.json --chain "
      "staggered-from-generalized-hyperwalk,generalized-coined-from-staggered,"
      "coined-from-generalized-coined,szegedy-from-coined");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.output);
  const auto& links = doc["chain"];
  REQUIRE(links.size() == 5);
  CHECK(links[1]["vertices"] == 7);
  CHECK(links[2]["vertices"] == 21);
  CHECK(links[2]["operators"] == 8);
  CHECK(links[3]["vertices"] == 168);
  CHECK(links[4]["vertices"] == 336);
}

TEST_CASE("verify passes the all-vertex hyperedge construction strongly") {
  const auto r = run_cli("verify --spec " + kData +
                         "/staggered_small.json "
                         "--transform generalized-hyperwalk-from-staggered "
                         "--steps 8 --seed 5");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.output);
  CHECK(doc["verdict"] == "pass");
  CHECK(doc["strong"] == true);
}

TEST_CASE("verify catches a corrupted transform document") {
  const std::string result_path = temp_path("fig3_transform.json");
  const auto emit = run_cli("transform --spec " + kData +
                            "/fig3_hyperwalk.json --transform coined-from-hyperwalk "
                            "--out " + result_path);
  REQUIRE(emit.exit_code == 0);

  const auto ok = run_cli("verify --spec " + kData +
                          "/fig3_hyperwalk.json --result " + result_path +
                          " --steps 6 --seed 3");
  CHECK(ok.exit_code == 0);

  json doc;
  {
    std::ifstream in(result_path);
    in >> doc;
  }
  // Swap two rows of the target coin: still unitary, different walk.
  auto& coin = doc["target"]["coin_schedule"][0];
  std::swap(coin[0], coin[1]);
  const std::string corrupted_path = temp_path("fig3_transform_corrupted.json");
  {
    std::ofstream out(corrupted_path);
    out << doc.dump();
  }
  const auto bad = run_cli("verify --spec " + kData +
                           "/fig3_hyperwalk.json --result " + corrupted_path +
                           " --steps 6 --seed 3");
  CHECK(bad.exit_code == 5);
}

TEST_CASE("parse failures exit with code 2") {
  const std::string garbage = temp_path("garbage.json");
  {
    std::ofstream out(garbage);
    out << "{not json";
  }
  CHECK(run_cli("simulate --spec " + garbage + " --steps 1").exit_code == 2);
  CHECK(run_cli("simulate --spec " + temp_path("missing.json") + " --steps 1")
            .exit_code == 2);
}

TEST_CASE("invariant violations exit with code 3") {
  const std::string bad_spec = temp_path("bad_tessellation.json");
  {
    std::ofstream out(bad_spec);
    out << R"({
      "model": "staggered",
      "structure": {"vertices": 3, "edges": [[0, 1], [1, 2]]},
      "tessellations": [{"polygons": [[0, 2], [1]]}],
      "amplitudes": "uniform"
    })";
  }
  CHECK(run_cli("simulate --spec " + bad_spec + " --steps 1").exit_code == 3);
}

TEST_CASE("inapplicable transforms exit with code 4") {
  const auto r = run_cli("transform --spec " + kData +
                         "/staggered_small.json --transform szegedy-from-coined");
  CHECK(r.exit_code == 4);
}

TEST_CASE("info summarizes a walk") {
  const auto r = run_cli("info --spec " + kData + "/fig3_hyperwalk.json");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("model: hyperwalk") != std::string::npos);
  CHECK(r.output.find("basis states: 7") != std::string::npos);
}
