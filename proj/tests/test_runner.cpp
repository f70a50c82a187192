// Copyright 2026 The holoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "holoq/runner.hpp"

using namespace holoq;
namespace fs = std::filesystem;

namespace {

std::string message_of(const std::string& text) {
  try {
    parse_config(text, "cfg.json");
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("holoq_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("config errors name the line and key") {
  const std::string m = message_of("{\n  \"experiment\": \"FIG2A\",\n  \"omega\": 2\n}");
  CHECK(m.find("cfg.json:3:") == 0);
  CHECK(m.find("omega") != std::string::npos);
  CHECK(message_of("{\n \"experiment\": \"FIG9\"\n}").find("cfg.json:2:") == 0);
  CHECK(message_of("{\"experiment\": \"FIG2A\",\n\"alpha\": {\"lo\": 1, \"hi\": 0}}").find("cfg.json:2:") == 0);
  CHECK(message_of("{\"experiment\": \"FIG2A\", \"steps\": -3}").find("steps") != std::string::npos);
  CHECK(message_of("{\"experiment\": ").find("cfg.json:1:") == 0);
  CHECK(message_of("{\"schemes\": [\"B_NHQC\"]}").find("experiment") != std::string::npos);
  CHECK(message_of("{\"experiment\": \"FIG2B\", \"gates\": [\"Y\"]}") != "");
}

TEST_CASE("defaults and canonical form") {
  const ExperimentConfig a = parse_config("{\"experiment\": \"FIG4CD\"}");
  CHECK(a.schemes.size() == 2);
  CHECK(a.gates.size() == 1);
  CHECK(a.transmon.omega0_mhz.values().size() == 26);
  ExperimentConfig b = a;
  b.workers = 8;
  CHECK(config_hash(a) == config_hash(b));
  b.seed = 99;
  CHECK(config_hash(a) != config_hash(b));
  const auto g = parse_config("{\"experiment\": \"FIG2A\"}").gamma_angle.values();
  CHECK(g.size() == 63);
  CHECK(g.front() > 0.0);
  CHECK(g.back() < 2 * kPi);
}

TEST_CASE("results are byte-identical across worker counts") {
  const std::string text =
      "{\"experiment\": \"FIG3_RABI\", \"alpha\": {\"lo\": -0.1, \"hi\": 0.1, \"n\": 5},"
      " \"steps\": 400, \"grid_points\": 1000, \"n_states\": 101}";
  std::string first_csv, first_meta;
  for (int w : {1, 4, 8}) {
    ExperimentConfig c = parse_config(text);
    c.workers = w;
    const fs::path dir = scratch("det" + std::to_string(w));
    for (const auto& r : run_experiment(c)) write_result(r, dir);
    const std::string csv = slurp(dir / "FIG3_RABI.csv");
    const std::string meta = slurp(dir / "FIG3_RABI.meta.json");
    if (w == 1) {
      first_csv = csv;
      first_meta = meta;
      CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
    } else {
      CHECK(csv == first_csv);
      CHECK(meta == first_meta);
    }
    fs::remove_all(dir);
  }
}

TEST_CASE("metadata carries conventions and grid") {
  const auto rs = run_experiment(parse_config("{\"experiment\": \"FIG2A\", \"gamma_angle\": {\"lo\": 0, \"hi\": 6.283185307179586, \"n\": 9}}"));
  REQUIRE(rs.size() == 1);
  const auto& m = rs[0].meta;
  CHECK(m.contains("config_hash"));
  CHECK(m["conventions"].contains("gate-sign"));
  CHECK(m.contains("collapse_set"));
  CHECK(m.contains("beta_mod"));
  CHECK_FALSE(m["config"].contains("workers"));
  CHECK(rs[0].rows.size() == 9);
  CHECK(rs[0].all_pass());
}

TEST_CASE("report round trip") {
  const fs::path dir = scratch("report");
  fs::create_directories(dir);
  CHECK_THROWS(load_results(dir));
  SweepResult r;
  r.name = "FIG2CD";
  r.header = {"x"};
  r.rows = {{"1"}};
  r.meta["experiment"] = "FIG2CD";
  r.targets.push_back(check_abs("F_T", 0.9990, 0.99954, 0.0015));
  r.targets.push_back(check_min("margin", 0.0, -1e-3));
  write_result(r, dir);
  const std::string rep = emit_report(load_results(dir));
  CHECK(rep.find("- F_T target 0.999 +/- 0.0015 achieved 0.99954 PASS") != std::string::npos);
  CHECK(rep.find("- margin target >= 0 achieved -0.001 FAIL") != std::string::npos);
  CHECK(rep.find("Summary: 1/2 targets met") != std::string::npos);
  CHECK_THROWS(emit_report({}));
  fs::remove_all(dir);
}
