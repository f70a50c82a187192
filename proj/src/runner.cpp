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

#include "holoq/runner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "holoq/csv.hpp"
#include "holoq/docs.hpp"

namespace holoq {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kExperimentNames[] = {"FIG2A",         "FIG2B",           "FIG2CD",
                                            "FIG3_RABI",     "FIG3_DETUNING",   "FIG3_DECOHERENCE",
                                            "FIG4CD",        "FIGS1",           "TWOQUBIT",
                                            "VERIFY"};

}  // namespace

std::string to_string(Experiment e) { return kExperimentNames[static_cast<int>(e)]; }

Experiment experiment_from_string(const std::string& s) {
  for (int i = 0; i < 10; ++i)
    if (s == kExperimentNames[i]) return static_cast<Experiment>(i);
  throw ConfigError("unknown experiment '" + s + "'");
}

GateSpec named_gate(const std::string& name) {
  if (name == "T") return {"T", 0.0, 0.0, kPi / 4};
  if (name == "X_HALF") return {"X_HALF", kPi / 2, 0.0, kPi / 2};
  throw ConfigError("unknown gate '" + name + "' (expected T, X_HALF or an object)");
}

std::vector<double> Range::values() const {
  std::vector<double> v;
  if (open) {
    for (int k = 0; k < n; ++k) v.push_back(lo + (hi - lo) * (k + 1) / (n + 1));
  } else if (n == 1) {
    v.push_back(lo);
  } else {
    for (int k = 0; k < n; ++k) v.push_back(lo + (hi - lo) * k / (n - 1));
  }
  return v;
}

TwoQubitParams TwoQubitConfig::params() const {
  constexpr double mhz = 2.0 * kPi;  // rad per microsecond
  TwoQubitParams p;
  p.kappa1 = kappa1_mhz * mhz;
  p.kappa2 = kappa2_mhz * mhz;
  p.delta1 = delta1_mhz * mhz;
  p.g12 = g12_mhz * mhz;
  p.xi1 = xi1;
  p.xi2 = xi2;
  p.beta_mod = setting.beta_mod;
  return p;
}

namespace {

class Reader {
 public:
  Reader(const std::string& text, std::string source) : text_(text), source_(std::move(source)) {}

  // Line of the key path (each key searched after the previous one).
  int line_of(const std::vector<std::string>& path) const {
    std::size_t pos = 0;
    for (const auto& k : path) {
      const std::size_t at = text_.find("\"" + k + "\"", pos);
      if (at == std::string::npos) break;
      pos = at + 1;
    }
    return line_at(pos ? pos - 1 : 0);
  }

  int line_at(std::size_t byte) const {
    byte = std::min(byte, text_.size());
    return 1 + static_cast<int>(std::count(text_.begin(), text_.begin() + static_cast<long>(byte), '\n'));
  }

  [[noreturn]] void fail(const std::vector<std::string>& path, const std::string& msg) const {
    std::string dotted;
    for (const auto& k : path) dotted += (dotted.empty() ? "" : ".") + k;
    throw ConfigError(source_ + ":" + std::to_string(line_of(path)) + ": " +
                      (dotted.empty() ? "" : "'" + dotted + "': ") + msg);
  }
  [[noreturn]] void fail_at(std::size_t byte, const std::string& msg) const {
    throw ConfigError(source_ + ":" + std::to_string(line_at(byte)) + ": " + msg);
  }

  void only_keys(const json& obj, const std::vector<std::string>& path,
                 const std::set<std::string>& allowed) const {
    for (auto it = obj.begin(); it != obj.end(); ++it)
      if (!allowed.count(it.key())) {
        auto p = path;
        p.push_back(it.key());
        fail(p, "unknown key");
      }
  }

  double number(const json& obj, std::vector<std::string> path, double def) const {
    const auto& key = path.back();
    if (!obj.contains(key)) return def;
    const json& v = obj.at(key);
    if (!v.is_number()) fail(path, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(path, "expected a finite number");
    return x;
  }

  int integer(const json& obj, std::vector<std::string> path, int def) const {
    const auto& key = path.back();
    if (!obj.contains(key)) return def;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<int>();
  }

  bool boolean(const json& obj, std::vector<std::string> path, bool def) const {
    const auto& key = path.back();
    if (!obj.contains(key)) return def;
    if (!obj.at(key).is_boolean()) fail(path, "expected true or false");
    return obj.at(key).get<bool>();
  }

  std::string string(const json& obj, std::vector<std::string> path, const std::string& def) const {
    const auto& key = path.back();
    if (!obj.contains(key)) return def;
    if (!obj.at(key).is_string()) fail(path, "expected a string");
    return obj.at(key).get<std::string>();
  }

  const json& object(const json& obj, const std::vector<std::string>& path) const {
    const json& v = obj.at(path.back());
    if (!v.is_object()) fail(path, "expected an object");
    return v;
  }

  Range range(const json& obj, std::vector<std::string> path, Range def) const {
    if (!obj.contains(path.back())) return def;
    const json& o = object(obj, path);
    only_keys(o, path, {"lo", "hi", "n"});
    auto sub = [&](const char* k) {
      auto p = path;
      p.push_back(k);
      return p;
    };
    Range r = def;
    r.lo = number(o, sub("lo"), def.lo);
    r.hi = number(o, sub("hi"), def.hi);
    r.n = integer(o, sub("n"), def.n);
    if (r.n < 1) fail(sub("n"), "must be >= 1");
    if (r.hi < r.lo) fail(path, "range must satisfy lo <= hi");
    if (r.hi == r.lo && r.n > 1 && !r.open) fail(path, "degenerate range with n > 1");
    return r;
  }

 private:
  const std::string& text_;
  std::string source_;
};

template <typename T>
T wrap(const Reader& rd, const std::vector<std::string>& path, T (*conv)(const std::string&),
       const std::string& s) {
  try {
    return conv(s);
  } catch (const ConfigError& e) {
    rd.fail(path, e.what());
  }
}

}  // namespace

ExperimentConfig parse_config(const std::string& text, const std::string& source) {
  Reader rd(text, source);
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    rd.fail_at(e.byte ? e.byte - 1 : 0, std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) rd.fail_at(0, "top level must be an object");
  rd.only_keys(root, {},
               {"experiment", "name", "schemes", "gates", "omega0", "gamma_decoherence",
                "envelope", "grid_points", "steps", "n_states", "time_samples", "alpha", "beta",
                "gamma_angle", "decoherence", "transmon", "two_qubit", "seed", "workers"});

  ExperimentConfig c;
  if (!root.contains("experiment")) rd.fail_at(0, "missing required key 'experiment'");
  c.experiment = wrap(rd, {"experiment"}, &experiment_from_string,
                      rd.string(root, {"experiment"}, ""));
  c.name = rd.string(root, {"name"}, to_string(c.experiment));
  if (c.name.empty() || c.name.find_first_of("/\\") != std::string::npos)
    rd.fail({"name"}, "must be a plain file stem");

  if (c.experiment == Experiment::FIG4CD) c.schemes = {Scheme::B_NHQC, Scheme::NHQC};
  if (root.contains("schemes")) {
    const json& s = root.at("schemes");
    if (!s.is_array() || s.empty()) rd.fail({"schemes"}, "expected a non-empty array");
    c.schemes.clear();
    for (const auto& v : s) {
      if (!v.is_string()) rd.fail({"schemes"}, "expected scheme names");
      c.schemes.push_back(wrap(rd, {"schemes"}, &scheme_from_string, v.get<std::string>()));
    }
  }

  if (c.experiment == Experiment::FIG4CD) c.gates = {named_gate("T")};
  else c.gates = {named_gate("T"), named_gate("X_HALF")};
  if (root.contains("gates")) {
    const json& g = root.at("gates");
    if (!g.is_array() || g.empty()) rd.fail({"gates"}, "expected a non-empty array");
    c.gates.clear();
    for (const auto& v : g) {
      if (v.is_string()) {
        c.gates.push_back(wrap(rd, {"gates"}, &named_gate, v.get<std::string>()));
      } else if (v.is_object()) {
        rd.only_keys(v, {"gates"}, {"label", "theta", "phi1", "gamma"});
        GateSpec gs;
        gs.label = rd.string(v, {"gates", "label"}, "custom");
        gs.theta = rd.number(v, {"gates", "theta"}, 0.0);
        gs.phi1 = rd.number(v, {"gates", "phi1"}, 0.0);
        if (!v.contains("gamma")) rd.fail({"gates"}, "custom gate needs 'gamma'");
        gs.gamma = rd.number(v, {"gates", "gamma"}, 0.0);
        if (!(gs.gamma > 1e-6 && gs.gamma < 2.0 * kPi - 1e-6))
          rd.fail({"gates", "gamma"}, "gamma must lie in (0, 2pi)");
        if (gs.label.empty() || gs.label.find_first_of(",\"\n") != std::string::npos)
          rd.fail({"gates", "label"}, "label must be non-empty without commas or quotes");
        c.gates.push_back(gs);
      } else {
        rd.fail({"gates"}, "expected a gate name or object");
      }
    }
  }

  c.omega0 = rd.number(root, {"omega0"}, 1.0);
  if (!(c.omega0 > 0.0)) rd.fail({"omega0"}, "must be positive");
  c.gamma_decoherence = rd.number(root, {"gamma_decoherence"}, c.omega0 / 2000.0);
  if (c.gamma_decoherence < 0.0) rd.fail({"gamma_decoherence"}, "must be >= 0");
  c.envelope = wrap(rd, {"envelope"}, &envelope_from_string,
                    rd.string(root, {"envelope"}, "CONSTANT"));
  c.grid_points = rd.integer(root, {"grid_points"}, 4000);
  if (c.grid_points < 500) rd.fail({"grid_points"}, "must be >= 500");
  c.steps = rd.integer(root, {"steps"}, 4000);
  if (c.steps < 100) rd.fail({"steps"}, "must be >= 100");
  c.n_states = rd.integer(root, {"n_states"}, 1001);
  if (c.n_states < 101 || c.n_states % 2 == 0) rd.fail({"n_states"}, "must be odd and >= 101");
  c.time_samples = rd.integer(root, {"time_samples"}, 101);
  if (c.time_samples < 2) rd.fail({"time_samples"}, "must be >= 2");

  c.alpha = rd.range(root, {"alpha"}, c.alpha);
  c.beta = rd.range(root, {"beta"}, c.beta);
  const double err_cap = c.experiment == Experiment::FIGS1 ? 0.2 : 0.5;
  for (const char* k : {"alpha", "beta"}) {
    const Range& r = k[0] == 'a' ? c.alpha : c.beta;
    if (std::max(std::abs(r.lo), std::abs(r.hi)) > err_cap)
      rd.fail({k}, "error fraction must satisfy |x| <= " + format_number(err_cap));
  }
  c.gamma_angle = rd.range(root, {"gamma_angle"}, c.gamma_angle);
  if (c.gamma_angle.lo < 0.0 || c.gamma_angle.hi > 2.0 * kPi)
    rd.fail({"gamma_angle"}, "must lie within [0, 2pi]");
  c.decoherence = rd.range(root, {"decoherence"}, {0.0, c.omega0 / 500.0, 11, false});
  if (c.decoherence.lo < 0.0) rd.fail({"decoherence"}, "rates must be >= 0");

  if (root.contains("transmon")) {
    const json& t = rd.object(root, {"transmon"});
    rd.only_keys(t, {"transmon"}, {"kappa_mhz", "omega0_mhz", "gamma_khz", "envelopes", "steps"});
    auto& tc = c.transmon;
    tc.kappa_mhz = rd.number(t, {"transmon", "kappa_mhz"}, tc.kappa_mhz);
    if (!(tc.kappa_mhz < 0.0)) rd.fail({"transmon", "kappa_mhz"}, "anharmonicity must be negative");
    tc.omega0_mhz = rd.range(t, {"transmon", "omega0_mhz"}, tc.omega0_mhz);
    if (!(tc.omega0_mhz.lo > 0.0)) rd.fail({"transmon", "omega0_mhz"}, "rates must be positive");
    tc.gamma_khz = rd.number(t, {"transmon", "gamma_khz"}, tc.gamma_khz);
    if (tc.gamma_khz < 0.0) rd.fail({"transmon", "gamma_khz"}, "must be >= 0");
    tc.steps = rd.integer(t, {"transmon", "steps"}, tc.steps);
    if (tc.steps < 100) rd.fail({"transmon", "steps"}, "must be >= 100");
    if (t.contains("envelopes")) {
      const json& e = t.at("envelopes");
      if (!e.is_array() || e.empty()) rd.fail({"transmon", "envelopes"}, "expected a non-empty array");
      tc.envelopes.clear();
      for (const auto& v : e) {
        if (!v.is_string()) rd.fail({"transmon", "envelopes"}, "expected envelope names");
        tc.envelopes.push_back(
            wrap(rd, {"transmon", "envelopes"}, &envelope_from_string, v.get<std::string>()));
      }
    }
  }

  if (root.contains("two_qubit")) {
    const json& t = rd.object(root, {"two_qubit"});
    rd.only_keys(t, {"two_qubit"},
                 {"kappa1_mhz", "kappa2_mhz", "delta1_mhz", "g12_mhz", "xi1", "xi2", "gamma_khz",
                  "calibrate", "beta_mod", "tau_scale", "mu_scale", "beta_lo", "beta_hi",
                  "beta_grid", "coarse_steps", "final_steps", "n_per_axis", "max_evals",
                  "lindblad_steps"});
    auto& q = c.two_qubit;
    auto p = [](const char* k) { return std::vector<std::string>{"two_qubit", k}; };
    q.kappa1_mhz = rd.number(t, p("kappa1_mhz"), q.kappa1_mhz);
    q.kappa2_mhz = rd.number(t, p("kappa2_mhz"), q.kappa2_mhz);
    q.delta1_mhz = rd.number(t, p("delta1_mhz"), q.delta1_mhz);
    q.g12_mhz = rd.number(t, p("g12_mhz"), q.g12_mhz);
    q.xi1 = rd.number(t, p("xi1"), q.xi1);
    q.xi2 = rd.number(t, p("xi2"), q.xi2);
    q.gamma_khz = rd.number(t, p("gamma_khz"), q.gamma_khz);
    q.calibrate = rd.boolean(t, p("calibrate"), q.calibrate);
    q.setting.beta_mod = rd.number(t, p("beta_mod"), q.setting.beta_mod);
    q.setting.tau_scale = rd.number(t, p("tau_scale"), q.setting.tau_scale);
    q.setting.mu_scale = rd.number(t, p("mu_scale"), q.setting.mu_scale);
    auto& o = q.calibration;
    o.beta_lo = rd.number(t, p("beta_lo"), o.beta_lo);
    o.beta_hi = rd.number(t, p("beta_hi"), o.beta_hi);
    o.beta_grid = rd.integer(t, p("beta_grid"), o.beta_grid);
    o.coarse_steps = rd.integer(t, p("coarse_steps"), o.coarse_steps);
    o.final_steps = rd.integer(t, p("final_steps"), o.final_steps);
    o.n_per_axis = rd.integer(t, p("n_per_axis"), o.n_per_axis);
    o.max_evals = rd.integer(t, p("max_evals"), o.max_evals);
    q.lindblad_steps = rd.integer(t, p("lindblad_steps"), q.lindblad_steps);
    if (!(q.kappa1_mhz < 0.0 && q.kappa2_mhz < 0.0)) rd.fail(p("kappa1_mhz"), "anharmonicities must be negative");
    if (!(q.g12_mhz > 0.0)) rd.fail(p("g12_mhz"), "must be positive");
    if (q.gamma_khz < 0.0) rd.fail(p("gamma_khz"), "must be >= 0");
    if (!(q.xi1 > 0.0 && q.xi1 < 2.0 * kPi)) rd.fail(p("xi1"), "must lie in (0, 2pi)");
    if (!(q.setting.beta_mod > 0.0 && q.setting.beta_mod <= 20.0)) rd.fail(p("beta_mod"), "must lie in (0, 20]");
    if (!(q.setting.tau_scale > 0.0)) rd.fail(p("tau_scale"), "must be positive");
    if (!(o.beta_hi > o.beta_lo && o.beta_lo > 0.0 && o.beta_hi <= 20.0)) rd.fail(p("beta_hi"), "need 0 < beta_lo < beta_hi <= 20");
    if (o.beta_grid < 2) rd.fail(p("beta_grid"), "must be >= 2");
    if (o.coarse_steps < 100 || o.final_steps < 100 || q.lindblad_steps < 100)
      rd.fail(p("final_steps"), "step counts must be >= 100");
    if (o.n_per_axis < 21) rd.fail(p("n_per_axis"), "must be >= 21");
    if (o.max_evals < 4) rd.fail(p("max_evals"), "must be >= 4");
    if (!(q.params().nu() > 0.0)) rd.fail(p("delta1_mhz"), "requires Delta1 - kappa2 > 0");
  }

  const long long seed = root.contains("seed") ? rd.integer(root, {"seed"}, 7) : 7;
  if (seed < 0) rd.fail({"seed"}, "must be >= 0");
  c.seed = static_cast<std::uint64_t>(seed);
  c.workers = rd.integer(root, {"workers"}, 1);
  if (c.workers < 1) rd.fail({"workers"}, "must be >= 1");

  const bool needs_loop = c.experiment != Experiment::TWOQUBIT;
  if (needs_loop)
    for (const auto& g : c.gates)
      if (!(g.gamma > 1e-6 && g.gamma < 2.0 * kPi - 1e-6)) rd.fail({"gates"}, "gamma must lie in (0, 2pi)");
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string() + ": cannot open config file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.string());
}

json config_to_json(const ExperimentConfig& c) {
  json j;
  auto range = [](const Range& r) { return json{{"lo", r.lo}, {"hi", r.hi}, {"n", r.n}, {"open", r.open}}; };
  j["experiment"] = to_string(c.experiment);
  j["name"] = c.name;
  json s = json::array();
  for (auto x : c.schemes) s.push_back(to_string(x));
  j["schemes"] = s;
  json g = json::array();
  for (const auto& x : c.gates)
    g.push_back({{"label", x.label}, {"theta", x.theta}, {"phi1", x.phi1}, {"gamma", x.gamma}});
  j["gates"] = g;
  j["omega0"] = c.omega0;
  j["gamma_decoherence"] = c.gamma_decoherence;
  j["envelope"] = to_string(c.envelope);
  j["grid_points"] = c.grid_points;
  j["steps"] = c.steps;
  j["n_states"] = c.n_states;
  j["time_samples"] = c.time_samples;
  j["alpha"] = range(c.alpha);
  j["beta"] = range(c.beta);
  j["gamma_angle"] = range(c.gamma_angle);
  j["decoherence"] = range(c.decoherence);
  json env = json::array();
  for (auto e : c.transmon.envelopes) env.push_back(to_string(e));
  j["transmon"] = {{"kappa_mhz", c.transmon.kappa_mhz},
                   {"omega0_mhz", range(c.transmon.omega0_mhz)},
                   {"gamma_khz", c.transmon.gamma_khz},
                   {"envelopes", env},
                   {"steps", c.transmon.steps}};
  const auto& q = c.two_qubit;
  j["two_qubit"] = {{"kappa1_mhz", q.kappa1_mhz},
                    {"kappa2_mhz", q.kappa2_mhz},
                    {"delta1_mhz", q.delta1_mhz},
                    {"g12_mhz", q.g12_mhz},
                    {"xi1", q.xi1},
                    {"xi2", q.xi2},
                    {"gamma_khz", q.gamma_khz},
                    {"calibrate", q.calibrate},
                    {"beta_mod", q.setting.beta_mod},
                    {"tau_scale", q.setting.tau_scale},
                    {"mu_scale", q.setting.mu_scale},
                    {"beta_lo", q.calibration.beta_lo},
                    {"beta_hi", q.calibration.beta_hi},
                    {"beta_grid", q.calibration.beta_grid},
                    {"coarse_steps", q.calibration.coarse_steps},
                    {"final_steps", q.calibration.final_steps},
                    {"n_per_axis", q.calibration.n_per_axis},
                    {"max_evals", q.calibration.max_evals},
                    {"lindblad_steps", q.lindblad_steps}};
  j["seed"] = c.seed;
  return j;
}

std::string config_hash(const ExperimentConfig& cfg) {
  const std::string s = config_to_json(cfg).dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

TargetCheck check_abs(std::string label, double target, double achieved, double tol) {
  return {std::move(label), target, achieved, tol, "abs", std::abs(achieved - target) <= tol};
}
TargetCheck check_min(std::string label, double bound, double achieved) {
  return {std::move(label), bound, achieved, 0.0, "min", achieved >= bound};
}
TargetCheck check_max(std::string label, double bound, double achieved) {
  return {std::move(label), bound, achieved, 0.0, "max", achieved <= bound};
}

bool SweepResult::all_pass() const {
  return std::all_of(targets.begin(), targets.end(), [](const TargetCheck& t) { return t.pass; });
}

std::filesystem::path write_result(const SweepResult& r, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error(dir.string() + ": cannot create directory: " + ec.message());
  const auto csv = dir / (r.name + ".csv");
  {
    std::ofstream out(csv, std::ios::binary);
    if (!out) throw std::runtime_error(csv.string() + ": cannot open for writing");
    CsvWriter w(out);
    w.header(r.header);
    for (const auto& row : r.rows) w.record(row);
    if (!out) throw std::runtime_error(csv.string() + ": write failed");
  }
  json meta = r.meta;
  meta["rows"] = r.rows.size();
  meta["columns"] = r.header;
  json t = json::array();
  for (const auto& c : r.targets)
    t.push_back({{"label", c.label},
                 {"kind", c.kind},
                 {"target", c.target},
                 {"achieved", c.achieved},
                 {"tolerance", c.tolerance},
                 {"pass", c.pass}});
  meta["targets"] = t;
  const auto mp = dir / (r.name + ".meta.json");
  std::ofstream out(mp, std::ios::binary);
  if (!out) throw std::runtime_error(mp.string() + ": cannot open for writing");
  out << meta.dump(2) << '\n';
  if (!out) throw std::runtime_error(mp.string() + ": write failed");
  return csv;
}

std::vector<SweepResult> load_results(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec))
    throw std::runtime_error(dir.string() + ": not a directory");
  std::vector<std::filesystem::path> metas;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    const std::string n = e.path().filename().string();
    if (n.size() > 10 && n.compare(n.size() - 10, 10, ".meta.json") == 0) metas.push_back(e.path());
  }
  std::sort(metas.begin(), metas.end());
  if (metas.empty()) throw std::runtime_error(dir.string() + ": no results (*.meta.json) found");
  std::vector<SweepResult> out;
  for (const auto& p : metas) {
    std::ifstream in(p, std::ios::binary);
    SweepResult r;
    try {
      r.meta = json::parse(in);
    } catch (const json::exception& e) {
      throw std::runtime_error(p.string() + ": " + e.what());
    }
    r.name = r.meta.value("name", p.stem().stem().string());
    if (r.meta.contains("targets"))
      for (const auto& t : r.meta["targets"])
        r.targets.push_back({t.at("label").get<std::string>(), t.at("target").get<double>(),
                             t.at("achieved").get<double>(), t.at("tolerance").get<double>(),
                             t.at("kind").get<std::string>(), t.at("pass").get<bool>()});
    out.push_back(std::move(r));
  }
  return out;
}

std::string emit_report(const std::vector<SweepResult>& results) {
  if (results.empty()) throw std::invalid_argument("emit_report: no results");
  std::ostringstream os;
  os << "# holoq results\n\n";
  int pass = 0, total = 0;
  for (const auto& r : results) {
    os << "## " << r.name << "\n\n";
    if (r.meta.contains("experiment")) os << "experiment: " << r.meta["experiment"].get<std::string>() << "  \n";
    if (r.meta.contains("config_hash")) os << "config hash: " << r.meta["config_hash"].get<std::string>() << "\n\n";
    if (r.targets.empty()) {
      os << "(no targets)\n\n";
      continue;
    }
    for (const auto& t : r.targets) {
      ++total;
      pass += t.pass;
      os << "- " << t.label << " target ";
      if (t.kind == "min") os << ">= ";
      else if (t.kind == "max") os << "<= ";
      os << format_number(t.target);
      if (t.kind == "abs") os << " +/- " << format_number(t.tolerance);
      os << " achieved " << format_number(t.achieved) << " " << (t.pass ? "PASS" : "FAIL") << "\n";
    }
    os << "\n";
  }
  os << "Summary: " << pass << "/" << total << " targets met\n";
  return os.str();
}

}  // namespace holoq
