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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "holoq/csv.hpp"
#include "holoq/holonomy.hpp"
#include "holoq/perturb.hpp"
#include "holoq/runner.hpp"

namespace {

using namespace holoq;

struct Options {
  std::string config;
  std::string out = "results";
  int workers = 1;
  std::optional<std::uint64_t> seed;
};

ExperimentConfig configure(const Options& o, bool required) {
  ExperimentConfig cfg;
  if (!o.config.empty()) cfg = load_config(o.config);
  else if (required) throw ConfigError("--config is required");
  if (o.workers < 1) throw ConfigError("--workers must be >= 1");
  cfg.workers = o.workers;
  if (o.seed) cfg.seed = *o.seed;
  return cfg;
}

void save(const std::vector<SweepResult>& rs, const std::string& dir) {
  for (const auto& r : rs) std::cout << write_result(r, dir).string() << "\n";
}

int cmd_synth(const Options& o) {
  const ExperimentConfig cfg = configure(o, true);
  std::filesystem::create_directories(o.out);
  for (Scheme s : cfg.schemes) {
    for (const auto& g : cfg.gates) {
      const PulseSchedule p = synth_pulse(scheme_spec(s, g, cfg));
      const auto path = std::filesystem::path(o.out) / ("pulse_" + to_string(s) + "_" + g.label + ".csv");
      std::ofstream out(path, std::ios::binary);
      if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
      write_pulse_csv(out, p);
      std::cout << path.string() << "\n";
    }
  }
  return 0;
}

// One gate per scheme x gate: duration, closed-system and open-system fidelity.
int cmd_simulate(const Options& o) {
  const ExperimentConfig cfg = configure(o, true);
  SweepResult r;
  r.name = cfg.name + "_simulate";
  r.header = {"scheme", "gate", "theta", "phi1", "gamma", "duration", "f_unitary", "f_open"};
  r.meta["name"] = r.name;
  r.meta["config_hash"] = config_hash(cfg);
  r.meta["config"] = config_to_json(cfg);
  for (Scheme s : cfg.schemes) {
    for (const auto& g : cfg.gates) {
      const SchemeSpec sp = scheme_spec(s, g, cfg);
      r.rows.push_back({to_string(s), g.label, format_number(g.theta), format_number(g.phi1),
                        format_number(g.gamma), format_number(synth_pulse(sp).duration()),
                        format_number(fidelity_sim(sp, {}, cfg.steps)),
                        format_number(state_avg_fidelity(sp, {}, cfg.gamma_decoherence, cfg.steps,
                                                         cfg.n_states))});
    }
  }
  save({r}, o.out);
  return 0;
}

int cmd_sweep(const Options& o) {
  const ExperimentConfig cfg = configure(o, true);
  const auto rs = run_experiment(cfg);
  save(rs, o.out);
  for (const auto& r : rs)
    for (const auto& t : r.targets)
      std::cout << (t.pass ? "PASS " : "FAIL ") << r.name << ": " << t.label << "\n";
  return 0;
}

int cmd_verify(const Options& o) {
  ExperimentConfig cfg = configure(o, false);
  cfg.experiment = Experiment::VERIFY;
  const SweepResult r = run_verify(cfg);
  save({r}, o.out);
  int failed = 0;
  for (const auto& t : r.targets) {
    std::cout << (t.pass ? "PASS " : "FAIL ") << t.label << " (" << format_number(t.achieved) << ")\n";
    failed += !t.pass;
  }
  if (failed) {
    std::cerr << "holoq: " << failed << " verification check(s) failed\n";
    return 3;
  }
  return 0;
}

int cmd_report(const Options& o) {
  const std::string text = emit_report(load_results(o.out));
  const auto path = std::filesystem::path(o.out) / "report.md";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out << text;
  std::cout << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"holoq: holonomic gate synthesis, simulation and verification"};
  app.require_subcommand(1);
  Options o;
  auto add = [&](const char* name, const char* help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("--config", o.config, "experiment config (JSON)");
    c->add_option("--out", o.out, "output directory")->capture_default_str();
    c->add_option("--workers", o.workers, "worker threads")->capture_default_str();
    c->add_option("--seed", o.seed, "seed for randomized gauge/property checks");
    return c;
  };
  CLI::App* synth = add("synth", "write pulse schedules");
  CLI::App* simulate = add("simulate", "simulate each configured gate once");
  CLI::App* sweep = add("sweep", "run the configured experiment");
  CLI::App* verify = add("verify", "run the invariant suites");
  CLI::App* report = add("report", "summarize results in --out");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (synth->parsed()) return cmd_synth(o);
    if (simulate->parsed()) return cmd_simulate(o);
    if (sweep->parsed()) return cmd_sweep(o);
    if (verify->parsed()) return cmd_verify(o);
    if (report->parsed()) return cmd_report(o);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
