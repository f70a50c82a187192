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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "holoq/optimal.hpp"
#include "holoq/pulses.hpp"

namespace holoq {

enum class Experiment {
  FIG2A,
  FIG2B,
  FIG2CD,
  FIG3_RABI,
  FIG3_DETUNING,
  FIG3_DECOHERENCE,
  FIG4CD,
  FIGS1,
  TWOQUBIT,
  VERIFY
};
std::string to_string(Experiment e);
Experiment experiment_from_string(const std::string& s);

struct GateSpec {
  std::string label;
  double theta = 0.0;
  double phi1 = 0.0;
  double gamma = 0.0;
};
GateSpec named_gate(const std::string& name);  // T, X_HALF

// lo..hi on n points; with `open` the endpoints are excluded.
struct Range {
  double lo = 0.0;
  double hi = 0.0;
  int n = 1;
  bool open = false;
  std::vector<double> values() const;
};

struct TransmonConfig {
  double kappa_mhz = -260.0;
  Range omega0_mhz{10.0, 60.0, 26, false};
  double gamma_khz = 4.0;
  std::vector<Envelope> envelopes{Envelope::SIN2, Envelope::CONSTANT};
  int steps = 4000;
};

struct TwoQubitConfig {
  double kappa1_mhz = -220.0;
  double kappa2_mhz = -260.0;
  double delta1_mhz = 146.0;
  double g12_mhz = 10.0;
  double xi1 = kPi / 4;
  double xi2 = -kPi / 4;
  double gamma_khz = 4.0;
  bool calibrate = true;
  TwoQubitSetting setting{2.5536, 1.03126, 0.95103};
  CalibrationOptions calibration;
  int lindblad_steps = 20000;

  TwoQubitParams params() const;  // angular rates, time in microseconds
};

struct ExperimentConfig {
  Experiment experiment = Experiment::VERIFY;
  std::string name;
  std::vector<Scheme> schemes{Scheme::NHQC, Scheme::C_NHQC, Scheme::B_NHQC, Scheme::CB_NHQC};
  std::vector<GateSpec> gates;
  double omega0 = 1.0;
  double gamma_decoherence = 1.0 / 2000.0;
  Envelope envelope = Envelope::CONSTANT;
  int grid_points = 4000;
  int steps = 4000;
  int n_states = 1001;
  int time_samples = 101;
  Range alpha{-0.1, 0.1, 41, false};
  Range beta{-0.1, 0.1, 41, false};
  Range gamma_angle{0.0, 2.0 * kPi, 63, true};
  Range decoherence{0.0, 1.0 / 500.0, 11, false};
  TransmonConfig transmon;
  TwoQubitConfig two_qubit;
  std::uint64_t seed = 7;
  int workers = 1;  // execution only; never affects results
};

// Throws ConfigError with "<source>:<line>: message".
ExperimentConfig parse_config(const std::string& text, const std::string& source = "config");
ExperimentConfig load_config(const std::filesystem::path& path);

// Canonical form (excludes workers) and its 64-bit FNV-1a hash.
nlohmann::ordered_json config_to_json(const ExperimentConfig& cfg);
std::string config_hash(const ExperimentConfig& cfg);

// Reference-value (or property) check attached to a result.
struct TargetCheck {
  std::string label;
  double target = 0.0;
  double achieved = 0.0;
  double tolerance = 0.0;
  std::string kind;  // abs: |achieved - target| <= tol; min: achieved >= target; max: achieved <= target
  bool pass = false;
};
TargetCheck check_abs(std::string label, double target, double achieved, double tol);
TargetCheck check_min(std::string label, double bound, double achieved);
TargetCheck check_max(std::string label, double bound, double achieved);

struct SweepResult {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // formatted cells
  nlohmann::ordered_json meta;
  std::vector<TargetCheck> targets;

  bool all_pass() const;
};

std::vector<SweepResult> run_experiment(const ExperimentConfig& cfg);

// Writes <dir>/<name>.csv and <dir>/<name>.meta.json; returns the csv path.
std::filesystem::path write_result(const SweepResult& r, const std::filesystem::path& dir);

std::vector<SweepResult> load_results(const std::filesystem::path& dir);
std::string emit_report(const std::vector<SweepResult>& results);

// Individual pieces, exposed for the acceptance driver and tests.
SchemeSpec scheme_spec(Scheme s, const GateSpec& g, const ExperimentConfig& cfg);
double state_avg_fidelity(const SchemeSpec& spec, const ErrorParams& err, double gamma_rate,
                          int steps, int n_states);
double transmon_fidelity(Scheme s, Envelope env, double omega0_mhz, const TransmonConfig& t,
                         const GateSpec& g, int n_states);
SweepResult run_verify(const ExperimentConfig& cfg);

}  // namespace holoq
