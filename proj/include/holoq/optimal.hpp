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

#include <functional>
#include <string>
#include <vector>

#include "holoq/model.hpp"
#include "holoq/qcore.hpp"

namespace holoq {

// tau = 2 sqrt(pi^2 - (pi - gamma)^2) / omega0, 0 < gamma < 2 pi.
double min_time_1q(double gamma, double omega0);

struct TwoQubitTiming {
  double duration = 0.0;
  double mu = 0.0;  // analytic seed 2 (xi - pi) / duration
};
TwoQubitTiming min_time_2q(double xi, double g_eff);

// max_t |Tr(H(t)^2) - omega0^2 / 2| sampled on `samples` points per segment.
double qbe_constraint_residual(const HamiltonianSeries& h, double omega0, int samples = 2001);

// Minimizes f with the Nelder-Mead simplex; deterministic for a given start.
struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
};
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> start, double step, int max_evals = 400,
                          double ftol = 1e-12);

struct OptimalitySearchSpec {
  double gamma = kPi / 2;
  double theta = 0.0;
  double phi1 = 0.0;
  double omega0 = 1.0;
  int n_knots = 2;          // free phase values of the piecewise-linear ramp
  int phase_grid = 12;      // grid points per knot over [-2 pi, 2 pi)
  double tolerance = 1e-4;  // gate infidelity that counts as "achieved"
  double duration_step = 0.01;  // relative to the analytic minimum time
  double scan_from = 0.8;       // durations scanned in [scan_from, scan_to] * tau
  double scan_to = 1.05;
  int refine_starts = 4;  // simplex refinements from the best grid points
  int workers = 1;
};

struct OptimalitySearchResult {
  double gamma = 0.0;
  double tau_analytic = 0.0;
  double tau_found = 0.0;   // 0 when nothing in the scanned range reaches tolerance
  bool found = false;
  bool tolerance_dominated = false;  // achieved below tau - step
  double grid_step = 0.0;            // absolute duration step
  int steps_from_analytic = 0;       // tau_found = tau (1 + k step)
  double best_infidelity = 1.0;
  std::vector<double> knots;         // phase values at t_j = j T / n_knots, phi_0 = 0
  long n_candidates = 0;
  double tolerance = 0.0;

  std::string to_json() const;
};

// Piecewise-linear phase ramp at constant omega0, propagated exactly piece by
// piece. Returns the 3 x 3 propagator.
CMatrix ramp_propagator(const std::vector<double>& knots, double duration, double omega0,
                        double theta_drive, double phi1_drive);

OptimalitySearchResult time_optimality_search(const OptimalitySearchSpec& spec);

// Two-qubit control-phase gate calibration.
struct TwoQubitSetting {
  double beta_mod = 1.2;
  double tau_scale = 1.0;
  double mu_scale = 1.0;
};

// Params and duration for a setting: seed tau, mu from min_time_2q(xi1, g'),
// then tau *= tau_scale and mu = -mu_seed * mu_scale.
struct TwoQubitGate {
  TwoQubitParams params;
  double duration = 0.0;
};
TwoQubitGate two_qubit_gate(const TwoQubitParams& base, const TwoQubitSetting& s);

// Logical-subspace propagators (4 x 4 over |00>, |01>, |10>, |11>).
CMatrix two_qubit_logical_full(const TwoQubitGate& g, int steps);
CMatrix two_qubit_logical_eff(const TwoQubitGate& g, int steps);
inline const std::vector<Eigen::Index>& two_qubit_logical() {
  static const std::vector<Eigen::Index> l = {0, 2, 8, 10};
  return l;
}

// [conv:beta-range] beta_mod scanned beyond 1.8; the full model peaks near 2.55.
struct CalibrationOptions {
  double beta_lo = 0.6;
  double beta_hi = 3.0;
  int beta_grid = 13;
  int coarse_steps = 6000;
  int final_steps = 20000;
  int n_per_axis = 21;
  int max_evals = 80;
  int workers = 1;
};

struct CalibrationResult {
  TwoQubitSetting setting;
  double duration = 0.0;
  double mu = 0.0;
  double fidelity_full = 0.0;
  double fidelity_eff = 0.0;
  double eff_vs_full_infidelity = 0.0;
};
CalibrationResult calibrate_two_qubit(const TwoQubitParams& base, const CalibrationOptions& o);

// Average unitary fidelity vs U_E(xi1, xi2) of a logical 4 x 4 propagator.
double two_qubit_unitary_fidelity(const CMatrix& logical, double xi1, double xi2,
                                  int n_per_axis = 21);

// 1-D fidelity profile of the effective model along one calibration axis.
struct Profile {
  std::string axis;
  std::vector<double> values;
  std::vector<double> fidelity;
  bool unimodal_interior = false;
};
std::vector<Profile> calibration_profiles(const TwoQubitParams& base, const TwoQubitSetting& at,
                                          int points = 21, int steps = 2000);

}  // namespace holoq
