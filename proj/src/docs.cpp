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

#include "holoq/docs.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace holoq {

const std::vector<ConventionLedgerEntry>& convention_ledger() {
  static const std::vector<ConventionLedgerEntry> entries = {
      {"gate-sign", "single-qubit gate / accumulated loop phase",
       "U = e^{i gamma/2} e^{-i (gamma/2) n.sigma}; loop phase pi - eta2(tau)/2",
       "drive mixing angles theta_d = pi - theta, phi1_d = -phi1; bright state gains e^{-i gamma}",
       "noiseless propagation vs ideal gate, infidelity < 1e-12 on random (theta, phi1, gamma)",
       "verified"},
      {"eta-closure", "drive-parameter relations",
       "phi = eta2 = eta1 / cos(eta3); Omega = -deta1/dt sin(eta3)",
       "eta2 = eta1 cos(eta3), cos(eta3) = (gamma - pi)/pi; Omega = +deta1/dt sin(eta3)",
       "auxiliary states solve the Schrodinger equation; eta3 = 2pi/3 and eta2 = -pi t/tau at gamma = pi/2",
       "deviation"},
      {"nhqc-jump", "NHQC reduction", "midpoint phase jump pi - gamma",
       "jump gamma - pi", "propagated NHQC gate equals the ideal gate", "verified"},
      {"cb-absolute-time", "CB-NHQC second interval",
       "phi'(t) = pi + 2(gamma/2 - pi) t / tau on (tau, 2 tau)",
       "t taken as absolute time on (tau, 2 tau)",
       "composite gate equals the ideal gate; robustness ordering of the error sweeps", "verified"},
      {"c-nhqc", "C-NHQC construction", "composite NHQC (not spelled out)",
       "two NHQC loops of gamma/2, second loop phases offset by pi; duration 4 pi / Omega0",
       "propagated gate equals the ideal gate", "deviation"},
      {"cb-composition", "CB-NHQC segment relation", "U2 = -U1",
       "U2 = U1 up to a global phase (the dark state is fixed by both loops)",
       "segment propagators compared after global-phase removal", "deviation"},
      {"sin2-phase", "sin^2 envelope", "Omega = Omega0 sin^2(pi t / tau)",
       "segment duration doubled; phase follows the pulse area, not the clock",
       "pulse area preserved to 1e-9; noiseless gate matches the ideal gate", "deviation"},
      {"lambda-gauge", "auxiliary phase lambda1(t)", "only lambda1(tau) - lambda1(0) fixed",
       "lambda1 advances linearly with eta1", "parallel-transport residual < 1e-6", "verified"},
      {"loop-integral", "gauge-invariant loop phase", "-i loop integral <psi|d|psi>",
       "dynamical phase minus discrete Bargmann (Aharonov-Anandan) phase, Richardson corrected",
       "matches lambda1(tau) - lambda1(0) to 1e-6 for five gamma values", "verified"},
      {"witness-scale", "non-Abelian witness", "[A(t), A(t')] != 0",
       "Frobenius norm of [tau A(t), tau A(t')], 20 x 20 samples",
       "invariant under uniform time rescaling to 1e-9", "verified"},
      {"qp-closed-forms", "perturbative overlaps", "Q00 = -3 pi/4, Q01 = 0 at eta3 = 2 pi/3; P00 = int Omega0 cos^2(eta3/2)",
       "quadrature on the exact solution states; printed forms reported alongside",
       "Simpson quadrature, grid-doubling stable to 1e-9; agrees with printed forms only at eta3 = pi/2",
       "conflict"},
      {"rabi-closed-form-norm", "simplified Rabi-error fidelity", "N1 with N_m = (1 + a^2 sum |Q_km|^2)^{-1/2}",
       "N1 read as (1 + a^2 sum_k |Q_k0|^2)^{1/2} so that F(0) = 1; first-order propagator used for predictions",
       "theory vs simulation within 2e-3 for |alpha|, |beta| <= 0.1", "deviation"},
      {"duffing", "four-level transmon", "|2> energy 3 w + 2 kappa",
       "Duffing ladder, |2> at 3 w + 3 kappa", "kappa -> -infinity limit recovers the three-level gate",
       "deviation"},
      {"transmon-envelope", "transmon baseline envelope", "not stated for NHQC",
       "sin^2 for both schemes; constant envelope reported as extra columns",
       "both envelopes swept over Omega0", "open"},
      {"tq-phase", "two-qubit interaction, |10><ee| term", "phase (Delta1 - kappa1) t",
       "phase (Delta1 + kappa1) t from the free Hamiltonian",
       "effective vs full model discrepancy < 5e-3", "deviation"},
      {"tq-eff-sqrt3", "effective two-qubit Hamiltonian", "factor 3 on |11><e2|",
       "sqrt(3) (ratio sqrt(6)/sqrt(2) of the full couplings)",
       "effective vs full model discrepancy < 5e-3", "deviation"},
      {"mu-seed", "two-qubit detuning seed", "mu = 2 (xi - pi) / pi",
       "mu = 2 (xi - pi) / tau2 (dimensionally a rate)", "calibration scan around the seed",
       "deviation"},
      {"mu-sign", "two-qubit detuning sign", "e^{-i mu t} on |ee><01|",
       "applied detuning is -mu_seed (sideband carries e^{+i mu t})",
       "calibrated control-T fidelity", "verified"},
      {"beta-range", "modulation index scan", "beta in [0.6, 1.8]",
       "beta in [0.6, 3.0]; unimodality checked for the tau and mu profiles",
       "full-model calibration optimum near beta = 2.55", "deviation"},
      {"qbe-bandwidth", "bandwidth constraint f0", "f0 = [Tr(H^2) - E^2] / 2 with Omega = Omega0",
       "E^2 = Omega0^2 / 2, the value Tr(H^2) takes for the (Omega/2)-normalized drive",
       "max_t |Tr H^2 - Omega0^2 / 2| < 1e-9 on constant-envelope schedules", "deviation"},
      {"collapse-set", "decoherence model", "equal decay and dephasing rates",
       "sqrt(G)|0><e|, sqrt(G)|1><e|, sqrt(G)|e><e| (+ sqrt(G)|1><2| with four levels)",
       "closed-system limit equals unitary propagation to 1e-10", "verified"},
  };
  return entries;
}

namespace {

std::string cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

}  // namespace

std::string render_ledger(const std::vector<ConventionLedgerEntry>& entries) {
  if (entries.empty()) throw std::invalid_argument("render_ledger: empty ledger");
  std::set<std::string> seen;
  std::ostringstream os;
  os << "| id | location | printed | adopted | oracle | status |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const auto& e : entries) {
    if (e.id.empty()) throw std::invalid_argument("render_ledger: entry without id");
    if (e.oracle.empty()) throw std::invalid_argument("render_ledger: entry '" + e.id + "' has no oracle");
    if (!seen.insert(e.id).second)
      throw std::invalid_argument("render_ledger: duplicate id '" + e.id + "'");
    os << "| " << cell(e.id) << " | " << cell(e.location) << " | " << cell(e.printed) << " | "
       << cell(e.adopted) << " | " << cell(e.oracle) << " | " << cell(e.status) << " |\n";
  }
  return os.str();
}

std::string render_config_reference() {
  return R"(## Config keys

| key | type | default | meaning |
|---|---|---|---|
| experiment | string | required | FIG2A, FIG2B, FIG2CD, FIG3_RABI, FIG3_DETUNING, FIG3_DECOHERENCE, FIG4CD, FIGS1, TWOQUBIT, VERIFY |
| name | string | experiment | output basename |
| schemes | [string] | all four | NHQC, C_NHQC, B_NHQC, CB_NHQC |
| gates | [string or object] | ["T", "X_HALF"] | named gate or {"label", "theta", "phi1", "gamma"} |
| omega0 | number | 1 | peak Rabi rate (dimensionless experiments) |
| gamma_decoherence | number | omega0/2000 | Lindblad rate |
| envelope | string | CONSTANT | CONSTANT or SIN2 |
| grid_points | int | 4000 | samples per pulse segment |
| steps | int | 4000 | propagation steps per segment |
| n_states | int | 1001 | initial states for the 1-qubit average |
| time_samples | int | 101 | fidelity-vs-time samples (FIG2CD) |
| alpha, beta | {lo, hi, n} | [-0.1, 0.1], 41 | error-fraction sweeps |
| gamma_angle | {lo, hi, n} | (0, 2pi), 63 | rotation-angle sweep, endpoints excluded |
| decoherence | {lo, hi, n} | [0, omega0/500], 11 | rate sweep |
| transmon | object | see below | FIG4CD settings (MHz / kHz) |
| two_qubit | object | see below | TWOQUBIT settings (MHz / kHz) |
| seed | int | 7 | randomized gauge seed |

`transmon`: kappa_mhz (-260), omega0_mhz {lo, hi, n} (10, 60, 26), gamma_khz (4),
envelopes (["SIN2", "CONSTANT"]), steps (4000).

`two_qubit`: kappa1_mhz (-220), kappa2_mhz (-260), delta1_mhz (146), g12_mhz (10),
xi1 (pi/4), xi2 (-pi/4), gamma_khz (4), calibrate (true), beta_mod (2.5536),
tau_scale (1.03126), mu_scale (0.95103), beta_lo (0.6), beta_hi (3.0), beta_grid (13),
coarse_steps (6000), final_steps (20000), n_per_axis (21), max_evals (80).

## Schemes

| scheme | segments | duration |
|---|---|---|
| NHQC | two pi-area halves, phase jump gamma - pi | 2 pi / Omega0 |
| C_NHQC | two NHQC loops of gamma/2, second offset by pi | 4 pi / Omega0 |
| B_NHQC | one loop, phi = 2 (gamma - pi) t / tau | 2 sqrt(pi^2 - (pi - gamma)^2) / Omega0 |
| CB_NHQC | two B-NHQC loops of gamma/2, second offset by pi | twice the gamma/2 B-NHQC time |

The sin^2 envelope doubles every segment's duration and keeps its area.

## Figure recipes

| experiment | output columns |
|---|---|
| FIG2A | gamma, tau of each scheme in units of 2 pi / Omega0, closed-form B-NHQC time |
| FIG2B | gamma, integrated excited population from the bright state per scheme |
| FIG2CD | scheme, gate, t, t/tau, state-averaged fidelity with decoherence |
| FIG3_RABI / FIG3_DETUNING | error fraction, fidelity per scheme and gate (with decoherence) |
| FIG3_DECOHERENCE | rate, fidelity per scheme and gate |
| FIG4CD | Omega0 (MHz), transmon T-gate fidelity per scheme and envelope |
| FIGS1 | error fraction, theory and simulated X^{1/2} fidelity (B-NHQC, NHQC), Rabi and detuning tables |
| TWOQUBIT | calibrated setting, full / effective / open-system control-T fidelity |
| VERIFY | suite, check, value, threshold, pass |
)";
}

}  // namespace holoq
