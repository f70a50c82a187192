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
#include <vector>

#include "holoq/pulses.hpp"
#include "holoq/qcore.hpp"

namespace holoq {

struct ErrorParams {
  double alpha = 0.0;  // Rabi error fraction
  double beta = 0.0;   // detuning error fraction (Delta = beta * omega0)
};

// Rates in rad/time. Basis |0>,|e>,|1>,|2> = transmon ladder g,e,f,h.
struct TransmonParams {
  double kappa = -2.0 * kPi * 260.0;
  double omega0 = 2.0 * kPi * 45.0;
  int levels = 4;
};

struct TwoQubitParams {
  double kappa1 = -2.0 * kPi * 220.0;
  double kappa2 = -2.0 * kPi * 260.0;
  double delta1 = 2.0 * kPi * 146.0;
  double g12 = 2.0 * kPi * 10.0;
  double beta_mod = 1.2;
  double mu = 0.0;
  double xi1 = kPi / 4;
  double xi2 = -kPi / 4;

  double nu() const { return delta1 - kappa2 - mu; }
  double g_eff() const;  // 2 sqrt(2) g12 J1(beta_mod)
};

struct LindbladSpec {
  std::vector<CMatrix> collapse_ops;  // unit-normalized jump operators
  std::vector<double> rates;          // L_j = sqrt(rate_j) * op_j
  std::string convention;
};

// Time-dependent Hamiltonian. Segment boundaries are kept so that sampling
// exactly on a phase jump is unambiguous.
struct HamiltonianSeries {
  Eigen::Index dim = 0;
  std::vector<double> breaks;  // t_0 < t_1 < ... < t_n (n segments)
  std::function<CMatrix(double t, std::size_t seg)> fn;

  double t_start() const { return breaks.front(); }
  double t_end() const { return breaks.back(); }
  std::size_t segments() const { return breaks.size() - 1; }
  std::size_t segment_at(double t) const;
  CMatrix at(double t) const { return fn(t, segment_at(t)); }
  CMatrix at(double t, std::size_t seg) const { return fn(t, seg); }
};

// Lambda-system drive with the error model (1+alpha) H + beta omega0 |e><e|.
// theta, phi1 are the mixing angles as they enter the Hamiltonian.
CMatrix h_lambda(double omega, double phi, double theta, double phi1, const ErrorParams& err,
                 double omega0);

// Drive-frame four-level transmon. Logical |0>,|1> at indices 0,2; |e> at 1.
CMatrix h_transmon4(double omega, double phi, double theta, double phi1,
                    const TransmonParams& p, double t);

// Index of |mn> in the 16-dim two-transmon space, levels ordered 0,e,1,2.
inline Eigen::Index two_qubit_index(int m, int n) { return 4 * m + n; }
namespace level {
inline constexpr int k0 = 0, ke = 1, k1 = 2, k2 = 3;
}

CMatrix h_two_qubit_full(double t, const TwoQubitParams& p);
// Basis order: |01>, |11>, |e2>, |ee>.
CMatrix h_two_qubit_eff(double t, const TwoQubitParams& p);

double bessel_j1(double x);

LindbladSpec lindblad_spec(int dim, double gamma, int excited_index = 2);
// Per-transmon collapse set of lindblad_spec(4, gamma) on both qubits.
LindbladSpec lindblad_two_qubit(double gamma);

HamiltonianSeries lambda_series(const PulseSchedule& s, const ErrorParams& err = {});
HamiltonianSeries transmon_series(const PulseSchedule& s, const TransmonParams& p);
HamiltonianSeries two_qubit_full_series(const TwoQubitParams& p, double duration);
HamiltonianSeries two_qubit_eff_series(const TwoQubitParams& p, double duration);
HamiltonianSeries constant_series(const CMatrix& h, double t0, double t1);

}  // namespace holoq
