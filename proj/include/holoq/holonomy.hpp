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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "holoq/model.hpp"
#include "holoq/pulses.hpp"
#include "holoq/qcore.hpp"

namespace holoq {

using Triple = std::array<CVector, 3>;

// Auxiliary frame |phi_0> = e^{-i lambda1}|psi_0>, |phi_1> = e^{i lambda1}|psi_1>,
// |phi_2> = |psi_2>, with psi the exact solution states on the path.
struct AuxFrame {
  std::vector<double> times;
  std::vector<std::size_t> segment_of;  // Hamiltonian segment per sample
  std::vector<SegmentRange> segments;
  std::vector<Triple> psi;
  std::vector<Triple> states;
  std::vector<double> lambda1;
  std::vector<double> dlambda1;  // d lambda1 / dt
  CVector mu;
  CVector dark;
  double closure_phase = 0.0;  // lambda1(tau) - lambda1(0)

  double duration() const { return times.back() - times.front(); }
};

struct ConnectionSeries {
  std::vector<double> times;
  std::vector<CMatrix> A;
  std::vector<CMatrix> K;
  std::vector<CMatrix> A_eta;
};

// Auxiliary-state frame on the path for gate angles (theta, phi1, gamma). Throws
// InvariantViolation if the path is not cyclic or does not realize gamma.
AuxFrame aux_frame(const EtaPath& path, double theta, double phi1, double gamma);

// d/dt of every frame member, fourth-order finite differences per segment.
std::vector<Triple> frame_derivative(const AuxFrame& f, const std::vector<Triple>& series);

ConnectionSeries connection(const AuxFrame& f, const HamiltonianSeries& h);

// Frame-picture evolution T exp(i int (A + K) dt), mapped back to the physical
// space through the frame at t = 0.
CMatrix frame_holonomy(const AuxFrame& f, const ConnectionSeries& c);

// e^{i alpha_a(t)} applied to each frame member; alpha is periodic.
AuxFrame apply_gauge(const AuxFrame& f, const std::array<std::vector<double>, 3>& alpha);
std::array<std::vector<double>, 3> random_periodic_gauge(const AuxFrame& f, std::uint64_t seed,
                                                         int harmonics = 3);

struct ResidualReport {
  double holonomy_condition_residual = 0.0;
  double parallel_transport_residual = 0.0;
  double gauge_deviation = 0.0;
  double nonabelian_witness = 0.0;
  double connection_hermiticity = 0.0;
  double frame_orthonormality = 0.0;
  double closure = 0.0;

  std::string to_json() const;
};

ResidualReport holonomy_residuals(const AuxFrame& f, const HamiltonianSeries& h,
                                  std::uint64_t gauge_seed = 7);

// max over 20 x 20 sample pairs of |[A(t), A(t')]|_F with A in units of 1/tau.
double nonabelian_witness(const AuxFrame& f, int samples = 20);
double nonabelian_witness(const ConnectionSeries& c, double duration, int samples = 20);

// Closure phase of |psi_1> rebuilt from the gauge-invariant loop integral
// (discrete Bargmann invariant, Richardson-corrected) plus the dynamical
// phase integral; compare with lambda1(tau) - lambda1(0) modulo 2 pi.
struct LoopPhase {
  double geometric = 0.0;  // Aharonov-Anandan phase of the bright-state loop
  double dynamical = 0.0;  // integral of <psi_1|H|psi_1>
  double closure = 0.0;    // dynamical - geometric, wrapped near lambda1 closure
};
LoopPhase geometric_phase_loop(const AuxFrame& f, const HamiltonianSeries& h);

double wrap_near(double value, double reference);

CMatrix ideal_gate_1q(double theta, double phi1, double gamma);
CMatrix ideal_gate_2q(double xi1, double xi2);

CMatrix logical_block(const CMatrix& u, const std::vector<Eigen::Index>& logical);
CMatrix remove_global_phase(const CMatrix& u);

}  // namespace holoq
