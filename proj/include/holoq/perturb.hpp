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

#include <ostream>
#include <vector>

#include "holoq/holonomy.hpp"

namespace holoq {

enum class OverlapKind { RABI_Q, DETUNING_P };

struct OverlapMatrix {
  CMatrix entries;  // 3 x 3, index k,m over psi_0, psi_1, psi_2
  OverlapKind kind = OverlapKind::RABI_Q;

  cplx operator()(int k, int m) const { return entries(k, m); }
  double hermiticity() const { return hermiticity_error(entries); }
};

// Q_km = int <psi_k|H|psi_m> dt, composite Simpson per segment.
OverlapMatrix q_matrix(const AuxFrame& f, const HamiltonianSeries& h);
// P_km = int <psi_k|V|psi_m> dt, default V = omega0 |e><e|.
OverlapMatrix p_matrix(const AuxFrame& f, const CMatrix& v);
OverlapMatrix p_matrix(const AuxFrame& f, double omega0);

// Closed forms for P on a single-loop path with constant omega0:
// P00 = int omega0 cos^2(eta3/2), P11 = int omega0 sin^2(eta3/2),
// P01 = -int (omega0/2) sin(eta3) exp(i int deta2/cos(eta3)).
struct PClosedForm {
  cplx p00, p11, p01;
  cplx p01_via_eta1;  // same exponent written as eta1(t)
};
PClosedForm p_closed_form(const EtaPath& path, double omega0);

// Everything the first-order fidelity estimates need for one gate.
struct PerturbContext {
  SchemeSpec spec;
  AuxFrame frame;
  OverlapMatrix q;
  OverlapMatrix p;
  CMatrix target;  // logical 2 x 2
  double eta3 = 0.0;
};
PerturbContext perturb_context(const SchemeSpec& spec);

// Normalized first-order propagator
//   U' = sum_m N_m (|psi_m(tau)> - i eps sum_k X_km |psi_k(tau)>) <psi_m(0)|,
//   N_m = (1 + eps^2 sum_k |X_km|^2)^(-1/2),
// scored with F = |Tr(U'_L U^dag)| / 2.
double fidelity_theory_rabi(double alpha, const PerturbContext& ctx);
double fidelity_theory_detuning(double beta, const PerturbContext& ctx);

// The simplified closed-form expression (Rabi error), reported alongside.
double fidelity_closed_form_rabi(double alpha, const OverlapMatrix& q, double eta3);

// Direct simulation oracle for the same gate.
double fidelity_sim(const SchemeSpec& spec, const ErrorParams& err, int steps = 4000);

struct FigS1Row {
  double error_fraction;
  double f_theory_bnhqc, f_sim_bnhqc, f_theory_nhqc, f_sim_nhqc;
};
void write_figs1_csv(std::ostream& os, const std::vector<FigS1Row>& rows);

}  // namespace holoq
