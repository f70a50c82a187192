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

#include <string>

#include "holoq/dynamics.hpp"
#include "holoq/qcore.hpp"

namespace holoq {

enum class FidelityMethod { STATE_AVG_1Q, STATE_AVG_2Q, TRACE };
const char* to_string(FidelityMethod m);

struct FidelityReport {
  std::string scheme;
  std::string gate;
  double value = 0.0;
  FidelityMethod method = FidelityMethod::TRACE;
  int n_states = 0;
};

// (1/2pi) int <psi_T|rho(chi)|psi_T> dchi over cos(chi)|0> + sin(chi)|1>,
// closed trapezoid on n points (odd, >= 101).
FidelityReport avg_fidelity_1q(const LinearChannel& ch, const CMatrix& target, int n = 1001);
// Product inputs on an n x n grid (n >= 21).
FidelityReport avg_fidelity_2q(const LinearChannel& ch, const CMatrix& target,
                               int n_per_axis = 21);

// |Tr(U V^dag)| / d
double trace_fidelity(const CMatrix& u_actual, const CMatrix& u_target);

// int |<e|psi(t)>|^2 dt, Simpson per segment.
double excited_population_integral(const StateTrajectory& tr, Eigen::Index excited_index);

}  // namespace holoq
