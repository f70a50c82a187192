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

#include <vector>

#include "holoq/model.hpp"
#include "holoq/qcore.hpp"

namespace holoq {

struct Propagator {
  Eigen::Index dim = 0;
  CMatrix matrix;
  double t_final = 0.0;
};

class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix m);
  static DensityMatrix pure(const CVector& psi);

  const CMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

  // Throws InvariantViolation naming the broken property.
  static void validate(const CMatrix& m, double herm_tol = 1e-10, double trace_tol = 1e-8,
                       double eig_tol = 1e-7);

 private:
  CMatrix m_;
};

// Midpoint-sampled product of exp(-i H dt). Steps are distributed over the
// segments of h in proportion to their length; no step straddles a break.
Propagator propagate_unitary(const HamiltonianSeries& h, double t0, double t1, int steps);
// Same with a fixed number of steps inside every segment.
Propagator propagate_segments(const HamiltonianSeries& h, int steps_per_segment);

// |U(steps) - U(2 steps)|_F.
double step_halving_delta(const HamiltonianSeries& h, int steps_per_segment);

// State samples on a uniform grid of every segment (both endpoints kept, so
// boundary times appear twice). Even steps_per_segment for Simpson rules.
struct StateTrajectory {
  std::vector<double> times;
  std::vector<CVector> states;
  std::vector<std::pair<std::size_t, std::size_t>> segments;  // inclusive
};
StateTrajectory propagate_states(const HamiltonianSeries& h, const CVector& psi0,
                                 int steps_per_segment);

// RK4 on the Lindblad equation over [t0, t1]. Returns n_samples equally
// spaced snapshots including both ends (n_samples >= 2).
std::vector<DensityMatrix> propagate_lindblad(const HamiltonianSeries& h, const LindbladSpec& l,
                                              const DensityMatrix& rho0, double t0, double t1,
                                              int steps, int n_samples = 2);

// Final states for several initial matrices sharing one Hamiltonian pass.
// Inputs need not be physical (the map is linear); outputs are not validated.
std::vector<CMatrix> propagate_lindblad_many(const HamiltonianSeries& h, const LindbladSpec& l,
                                             const std::vector<CMatrix>& rho0, double t0,
                                             double t1, int steps);

// Linear map on logical density matrices, stored by its action on |i><j|.
class LinearChannel {
 public:
  LinearChannel(std::vector<Eigen::Index> logical, Eigen::Index full_dim,
                std::vector<CMatrix> unit_images);

  static LinearChannel from_unitary(const CMatrix& u, std::vector<Eigen::Index> logical);
  static LinearChannel identity(Eigen::Index logical_dim);

  // rho is logical_dim x logical_dim; result lives in the full space.
  CMatrix apply(const CMatrix& rho) const;
  CVector embed(const CVector& logical_state) const;
  Eigen::Index logical_dim() const { return static_cast<Eigen::Index>(logical_.size()); }
  Eigen::Index full_dim() const { return full_dim_; }

 private:
  std::vector<Eigen::Index> logical_;
  Eigen::Index full_dim_;
  std::vector<CMatrix> images_;  // index i * d + j
};

// Channel built from Lindblad propagation of physical probe states
// (|0>, |1>, |+>, |+i> per qubit); logical_dim must be 2 or 4.
LinearChannel lindblad_channel(const HamiltonianSeries& h, const LindbladSpec& l,
                               const std::vector<Eigen::Index>& logical, int steps);

// Channel snapshots at n_samples evenly spaced times (first = identity).
struct ChannelTrajectory {
  std::vector<double> times;
  std::vector<LinearChannel> channels;
};
ChannelTrajectory lindblad_channel_trajectory(const HamiltonianSeries& h, const LindbladSpec& l,
                                              const std::vector<Eigen::Index>& logical,
                                              int steps, int n_samples);

}  // namespace holoq
