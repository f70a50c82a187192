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

#include <doctest.h>

#include <cmath>

#include "holoq/holonomy.hpp"

using namespace holoq;

namespace {

struct Built {
  PulseSchedule p;
  AuxFrame f;
};

Built build(Scheme s, double theta, double phi1, double gamma) {
  SchemeSpec sp;
  sp.scheme = s;
  sp.theta = theta;
  sp.phi1 = phi1;
  sp.gamma = gamma;
  sp.grid_points = 2000;
  Built b{synth_pulse(sp), {}};
  b.f = aux_frame(eta_path(b.p, sp.grid_points), theta, phi1, gamma);
  return b;
}

}  // namespace

TEST_CASE("frame residuals on every scheme") {
  for (Scheme s : {Scheme::NHQC, Scheme::C_NHQC, Scheme::B_NHQC, Scheme::CB_NHQC}) {
    const Built b = build(s, 0.9, 0.4, 1.3);
    const ResidualReport r = holonomy_residuals(b.f, lambda_series(b.p), 11);
    CHECK(r.holonomy_condition_residual < 1e-6);
    CHECK(r.parallel_transport_residual < 1e-6);
    CHECK(r.gauge_deviation < 1e-6);
    CHECK(r.frame_orthonormality < 1e-12);
    CHECK(r.closure < 1e-6);
  }
}

TEST_CASE("brachistochrone connection does not commute with itself") {
  CHECK(nonabelian_witness(build(Scheme::B_NHQC, kPi / 2, 0.0, kPi / 2).f) > 1e-3);
}

TEST_CASE("witness is invariant under time rescaling") {
  SchemeSpec a;
  a.gamma = 1.0;
  a.grid_points = 2000;
  SchemeSpec b = a;
  b.omega0 = 3.0;
  auto witness = [](const SchemeSpec& sp) {
    const PulseSchedule p = synth_pulse(sp);
    return nonabelian_witness(aux_frame(eta_path(p, sp.grid_points), 0.0, 0.0, sp.gamma));
  };
  CHECK(witness(a) == doctest::Approx(witness(b)).epsilon(1e-8));
}

TEST_CASE("loop integral reproduces the closure phase") {
  for (double g : {kPi / 8, kPi / 4, kPi / 2, 3 * kPi / 4, kPi}) {
    const Built b = build(Scheme::B_NHQC, 0.0, 0.0, g);
    const LoopPhase lp = geometric_phase_loop(b.f, lambda_series(b.p));
    CHECK(std::abs(lp.closure - g) < 1e-6);
  }
}

TEST_CASE("frame holonomy equals the gate on the logical block") {
  const Built b = build(Scheme::B_NHQC, 1.2, -0.3, 2.0);
  const CMatrix u = frame_holonomy(b.f, connection(b.f, lambda_series(b.p)));
  const CMatrix l = logical_block(u, {0, 1});
  CHECK((remove_global_phase(l) - remove_global_phase(ideal_gate_1q(1.2, -0.3, 2.0))).norm() < 1e-6);
}

TEST_CASE("a frame that does not realize gamma is rejected") {
  SchemeSpec sp;
  sp.gamma = 1.0;
  sp.grid_points = 1000;
  const PulseSchedule p = synth_pulse(sp);
  CHECK_THROWS_AS(aux_frame(eta_path(p, 1000), 0.0, 0.0, 1.5), InvariantViolation);
}

TEST_CASE("two-qubit target and helpers") {
  const CMatrix u = ideal_gate_2q(kPi / 4, -kPi / 4);
  CHECK(u(3, 3) == std::polar(1.0, -kPi / 4));
  CHECK(unitarity_error(u) < 1e-15);
  CHECK(wrap_near(0.1 + 4 * kPi, 0.0) == doctest::Approx(0.1));
  const CMatrix g = std::polar(1.0, 0.7) * ideal_gate_1q(0.3, 0.2, 1.0);
  CHECK((remove_global_phase(g) - remove_global_phase(ideal_gate_1q(0.3, 0.2, 1.0))).norm() < 1e-14);
}
