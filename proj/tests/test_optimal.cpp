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

#include "holoq/dynamics.hpp"
#include "holoq/holonomy.hpp"
#include "holoq/optimal.hpp"

using namespace holoq;

TEST_CASE("minimum times") {
  CHECK(min_time_1q(kPi, 1.0) == doctest::Approx(2 * kPi).epsilon(1e-15));
  CHECK(min_time_1q(kPi / 4, 2.0) == doctest::Approx(std::sqrt(kPi * kPi - 9 * kPi * kPi / 16)).epsilon(1e-14));
  for (int k = 1; k < 40; ++k) CHECK(min_time_1q(2 * kPi * k / 40, 1.0) <= 2 * kPi);
  const TwoQubitTiming t = min_time_2q(kPi / 4, 3.0);
  CHECK(t.mu == doctest::Approx(2 * (kPi / 4 - kPi) / t.duration));
}

TEST_CASE("bandwidth constraint holds on constant-envelope schedules") {
  SchemeSpec sp;
  sp.gamma = 2.0;
  sp.omega0 = 1.7;
  sp.grid_points = 1000;
  CHECK(qbe_constraint_residual(lambda_series(synth_pulse(sp)), 1.7) < 1e-12);
  sp.envelope = Envelope::SIN2;
  CHECK(qbe_constraint_residual(lambda_series(synth_pulse(sp)), 1.7) > 0.1);
}

TEST_CASE("simplex minimizes the Rosenbrock valley") {
  auto rosen = [](const std::vector<double>& x) {
    return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
  };
  const SimplexResult r = nelder_mead(rosen, {-1.2, 1.0}, 0.5, 4000, 1e-16);
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(r.x[1] == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("single-piece ramp reproduces the brachistochrone propagator") {
  SchemeSpec sp;
  sp.gamma = 1.4;
  sp.theta = 0.8;
  sp.phi1 = 0.3;
  sp.grid_points = 1000;
  const PulseSchedule p = synth_pulse(sp);
  const CMatrix want = propagate_segments(lambda_series(p), 4000).matrix;
  const CMatrix got = ramp_propagator({2 * (sp.gamma - kPi)}, p.duration(), 1.0, p.drive.theta, p.drive.phi1);
  CHECK((got - want).norm() < 1e-6);
}

TEST_CASE("no faster ramp at gamma = pi/2") {
  OptimalitySearchSpec s;
  s.gamma = kPi / 2;
  s.n_knots = 2;
  s.phase_grid = 8;
  s.workers = 2;
  const OptimalitySearchResult r = time_optimality_search(s);
  REQUIRE(r.found);
  CHECK(r.steps_from_analytic >= -1);
  CHECK_FALSE(r.tolerance_dominated);
  CHECK(r.best_infidelity <= s.tolerance);
}

TEST_CASE("two-qubit effective model against the full model") {
  TwoQubitParams base;
  base.kappa1 = -2 * kPi * 220;
  base.kappa2 = -2 * kPi * 260;
  base.delta1 = 2 * kPi * 146;
  base.g12 = 2 * kPi * 10;
  base.xi1 = kPi / 4;
  base.xi2 = -kPi / 4;
  const TwoQubitGate g = two_qubit_gate(base, {2.5536, 1.03126, 0.95103});
  const TwoQubitTiming seed = min_time_2q(base.xi1, g.params.g_eff());
  CHECK(g.duration == doctest::Approx(1.03126 * seed.duration).epsilon(1e-14));
  CHECK(g.params.mu == doctest::Approx(-0.95103 * seed.mu).epsilon(1e-14));
  const CMatrix lf = two_qubit_logical_full(g, 6000);
  const CMatrix le = two_qubit_logical_eff(g, 2000);
  CHECK(two_qubit_unitary_fidelity(lf, base.xi1, base.xi2) > 0.998);
  CHECK(1.0 - std::abs((lf.adjoint() * le).trace()) / 4.0 < 5e-3);
  CHECK(two_qubit_unitary_fidelity(ideal_gate_2q(0.3, -0.5), 0.3, -0.5) == doctest::Approx(1.0));
  for (const Profile& p : calibration_profiles(base, {2.5536, 1.03126, 0.95103}, 11, 1000))
    if (p.axis != "beta_mod") CHECK_MESSAGE(p.unimodal_interior, p.axis);
}
