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

#include "holoq/perturb.hpp"

using namespace holoq;

namespace {

SchemeSpec x_half(Scheme s) {
  SchemeSpec sp;
  sp.scheme = s;
  sp.theta = kPi / 2;
  sp.gamma = kPi / 2;
  sp.grid_points = 2000;
  return sp;
}

}  // namespace

// Independent oracle: on a constant-drive loop the overlaps integrate to
// Q00 = pi cos(eta3) sin^2(eta3) and |Q01| = pi sin^3(eta3).
TEST_CASE("B-NHQC overlaps on the X^1/2 loop") {
  const PerturbContext c = perturb_context(x_half(Scheme::B_NHQC));
  const double e3 = 2 * kPi / 3;
  CHECK(c.eta3 == doctest::Approx(e3).epsilon(1e-12));
  CHECK(c.q(0, 0).real() == doctest::Approx(kPi * std::cos(e3) * std::pow(std::sin(e3), 2)).epsilon(1e-8));
  CHECK(std::abs(c.q(0, 1)) == doctest::Approx(kPi * std::pow(std::sin(e3), 3)).epsilon(1e-8));
  CHECK(std::abs(c.q(0, 2)) < 1e-10);
  CHECK(c.q.hermiticity() < 1e-10);
  CHECK(c.p.hermiticity() < 1e-10);
}

TEST_CASE("NHQC overlaps on the X^1/2 loop") {
  const PerturbContext c = perturb_context(x_half(Scheme::NHQC));
  CHECK(std::abs(c.q(0, 0)) < 1e-10);
  CHECK(std::abs(c.q(0, 1)) == doctest::Approx(kPi * std::sin(kPi / 4)).epsilon(1e-8));
  CHECK(c.p(0, 0).real() == doctest::Approx(kPi).epsilon(1e-8));
  CHECK(c.p(1, 1).real() == doctest::Approx(kPi).epsilon(1e-8));
}

TEST_CASE("closed-form P entries agree with quadrature at eta3 = pi/2 only") {
  SchemeSpec sp;
  sp.gamma = kPi;  // eta3 = pi/2
  sp.grid_points = 2000;
  const EtaPath path = eta_path(synth_pulse(sp), sp.grid_points);
  const AuxFrame f = aux_frame(path, 0.0, 0.0, kPi);
  const OverlapMatrix p = p_matrix(f, 1.0);
  const PClosedForm cf = p_closed_form(path, 1.0);
  CHECK(std::abs(cf.p00 - p(0, 0)) < 1e-8);
  CHECK(std::abs(cf.p11 - p(1, 1)) < 1e-8);
}

TEST_CASE("first-order fidelity tracks simulation") {
  for (Scheme s : {Scheme::B_NHQC, Scheme::NHQC}) {
    const SchemeSpec sp = x_half(s);
    const PerturbContext c = perturb_context(sp);
    for (double e : {-0.1, -0.03, 0.05, 0.1}) {
      CHECK(std::abs(fidelity_theory_rabi(e, c) - fidelity_sim(sp, {e, 0.0}, 2000)) < 2e-3);
      CHECK(std::abs(fidelity_theory_detuning(e, c) - fidelity_sim(sp, {0.0, e}, 2000)) < 2e-3);
    }
    CHECK(fidelity_theory_rabi(0.0, c) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("quadrature converges under grid doubling") {
  SchemeSpec a = x_half(Scheme::B_NHQC);
  SchemeSpec b = a;
  b.grid_points = 4000;
  CHECK((perturb_context(a).q.entries - perturb_context(b).q.entries).norm() < 1e-9);
}

TEST_CASE("perturbative estimates reject large errors") {
  const PerturbContext c = perturb_context(x_half(Scheme::B_NHQC));
  CHECK_THROWS(fidelity_theory_rabi(0.3, c));
  CHECK_THROWS(fidelity_theory_detuning(-0.25, c));
}
