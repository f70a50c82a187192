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
#include "holoq/metrics.hpp"

using namespace holoq;

TEST_CASE("state-averaged fidelity of exact and wrong gates") {
  const LinearChannel id = LinearChannel::identity(2);
  CHECK(avg_fidelity_1q(id, identity(2)).value == doctest::Approx(1.0).epsilon(1e-14));
  // real states: |<psi|X|psi>|^2 = sin^2(2 chi), mean 1/2
  CHECK(avg_fidelity_1q(id, pauli::x(), 101).value == doctest::Approx(0.5).epsilon(1e-12));
  // Z: cos^2(2 chi), mean 1/2; phase gate e^{i a}: cos^4 + sin^4 + 2 cos a cos^2 sin^2
  const double a = 0.6;
  CMatrix ph = identity(2);
  ph(1, 1) = std::polar(1.0, a);
  CHECK(avg_fidelity_1q(id, ph).value == doctest::Approx(0.75 + 0.25 * std::cos(a)).epsilon(1e-12));
}

TEST_CASE("channel embedded in a larger space") {
  const CMatrix u = mat_exp(pauli::y(), cplx(0.0, -0.2));
  CMatrix big = identity(3);
  big.topLeftCorner(2, 2) = u;
  const auto ch = LinearChannel::from_unitary(big, {0, 1});
  CHECK(avg_fidelity_1q(ch, u).value == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("two-qubit average over product states") {
  const LinearChannel id = LinearChannel::identity(4);
  CHECK(avg_fidelity_2q(id, identity(4)).value == doctest::Approx(1.0).epsilon(1e-14));
  const CMatrix cz = ideal_gate_2q(0.0, kPi);
  // |<psi|CZ|psi>|^2 for real product states, (1 - 2 s1^2 s2^2)^2 averages to 9/16
  CHECK(avg_fidelity_2q(id, cz).value == doctest::Approx(0.5625).epsilon(1e-12));
}

TEST_CASE("trace fidelity and argument checks") {
  CHECK(trace_fidelity(pauli::z(), -pauli::z()) == doctest::Approx(1.0));
  CHECK(trace_fidelity(pauli::z(), identity(2)) == doctest::Approx(0.0));
  CHECK_THROWS(avg_fidelity_1q(LinearChannel::identity(2), identity(2), 100));
  CHECK_THROWS(avg_fidelity_1q(LinearChannel::identity(2), identity(2), 51));
}

TEST_CASE("integrated excited population of a resonant drive") {
  StateTrajectory tr;
  const int n = 400;
  const double t_end = 3.0, om = 1.0;
  for (int i = 0; i <= n; ++i) {
    const double t = t_end * i / n;
    CVector s = CVector::Zero(3);
    s(1) = std::cos(0.5 * om * t);
    s(2) = cplx(0.0, -std::sin(0.5 * om * t));
    tr.times.push_back(t);
    tr.states.push_back(s);
  }
  tr.segments.emplace_back(0, n);
  // int sin^2(t/2) = t/2 - sin(t)/2
  CHECK(excited_population_integral(tr, 2) == doctest::Approx(0.5 * t_end - 0.5 * std::sin(t_end)).epsilon(1e-9));
}
