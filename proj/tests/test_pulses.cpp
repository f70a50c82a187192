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
#include "holoq/pulses.hpp"

using namespace holoq;

namespace {

SchemeSpec spec(Scheme s, double gamma, Envelope e = Envelope::CONSTANT) {
  SchemeSpec sp;
  sp.scheme = s;
  sp.gamma = gamma;
  sp.envelope = e;
  sp.grid_points = 1000;
  return sp;
}

}  // namespace

TEST_CASE("gate durations") {
  CHECK(bnhqc_duration(kPi, 1.0) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
  CHECK(bnhqc_duration(kPi / 2, 2.0) == doctest::Approx(kPi * std::sqrt(3.0) / 2.0).epsilon(1e-15));
  for (double g : {0.2, kPi / 4, 1.9, kPi, 4.0, 6.0}) {
    CHECK(synth_pulse(spec(Scheme::NHQC, g)).duration() == doctest::Approx(2.0 * kPi).epsilon(1e-14));
    CHECK(synth_pulse(spec(Scheme::C_NHQC, g)).duration() == doctest::Approx(4.0 * kPi).epsilon(1e-14));
    CHECK(std::abs(synth_pulse(spec(Scheme::CB_NHQC, g)).duration() - 2.0 * bnhqc_duration(g / 2, 1.0)) < 1e-12);
    CHECK(std::abs(synth_pulse(spec(Scheme::B_NHQC, g, Envelope::SIN2)).duration() -
                   2.0 * bnhqc_duration(g, 1.0)) < 1e-12);
  }
}

TEST_CASE("degenerate loop angles are rejected") {
  CHECK_THROWS_AS(synth_pulse(spec(Scheme::B_NHQC, 1e-7)), ConfigError);
  CHECK_THROWS_AS(synth_pulse(spec(Scheme::B_NHQC, 2.0 * kPi)), ConfigError);
  SchemeSpec bad = spec(Scheme::B_NHQC, 1.0);
  bad.omega0 = -1.0;
  CHECK_THROWS_AS(synth_pulse(bad), ConfigError);
}

TEST_CASE("sin^2 schedules keep the pulse area") {
  for (Scheme s : {Scheme::NHQC, Scheme::C_NHQC, Scheme::B_NHQC, Scheme::CB_NHQC}) {
    const SchemeSpec sp = spec(s, 1.1, Envelope::SIN2);
    CHECK(std::abs(pulse_area(synth_pulse(sp)) - nominal_area(sp)) < 1e-9 * nominal_area(sp));
  }
}

TEST_CASE("ideal gate equals exp(-i gamma n.sigma / 2) up to e^{i gamma / 2}") {
  for (double th : {0.0, 0.7, kPi / 2, 2.9})
    for (double ph : {0.0, 1.3, -2.0})
      for (double g : {0.4, kPi, 5.0}) {
        CMatrix ns = std::cos(th) * pauli::z() +
                     std::sin(th) * (std::cos(ph) * pauli::x() + std::sin(ph) * pauli::y());
        const CMatrix want = std::polar(1.0, g / 2) * mat_exp(ns, cplx(0.0, -g / 2));
        CHECK((ideal_gate_1q(th, ph, g) - want).norm() < 1e-13);
      }
}

TEST_CASE("noiseless schedules realize the ideal gate") {
  for (Scheme s : {Scheme::NHQC, Scheme::C_NHQC, Scheme::B_NHQC, Scheme::CB_NHQC}) {
    for (Envelope e : {Envelope::CONSTANT, Envelope::SIN2}) {
      SchemeSpec sp = spec(s, 2.2, e);
      sp.theta = 1.1;
      sp.phi1 = -0.6;
      const CMatrix u = propagate_segments(lambda_series(synth_pulse(sp)), 2000).matrix;
      const CMatrix l = logical_block(u, {0, 1});
      const double f = std::abs((l * ideal_gate_1q(sp.theta, sp.phi1, sp.gamma).adjoint()).trace()) / 2;
      CHECK(1.0 - f < 1e-8);
    }
  }
}

TEST_CASE("path of a B-NHQC loop") {
  const EtaPath p = eta_path(kPi / 2, 1.0, 1000);
  CHECK(std::cos(p.eta3) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(p.eta1.back() - p.eta1.front() == doctest::Approx(2.0 * kPi).epsilon(1e-12));
  CHECK(p.eta2.back() - p.eta2.front() == doctest::Approx(-kPi).epsilon(1e-12));
}
