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

using namespace holoq;

namespace {

CMatrix drive3(double omega) {
  CMatrix h = CMatrix::Zero(3, 3);
  h(1, 2) = h(2, 1) = 0.5 * omega;
  return h;
}

}  // namespace

TEST_CASE("constant Hamiltonian propagates to its exponential") {
  CMatrix h = drive3(1.3);
  h(0, 0) = 0.2;
  const auto p = propagate_unitary(constant_series(h, 0.0, 2.0), 0.0, 2.0, 7);
  CHECK((p.matrix - mat_exp(h, cplx(0.0, -2.0))).norm() < 1e-12);
}

TEST_CASE("resonant pi pulse swaps ground and excited") {
  const auto p = propagate_unitary(constant_series(drive3(1.0), 0.0, kPi), 0.0, kPi, 10);
  CHECK(std::norm(p.matrix(2, 1)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("midpoint product converges at second order") {
  HamiltonianSeries h;
  h.dim = 3;
  h.breaks = {0.0, 3.0};
  h.fn = [](double t, std::size_t) {
    CMatrix m = drive3(1.0 + 0.5 * std::sin(t));
    m(2, 2) = 0.3 * t;
    return m;
  };
  const double d1 = step_halving_delta(h, 200), d2 = step_halving_delta(h, 400);
  CHECK(d1 / d2 == doctest::Approx(4.0).epsilon(0.02));
}

TEST_CASE("excited population decays at the summed rate") {
  const double g = 0.05;
  const auto l = lindblad_spec(3, g);
  const auto h = constant_series(CMatrix::Zero(3, 3), 0.0, 10.0);
  const auto out = propagate_lindblad(h, l, DensityMatrix::pure(basis(3, 2)), 0.0, 10.0, 400, 3);
  // |0><e| and |1><e| both drain |e> (dephasing does not).
  CHECK(out[1].matrix()(2, 2).real() == doctest::Approx(std::exp(-2 * g * 5.0)).epsilon(1e-9));
  CHECK(out[2].matrix()(2, 2).real() == doctest::Approx(std::exp(-2 * g * 10.0)).epsilon(1e-9));
  CHECK(out[2].matrix()(0, 0).real() == doctest::Approx(0.5 * (1 - std::exp(-2 * g * 10.0))).epsilon(1e-9));
}

TEST_CASE("coherence decays with decay and dephasing") {
  const double g = 0.05;
  const auto l = lindblad_spec(3, g);
  const auto h = constant_series(CMatrix::Zero(3, 3), 0.0, 4.0);
  CVector psi = CVector::Zero(3);
  psi(0) = psi(2) = 1.0 / std::sqrt(2.0);
  const auto out = propagate_lindblad(h, l, DensityMatrix::pure(psi), 0.0, 4.0, 400);
  // rho_0e decays at (2g + g) / 2.
  CHECK(std::abs(out.back().matrix()(0, 2)) == doctest::Approx(0.5 * std::exp(-1.5 * g * 4.0)).epsilon(1e-9));
}

TEST_CASE("zero-rate Lindblad channel equals the unitary channel") {
  const auto h = constant_series(drive3(0.9), 0.0, 2.0);
  const LinearChannel ch = lindblad_channel(h, lindblad_spec(3, 0.0), {0, 1}, 400);
  const CMatrix u = propagate_unitary(h, 0.0, 2.0, 400).matrix;
  const LinearChannel cu = LinearChannel::from_unitary(u, {0, 1});
  CMatrix rho(2, 2);
  rho << 0.3, cplx(0.1, 0.2), cplx(0.1, -0.2), 0.7;
  CHECK((ch.apply(rho) - cu.apply(rho)).norm() < 1e-10);
}

TEST_CASE("channel trajectory ends at the full channel") {
  const auto h = constant_series(drive3(0.9), 0.0, 2.0);
  const auto l = lindblad_spec(3, 0.01);
  const auto tr = lindblad_channel_trajectory(h, l, {0, 1}, 400, 5);
  REQUIRE(tr.channels.size() == 5);
  CHECK(tr.times.back() == doctest::Approx(2.0));
  const LinearChannel full = lindblad_channel(h, l, {0, 1}, 400);
  const CMatrix rho = CMatrix::Identity(2, 2) * 0.5;
  CHECK((tr.channels.back().apply(rho) - full.apply(rho)).norm() < 1e-13);
}

TEST_CASE("density matrix validation") {
  CMatrix bad = CMatrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix{bad}, InvariantViolation);
  bad(0, 0) = 1.5;
  bad(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{bad}, InvariantViolation);
  CHECK_NOTHROW(DensityMatrix::pure(basis(2, 0)));
}

TEST_CASE("non-Hermitian samples are reported") {
  const auto h = constant_series(kI * pauli::x(), 0.0, 1.0);
  CHECK_THROWS_AS(propagate_unitary(h, 0.0, 1.0, 10), InvariantViolation);
}
