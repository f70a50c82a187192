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

#include "holoq/model.hpp"

using namespace holoq;

TEST_CASE("Lambda Hamiltonian is Hermitian with Tr H^2 = Omega^2 / 2") {
  for (double th : {0.0, 1.0, 2.5})
    for (double ph : {0.0, 0.8}) {
      const CMatrix h = h_lambda(1.7, 0.4, th, ph, {}, 1.0);
      CHECK(hermiticity_error(h) < 1e-15);
      CHECK((h * h).trace().real() == doctest::Approx(1.7 * 1.7 / 2).epsilon(1e-14));
    }
  const CMatrix hd = h_lambda(1.0, 0.0, 1.0, 0.0, {0.0, 0.1}, 2.0);
  CHECK(hd(2, 2).real() == doctest::Approx(0.2));
  const CMatrix ha = h_lambda(1.0, 0.0, 0.0, 0.0, {0.1, 0.0}, 1.0);
  CHECK(std::abs(ha(1, 2)) == doctest::Approx(0.55));
}

TEST_CASE("Bessel J1 against the standard library") {
  for (double x : {0.0, 0.3, 1.2, 1.8412, 2.5536, 3.8317, 7.0, 15.0})
    CHECK(bessel_j1(x) == doctest::Approx(std::cyl_bessel_j(1.0, x)).epsilon(1e-12));
}

TEST_CASE("two-qubit parameters") {
  TwoQubitParams p;
  p.g12 = 2.0;
  p.beta_mod = 1.2;
  CHECK(p.g_eff() == doctest::Approx(2.0 * std::sqrt(8.0) * std::cyl_bessel_j(1.0, 1.2)).epsilon(1e-12));
  p.kappa1 = -2 * kPi * 220;
  p.kappa2 = -2 * kPi * 260;
  p.delta1 = 2 * kPi * 146;
  p.mu = 3.0;
  for (double t : {0.0, 0.013, 0.04}) {
    CHECK(hermiticity_error(h_two_qubit_full(t, p)) < 1e-12);
    CHECK(hermiticity_error(h_two_qubit_eff(t, p)) < 1e-12);
  }
  CHECK(h_two_qubit_full(0.0, p).rows() == 16);
  CHECK(h_two_qubit_eff(0.0, p).rows() == 4);
}

TEST_CASE("collapse operators") {
  const LindbladSpec l3 = lindblad_spec(3, 0.01);
  REQUIRE(l3.collapse_ops.size() == 3);
  CHECK(l3.collapse_ops[0](0, 2) == cplx(1.0));
  CHECK(l3.collapse_ops[1](1, 2) == cplx(1.0));
  CHECK(l3.collapse_ops[2](2, 2) == cplx(1.0));
  const LindbladSpec l4 = lindblad_spec(4, 0.01, level::ke);
  REQUIRE(l4.collapse_ops.size() == 4);
  CHECK(l4.collapse_ops[1](level::k1, level::ke) == cplx(1.0));
  CHECK(l4.collapse_ops[3](level::k1, level::k2) == cplx(1.0));
  CHECK(lindblad_two_qubit(0.01).collapse_ops.size() == 8);
  CHECK_THROWS(lindblad_spec(3, -1.0));
}

TEST_CASE("series sampling respects segment breaks") {
  const HamiltonianSeries h = constant_series(pauli::x(), 0.0, 2.0);
  CHECK(h.segments() == 1);
  CHECK((h.at(1.0) - pauli::x()).norm() == 0.0);
}
