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

#include <clocale>
#include <locale>
#include <sstream>

#include "holoq/csv.hpp"
#include "holoq/qcore.hpp"

using namespace holoq;

TEST_CASE("mat_exp matches the Pauli rotation closed form") {
  for (double a : {0.0, 0.3, 1.7, 12.5, 80.0}) {
    const CMatrix got = mat_exp(pauli::x(), cplx(0.0, -a));
    const CMatrix want = std::cos(a) * identity(2) - kI * std::sin(a) * pauli::x();
    CHECK((got - want).norm() < 1e-12 * (1.0 + a));
  }
}

TEST_CASE("mat_exp of a diagonal matrix is elementwise") {
  CMatrix d = CMatrix::Zero(3, 3);
  d(0, 0) = 0.5;
  d(1, 1) = -40.0;
  d(2, 2) = cplx(0.0, 7.0);
  const CMatrix e = mat_exp(d);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(e(i, i) - std::exp(d(i, i))) < 1e-12 * std::abs(std::exp(d(i, i))) + 1e-15);
  CHECK(std::abs(e(0, 1)) < 1e-15);
}

TEST_CASE("Pauli algebra and kron") {
  CHECK((commutator(pauli::x(), pauli::y()) - 2.0 * kI * pauli::z()).norm() < 1e-15);
  const CMatrix k = kron(pauli::z(), identity(2));
  CHECK(k.rows() == 4);
  CHECK(k(2, 2) == cplx(-1.0));
  CVector a = basis(2, 1), b = basis(3, 2);
  CHECK(kron(a, b)(5) == cplx(1.0));
  CHECK(unitarity_error(pauli::y()) < 1e-15);
  CHECK(hermiticity_error(kI * pauli::x()) > 1.0);
  CHECK_THROWS_AS(kron(CMatrix::Zero(2, 3), identity(2)), std::invalid_argument);
}

TEST_CASE("numbers are written with 15 significant digits and a dot") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333333");
  CHECK(format_number(2.5e-12) == "2.5e-12");
  try {
    std::locale::global(std::locale("de_DE.UTF-8"));
  } catch (const std::runtime_error&) {
  }
  std::setlocale(LC_ALL, "de_DE.UTF-8");
  CHECK(format_number(1.5) == "1.5");
  std::ostringstream os;
  CsvWriter w(os);
  w.header({"a", "b,c"});
  w.row(1.25, 3.0);
  CHECK(os.str() == "a,\"b,c\"\n1.25,3\n");
  std::locale::global(std::locale::classic());
  std::setlocale(LC_ALL, "C");
}
