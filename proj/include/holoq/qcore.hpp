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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace holoq {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

// Largest Hilbert-space dimension the library is meant for.
inline constexpr Eigen::Index kMaxDim = 64;

// Bad user input (maps to CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical invariant was violated during a run (exit code 3).
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CMatrix identity(Eigen::Index dim);
CMatrix dagger(const CMatrix& m);
CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron(const CVector& a, const CVector& b);
CMatrix commutator(const CMatrix& a, const CMatrix& b);

// exp(scale * m). Pade-13 with scaling and squaring.
CMatrix mat_exp(const CMatrix& m, cplx scale = 1.0);

// |i><j| in dimension dim.
CMatrix ket_bra(Eigen::Index dim, Eigen::Index i, Eigen::Index j);
CVector basis(Eigen::Index dim, Eigen::Index i);

bool all_finite(const CMatrix& m);
double frobenius(const CMatrix& m);
double hermiticity_error(const CMatrix& m);
double unitarity_error(const CMatrix& m);

namespace pauli {
CMatrix x();
CMatrix y();
CMatrix z();
}  // namespace pauli

}  // namespace holoq
