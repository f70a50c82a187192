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

#include "holoq/qcore.hpp"

#include <array>
#include <cmath>

namespace holoq {

CMatrix identity(Eigen::Index dim) { return CMatrix::Identity(dim, dim); }

CMatrix dagger(const CMatrix& m) { return m.adjoint(); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const Eigen::Index ad = a.rows(), bd = b.rows();
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw std::invalid_argument("kron: square matrices expected");
  if (ad * bd > kMaxDim)
    throw std::invalid_argument("kron: dimension " + std::to_string(ad * bd) +
                                " exceeds maximum " + std::to_string(kMaxDim));
  CMatrix out(ad * bd, ad * bd);
  for (Eigen::Index i = 0; i < ad; ++i)
    for (Eigen::Index j = 0; j < ad; ++j)
      out.block(i * bd, j * bd, bd, bd) = a(i, j) * b;
  return out;
}

CVector kron(const CVector& a, const CVector& b) {
  if (a.size() * b.size() > kMaxDim)
    throw std::invalid_argument("kron: dimension " + std::to_string(a.size() * b.size()) +
                                " exceeds maximum " + std::to_string(kMaxDim));
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("commutator: dimension mismatch");
  return a * b - b * a;
}

bool all_finite(const CMatrix& m) {
  for (Eigen::Index k = 0; k < m.size(); ++k) {
    const cplx v = m.data()[k];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

namespace {

double norm1(const CMatrix& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

// Higham 2005 coefficients.
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};
constexpr double kTheta13 = 5.371920351148152;

}  // namespace

CMatrix mat_exp(const CMatrix& m, cplx scale) {
  if (m.rows() != m.cols()) throw std::invalid_argument("mat_exp: square matrix expected");
  if (!all_finite(m) || !std::isfinite(scale.real()) || !std::isfinite(scale.imag()))
    throw std::invalid_argument("mat_exp: non-finite input");
  const Eigen::Index n = m.rows();
  CMatrix a = scale * m;
  const double nrm = norm1(a);
  if (nrm == 0.0) return identity(n);

  int s = 0;
  if (nrm > kTheta13) s = static_cast<int>(std::ceil(std::log2(nrm / kTheta13)));
  if (s > 0) a /= std::ldexp(1.0, s);

  const auto& b = kPade13;
  const CMatrix id = identity(n);
  const CMatrix a2 = a * a;
  const CMatrix a4 = a2 * a2;
  const CMatrix a6 = a4 * a2;
  const CMatrix u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) +
                          b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id;
  const CMatrix u = a * u_inner;
  const CMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 +
                    b[4] * a4 + b[2] * a2 + b[0] * id;
  CMatrix r = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < s; ++k) r = r * r;
  return r;
}

CMatrix ket_bra(Eigen::Index dim, Eigen::Index i, Eigen::Index j) {
  CMatrix m = CMatrix::Zero(dim, dim);
  m(i, j) = 1.0;
  return m;
}

CVector basis(Eigen::Index dim, Eigen::Index i) {
  CVector v = CVector::Zero(dim);
  v(i) = 1.0;
  return v;
}

double frobenius(const CMatrix& m) { return m.norm(); }

double hermiticity_error(const CMatrix& m) { return (m - m.adjoint()).norm(); }

double unitarity_error(const CMatrix& m) {
  return (m.adjoint() * m - identity(m.rows())).norm();
}

namespace pauli {
CMatrix x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
CMatrix y() {
  CMatrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}
CMatrix z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace pauli

}  // namespace holoq
