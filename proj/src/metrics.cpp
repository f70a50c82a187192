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

#include "holoq/metrics.hpp"

#include <cmath>

namespace holoq {

const char* to_string(FidelityMethod m) {
  switch (m) {
    case FidelityMethod::STATE_AVG_1Q: return "STATE_AVG_1Q";
    case FidelityMethod::STATE_AVG_2Q: return "STATE_AVG_2Q";
    case FidelityMethod::TRACE: return "TRACE";
  }
  return "?";
}

namespace {

void check_value(double v) {
  if (!std::isfinite(v) || v < -1e-9 || v > 1.0 + 1e-9)
    throw InvariantViolation("fidelity " + std::to_string(v) + " outside [0, 1]");
}

double trapezoid_weight(int k, int n) { return (k == 0 || k == n - 1) ? 0.5 : 1.0; }

}  // namespace

FidelityReport avg_fidelity_1q(const LinearChannel& ch, const CMatrix& target, int n) {
  if (n < 101 || n % 2 == 0) throw std::invalid_argument("avg_fidelity_1q: n must be odd, >= 101");
  if (ch.logical_dim() != 2 || target.rows() != 2)
    throw std::invalid_argument("avg_fidelity_1q: two-dimensional logical space expected");
  const double h = 2.0 * kPi / (n - 1);
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const double chi = k * h;
    CVector s(2);
    s << std::cos(chi), std::sin(chi);
    const CVector t = ch.embed(target * s);
    const CMatrix rho = ch.apply(s * s.adjoint());
    DensityMatrix::validate(rho, 1e-9, 1e-6, 1e-6);
    acc += trapezoid_weight(k, n) * t.dot(rho * t).real();
  }
  FidelityReport r;
  r.value = acc * h / (2.0 * kPi);
  r.method = FidelityMethod::STATE_AVG_1Q;
  r.n_states = n;
  check_value(r.value);
  return r;
}

FidelityReport avg_fidelity_2q(const LinearChannel& ch, const CMatrix& target, int n) {
  if (n < 21) throw std::invalid_argument("avg_fidelity_2q: n_per_axis must be >= 21");
  if (ch.logical_dim() != 4 || target.rows() != 4)
    throw std::invalid_argument("avg_fidelity_2q: four-dimensional logical space expected");
  const double h = 2.0 * kPi / (n - 1);
  double acc = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      CVector s1(2), s2(2);
      s1 << std::cos(a * h), std::sin(a * h);
      s2 << std::cos(b * h), std::sin(b * h);
      const CVector s = kron(s1, s2);
      const CVector t = ch.embed(target * s);
      const CMatrix rho = ch.apply(s * s.adjoint());
      DensityMatrix::validate(rho, 1e-9, 1e-6, 1e-6);
      acc += trapezoid_weight(a, n) * trapezoid_weight(b, n) * t.dot(rho * t).real();
    }
  }
  FidelityReport r;
  r.value = acc * h * h / (4.0 * kPi * kPi);
  r.method = FidelityMethod::STATE_AVG_2Q;
  r.n_states = n * n;
  check_value(r.value);
  return r;
}

double trace_fidelity(const CMatrix& u, const CMatrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("trace_fidelity: dimension mismatch");
  return std::abs((u * v.adjoint()).trace()) / static_cast<double>(u.rows());
}

double excited_population_integral(const StateTrajectory& tr, Eigen::Index e) {
  double total = 0.0;
  for (const auto& [first, last] : tr.segments) {
    const std::size_t n = last - first;
    if (n == 0) continue;
    if (n % 2) throw std::invalid_argument("population integral needs an even segment grid");
    const double h = (tr.times[last] - tr.times[first]) / static_cast<double>(n);
    double acc = 0.0;
    for (std::size_t i = first; i <= last; ++i) {
      const double w = (i == first || i == last) ? 1.0 : ((i - first) % 2 ? 4.0 : 2.0);
      acc += w * std::norm(tr.states[i](e));
    }
    total += acc * h / 3.0;
  }
  return total;
}

}  // namespace holoq
