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

#include "holoq/perturb.hpp"

#include <cmath>

#include "holoq/csv.hpp"
#include "holoq/dynamics.hpp"

namespace holoq {

namespace {

template <typename Op>
CMatrix simpson_overlap(const AuxFrame& f, Op&& op) {
  CMatrix out = CMatrix::Zero(3, 3);
  for (const auto& [first, last] : f.segments) {
    const std::size_t n = last - first;
    if (n % 2) throw std::invalid_argument("overlap quadrature needs an even segment grid");
    const double h = (f.times[last] - f.times[first]) / static_cast<double>(n);
    CMatrix acc = CMatrix::Zero(3, 3);
    for (std::size_t i = first; i <= last; ++i) {
      const double w = (i == first || i == last) ? 1.0 : ((i - first) % 2 ? 4.0 : 2.0);
      const CMatrix m = op(i);
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) acc(k, l) += w * f.psi[i][k].dot(m * f.psi[i][l]);
    }
    out += acc * (h / 3.0);
  }
  return out;
}

double simpson(const std::vector<double>& y, double h) {
  const std::size_t n = y.size() - 1;
  double acc = y.front() + y.back();
  for (std::size_t i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * y[i];
  return acc * h / 3.0;
}

}  // namespace

OverlapMatrix q_matrix(const AuxFrame& f, const HamiltonianSeries& h) {
  if (h.dim != 3) throw std::invalid_argument("q_matrix: three-level Hamiltonian expected");
  if (h.segments() != f.segments.size())
    throw std::invalid_argument("q_matrix: frame and Hamiltonian grids differ");
  OverlapMatrix q;
  q.kind = OverlapKind::RABI_Q;
  q.entries = simpson_overlap(f, [&](std::size_t i) { return h.at(f.times[i], f.segment_of[i]); });
  return q;
}

OverlapMatrix p_matrix(const AuxFrame& f, const CMatrix& v) {
  OverlapMatrix p;
  p.kind = OverlapKind::DETUNING_P;
  p.entries = simpson_overlap(f, [&](std::size_t) { return v; });
  return p;
}

OverlapMatrix p_matrix(const AuxFrame& f, double omega0) {
  return p_matrix(f, omega0 * ket_bra(3, 2, 2));
}

// [conv:qp-closed-forms] reported next to quadrature; they coincide only at
// eta3 = pi/2.
PClosedForm p_closed_form(const EtaPath& path, double omega0) {
  if (path.segments.size() != 1) throw std::invalid_argument("p_closed_form: single loop only");
  const std::size_t n = path.times.size() - 1;
  const double h = (path.times.back() - path.times.front()) / static_cast<double>(n);
  const double c3 = std::cos(path.eta3), s3 = std::sin(path.eta3);
  PClosedForm out;
  const double tau = path.times.back() - path.times.front();
  out.p00 = omega0 * std::pow(std::cos(0.5 * path.eta3), 2) * tau;
  out.p11 = omega0 * std::pow(std::sin(0.5 * path.eta3), 2) * tau;
  // exponent int deta2 / cos(eta3) dt' = (eta2(t) - eta2(0)) / cos(eta3)
  std::vector<double> re(n + 1), im(n + 1), re1(n + 1), im1(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double ex = std::abs(c3) > 1e-12 ? (path.eta2[i] - path.eta2[0]) / c3 : 0.0;
    const double ex1 = path.eta1[i] - path.eta1[0];
    const double a = -0.5 * omega0 * s3;
    re[i] = a * std::cos(ex);
    im[i] = a * std::sin(ex);
    re1[i] = a * std::cos(ex1);
    im1[i] = a * std::sin(ex1);
  }
  out.p01 = {simpson(re, h), simpson(im, h)};
  out.p01_via_eta1 = {simpson(re1, h), simpson(im1, h)};
  return out;
}

PerturbContext perturb_context(const SchemeSpec& spec) {
  PerturbContext c;
  c.spec = spec;
  const PulseSchedule s = synth_pulse(spec);
  const EtaPath path = eta_path(s, spec.grid_points);
  c.frame = aux_frame(path, spec.theta, spec.phi1, spec.gamma);
  c.q = q_matrix(c.frame, lambda_series(s));
  c.p = p_matrix(c.frame, spec.omega0);
  c.target = ideal_gate_1q(spec.theta, spec.phi1, spec.gamma);
  c.eta3 = path.eta3;
  return c;
}

namespace {

double first_order_fidelity(double eps, const AuxFrame& f, const CMatrix& x,
                            const CMatrix& target) {
  const Triple& start = f.psi.front();
  const Triple& end = f.psi.back();
  CMatrix u = CMatrix::Zero(3, 3);
  for (int m = 0; m < 3; ++m) {
    double norm2 = 1.0;
    CVector col = end[m];
    for (int k = 0; k < 3; ++k) {
      norm2 += eps * eps * std::norm(x(k, m));
      col -= kI * eps * x(k, m) * end[k];
    }
    u += (1.0 / std::sqrt(norm2)) * col * start[m].adjoint();
  }
  const CMatrix ul = logical_block(u, {0, 1});
  return std::abs((ul * target.adjoint()).trace()) / 2.0;
}

}  // namespace

double fidelity_theory_rabi(double alpha, const PerturbContext& ctx) {
  if (std::abs(alpha) > 0.2) throw std::invalid_argument("|alpha| must be <= 0.2");
  return first_order_fidelity(alpha, ctx.frame, ctx.q.entries, ctx.target);
}

double fidelity_theory_detuning(double beta, const PerturbContext& ctx) {
  if (std::abs(beta) > 0.2) throw std::invalid_argument("|beta| must be <= 0.2");
  return first_order_fidelity(beta, ctx.frame, ctx.p.entries, ctx.target);
}

// [conv:rabi-closed-form-norm] N taken as sqrt(1 + alpha^2 sum_k |Q_k0|^2).
double fidelity_closed_form_rabi(double alpha, const OverlapMatrix& q, double eta3) {
  double s = 0.0;
  for (int k = 0; k < 3; ++k) s += std::norm(q(k, 0));
  const double n1 = std::sqrt(1.0 + alpha * alpha * s);
  const double a = (n1 + 1.0) / (2.0 * n1);
  const double ang = eta3 + std::atan2(std::abs(q(0, 0)), q(0, 1).real());
  const double b = alpha * alpha / (4.0 * n1 * n1) * std::pow(std::sin(ang), 2);
  return std::sqrt(a * a + b);
}

double fidelity_sim(const SchemeSpec& spec, const ErrorParams& err, int steps) {
  const PulseSchedule s = synth_pulse(spec);
  const CMatrix u = propagate_segments(lambda_series(s, err), steps).matrix;
  const CMatrix ul = logical_block(u, {0, 1});
  return std::abs((ul * ideal_gate_1q(spec.theta, spec.phi1, spec.gamma).adjoint()).trace()) / 2.0;
}

void write_figs1_csv(std::ostream& os, const std::vector<FigS1Row>& rows) {
  CsvWriter w(os);
  w.header({"error_fraction", "f_theory_bnhqc", "f_sim_bnhqc", "f_theory_nhqc", "f_sim_nhqc"});
  for (const auto& r : rows)
    w.row(r.error_fraction, r.f_theory_bnhqc, r.f_sim_bnhqc, r.f_theory_nhqc, r.f_sim_nhqc);
}

}  // namespace holoq
