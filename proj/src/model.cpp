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

#include "holoq/model.hpp"

#include <cmath>

namespace holoq {

std::size_t HamiltonianSeries::segment_at(double t) const {
  std::size_t k = 0;
  while (k + 1 < segments() && t >= breaks[k + 1]) ++k;
  return k;
}

double TwoQubitParams::g_eff() const { return 2.0 * std::sqrt(2.0) * g12 * bessel_j1(beta_mod); }

CMatrix h_lambda(double omega, double phi, double theta, double phi1, const ErrorParams& err,
                 double omega0) {
  CMatrix h = CMatrix::Zero(3, 3);
  const cplx drive = 0.5 * omega * std::polar(1.0, -phi);
  h(0, 2) = drive * std::sin(0.5 * theta) * std::polar(1.0, phi1);
  h(1, 2) = drive * std::cos(0.5 * theta);
  h(2, 0) = std::conj(h(0, 2));
  h(2, 1) = std::conj(h(1, 2));
  h *= 1.0 + err.alpha;
  h(2, 2) += err.beta * omega0;
  return h;
}

// Two drives, resonant with g-e and e-f. Each also hits the neighbouring
// ladder transitions, detuned by multiples of kappa.
// [conv:duffing] |2> sits at 3w + 3kappa.
CMatrix h_transmon4(double omega, double phi, double theta, double phi1,
                    const TransmonParams& p, double t) {
  const double k = p.kappa;
  const double om_a = omega * std::sin(0.5 * theta);
  const double om_b = omega * std::cos(0.5 * theta) / std::sqrt(2.0);
  const cplx ea = std::polar(1.0, phi1 - phi);
  const cplx eb = std::polar(1.0, phi);
  CMatrix h = CMatrix::Zero(4, 4);
  // g-e
  h(0, 1) = 0.5 * om_a * ea + 0.5 * om_b * eb * std::polar(1.0, k * t);
  // e-f
  h(1, 2) = std::sqrt(2.0) * 0.5 * (om_a * ea * std::polar(1.0, -k * t) + om_b * eb);
  // f-h
  h(2, 3) = std::sqrt(3.0) * 0.5 *
            (om_a * ea * std::polar(1.0, -2.0 * k * t) + om_b * eb * std::polar(1.0, -k * t));
  for (int i = 0; i < 3; ++i) h(i + 1, i) = std::conj(h(i, i + 1));
  return h;
}

namespace {

void add_pair(CMatrix& h, Eigen::Index to, Eigen::Index from, cplx c) {
  h(to, from) += c;
  h(from, to) += std::conj(c);
}

}  // namespace

CMatrix h_two_qubit_full(double t, const TwoQubitParams& p) {
  using namespace level;
  CMatrix h = CMatrix::Zero(16, 16);
  if (p.g12 == 0.0) return h;
  const cplx mod = std::polar(1.0, p.beta_mod * std::cos(p.nu() * t));
  const double d = p.delta1, ka1 = p.kappa1, ka2 = p.kappa2;
  const double r2 = std::sqrt(2.0), r6 = std::sqrt(6.0);
  auto idx = two_qubit_index;
  add_pair(h, idx(ke, ke), idx(k0, k1), p.g12 * r2 * std::polar(1.0, (d - ka2) * t) * mod);
  // [conv:tq-phase] interaction-picture phase (Delta1 + kappa1) t.
  add_pair(h, idx(k1, k0), idx(ke, ke), p.g12 * r2 * std::polar(1.0, (d + ka1) * t) * mod);
  add_pair(h, idx(k2, ke), idx(k1, k1),
           p.g12 * r6 * std::polar(1.0, (d - ka2 + 2.0 * ka1) * t) * mod);
  add_pair(h, idx(k1, k1), idx(ke, k2),
           p.g12 * r6 * std::polar(1.0, (d - 2.0 * ka2 + ka1) * t) * mod);
  return h;
}

// First Jacobi-Anger sideband of the full model's |ee><01| term.
// [conv:tq-eff-sqrt3] the |11><e2| block carries sqrt(3).
CMatrix h_two_qubit_eff(double t, const TwoQubitParams& p) {
  CMatrix h = CMatrix::Zero(4, 4);
  const double ge = p.g_eff();
  constexpr Eigen::Index s01 = 0, s11 = 1, se2 = 2, see = 3;
  add_pair(h, see, s01, 0.5 * ge * kI * std::polar(1.0, p.mu * t));
  add_pair(h, s11, se2,
           0.5 * ge * std::sqrt(3.0) * kI * std::polar(1.0, (p.kappa1 - p.kappa2 + p.mu) * t));
  return h;
}

double bessel_j1(double x) {
  if (!std::isfinite(x) || std::abs(x) > 20.0)
    throw std::invalid_argument("bessel_j1: |x| must be <= 20");
  if (x == 0.0) return 0.0;
  const double v = std::cyl_bessel_j(1.0, std::abs(x));
  return x < 0.0 ? -v : v;
}

LindbladSpec lindblad_spec(int dim, double gamma, int excited_index) {
  if (dim < 3) throw std::invalid_argument("lindblad_spec: dim must be >= 3");
  if (gamma < 0.0) throw std::invalid_argument("lindblad_spec: negative rate");
  LindbladSpec l;
  if (excited_index < 0 || excited_index > 2)
    throw std::invalid_argument("lindblad_spec: excited level must be one of the lowest three");
  // Logical levels are the two of the lowest three that are not |e>.
  int logical[2], n = 0;
  for (int k = 0; k < 3; ++k)
    if (k != excited_index) logical[n++] = k;
  const int zero = logical[0], one = logical[1];
  // [conv:collapse-set]
  l.collapse_ops.push_back(ket_bra(dim, zero, excited_index));
  l.collapse_ops.push_back(ket_bra(dim, one, excited_index));
  l.collapse_ops.push_back(ket_bra(dim, excited_index, excited_index));
  if (dim >= 4) l.collapse_ops.push_back(ket_bra(dim, one, 3));
  l.rates.assign(l.collapse_ops.size(), gamma);
  l.convention = "decay |0><e|, |1><e|; dephasing |e><e|";
  if (dim >= 4) l.convention += "; decay |1><2|";
  return l;
}

LindbladSpec lindblad_two_qubit(double gamma) {
  const LindbladSpec one = lindblad_spec(4, gamma, level::ke);
  LindbladSpec l;
  const CMatrix id = identity(4);
  for (const auto& op : one.collapse_ops) {
    l.collapse_ops.push_back(kron(op, id));
    l.collapse_ops.push_back(kron(id, op));
  }
  l.rates.assign(l.collapse_ops.size(), gamma);
  l.convention = one.convention + " (each transmon)";
  return l;
}

namespace {

std::vector<double> breaks_of(const PulseSchedule& s) {
  std::vector<double> b;
  for (const auto& seg : s.segments) b.push_back(seg.t_start);
  b.push_back(s.duration());
  return b;
}

}  // namespace

HamiltonianSeries lambda_series(const PulseSchedule& s, const ErrorParams& err) {
  HamiltonianSeries h;
  h.dim = 3;
  h.breaks = breaks_of(s);
  h.fn = [segs = s.segments, d = s.drive, err, w0 = s.spec.omega0](double t, std::size_t k) {
    const Segment& seg = segs[k];
    const double tl = t - seg.t_start;
    return h_lambda(seg.omega(tl), seg.phase(tl), d.theta, d.phi1, err, w0);
  };
  return h;
}

HamiltonianSeries transmon_series(const PulseSchedule& s, const TransmonParams& p) {
  HamiltonianSeries h;
  h.dim = 4;
  h.breaks = breaks_of(s);
  h.fn = [segs = s.segments, d = s.drive, p](double t, std::size_t k) {
    const Segment& seg = segs[k];
    const double tl = t - seg.t_start;
    return h_transmon4(seg.omega(tl), seg.phase(tl), d.theta, d.phi1, p, t);
  };
  return h;
}

HamiltonianSeries two_qubit_full_series(const TwoQubitParams& p, double duration) {
  HamiltonianSeries h;
  h.dim = 16;
  h.breaks = {0.0, duration};
  h.fn = [p](double t, std::size_t) { return h_two_qubit_full(t, p); };
  return h;
}

HamiltonianSeries two_qubit_eff_series(const TwoQubitParams& p, double duration) {
  HamiltonianSeries h;
  h.dim = 4;
  h.breaks = {0.0, duration};
  h.fn = [p](double t, std::size_t) { return h_two_qubit_eff(t, p); };
  return h;
}

HamiltonianSeries constant_series(const CMatrix& m, double t0, double t1) {
  HamiltonianSeries h;
  h.dim = m.rows();
  h.breaks = {t0, t1};
  h.fn = [m](double, std::size_t) { return m; };
  return h;
}

}  // namespace holoq
