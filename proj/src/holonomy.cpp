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

#include "holoq/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <json.hpp>

namespace holoq {

namespace {

constexpr std::array<double, 3> kSigma = {-1.0, 1.0, 0.0};

cplx inner(const CVector& a, const CVector& b) { return a.dot(b); }  // <a|b>

Triple solution_states(double eta1, double eta2, double eta3, const CVector& mu,
                  const CVector& e, const CVector& dark) {
  const double c = std::cos(0.5 * eta1), s = std::sin(0.5 * eta1);
  const double c3 = std::cos(eta3), s3 = std::sin(eta3);
  const cplx ph = std::polar(1.0, 0.5 * eta2);
  Triple t;
  t[0] = (c - kI * s * c3) * ph * e - kI * s3 * s * std::conj(ph) * mu;
  t[1] = -kI * s3 * s * ph * e + (c + kI * s * c3) * std::conj(ph) * mu;
  t[2] = dark;
  return t;
}

}  // namespace

double wrap_near(double value, double reference) {
  return value + 2.0 * kPi * std::round((reference - value) / (2.0 * kPi));
}

AuxFrame aux_frame(const EtaPath& path, double theta, double phi1, double gamma) {
  if (path.times.empty() || path.segments.empty())
    throw std::invalid_argument("aux_frame: empty path");
  const DriveAngles d = drive_angles(theta, phi1);
  AuxFrame f;
  f.mu = CVector::Zero(3);
  f.mu(0) = std::sin(0.5 * d.theta) * std::polar(1.0, d.phi1);
  f.mu(1) = std::cos(0.5 * d.theta);
  f.dark = CVector::Zero(3);
  f.dark(0) = std::cos(0.5 * d.theta);
  f.dark(1) = -std::sin(0.5 * d.theta) * std::polar(1.0, -d.phi1);
  const CVector e = basis(3, 2);

  f.times = path.times;
  f.segments = path.segments;
  f.segment_of.resize(path.times.size());
  f.psi.resize(path.times.size());
  for (std::size_t s = 0; s < path.segments.size(); ++s) {
    const auto [first, last] = path.segments[s];
    std::array<cplx, 3> match = {1.0, 1.0, 1.0};
    if (s > 0) {
      const Triple fresh =
          solution_states(path.eta1[first], path.eta2[first], path.eta3, f.mu, e, f.dark);
      const Triple& prev = f.psi[path.segments[s - 1].last];
      for (int k = 0; k < 3; ++k) {
        match[k] = inner(fresh[k], prev[k]);
        if (std::abs(std::abs(match[k]) - 1.0) > 1e-9)
          throw InvariantViolation("aux_frame: frame discontinuous at segment boundary");
      }
    }
    for (std::size_t i = first; i <= last; ++i) {
      f.segment_of[i] = s;
      Triple t = solution_states(path.eta1[i], path.eta2[i], path.eta3, f.mu, e, f.dark);
      for (int k = 0; k < 3; ++k) t[k] *= match[k];
      f.psi[i] = std::move(t);
    }
  }

  const Triple& p0 = f.psi.front();
  const Triple& p1 = f.psi.back();
  for (int k = 0; k < 3; ++k)
    if (std::abs(std::abs(inner(p0[k], p1[k])) - 1.0) > 1e-8)
      throw InvariantViolation("aux_frame: path is not cyclic");
  const double measured = -std::arg(inner(p0[1], p1[1]));
  const double closure = wrap_near(measured, gamma);
  if (std::abs(closure - gamma) > 1e-6)
    throw InvariantViolation("aux_frame: loop phase " + std::to_string(closure) +
                             " does not realize gamma " + std::to_string(gamma));
  f.closure_phase = closure;

  // [conv:lambda-gauge] lambda1 is the closing gauge, advancing with eta1.
  const double span = path.eta1.back() - path.eta1.front();
  const double s3 = std::sin(path.eta3);
  f.lambda1.resize(f.times.size());
  f.dlambda1.resize(f.times.size());
  f.states.resize(f.times.size());
  for (std::size_t i = 0; i < f.times.size(); ++i) {
    f.lambda1[i] = closure * (path.eta1[i] - path.eta1.front()) / span;
    f.dlambda1[i] = closure * (path.omega[i] / s3) / span;
    for (int k = 0; k < 3; ++k)
      f.states[i][k] = std::polar(1.0, kSigma[k] * f.lambda1[i]) * f.psi[i][k];
  }
  return f;
}

std::vector<Triple> frame_derivative(const AuxFrame& f, const std::vector<Triple>& x) {
  std::vector<Triple> out(x.size());
  for (const auto& [first, last] : f.segments) {
    const std::size_t n = last - first;
    if (n < 4) throw std::invalid_argument("frame_derivative: segment too short");
    const double h = (f.times[last] - f.times[first]) / static_cast<double>(n);
    const double w = 1.0 / (12.0 * h);
    for (int k = 0; k < 3; ++k) {
      auto v = [&](std::size_t i) -> const CVector& { return x[i][k]; };
      for (std::size_t i = first; i <= last; ++i) {
        CVector d;
        if (i >= first + 2 && i + 2 <= last)
          d = w * (v(i - 2) - 8.0 * v(i - 1) + 8.0 * v(i + 1) - v(i + 2));
        else if (i == first)
          d = w * (-25.0 * v(i) + 48.0 * v(i + 1) - 36.0 * v(i + 2) + 16.0 * v(i + 3) -
                   3.0 * v(i + 4));
        else if (i == first + 1)
          d = w * (-3.0 * v(i - 1) - 10.0 * v(i) + 18.0 * v(i + 1) - 6.0 * v(i + 2) +
                   v(i + 3));
        else if (i == last)
          d = w * (25.0 * v(i) - 48.0 * v(i - 1) + 36.0 * v(i - 2) - 16.0 * v(i - 3) +
                   3.0 * v(i - 4));
        else
          d = w * (3.0 * v(i + 1) + 10.0 * v(i) - 18.0 * v(i - 1) + 6.0 * v(i - 2) -
                   v(i - 3));
        out[i][k] = std::move(d);
      }
    }
  }
  return out;
}

namespace {

// Per-member phase chi_a such that states = e^{i chi_a} psi_a.
std::array<double, 3> member_phase(const AuxFrame& f, std::size_t i) {
  std::array<double, 3> chi{};
  for (int k = 0; k < 3; ++k) chi[k] = std::arg(inner(f.psi[i][k], f.states[i][k]));
  return chi;
}

}  // namespace

ConnectionSeries connection(const AuxFrame& f, const HamiltonianSeries& h) {
  if (h.dim != 3) throw std::invalid_argument("connection: three-level Hamiltonian expected");
  if (std::abs(h.t_end() - f.times.back()) > 1e-9 * (1.0 + std::abs(h.t_end())) ||
      h.segments() != f.segments.size())
    throw std::invalid_argument("connection: frame and Hamiltonian grids differ");
  const auto dstates = frame_derivative(f, f.states);
  const auto dpsi = frame_derivative(f, f.psi);
  ConnectionSeries c;
  c.times = f.times;
  for (std::size_t i = 0; i < f.times.size(); ++i) {
    const CMatrix hm = h.at(f.times[i], f.segment_of[i]);
    const auto chi = member_phase(f, i);
    CMatrix a(3, 3), k(3, 3), ae(3, 3);
    for (int m = 0; m < 3; ++m) {
      for (int l = 0; l < 3; ++l) {
        a(m, l) = kI * inner(f.states[i][m], dstates[i][l]);
        k(m, l) = -inner(f.states[i][m], hm * f.states[i][l]);
        ae(m, l) = std::polar(1.0, chi[l] - chi[m]) * kI * inner(f.psi[i][m], dpsi[i][l]);
      }
    }
    c.A.push_back(std::move(a));
    c.K.push_back(std::move(k));
    c.A_eta.push_back(std::move(ae));
  }
  return c;
}

CMatrix frame_holonomy(const AuxFrame& f, const ConnectionSeries& c) {
  CMatrix coef = identity(3);
  for (const auto& [first, last] : f.segments) {
    for (std::size_t i = first; i < last; ++i) {
      const double dt = f.times[i + 1] - f.times[i];
      const CMatrix m = 0.5 * (c.A[i] + c.K[i] + c.A[i + 1] + c.K[i + 1]);
      coef = mat_exp(m, cplx(0.0, dt)) * coef;
    }
  }
  CMatrix u = CMatrix::Zero(3, 3);
  const Triple& start = f.states.front();
  const Triple& end = f.states.back();
  for (int m = 0; m < 3; ++m)
    for (int l = 0; l < 3; ++l) u += coef(m, l) * end[m] * start[l].adjoint();
  return u;
}

AuxFrame apply_gauge(const AuxFrame& f, const std::array<std::vector<double>, 3>& alpha) {
  AuxFrame g = f;
  for (std::size_t i = 0; i < f.times.size(); ++i)
    for (int k = 0; k < 3; ++k) g.states[i][k] *= std::polar(1.0, alpha[k].at(i));
  return g;
}

std::array<std::vector<double>, 3> random_periodic_gauge(const AuxFrame& f, std::uint64_t seed,
                                                         int harmonics) {
  std::mt19937_64 gen(seed);
  auto uniform = [&gen]() { return 2.0 * static_cast<double>(gen() >> 11) * 0x1.0p-53 - 1.0; };
  std::array<std::vector<double>, 3> alpha;
  const double t0 = f.times.front(), tau = f.duration();
  for (int k = 0; k < 3; ++k) {
    std::vector<double> amp(static_cast<std::size_t>(harmonics));
    for (auto& a : amp) a = uniform();
    alpha[k].resize(f.times.size());
    for (std::size_t i = 0; i < f.times.size(); ++i) {
      double v = 0.0;
      for (int n = 0; n < harmonics; ++n)
        v += amp[n] * std::sin(2.0 * kPi * (n + 1) * (f.times[i] - t0) / tau);
      alpha[k][i] = v;
    }
  }
  return alpha;
}

// [conv:witness-scale] tau * A is invariant under uniform time rescaling.
double nonabelian_witness(const ConnectionSeries& c, double duration, int samples) {
  const std::size_t n = c.A.size();
  std::vector<std::size_t> idx;
  for (int s = 0; s < samples; ++s)
    idx.push_back(static_cast<std::size_t>(std::llround((n - 1) * (s + 0.5) / samples)));
  double best = 0.0;
  for (std::size_t i : idx)
    for (std::size_t j : idx)
      best = std::max(best, commutator(duration * c.A[i], duration * c.A[j]).norm());
  return best;
}

double nonabelian_witness(const AuxFrame& f, int samples) {
  // A needs no Hamiltonian; a zero series on the frame grid satisfies connection().
  HamiltonianSeries zero;
  zero.dim = 3;
  for (const auto& r : f.segments) zero.breaks.push_back(f.times[r.first]);
  zero.breaks.push_back(f.times.back());
  zero.fn = [](double, std::size_t) { return CMatrix(CMatrix::Zero(3, 3)); };
  return nonabelian_witness(connection(f, zero), f.duration(), samples);
}

std::string ResidualReport::to_json() const {
  nlohmann::ordered_json j;
  j["holonomy_condition_residual"] = holonomy_condition_residual;
  j["parallel_transport_residual"] = parallel_transport_residual;
  j["gauge_deviation"] = gauge_deviation;
  j["nonabelian_witness"] = nonabelian_witness;
  j["connection_hermiticity"] = connection_hermiticity;
  j["frame_orthonormality"] = frame_orthonormality;
  j["closure"] = closure;
  return j.dump(2);
}

ResidualReport holonomy_residuals(const AuxFrame& f, const HamiltonianSeries& h,
                                  std::uint64_t gauge_seed) {
  ResidualReport r;
  const ConnectionSeries c = connection(f, h);
  const auto dpsi = frame_derivative(f, f.psi);
  for (std::size_t i = 0; i < f.times.size(); ++i) {
    r.holonomy_condition_residual = std::max(r.holonomy_condition_residual, (c.K[i] + c.A_eta[i]).norm());
    r.connection_hermiticity = std::max(r.connection_hermiticity, hermiticity_error(c.A[i]));
    const CMatrix hm = h.at(f.times[i], f.segment_of[i]);
    CMatrix gram(3, 3);
    for (int m = 0; m < 3; ++m) {
      // <phi~|d/dt|phi~> = i h_a + <psi_a|d psi_a/dt>
      const cplx ha = inner(f.psi[i][m], hm * f.psi[i][m]);
      r.parallel_transport_residual =
          std::max(r.parallel_transport_residual, std::abs(kI * ha + inner(f.psi[i][m], dpsi[i][m])));
      for (int l = 0; l < 3; ++l) gram(m, l) = inner(f.states[i][m], f.states[i][l]);
    }
    r.frame_orthonormality = std::max(r.frame_orthonormality, (gram - identity(3)).norm());
  }
  for (int k = 0; k < 3; ++k)
    r.closure = std::max(r.closure, (f.states.back()[k] - f.states.front()[k]).norm());

  const CMatrix u = frame_holonomy(f, c);
  const AuxFrame g = apply_gauge(f, random_periodic_gauge(f, gauge_seed));
  const CMatrix ug = frame_holonomy(g, connection(g, h));
  r.gauge_deviation = (ug - u).norm();
  r.nonabelian_witness = nonabelian_witness(c, f.duration());
  return r;
}

LoopPhase geometric_phase_loop(const AuxFrame& f, const HamiltonianSeries& h) {
  // [conv:loop-integral] closure = dynamical - Aharonov-Anandan phase.
  // Bright-state trajectory without the duplicated boundary samples.
  std::vector<const CVector*> path;
  for (std::size_t s = 0; s < f.segments.size(); ++s)
    for (std::size_t i = f.segments[s].first + (s ? 1 : 0); i <= f.segments[s].last; ++i)
      path.push_back(&f.psi[i][1]);
  auto bargmann = [&](std::size_t stride) {
    cplx prod = 1.0;
    std::size_t i = 0;
    for (; i + stride < path.size(); i += stride) {
      prod *= inner(*path[i], *path[i + stride]);
      prod /= std::abs(prod);
    }
    prod *= inner(*path[i], *path.front());
    return -std::arg(prod);
  };
  const double fine = bargmann(1);
  const double coarse = wrap_near(bargmann(2), fine);
  LoopPhase lp;
  lp.geometric = fine + (fine - coarse) / 3.0;

  for (const auto& [first, last] : f.segments) {
    const std::size_t n = last - first;
    if (n % 2) throw std::invalid_argument("geometric_phase_loop: even segment grid needed");
    const double hstep = (f.times[last] - f.times[first]) / static_cast<double>(n);
    double acc = 0.0;
    for (std::size_t i = first; i <= last; ++i) {
      const double w = (i == first || i == last) ? 1.0 : ((i - first) % 2 ? 4.0 : 2.0);
      const CVector& p = f.psi[i][1];
      acc += w * inner(p, h.at(f.times[i], f.segment_of[i]) * p).real();
    }
    lp.dynamical += acc * hstep / 3.0;
  }
  lp.closure = wrap_near(lp.dynamical - lp.geometric, f.closure_phase);
  return lp;
}

CMatrix ideal_gate_1q(double theta, double phi1, double gamma) {
  CMatrix ns(2, 2);
  ns << std::cos(theta), std::sin(theta) * std::polar(1.0, -phi1),
      std::sin(theta) * std::polar(1.0, phi1), -std::cos(theta);
  return std::polar(1.0, 0.5 * gamma) *
         (std::cos(0.5 * gamma) * identity(2) - kI * std::sin(0.5 * gamma) * ns);
}

CMatrix ideal_gate_2q(double xi1, double xi2) {
  CMatrix u = CMatrix::Zero(4, 4);
  u(0, 0) = 1.0;
  u(1, 1) = std::polar(1.0, xi1);
  u(2, 2) = 1.0;
  u(3, 3) = std::polar(1.0, xi2);
  return u;
}

CMatrix logical_block(const CMatrix& u, const std::vector<Eigen::Index>& logical) {
  const auto d = static_cast<Eigen::Index>(logical.size());
  CMatrix out(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) out(i, j) = u(logical[i], logical[j]);
  return out;
}

CMatrix remove_global_phase(const CMatrix& u) {
  Eigen::Index bi = 0, bj = 0;
  double best = -1.0;
  for (Eigen::Index j = 0; j < u.cols(); ++j)
    for (Eigen::Index i = 0; i < u.rows(); ++i)
      if (std::abs(u(i, j)) > best + 1e-12) {
        best = std::abs(u(i, j));
        bi = i;
        bj = j;
      }
  if (best <= 0.0) return u;
  return u * (std::conj(u(bi, bj)) / best);
}

}  // namespace holoq
