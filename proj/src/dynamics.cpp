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

#include "holoq/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace holoq {

DensityMatrix::DensityMatrix(CMatrix m) : m_(std::move(m)) { validate(m_); }

DensityMatrix DensityMatrix::pure(const CVector& psi) {
  return DensityMatrix(psi * psi.adjoint());
}

void DensityMatrix::validate(const CMatrix& m, double herm_tol, double trace_tol,
                             double eig_tol) {
  if (m.rows() != m.cols()) throw InvariantViolation("density matrix not square");
  if (!all_finite(m)) throw InvariantViolation("density matrix has non-finite entries");
  if (hermiticity_error(m) > herm_tol) throw InvariantViolation("density matrix not Hermitian");
  if (std::abs(m.trace() - 1.0) > trace_tol)
    throw InvariantViolation("density matrix trace " + std::to_string(m.trace().real()) +
                             " != 1");
  const CMatrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -eig_tol)
    throw InvariantViolation("density matrix has negative eigenvalue " +
                             std::to_string(es.eigenvalues().minCoeff()));
}

namespace {

struct Piece {
  std::size_t seg;
  double a, b;
  int steps;
};

std::vector<Piece> split(const HamiltonianSeries& h, double t0, double t1, int steps) {
  if (!(t1 > t0)) throw std::invalid_argument("propagation interval must have t1 > t0");
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  std::vector<Piece> out;
  const double len = t1 - t0;
  for (std::size_t k = 0; k < h.segments(); ++k) {
    const double a = std::max(t0, h.breaks[k]);
    const double b = std::min(t1, h.breaks[k + 1]);
    if (b <= a) continue;
    const int n = std::max(1, static_cast<int>(std::lround(steps * (b - a) / len)));
    out.push_back({k, a, b, n});
  }
  if (out.empty()) throw std::invalid_argument("interval outside the Hamiltonian's support");
  return out;
}

CMatrix checked_sample(const HamiltonianSeries& h, double t, std::size_t seg) {
  CMatrix m = h.at(t, seg);
  if (!all_finite(m) || hermiticity_error(m) > 1e-10 * (1.0 + m.norm())) {
    std::ostringstream os;
    os.precision(17);
    os << "non-Hermitian Hamiltonian sample at t=" << t;
    throw InvariantViolation(os.str());
  }
  return m;
}

CMatrix product(const HamiltonianSeries& h, const std::vector<Piece>& pieces) {
  CMatrix u = identity(h.dim);
  for (const auto& p : pieces) {
    const double dt = (p.b - p.a) / p.steps;
    for (int i = 0; i < p.steps; ++i) {
      const double tm = p.a + (i + 0.5) * dt;
      u = mat_exp(checked_sample(h, tm, p.seg), cplx(0.0, -dt)) * u;
    }
  }
  return u;
}

void check_unitary(const CMatrix& u) {
  const double e = unitarity_error(u);
  if (e > 1e-9) throw InvariantViolation("propagator not unitary, |U^dag U - I|=" +
                                         std::to_string(e));
}

}  // namespace

Propagator propagate_unitary(const HamiltonianSeries& h, double t0, double t1, int steps) {
  Propagator p;
  p.dim = h.dim;
  p.matrix = product(h, split(h, t0, t1, steps));
  p.t_final = t1;
  check_unitary(p.matrix);
  return p;
}

Propagator propagate_segments(const HamiltonianSeries& h, int steps_per_segment) {
  if (steps_per_segment < 1) throw std::invalid_argument("steps must be >= 1");
  std::vector<Piece> pieces;
  for (std::size_t k = 0; k < h.segments(); ++k)
    pieces.push_back({k, h.breaks[k], h.breaks[k + 1], steps_per_segment});
  Propagator p;
  p.dim = h.dim;
  p.matrix = product(h, pieces);
  p.t_final = h.t_end();
  check_unitary(p.matrix);
  return p;
}

double step_halving_delta(const HamiltonianSeries& h, int steps_per_segment) {
  const CMatrix a = propagate_segments(h, steps_per_segment).matrix;
  const CMatrix b = propagate_segments(h, 2 * steps_per_segment).matrix;
  return (a - b).norm();
}

StateTrajectory propagate_states(const HamiltonianSeries& h, const CVector& psi0,
                                 int steps_per_segment) {
  int n = std::max(2, steps_per_segment);
  if (n % 2) ++n;
  StateTrajectory tr;
  CVector psi = psi0;
  for (std::size_t k = 0; k < h.segments(); ++k) {
    const double a = h.breaks[k], b = h.breaks[k + 1];
    const double dt = (b - a) / n;
    const std::size_t first = tr.times.size();
    tr.times.push_back(a);
    tr.states.push_back(psi);
    for (int i = 0; i < n; ++i) {
      const double tm = a + (i + 0.5) * dt;
      psi = mat_exp(checked_sample(h, tm, k), cplx(0.0, -dt)) * psi;
      tr.times.push_back(a + (i + 1) * dt);
      tr.states.push_back(psi);
    }
    tr.segments.emplace_back(first, tr.times.size() - 1);
  }
  return tr;
}

namespace {

using Triplets = std::vector<std::tuple<Eigen::Index, Eigen::Index, cplx>>;

Triplets nonzeros(const CMatrix& m) {
  Triplets t;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != cplx(0.0)) t.emplace_back(i, j, m(i, j));
  return t;
}

// Right-hand side of the master equation with a sparse path for the
// handful-of-entries operators that all models here produce.
class LindbladRhs {
 public:
  explicit LindbladRhs(const LindbladSpec& l, Eigen::Index dim) : dim_(dim) {
    drain_ = CMatrix::Zero(dim, dim);
    for (std::size_t k = 0; k < l.collapse_ops.size(); ++k) {
      if (l.collapse_ops[k].rows() != dim)
        throw std::invalid_argument("collapse operator dimension mismatch");
      if (l.rates[k] < 0.0) throw std::invalid_argument("negative Lindblad rate");
      if (l.rates[k] == 0.0) continue;
      const CMatrix op = std::sqrt(l.rates[k]) * l.collapse_ops[k];
      jumps_.push_back(nonzeros(op));
      drain_ += op.adjoint() * op;
    }
    drain_diag_ = drain_.isDiagonal(0.0);
    dissipative_ = !jumps_.empty();
  }

  struct Hamiltonian {
    CMatrix dense;
    Triplets nz;
    bool sparse = false;
  };

  Hamiltonian prepare(CMatrix h) const {
    Hamiltonian out;
    out.nz = nonzeros(h);
    out.sparse = static_cast<Eigen::Index>(out.nz.size()) * 4 < dim_ * dim_;
    out.dense = std::move(h);
    return out;
  }

  void eval(const Hamiltonian& h, const CMatrix& rho, CMatrix& out) const {
    if (h.sparse) {
      out.setZero(dim_, dim_);
      for (const auto& [i, j, v] : h.nz) {
        out.row(i) += cplx(0.0, -1.0) * v * rho.row(j);
        out.col(j) += cplx(0.0, 1.0) * v * rho.col(i);
      }
    } else {
      out.noalias() = cplx(0.0, -1.0) * (h.dense * rho);
      out.noalias() += cplx(0.0, 1.0) * (rho * h.dense);
    }
    if (!dissipative_) return;
    for (const auto& nz : jumps_)
      for (const auto& [a, b, c] : nz)
        for (const auto& [a2, b2, c2] : nz) out(a, a2) += c * std::conj(c2) * rho(b, b2);
    if (drain_diag_) {
      for (Eigen::Index j = 0; j < dim_; ++j)
        for (Eigen::Index i = 0; i < dim_; ++i)
          out(i, j) -= 0.5 * (drain_(i, i) + drain_(j, j)) * rho(i, j);
    } else {
      out.noalias() -= 0.5 * (drain_ * rho);
      out.noalias() -= 0.5 * (rho * drain_);
    }
  }

 private:
  Eigen::Index dim_;
  std::vector<Triplets> jumps_;
  CMatrix drain_;
  bool drain_diag_ = true;
  bool dissipative_ = false;
};

// Advances all states through one piece with RK4, calling `snap` after each
// step with the global time.
template <typename Snap>
void rk4_piece(const HamiltonianSeries& h, const LindbladRhs& rhs, const Piece& p,
               std::vector<CMatrix>& rhos, Snap&& snap) {
  const double dt = (p.b - p.a) / p.steps;
  const Eigen::Index d = h.dim;
  CMatrix k1(d, d), k2(d, d), k3(d, d), k4(d, d), tmp(d, d);
  for (int i = 0; i < p.steps; ++i) {
    const double t = p.a + i * dt;
    const auto h0 = rhs.prepare(checked_sample(h, t, p.seg));
    const auto hm = rhs.prepare(checked_sample(h, t + 0.5 * dt, p.seg));
    const auto h1 = rhs.prepare(checked_sample(h, t + dt, p.seg));
    for (auto& rho : rhos) {
      rhs.eval(h0, rho, k1);
      tmp = rho + 0.5 * dt * k1;
      rhs.eval(hm, tmp, k2);
      tmp = rho + 0.5 * dt * k2;
      rhs.eval(hm, tmp, k3);
      tmp = rho + dt * k3;
      rhs.eval(h1, tmp, k4);
      rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    snap(t + dt);
  }
}

}  // namespace

std::vector<DensityMatrix> propagate_lindblad(const HamiltonianSeries& h, const LindbladSpec& l,
                                              const DensityMatrix& rho0, double t0, double t1,
                                              int steps, int n_samples) {
  if (n_samples < 2) throw std::invalid_argument("n_samples must be >= 2");
  if (rho0.dim() != h.dim) throw std::invalid_argument("rho0 dimension mismatch");
  LindbladRhs rhs(l, h.dim);
  std::vector<CMatrix> rhos{rho0.matrix()};
  std::vector<DensityMatrix> out{rho0};
  const double span = t1 - t0;
  int next = 1;
  auto snap = [&](double t) {
    while (next < n_samples && t >= t0 + span * next / (n_samples - 1) - 1e-12 * span) {
      const double drift = std::abs(rhos[0].trace() - 1.0);
      if (drift > 1e-6)
        throw InvariantViolation("Lindblad trace drift " + std::to_string(drift) +
                                 "; use a smaller step");
      out.emplace_back(rhos[0]);
      ++next;
    }
  };
  for (const auto& p : split(h, t0, t1, steps)) rk4_piece(h, rhs, p, rhos, snap);
  while (static_cast<int>(out.size()) < n_samples) out.emplace_back(rhos[0]);
  return out;
}

std::vector<CMatrix> propagate_lindblad_many(const HamiltonianSeries& h, const LindbladSpec& l,
                                             const std::vector<CMatrix>& rho0, double t0,
                                             double t1, int steps) {
  LindbladRhs rhs(l, h.dim);
  std::vector<CMatrix> rhos = rho0;
  for (const auto& r : rhos)
    if (r.rows() != h.dim) throw std::invalid_argument("rho0 dimension mismatch");
  for (const auto& p : split(h, t0, t1, steps)) rk4_piece(h, rhs, p, rhos, [](double) {});
  return rhos;
}

LinearChannel::LinearChannel(std::vector<Eigen::Index> logical, Eigen::Index full_dim,
                             std::vector<CMatrix> unit_images)
    : logical_(std::move(logical)), full_dim_(full_dim), images_(std::move(unit_images)) {
  const std::size_t d = logical_.size();
  if (images_.size() != d * d) throw std::invalid_argument("LinearChannel: need d^2 images");
}

LinearChannel LinearChannel::from_unitary(const CMatrix& u, std::vector<Eigen::Index> logical) {
  const std::size_t d = logical.size();
  std::vector<CMatrix> images;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      images.push_back(u.col(logical[i]) * u.col(logical[j]).adjoint());
  return LinearChannel(std::move(logical), u.rows(), std::move(images));
}

LinearChannel LinearChannel::identity(Eigen::Index logical_dim) {
  std::vector<Eigen::Index> logical;
  for (Eigen::Index i = 0; i < logical_dim; ++i) logical.push_back(i);
  return from_unitary(holoq::identity(logical_dim), logical);
}

CMatrix LinearChannel::apply(const CMatrix& rho) const {
  const Eigen::Index d = logical_dim();
  if (rho.rows() != d) throw std::invalid_argument("LinearChannel: input dimension mismatch");
  CMatrix out = CMatrix::Zero(full_dim_, full_dim_);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      if (rho(i, j) != cplx(0.0)) out += rho(i, j) * images_[i * d + j];
  return out;
}

CVector LinearChannel::embed(const CVector& s) const {
  CVector out = CVector::Zero(full_dim_);
  for (Eigen::Index i = 0; i < logical_dim(); ++i) out(logical_[i]) = s(i);
  return out;
}

namespace {

struct ProbeSet {
  std::vector<CMatrix> inputs;
  int nq = 1;
};

ProbeSet make_probes(const HamiltonianSeries& h, const std::vector<Eigen::Index>& logical) {
  const auto d = static_cast<Eigen::Index>(logical.size());
  if (d != 2 && d != 4) throw std::invalid_argument("lindblad_channel: logical dim 2 or 4");
  ProbeSet ps;
  ps.nq = d == 2 ? 1 : 2;
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<CVector> probes(4, CVector::Zero(2));
  probes[0](0) = 1.0;
  probes[1](1) = 1.0;
  probes[2] << r, r;
  probes[3] << r, cplx(0.0, r);
  const int n_probe = ps.nq == 1 ? 4 : 16;
  for (int p = 0; p < n_probe; ++p) {
    const CVector ls = ps.nq == 1 ? probes[p] : kron(probes[p / 4], probes[p % 4]);
    CVector full = CVector::Zero(h.dim);
    for (Eigen::Index i = 0; i < d; ++i) full(logical[i]) = ls(i);
    ps.inputs.push_back(full * full.adjoint());
  }
  return ps;
}

// Rebuilds the images of |i><j| from the probe outputs.
LinearChannel reconstruct(const std::vector<Eigen::Index>& logical, Eigen::Index dim, int nq,
                          const std::vector<CMatrix>& outputs) {
  for (const auto& o : outputs) {
    const double drift = std::abs(o.trace() - 1.0);
    if (drift > 1e-6)
      throw InvariantViolation("Lindblad trace drift " + std::to_string(drift) +
                               "; use a smaller step");
    DensityMatrix::validate(o, 1e-10, 1e-6, 1e-7);
  }
  const cplx hp = 0.5 * cplx(1.0, 1.0), hm = 0.5 * cplx(1.0, -1.0);
  // rows: |0><0|, |0><1|, |1><0|, |1><1| ; cols: probe |0>, |1>, |+>, |+i>
  const cplx coef[4][4] = {{1.0, 0.0, 0.0, 0.0},
                           {-hp, -hp, 1.0, kI},
                           {-hm, -hm, 1.0, -kI},
                           {0.0, 1.0, 0.0, 0.0}};
  const auto d = static_cast<Eigen::Index>(logical.size());
  std::vector<CMatrix> images;
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      CMatrix img = CMatrix::Zero(dim, dim);
      if (nq == 1) {
        const int u = static_cast<int>(2 * i + j);
        for (int p = 0; p < 4; ++p) img += coef[u][p] * outputs[p];
      } else {
        const int u1 = static_cast<int>(2 * (i / 2) + j / 2);
        const int u2 = static_cast<int>(2 * (i % 2) + j % 2);
        for (int p = 0; p < 16; ++p) img += coef[u1][p / 4] * coef[u2][p % 4] * outputs[p];
      }
      images.push_back(std::move(img));
    }
  }
  return LinearChannel(logical, dim, std::move(images));
}

}  // namespace

LinearChannel lindblad_channel(const HamiltonianSeries& h, const LindbladSpec& l,
                               const std::vector<Eigen::Index>& logical, int steps) {
  const ProbeSet ps = make_probes(h, logical);
  const auto outputs = propagate_lindblad_many(h, l, ps.inputs, h.t_start(), h.t_end(), steps);
  return reconstruct(logical, h.dim, ps.nq, outputs);
}

ChannelTrajectory lindblad_channel_trajectory(const HamiltonianSeries& h, const LindbladSpec& l,
                                              const std::vector<Eigen::Index>& logical,
                                              int steps, int n_samples) {
  if (n_samples < 2) throw std::invalid_argument("n_samples must be >= 2");
  const ProbeSet ps = make_probes(h, logical);
  LindbladRhs rhs(l, h.dim);
  std::vector<CMatrix> rhos = ps.inputs;
  ChannelTrajectory out;
  const double t0 = h.t_start(), span = h.t_end() - h.t_start();
  out.times.push_back(t0);
  out.channels.push_back(reconstruct(logical, h.dim, ps.nq, rhos));
  int next = 1;
  auto snap = [&](double t) {
    while (next < n_samples && t >= t0 + span * next / (n_samples - 1) - 1e-12 * span) {
      out.times.push_back(t);
      out.channels.push_back(reconstruct(logical, h.dim, ps.nq, rhos));
      ++next;
    }
  };
  for (const auto& p : split(h, h.t_start(), h.t_end(), steps)) rk4_piece(h, rhs, p, rhos, snap);
  return out;
}

}  // namespace holoq
