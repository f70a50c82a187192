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

#include "holoq/optimal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "holoq/dynamics.hpp"
#include "holoq/holonomy.hpp"
#include "holoq/parallel.hpp"
#include "holoq/pulses.hpp"

namespace holoq {

double min_time_1q(double gamma, double omega0) {
  if (!(gamma > 0.0 && gamma < 2.0 * kPi)) throw std::invalid_argument("gamma must lie in (0, 2pi)");
  if (!(omega0 > 0.0)) throw std::invalid_argument("omega0 must be positive");
  const double d = kPi - gamma;
  return 2.0 * std::sqrt(kPi * kPi - d * d) / omega0;
}

TwoQubitTiming min_time_2q(double xi, double g_eff) {
  if (!(g_eff > 0.0)) throw std::invalid_argument("effective coupling must be positive");
  TwoQubitTiming t;
  t.duration = min_time_1q(xi, g_eff);
  // [conv:mu-seed] 2(xi - pi)/pi is not a rate; the gate time replaces pi.
  t.mu = 2.0 * (xi - kPi) / t.duration;
  return t;
}

// [conv:qbe-bandwidth] H = (Omega/2)(|b><e| + h.c.) gives Tr H^2 = Omega^2 / 2.
double qbe_constraint_residual(const HamiltonianSeries& h, double omega0, int samples) {
  if (samples < 2) throw std::invalid_argument("samples must be >= 2");
  double worst = 0.0;
  for (std::size_t k = 0; k < h.segments(); ++k) {
    const double a = h.breaks[k], b = h.breaks[k + 1];
    for (int i = 0; i < samples; ++i) {
      const double t = a + (b - a) * i / (samples - 1);
      const CMatrix m = h.at(t, k);
      worst = std::max(worst, std::abs((m * m).trace().real() - 0.5 * omega0 * omega0));
    }
  }
  return worst;
}

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> start, double step, int max_evals, double ftol) {
  const std::size_t n = start.size();
  std::vector<std::vector<double>> pts(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
  std::vector<double> val(n + 1);
  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };
  for (std::size_t i = 0; i <= n; ++i) val[i] = eval(pts[i]);
  std::vector<std::size_t> order(n + 1);
  while (evals < max_evals) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return val[a] < val[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
    if (std::abs(val[worst] - val[best]) <= ftol) break;
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i)
      if (i != worst)
        for (std::size_t k = 0; k < n; ++k) c[k] += pts[i][k] / static_cast<double>(n);
    auto along = [&](double s) {
      std::vector<double> x(n);
      for (std::size_t k = 0; k < n; ++k) x[k] = c[k] + s * (pts[worst][k] - c[k]);
      return x;
    };
    const auto xr = along(-1.0);
    const double fr = eval(xr);
    if (fr < val[best]) {
      const auto xe = along(-2.0);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[worst] = xe;
        val[worst] = fe;
      } else {
        pts[worst] = xr;
        val[worst] = fr;
      }
    } else if (fr < val[second]) {
      pts[worst] = xr;
      val[worst] = fr;
    } else {
      const auto xc = fr < val[worst] ? along(-0.5) : along(0.5);
      const double fc = eval(xc);
      if (fc < std::min(fr, val[worst])) {
        pts[worst] = xc;
        val[worst] = fc;
      } else {
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == best) continue;
          for (std::size_t k = 0; k < n; ++k) pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
          val[i] = eval(pts[i]);
        }
      }
    }
  }
  const auto it = std::min_element(val.begin(), val.end());
  SimplexResult r;
  r.x = pts[static_cast<std::size_t>(it - val.begin())];
  r.value = *it;
  r.evaluations = evals;
  return r;
}

std::string OptimalitySearchResult::to_json() const {
  nlohmann::ordered_json j;
  j["gamma"] = gamma;
  j["tau_analytic"] = tau_analytic;
  j["tau_found"] = found ? nlohmann::ordered_json(tau_found) : nlohmann::ordered_json(nullptr);
  j["n_candidates"] = n_candidates;
  j["tolerance"] = tolerance;
  j["grid_step"] = grid_step;
  j["steps_from_analytic"] = steps_from_analytic;
  j["best_infidelity"] = best_infidelity;
  j["tolerance_dominated"] = tolerance_dominated;
  j["knots"] = knots;
  return j.dump(2);
}

CMatrix ramp_propagator(const std::vector<double>& knots, double duration, double omega0,
                        double theta_d, double phi1_d) {
  if (knots.empty()) throw std::invalid_argument("ramp needs at least one knot");
  CVector mu(3);
  mu << std::sin(theta_d / 2) * std::polar(1.0, phi1_d), std::cos(theta_d / 2), 0.0;
  CVector e = CVector::Zero(3);
  e(2) = 1.0;
  const CMatrix h0 = 0.5 * omega0 * (mu * e.adjoint() + e * mu.adjoint());
  const CMatrix pe = ket_bra(3, 2, 2);
  const double dt = duration / static_cast<double>(knots.size());
  // Frame R(phi) = diag(1, 1, e^{i phi}) removes the phase; a linear ramp
  // becomes a constant detuning on |e>.
  auto frame = [](double phi) {
    CMatrix r = identity(3);
    r(2, 2) = std::polar(1.0, phi);
    return r;
  };
  CMatrix u = identity(3);
  double prev = 0.0;
  for (double next : knots) {
    const double w = (next - prev) / dt;
    u = frame(next) * mat_exp(h0 + w * pe, cplx(0.0, -dt)) * frame(prev).adjoint() * u;
    prev = next;
  }
  return u;
}

namespace {

double ramp_infidelity(const std::vector<double>& knots, double duration, double omega0,
                       const DriveAngles& d, const CMatrix& target) {
  const CMatrix u = ramp_propagator(knots, duration, omega0, d.theta, d.phi1);
  const CMatrix ul = logical_block(u, {0, 1});
  return 1.0 - std::abs((ul * target.adjoint()).trace()) / 2.0;
}

struct Candidate {
  double value;
  std::size_t index;
};

}  // namespace

OptimalitySearchResult time_optimality_search(const OptimalitySearchSpec& s) {
  if (s.n_knots < 1 || s.n_knots > 6) throw std::invalid_argument("n_knots must lie in [1, 6]");
  if (s.phase_grid < 2) throw std::invalid_argument("phase_grid must be >= 2");
  if (s.tolerance < 1e-5) throw std::invalid_argument("tolerance must be >= 1e-5");
  if (!(s.duration_step > 0.0) || !(s.scan_to > s.scan_from) || !(s.scan_from > 0.0))
    throw std::invalid_argument("invalid duration scan");

  OptimalitySearchResult r;
  r.gamma = s.gamma;
  r.tolerance = s.tolerance;
  r.tau_analytic = min_time_1q(s.gamma, s.omega0);
  r.grid_step = s.duration_step * r.tau_analytic;

  const DriveAngles d = drive_angles(s.theta, s.phi1);
  const CMatrix target = ideal_gate_1q(s.theta, s.phi1, s.gamma);
  std::size_t n_grid = 1;
  for (int k = 0; k < s.n_knots; ++k) n_grid *= static_cast<std::size_t>(s.phase_grid);
  const double dphi = 4.0 * kPi / s.phase_grid;
  auto grid_point = [&](std::size_t idx) {
    std::vector<double> x(s.n_knots);
    for (int k = 0; k < s.n_knots; ++k) {
      x[k] = -2.0 * kPi + dphi * static_cast<double>(idx % s.phase_grid);
      idx /= s.phase_grid;
    }
    return x;
  };

  // Durations tau * (1 + k * step) on an integer lattice anchored at tau.
  const auto k_lo = static_cast<int>(std::ceil((s.scan_from - 1.0) / s.duration_step - 1e-9));
  const auto k_hi = static_cast<int>(std::floor((s.scan_to - 1.0) / s.duration_step + 1e-9));
  std::vector<double> vals(n_grid);
  for (int kk = k_lo; kk <= k_hi; ++kk) {
    const double dur = r.tau_analytic * (1.0 + kk * s.duration_step);
    parallel_for(n_grid, s.workers, [&](std::size_t i) {
      vals[i] = ramp_infidelity(grid_point(i), dur, s.omega0, d, target);
    });
    r.n_candidates += static_cast<long>(n_grid);
    std::vector<Candidate> c(n_grid);
    for (std::size_t i = 0; i < n_grid; ++i) c[i] = {vals[i], i};
    const std::size_t k = std::min<std::size_t>(std::max(1, s.refine_starts), n_grid);
    std::partial_sort(c.begin(), c.begin() + static_cast<long>(k), c.end(),
                      [](const Candidate& a, const Candidate& b) {
                        return a.value < b.value || (a.value == b.value && a.index < b.index);
                      });
    std::vector<SimplexResult> refined(k);
    parallel_for(k, s.workers, [&](std::size_t i) {
      refined[i] = nelder_mead(
          [&](const std::vector<double>& x) { return ramp_infidelity(x, dur, s.omega0, d, target); },
          grid_point(c[i].index), 0.5 * dphi, 600, 1e-14);
    });
    std::size_t best = 0;
    for (std::size_t i = 1; i < k; ++i)
      if (refined[i].value < refined[best].value) best = i;
    for (const auto& ref : refined) r.n_candidates += ref.evaluations;
    if (refined[best].value < r.best_infidelity || kk == k_lo) {
      r.best_infidelity = refined[best].value;
      r.knots = refined[best].x;
    }
    if (refined[best].value <= s.tolerance) {
      r.found = true;
      r.tau_found = dur;
      r.steps_from_analytic = kk;
      r.best_infidelity = refined[best].value;
      r.knots = refined[best].x;
      break;
    }
  }
  r.tolerance_dominated = r.found && r.steps_from_analytic < -1;
  return r;
}

TwoQubitGate two_qubit_gate(const TwoQubitParams& base, const TwoQubitSetting& s) {
  TwoQubitGate g;
  g.params = base;
  g.params.beta_mod = s.beta_mod;
  g.params.mu = 0.0;
  const TwoQubitTiming seed = min_time_2q(base.xi1, g.params.g_eff());
  g.duration = seed.duration * s.tau_scale;
  // [conv:mu-sign] the effective term carries e^{+i mu t}, so the applied
  // detuning is the negative of the seed.
  g.params.mu = -seed.mu * s.mu_scale;
  if (!(g.params.nu() > 0.0)) throw std::invalid_argument("two-qubit setting has nu <= 0");
  return g;
}

CMatrix two_qubit_logical_full(const TwoQubitGate& g, int steps) {
  const CMatrix u = propagate_unitary(two_qubit_full_series(g.params, g.duration), 0.0,
                                      g.duration, steps).matrix;
  return logical_block(u, two_qubit_logical());
}

CMatrix two_qubit_logical_eff(const TwoQubitGate& g, int steps) {
  const CMatrix u = propagate_unitary(two_qubit_eff_series(g.params, g.duration), 0.0,
                                      g.duration, steps).matrix;
  // effective basis (01, 11, e2, ee) -> logical (00, 01, 10, 11)
  CMatrix l = identity(4);
  l(1, 1) = u(0, 0);
  l(1, 3) = u(0, 1);
  l(3, 1) = u(1, 0);
  l(3, 3) = u(1, 1);
  return l;
}

double two_qubit_unitary_fidelity(const CMatrix& l, double xi1, double xi2, int n) {
  if (n < 3) throw std::invalid_argument("n_per_axis must be >= 3");
  const CMatrix m = ideal_gate_2q(xi1, xi2).adjoint() * l;
  const double h = 2.0 * kPi / (n - 1);
  double acc = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      CVector s1(2), s2(2);
      s1 << std::cos(a * h), std::sin(a * h);
      s2 << std::cos(b * h), std::sin(b * h);
      const CVector s = kron(s1, s2);
      const double w = ((a == 0 || a == n - 1) ? 0.5 : 1.0) * ((b == 0 || b == n - 1) ? 0.5 : 1.0);
      acc += w * std::norm(s.dot(m * s));
    }
  return acc * h * h / (4.0 * kPi * kPi);
}

CalibrationResult calibrate_two_qubit(const TwoQubitParams& base, const CalibrationOptions& o) {
  if (o.beta_grid < 2 || !(o.beta_hi > o.beta_lo)) throw std::invalid_argument("invalid beta grid");
  const double xi1 = base.xi1, xi2 = base.xi2;
  auto objective = [&](const TwoQubitSetting& s) {
    if (s.beta_mod <= 0.0 || s.tau_scale <= 0.0) return 1.0;
    const TwoQubitGate g = two_qubit_gate(base, s);
    return 1.0 - two_qubit_unitary_fidelity(two_qubit_logical_full(g, o.coarse_steps), xi1, xi2, 11);
  };
  std::vector<double> grid(o.beta_grid);
  parallel_for(grid.size(), o.workers, [&](std::size_t i) {
    const double b = o.beta_lo + (o.beta_hi - o.beta_lo) * i / (o.beta_grid - 1);
    grid[i] = objective({b, 1.0, 1.0});
  });
  const auto best = static_cast<std::size_t>(std::min_element(grid.begin(), grid.end()) - grid.begin());
  const double b0 = o.beta_lo + (o.beta_hi - o.beta_lo) * best / (o.beta_grid - 1);
  const SimplexResult sr = nelder_mead(
      [&](const std::vector<double>& x) { return objective({x[0], x[1], x[2]}); }, {b0, 1.0, 1.0},
      0.05, o.max_evals, 1e-9);

  CalibrationResult r;
  r.setting = {sr.x[0], sr.x[1], sr.x[2]};
  const TwoQubitGate g = two_qubit_gate(base, r.setting);
  r.duration = g.duration;
  r.mu = g.params.mu;
  const CMatrix lf = two_qubit_logical_full(g, o.final_steps);
  const CMatrix le = two_qubit_logical_eff(g, std::max(2000, o.final_steps / 5));
  r.fidelity_full = two_qubit_unitary_fidelity(lf, xi1, xi2, o.n_per_axis);
  r.fidelity_eff = two_qubit_unitary_fidelity(le, xi1, xi2, o.n_per_axis);
  r.eff_vs_full_infidelity = 1.0 - std::abs((lf.adjoint() * le).trace()) / 4.0;
  return r;
}

std::vector<Profile> calibration_profiles(const TwoQubitParams& base, const TwoQubitSetting& at,
                                          int points, int steps) {
  if (points < 3) throw std::invalid_argument("profile needs >= 3 points");
  struct Axis {
    const char* name;
    double lo, hi;
  };
  const Axis axes[] = {{"beta_mod", 0.6, 1.8}, {"tau_scale", 0.9, 1.1}, {"mu_scale", 0.8, 1.2}};
  std::vector<Profile> out;
  for (int a = 0; a < 3; ++a) {
    Profile p;
    p.axis = axes[a].name;
    for (int i = 0; i < points; ++i) {
      const double v = axes[a].lo + (axes[a].hi - axes[a].lo) * i / (points - 1);
      TwoQubitSetting s = at;
      (a == 0 ? s.beta_mod : a == 1 ? s.tau_scale : s.mu_scale) = v;
      const CMatrix l = two_qubit_logical_eff(two_qubit_gate(base, s), steps);
      p.values.push_back(v);
      p.fidelity.push_back(two_qubit_unitary_fidelity(l, base.xi1, base.xi2, 11));
    }
    const auto peak = static_cast<std::size_t>(
        std::max_element(p.fidelity.begin(), p.fidelity.end()) - p.fidelity.begin());
    bool ok = peak > 0 && peak + 1 < p.fidelity.size();
    for (std::size_t i = 1; ok && i < p.fidelity.size(); ++i) {
      const double diff = p.fidelity[i] - p.fidelity[i - 1];
      if (i <= peak ? diff < -1e-12 : diff > 1e-12) ok = false;
    }
    p.unimodal_interior = ok;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace holoq
