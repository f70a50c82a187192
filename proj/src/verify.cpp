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

#include <algorithm>
#include <cmath>

#include "holoq/csv.hpp"
#include "holoq/dynamics.hpp"
#include "holoq/holonomy.hpp"
#include "holoq/parallel.hpp"
#include "holoq/perturb.hpp"
#include "holoq/runner.hpp"

namespace holoq {

namespace {

constexpr Scheme kAll[] = {Scheme::NHQC, Scheme::C_NHQC, Scheme::B_NHQC, Scheme::CB_NHQC};

struct Suite {
  std::string name;
  std::vector<TargetCheck> checks;
};

Suite pulses_suite(const ExperimentConfig& cfg) {
  Suite s{"pulses", {}};
  double dur = 0.0, mono = 0.0, area = 0.0;
  double prev = 0.0;
  for (int k = 1; k <= 32; ++k) {
    const double g = kPi * k / 32.0;
    SchemeSpec sp;
    sp.gamma = g;
    sp.omega0 = cfg.omega0;
    dur = std::max(dur, std::abs(synth_pulse(sp).duration() - min_time_1q(g, cfg.omega0)));
    const double t = bnhqc_duration(g, cfg.omega0);
    if (k > 1) mono = std::max(mono, prev - t);
    prev = t;
    sp.envelope = Envelope::SIN2;
    for (Scheme sc : kAll) {
      sp.scheme = sc;
      area = std::max(area, std::abs(pulse_area(synth_pulse(sp)) - nominal_area(sp)) /
                                     nominal_area(sp));
    }
  }
  s.checks.push_back(check_max("B-NHQC duration matches 2 sqrt(pi^2 - (pi - gamma)^2)", 1e-12, dur));
  s.checks.push_back(check_max("B-NHQC duration non-decreasing on (0, pi]", 0.0, mono));
  s.checks.push_back(check_max("sin^2 envelope pulse area, relative error", 1e-9, area));
  s.checks.push_back(check_max("NHQC duration minus B-NHQC at gamma = pi", 1e-12,
                               std::abs(bnhqc_duration(kPi, cfg.omega0) - 2.0 * kPi / cfg.omega0)));

  std::vector<std::pair<Scheme, GateSpec>> jobs;
  for (Scheme sc : kAll)
    for (const char* g : {"T", "X_HALF"}) jobs.push_back({sc, named_gate(g)});
  std::vector<double> err(jobs.size());
  parallel_for(jobs.size(), cfg.workers, [&](std::size_t i) {
    err[i] = 1.0 - fidelity_sim(scheme_spec(jobs[i].first, jobs[i].second, cfg), {}, cfg.steps);
  });
  s.checks.push_back(check_max("noiseless gate infidelity, all schemes and gates", 1e-8,
                               *std::max_element(err.begin(), err.end())));
  return s;
}

Suite holonomy_suite(const ExperimentConfig& cfg) {
  Suite s{"holonomy", {}};
  const GateSpec gate = named_gate("X_HALF");
  std::vector<ResidualReport> reps(std::size(kAll));
  parallel_for(reps.size(), cfg.workers, [&](std::size_t i) {
    SchemeSpec sp = scheme_spec(kAll[i], gate, cfg);
    const PulseSchedule p = synth_pulse(sp);
    const AuxFrame f = aux_frame(eta_path(p, sp.grid_points), sp.theta, sp.phi1, sp.gamma);
    reps[i] = holonomy_residuals(f, lambda_series(p), cfg.seed);
  });
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const std::string n = to_string(kAll[i]);
    s.checks.push_back(check_max("frame equation residual " + n, 1e-6, reps[i].holonomy_condition_residual));
    s.checks.push_back(check_max("parallel transport residual " + n, 1e-6,
                                 reps[i].parallel_transport_residual));
    s.checks.push_back(check_max("gauge covariance deviation " + n, 1e-6, reps[i].gauge_deviation));
    s.checks.push_back(check_max("frame orthonormality " + n, 1e-9, reps[i].frame_orthonormality));
    if (kAll[i] == Scheme::B_NHQC || kAll[i] == Scheme::CB_NHQC)
      s.checks.push_back(check_min("non-Abelian witness " + n, 1e-3, reps[i].nonabelian_witness));
  }

  const double gammas[] = {kPi / 8, kPi / 4, kPi / 2, 3 * kPi / 4, kPi};
  std::vector<double> dev(std::size(gammas));
  parallel_for(dev.size(), cfg.workers, [&](std::size_t i) {
    SchemeSpec sp;
    sp.gamma = gammas[i];
    sp.omega0 = cfg.omega0;
    sp.grid_points = cfg.grid_points;
    const PulseSchedule p = synth_pulse(sp);
    const AuxFrame f = aux_frame(eta_path(p, sp.grid_points), 0.0, 0.0, sp.gamma);
    dev[i] = std::abs(geometric_phase_loop(f, lambda_series(p)).closure - gammas[i]);
  });
  s.checks.push_back(check_max("loop-integral phase vs gamma (5 angles)", 1e-6,
                               *std::max_element(dev.begin(), dev.end())));

  // [conv:cb-composition] both CB loops give the same propagator up to a phase.
  SchemeSpec cb = scheme_spec(Scheme::CB_NHQC, named_gate("T"), cfg);
  const HamiltonianSeries h = lambda_series(synth_pulse(cb));
  const CMatrix u1 = propagate_unitary(h, h.breaks[0], h.breaks[1], cfg.steps).matrix;
  const CMatrix u2 = propagate_unitary(h, h.breaks[1], h.breaks[2], cfg.steps).matrix;
  s.checks.push_back(check_max("CB-NHQC loop propagators equal up to global phase", 1e-6,
                               (remove_global_phase(u2) - remove_global_phase(u1)).norm()));
  return s;
}

Suite perturb_suite(const ExperimentConfig& cfg) {
  Suite s{"perturb", {}};
  SchemeSpec sp;
  sp.theta = kPi / 2;
  sp.gamma = kPi / 2;
  sp.omega0 = cfg.omega0;
  sp.grid_points = cfg.grid_points;
  const PerturbContext c = perturb_context(sp);
  SchemeSpec fine = sp;
  fine.grid_points = 2 * sp.grid_points;
  const PerturbContext cf = perturb_context(fine);
  s.checks.push_back(check_max("Q Hermiticity", 1e-9, c.q.hermiticity()));
  s.checks.push_back(check_max("P Hermiticity", 1e-9, c.p.hermiticity()));
  s.checks.push_back(check_max("Q grid-doubling change", 1e-9, (c.q.entries - cf.q.entries).norm()));
  s.checks.push_back(check_max("P grid-doubling change", 1e-9, (c.p.entries - cf.p.entries).norm()));
  double worst = 0.0;
  for (double a : {-0.1, -0.05, 0.05, 0.1}) {
    worst = std::max(worst, std::abs(fidelity_theory_rabi(a, c) - fidelity_sim(sp, {a, 0.0}, cfg.steps)));
    worst = std::max(worst, std::abs(fidelity_theory_detuning(a, c) - fidelity_sim(sp, {0.0, a}, cfg.steps)));
  }
  s.checks.push_back(check_max("first-order theory vs simulation, |error| <= 0.1", 2e-3, worst));
  return s;
}

Suite optimal_suite(const ExperimentConfig& cfg) {
  Suite s{"optimal", {}};
  double over = 0.0;
  for (int k = 1; k < 64; ++k) over = std::max(over, min_time_1q(2 * kPi * k / 64, 1.0) - 2 * kPi);
  s.checks.push_back(check_max("minimum time never exceeds 2 pi / Omega0", 0.0, over));
  double qbe = 0.0;
  for (Scheme sc : kAll) {
    SchemeSpec sp = scheme_spec(sc, named_gate("T"), cfg);
    qbe = std::max(qbe, qbe_constraint_residual(lambda_series(synth_pulse(sp)), cfg.omega0));
  }
  s.checks.push_back(check_max("Tr H^2 = Omega0^2 constraint, constant envelope", 1e-9, qbe));

  OptimalitySearchSpec os;
  os.gamma = kPi / 2;
  os.omega0 = cfg.omega0;
  os.n_knots = 2;
  os.workers = cfg.workers;
  const OptimalitySearchResult r = time_optimality_search(os);
  s.checks.push_back(check_min("ramp search finds nothing below tau - step (k >= -1)", -1.0,
                               r.found ? r.steps_from_analytic : -1e9));

  const TwoQubitParams base = cfg.two_qubit.params();
  for (const auto& p : calibration_profiles(base, cfg.two_qubit.setting)) {
    if (p.axis == "beta_mod") continue;  // multi-peaked; reported only
    s.checks.push_back(check_min("two-qubit profile unimodal along " + p.axis, 1.0,
                                 p.unimodal_interior ? 1.0 : 0.0));
  }
  return s;
}

}  // namespace

SweepResult run_verify(const ExperimentConfig& cfg) {
  SweepResult r;
  r.name = cfg.name.empty() ? "verify" : cfg.name;
  r.header = {"suite", "check", "target", "achieved", "kind", "pass"};
  for (const Suite& s : {pulses_suite(cfg), holonomy_suite(cfg), perturb_suite(cfg), optimal_suite(cfg)}) {
    for (const auto& c : s.checks) {
      r.rows.push_back({s.name, c.label, format_number(c.target), format_number(c.achieved), c.kind,
                        c.pass ? "1" : "0"});
      r.targets.push_back(c);
    }
  }
  r.meta["name"] = r.name;
  r.meta["experiment"] = to_string(cfg.experiment);
  r.meta["config_hash"] = config_hash(cfg);
  r.meta["config"] = config_to_json(cfg);
  return r;
}

}  // namespace holoq
