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
#include "holoq/docs.hpp"
#include "holoq/dynamics.hpp"
#include "holoq/holonomy.hpp"
#include "holoq/metrics.hpp"
#include "holoq/parallel.hpp"
#include "holoq/perturb.hpp"
#include "holoq/runner.hpp"

namespace holoq {

namespace {

using json = nlohmann::ordered_json;
using Row = std::vector<std::string>;

std::string num(double v) { return format_number(v); }

std::string column(const std::string& prefix, Scheme s, const std::string& suffix = "") {
  return prefix + "_" + to_string(s) + (suffix.empty() ? "" : "_" + suffix);
}

json base_meta(const ExperimentConfig& cfg, const std::string& name) {
  json m;
  m["name"] = name;
  m["experiment"] = to_string(cfg.experiment);
  m["config_hash"] = config_hash(cfg);
  m["config"] = config_to_json(cfg);
  m["grid"] = {{"grid_points", cfg.grid_points}, {"steps", cfg.steps}, {"n_states", cfg.n_states}};
  json conv;
  for (const auto& e : convention_ledger()) conv[e.id] = e.adopted;
  m["conventions"] = conv;
  m["collapse_set"] = lindblad_spec(3, 1.0).convention;
  m["beta_mod"] = cfg.two_qubit.setting.beta_mod;
  return m;
}

SweepResult make_result(const ExperimentConfig& cfg, const std::string& name) {
  SweepResult r;
  r.name = name;
  r.meta = base_meta(cfg, name);
  return r;
}

double reference_fidelity(Scheme s, const std::string& gate) {
  if (s == Scheme::B_NHQC && gate == "X_HALF") return 0.9981;
  if (s == Scheme::B_NHQC && gate == "T") return 0.9990;
  if (s == Scheme::CB_NHQC && gate == "X_HALF") return 0.9982;
  if (s == Scheme::CB_NHQC && gate == "T") return 0.9992;
  return -1.0;
}

// Rows are computed independently and written by index: worker count never
// changes the output.
template <typename Fn>
std::vector<double> grid_eval(std::size_t n, int workers, Fn&& fn) {
  std::vector<double> out(n);
  parallel_for(n, workers, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

SweepResult fig2a(const ExperimentConfig& cfg) {
  SweepResult r = make_result(cfg, cfg.name);
  r.header = {"gamma"};
  for (auto s : cfg.schemes) r.header.push_back(column("tau", s));
  r.header.push_back("tau_closed_form_B_NHQC");
  const double tau0 = 2.0 * kPi / cfg.omega0;
  double worst = 0.0, nhqc_dev = 0.0;
  for (double g : cfg.gamma_angle.values()) {
    Row row{num(g)};
    for (auto s : cfg.schemes) {
      SchemeSpec sp;
      sp.scheme = s;
      sp.gamma = g;
      sp.omega0 = cfg.omega0;
      const double tau = synth_pulse(sp).duration() / tau0;
      if (s == Scheme::B_NHQC) worst = std::max(worst, std::abs(tau * tau0 - min_time_1q(g, cfg.omega0)));
      if (s == Scheme::NHQC) nhqc_dev = std::max(nhqc_dev, std::abs(tau - 1.0));
      row.push_back(num(tau));
    }
    row.push_back(num(min_time_1q(g, cfg.omega0) / tau0));
    r.rows.push_back(row);
  }
  r.targets.push_back(check_max("B-NHQC time vs closed form (max abs)", 1e-12, worst));
  r.targets.push_back(check_max("NHQC time deviation from tau0", 1e-12, nhqc_dev));
  return r;
}

SweepResult fig2b(const ExperimentConfig& cfg) {
  SweepResult r = make_result(cfg, cfg.name);
  r.header = {"gamma"};
  for (auto s : cfg.schemes) r.header.push_back(column("pe", s));
  const auto gammas = cfg.gamma_angle.values();
  const std::size_t ns = cfg.schemes.size();
  const auto vals = grid_eval(gammas.size() * ns, cfg.workers, [&](std::size_t i) {
    SchemeSpec sp;
    sp.scheme = cfg.schemes[i % ns];
    sp.gamma = gammas[i / ns];
    sp.omega0 = cfg.omega0;
    sp.envelope = cfg.envelope;
    sp.grid_points = cfg.grid_points;
    const PulseSchedule p = synth_pulse(sp);
    CVector mu(3);
    mu << std::sin(p.drive.theta / 2) * std::polar(1.0, p.drive.phi1), std::cos(p.drive.theta / 2), 0.0;
    return excited_population_integral(propagate_states(lambda_series(p), mu, cfg.steps), 2);
  });
  const auto b = std::find(cfg.schemes.begin(), cfg.schemes.end(), Scheme::B_NHQC);
  const auto nh = std::find(cfg.schemes.begin(), cfg.schemes.end(), Scheme::NHQC);
  int b_lower = 0, compared = 0;
  double nh_min = 1e300, nh_max = -1e300;
  for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
    Row row{num(gammas[gi])};
    for (std::size_t k = 0; k < ns; ++k) row.push_back(num(vals[gi * ns + k]));
    r.rows.push_back(row);
    if (nh != cfg.schemes.end()) {
      const double v = vals[gi * ns + static_cast<std::size_t>(nh - cfg.schemes.begin())];
      nh_min = std::min(nh_min, v);
      nh_max = std::max(nh_max, v);
      if (b != cfg.schemes.end() && gammas[gi] < kPi - 1e-9) {
        ++compared;
        b_lower += vals[gi * ns + static_cast<std::size_t>(b - cfg.schemes.begin())] < v;
      }
    }
  }
  if (compared)
    r.targets.push_back(check_min("fraction of gamma < pi with P_e(B-NHQC) < P_e(NHQC)", 1.0,
                                  static_cast<double>(b_lower) / compared));
  if (nh != cfg.schemes.end())
    r.targets.push_back(check_max("NHQC P_e spread over gamma", 1e-6, nh_max - nh_min));
  return r;
}

}  // namespace

SchemeSpec scheme_spec(Scheme s, const GateSpec& g, const ExperimentConfig& cfg) {
  SchemeSpec sp;
  sp.scheme = s;
  sp.theta = g.theta;
  sp.phi1 = g.phi1;
  sp.gamma = g.gamma;
  sp.omega0 = cfg.omega0;
  sp.envelope = cfg.envelope;
  sp.grid_points = cfg.grid_points;
  return sp;
}

double state_avg_fidelity(const SchemeSpec& spec, const ErrorParams& err, double gamma_rate,
                          int steps, int n_states) {
  const PulseSchedule p = synth_pulse(spec);
  const HamiltonianSeries h = lambda_series(p, err);
  const int total = steps * static_cast<int>(h.segments());
  const LinearChannel ch = lindblad_channel(h, lindblad_spec(3, gamma_rate), {0, 1}, total);
  return avg_fidelity_1q(ch, ideal_gate_1q(spec.theta, spec.phi1, spec.gamma), n_states).value;
}

double transmon_fidelity(Scheme s, Envelope env, double omega0_mhz, const TransmonConfig& t,
                         const GateSpec& g, int n_states) {
  constexpr double mhz = 2.0 * kPi;
  SchemeSpec sp;
  sp.scheme = s;
  sp.theta = g.theta;
  sp.phi1 = g.phi1;
  sp.gamma = g.gamma;
  sp.omega0 = omega0_mhz * mhz;
  sp.envelope = env;
  TransmonParams tp;
  tp.kappa = t.kappa_mhz * mhz;
  tp.omega0 = sp.omega0;
  const PulseSchedule p = synth_pulse(sp);
  const HamiltonianSeries h = transmon_series(p, tp);
  const int total = t.steps * static_cast<int>(h.segments());
  const LindbladSpec l = lindblad_spec(4, t.gamma_khz * 1e-3 * mhz, level::ke);
  const LinearChannel ch = lindblad_channel(h, l, {level::k0, level::k1}, total);
  return avg_fidelity_1q(ch, ideal_gate_1q(g.theta, g.phi1, g.gamma), n_states).value;
}

namespace {

SweepResult fig2cd(const ExperimentConfig& cfg) {
  SweepResult r = make_result(cfg, cfg.name);
  r.header = {"scheme", "gate", "t", "t_over_tau", "fidelity"};
  struct Job {
    Scheme s;
    GateSpec g;
  };
  std::vector<Job> jobs;
  for (auto s : cfg.schemes)
    for (const auto& g : cfg.gates) jobs.push_back({s, g});
  std::vector<std::vector<std::pair<double, double>>> curves(jobs.size());
  parallel_for(jobs.size(), cfg.workers, [&](std::size_t i) {
    const SchemeSpec sp = scheme_spec(jobs[i].s, jobs[i].g, cfg);
    const HamiltonianSeries h = lambda_series(synth_pulse(sp));
    const int total = cfg.steps * static_cast<int>(h.segments());
    const ChannelTrajectory tr = lindblad_channel_trajectory(
        h, lindblad_spec(3, cfg.gamma_decoherence), {0, 1}, total, cfg.time_samples);
    const CMatrix target = ideal_gate_1q(sp.theta, sp.phi1, sp.gamma);
    for (std::size_t k = 0; k < tr.times.size(); ++k)
      curves[i].emplace_back(tr.times[k], avg_fidelity_1q(tr.channels[k], target, cfg.n_states).value);
  });
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const double tau = curves[i].back().first;
    for (const auto& [t, f] : curves[i])
      r.rows.push_back({to_string(jobs[i].s), jobs[i].g.label, num(t), num(t / tau), num(f)});
    const double ref = reference_fidelity(jobs[i].s, jobs[i].g.label);
    if (ref > 0.0)
      r.targets.push_back(check_abs("F " + to_string(jobs[i].s) + " " + jobs[i].g.label, ref,
                                    curves[i].back().second, 0.0015));
  }
  return r;
}

// Fidelity table over one swept variable for every scheme x gate.
template <typename Point>
SweepResult sweep_table(const ExperimentConfig& cfg, const std::string& xname,
                        const std::vector<double>& xs, Point&& point) {
  SweepResult r = make_result(cfg, cfg.name);
  r.header = {xname};
  const std::size_t ns = cfg.schemes.size(), ng = cfg.gates.size();
  for (auto s : cfg.schemes)
    for (const auto& g : cfg.gates) r.header.push_back(column("F", s, g.label));
  const auto vals = grid_eval(xs.size() * ns * ng, cfg.workers, [&](std::size_t i) {
    const std::size_t xi = i / (ns * ng), si = (i / ng) % ns, gi = i % ng;
    return point(xs[xi], scheme_spec(cfg.schemes[si], cfg.gates[gi], cfg));
  });
  for (std::size_t xi = 0; xi < xs.size(); ++xi) {
    Row row{num(xs[xi])};
    for (std::size_t k = 0; k < ns * ng; ++k) row.push_back(num(vals[xi * ns * ng + k]));
    r.rows.push_back(row);
  }
  r.meta["values"] = json::array();
  return r;
}

double lookup(const SweepResult& r, std::size_t row, const std::string& col) {
  const auto it = std::find(r.header.begin(), r.header.end(), col);
  return std::stod(r.rows[row][static_cast<std::size_t>(it - r.header.begin())]);
}

bool has_col(const SweepResult& r, const std::string& col) {
  return std::find(r.header.begin(), r.header.end(), col) != r.header.end();
}

// CB-NHQC >= every other scheme at the sweep ends.
void ordering_targets(SweepResult& r, const ExperimentConfig& cfg, const char* what) {
  const auto cb = std::find(cfg.schemes.begin(), cfg.schemes.end(), Scheme::CB_NHQC);
  if (cb == cfg.schemes.end()) return;
  for (std::size_t row : {std::size_t{0}, r.rows.size() - 1}) {
    for (const auto& g : cfg.gates) {
      double margin = 1e300;
      for (auto s : cfg.schemes)
        if (s != Scheme::CB_NHQC)
          margin = std::min(margin, lookup(r, row, column("F", Scheme::CB_NHQC, g.label)) -
                                        lookup(r, row, column("F", s, g.label)));
      r.targets.push_back(check_min(std::string("CB-NHQC margin over others, ") + what + " = " +
                                        r.rows[row][0] + ", " + g.label,
                                    0.0, margin));
    }
  }
}

SweepResult fig3_rabi(const ExperimentConfig& cfg) {
  SweepResult r = sweep_table(cfg, "alpha", cfg.alpha.values(), [&](double a, const SchemeSpec& sp) {
    return state_avg_fidelity(sp, {a, 0.0}, cfg.gamma_decoherence, cfg.steps, cfg.n_states);
  });
  ordering_targets(r, cfg, "alpha");
  return r;
}

SweepResult fig3_detuning(const ExperimentConfig& cfg) {
  SweepResult r = sweep_table(cfg, "beta", cfg.beta.values(), [&](double b, const SchemeSpec& sp) {
    return state_avg_fidelity(sp, {0.0, b}, cfg.gamma_decoherence, cfg.steps, cfg.n_states);
  });
  ordering_targets(r, cfg, "beta");
  for (const auto& g : cfg.gates) {
    const std::string cb = column("F", Scheme::B_NHQC, g.label), cn = column("F", Scheme::NHQC, g.label);
    if (!has_col(r, cb) || !has_col(r, cn)) continue;
    double margin = 1e300;
    for (std::size_t i = 0; i < r.rows.size(); ++i)
      margin = std::min(margin, lookup(r, i, cb) - lookup(r, i, cn));
    r.targets.push_back(check_min("B-NHQC margin over NHQC across beta, " + g.label, 0.0, margin));
  }
  return r;
}

SweepResult fig3_decoherence(const ExperimentConfig& cfg) {
  return sweep_table(cfg, "gamma_rate", cfg.decoherence.values(), [&](double g, const SchemeSpec& sp) {
    return state_avg_fidelity(sp, {}, g, cfg.steps, cfg.n_states);
  });
}

SweepResult fig4cd(const ExperimentConfig& cfg) {
  // [conv:transmon-envelope] sin^2 is the reference envelope; the constant one is
  // reported next to it.
  SweepResult r = make_result(cfg, cfg.name);
  const auto& t = cfg.transmon;
  const GateSpec gate = cfg.gates.front();
  r.header = {"omega0_mhz"};
  for (auto e : t.envelopes)
    for (auto s : cfg.schemes) r.header.push_back(column("F", s, to_string(e)));
  const auto xs = t.omega0_mhz.values();
  const std::size_t ne = t.envelopes.size(), ns = cfg.schemes.size();
  // Extra column block: the nominal 45 MHz point.
  std::vector<double> pts = xs;
  pts.push_back(45.0);
  const auto vals = grid_eval(pts.size() * ne * ns, cfg.workers, [&](std::size_t i) {
    const std::size_t xi = i / (ne * ns), ei = (i / ns) % ne, si = i % ns;
    return transmon_fidelity(cfg.schemes[si], t.envelopes[ei], pts[xi], t, gate, cfg.n_states);
  });
  for (std::size_t xi = 0; xi < xs.size(); ++xi) {
    Row row{num(xs[xi])};
    for (std::size_t k = 0; k < ne * ns; ++k) row.push_back(num(vals[xi * ne * ns + k]));
    r.rows.push_back(row);
  }
  const std::size_t nominal = xs.size() * ne * ns;
  for (std::size_t ei = 0; ei < ne; ++ei) {
    double best_err[2] = {1.0, 1.0};
    for (std::size_t si = 0; si < ns; ++si) {
      const Scheme s = cfg.schemes[si];
      const double f45 = vals[nominal + ei * ns + si];
      const std::string env = to_string(t.envelopes[ei]);
      const bool reference = t.envelopes[ei] == Envelope::SIN2 && gate.label == "T";
      if (reference && s == Scheme::B_NHQC)
        r.targets.push_back(check_abs("transmon F_T B-NHQC at 45 MHz, " + env, 0.9984, f45, 0.003));
      if (reference && s == Scheme::NHQC)
        r.targets.push_back(check_abs("transmon F_T NHQC at 45 MHz, " + env, 0.9840, f45, 0.005));
      double best = 1.0;
      for (std::size_t xi = 0; xi < xs.size(); ++xi) best = std::min(best, 1.0 - vals[xi * ne * ns + ei * ns + si]);
      if (s == Scheme::B_NHQC) best_err[0] = best;
      if (s == Scheme::NHQC) best_err[1] = best;
    }
    const bool both = std::count(cfg.schemes.begin(), cfg.schemes.end(), Scheme::B_NHQC) &&
                      std::count(cfg.schemes.begin(), cfg.schemes.end(), Scheme::NHQC);
    if (both && best_err[1] > 0.0)
      r.targets.push_back(check_min("best-Omega0 error reduction B-NHQC vs NHQC, " +
                                        to_string(t.envelopes[ei]),
                                    0.5, 1.0 - best_err[0] / best_err[1]));
  }
  r.meta["nominal_omega0_mhz"] = 45.0;
  return r;
}

std::vector<SweepResult> figs1(const ExperimentConfig& cfg) {
  SchemeSpec b;
  b.scheme = Scheme::B_NHQC;
  b.theta = kPi / 2;
  b.gamma = kPi / 2;
  b.omega0 = cfg.omega0;
  b.grid_points = cfg.grid_points;
  SchemeSpec n = b;
  n.scheme = Scheme::NHQC;
  const PerturbContext cb = perturb_context(b), cn = perturb_context(n);
  std::vector<SweepResult> out;
  for (int kind = 0; kind < 2; ++kind) {
    const auto xs = kind == 0 ? cfg.alpha.values() : cfg.beta.values();
    const auto vals = grid_eval(xs.size() * 2, cfg.workers, [&](std::size_t i) {
      const double x = xs[i / 2];
      const SchemeSpec& sp = i % 2 ? n : b;
      return fidelity_sim(sp, kind == 0 ? ErrorParams{x, 0.0} : ErrorParams{0.0, x}, cfg.steps);
    });
    std::vector<FigS1Row> rows;
    double worst = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      FigS1Row row;
      row.error_fraction = xs[k];
      row.f_theory_bnhqc = kind == 0 ? fidelity_theory_rabi(xs[k], cb) : fidelity_theory_detuning(xs[k], cb);
      row.f_theory_nhqc = kind == 0 ? fidelity_theory_rabi(xs[k], cn) : fidelity_theory_detuning(xs[k], cn);
      row.f_sim_bnhqc = vals[2 * k];
      row.f_sim_nhqc = vals[2 * k + 1];
      worst = std::max({worst, std::abs(row.f_theory_bnhqc - row.f_sim_bnhqc),
                        std::abs(row.f_theory_nhqc - row.f_sim_nhqc)});
      rows.push_back(row);
    }
    SweepResult r = make_result(cfg, cfg.name + (kind == 0 ? "_rabi" : "_detuning"));
    r.header = {"error_fraction", "f_theory_bnhqc", "f_sim_bnhqc", "f_theory_nhqc", "f_sim_nhqc"};
    for (const auto& row : rows)
      r.rows.push_back({num(row.error_fraction), num(row.f_theory_bnhqc), num(row.f_sim_bnhqc),
                        num(row.f_theory_nhqc), num(row.f_sim_nhqc)});
    r.targets.push_back(check_max(std::string("max |F_theory - F_sim|, ") + (kind == 0 ? "Rabi" : "detuning"),
                                  2e-3, worst));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SweepResult> twoqubit(const ExperimentConfig& cfg) {
  const auto& q = cfg.two_qubit;
  const TwoQubitParams base = q.params();
  TwoQubitSetting setting = q.setting;
  CalibrationOptions opts = q.calibration;
  opts.workers = cfg.workers;
  if (q.calibrate) setting = calibrate_two_qubit(base, opts).setting;
  const TwoQubitGate g = two_qubit_gate(base, setting);
  const CMatrix lf = two_qubit_logical_full(g, opts.final_steps);
  const CMatrix le = two_qubit_logical_eff(g, std::max(2000, opts.final_steps / 5));
  const double f_full = two_qubit_unitary_fidelity(lf, base.xi1, base.xi2, opts.n_per_axis);
  const double f_eff = two_qubit_unitary_fidelity(le, base.xi1, base.xi2, opts.n_per_axis);
  const double disc = 1.0 - std::abs((lf.adjoint() * le).trace()) / 4.0;
  double f_open = f_full;
  if (q.gamma_khz > 0.0) {
    const LinearChannel ch = lindblad_channel(two_qubit_full_series(g.params, g.duration),
                                              lindblad_two_qubit(2.0 * kPi * q.gamma_khz * 1e-3),
                                              two_qubit_logical(), q.lindblad_steps);
    f_open = avg_fidelity_2q(ch, ideal_gate_2q(base.xi1, base.xi2), opts.n_per_axis).value;
  }
  SweepResult r = make_result(cfg, cfg.name);
  r.header = {"beta_mod", "tau_scale", "mu_scale", "duration_ns", "mu_mhz", "f_full", "f_eff",
              "f_open", "eff_vs_full_infidelity"};
  r.rows.push_back({num(setting.beta_mod), num(setting.tau_scale), num(setting.mu_scale),
                    num(g.duration * 1e3), num(g.params.mu / (2.0 * kPi)), num(f_full), num(f_eff),
                    num(f_open), num(disc)});
  r.targets.push_back(check_min("control-T average fidelity (open system)", 0.990, f_open));
  r.targets.push_back(check_abs("control-T average fidelity vs reference 0.9950", 0.9950, f_open, 0.005));
  r.targets.push_back(check_max("effective vs full model infidelity", 5e-3, disc));
  r.meta["beta_mod"] = setting.beta_mod;

  SweepResult p = make_result(cfg, cfg.name + "_profiles");
  p.header = {"axis", "value", "fidelity_eff"};
  for (const auto& prof : calibration_profiles(base, setting)) {
    for (std::size_t i = 0; i < prof.values.size(); ++i)
      p.rows.push_back({prof.axis, num(prof.values[i]), num(prof.fidelity[i])});
    if (prof.axis != "beta_mod")
      p.targets.push_back(check_min("unimodal interior maximum along " + prof.axis, 1.0,
                                    prof.unimodal_interior ? 1.0 : 0.0));
  }
  return {r, p};
}

}  // namespace

std::vector<SweepResult> run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.experiment) {
    case Experiment::FIG2A: return {fig2a(cfg)};
    case Experiment::FIG2B: return {fig2b(cfg)};
    case Experiment::FIG2CD: return {fig2cd(cfg)};
    case Experiment::FIG3_RABI: return {fig3_rabi(cfg)};
    case Experiment::FIG3_DETUNING: return {fig3_detuning(cfg)};
    case Experiment::FIG3_DECOHERENCE: return {fig3_decoherence(cfg)};
    case Experiment::FIG4CD: return {fig4cd(cfg)};
    case Experiment::FIGS1: return figs1(cfg);
    case Experiment::TWOQUBIT: return twoqubit(cfg);
    case Experiment::VERIFY: return {run_verify(cfg)};
  }
  throw ConfigError("unhandled experiment");
}

}  // namespace holoq
