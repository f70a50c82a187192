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

#include "holoq/pulses.hpp"

#include <algorithm>
#include <cmath>

#include "holoq/csv.hpp"

namespace holoq {

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::NHQC: return "NHQC";
    case Scheme::C_NHQC: return "C_NHQC";
    case Scheme::B_NHQC: return "B_NHQC";
    case Scheme::CB_NHQC: return "CB_NHQC";
  }
  return "?";
}

std::string to_string(Envelope e) {
  return e == Envelope::CONSTANT ? "CONSTANT" : "SIN2";
}

Scheme scheme_from_string(const std::string& s) {
  if (s == "NHQC") return Scheme::NHQC;
  if (s == "C_NHQC" || s == "C-NHQC") return Scheme::C_NHQC;
  if (s == "B_NHQC" || s == "B-NHQC") return Scheme::B_NHQC;
  if (s == "CB_NHQC" || s == "CB-NHQC") return Scheme::CB_NHQC;
  throw ConfigError("unknown scheme '" + s + "'");
}

Envelope envelope_from_string(const std::string& s) {
  if (s == "CONSTANT") return Envelope::CONSTANT;
  if (s == "SIN2") return Envelope::SIN2;
  throw ConfigError("unknown envelope '" + s + "'");
}

// [conv:gate-sign] bright state picks up e^{-i gamma}; see ledger.
DriveAngles drive_angles(double theta, double phi1) { return {kPi - theta, -phi1}; }

double Segment::omega(double t_local) const {
  if (envelope == Envelope::CONSTANT) return omega0;
  const double s = std::sin(kPi * t_local / duration);
  return omega0 * s * s;
}

double Segment::area_fraction(double t_local) const {
  const double x = t_local / duration;
  if (envelope == Envelope::CONSTANT) return x;
  return x - std::sin(2.0 * kPi * x) / (2.0 * kPi);
}

// [conv:sin2-phase] phase tracks the area, not the clock.
double Segment::phase(double t_local) const {
  return phase_start + phase_span * area_fraction(t_local);
}

double Segment::area() const {
  return envelope == Envelope::CONSTANT ? omega0 * duration : 0.5 * omega0 * duration;
}

double PulseSchedule::duration() const {
  const Segment& last = segments.back();
  return last.t_start + last.duration;
}

std::size_t PulseSchedule::segment_at(double t) const {
  std::size_t k = 0;
  while (k + 1 < segments.size() && t >= segments[k + 1].t_start) ++k;
  return k;
}

double PulseSchedule::omega_at(double t) const {
  const Segment& s = segments[segment_at(t)];
  return s.omega(t - s.t_start);
}

double PulseSchedule::phi_at(double t) const {
  const Segment& s = segments[segment_at(t)];
  return s.phase(t - s.t_start);
}

double bnhqc_duration(double gamma, double omega0) {
  if (!(gamma > 0.0 && gamma < 2.0 * kPi))
    throw ConfigError("B-NHQC requires 0 < gamma < 2pi");
  if (!(omega0 > 0.0)) throw ConfigError("omega0 must be positive");
  const double d = kPi - gamma;
  return 2.0 * std::sqrt(kPi * kPi - d * d) / omega0;
}

namespace {

constexpr double kGammaEdge = 1e-6;

struct SegPlan {
  std::string label;
  double area;  // in units of omega0 * time
  double phase_start;
  double phase_span;
  double loop_gamma;
};

std::vector<SegPlan> plan(const SchemeSpec& spec) {
  const double g = spec.gamma;
  switch (spec.scheme) {
    case Scheme::B_NHQC: {
      if (!(g > kGammaEdge && g < 2.0 * kPi - kGammaEdge))
        throw ConfigError("B-NHQC gamma must lie in (0, 2pi)");
      const double tau = bnhqc_duration(g, 1.0);
      return {{"loop", tau, 0.0, 2.0 * (g - kPi), g}};
    }
    case Scheme::CB_NHQC: {
      if (!(g > kGammaEdge && g < 2.0 * kPi - kGammaEdge))
        throw ConfigError("CB-NHQC gamma must lie in (0, 2pi)");
      const double h = 0.5 * g;
      const double tau = bnhqc_duration(h, 1.0);
      const double span = 2.0 * (h - kPi);
      // [conv:cb-absolute-time] second loop continues the ramp on (tau, 2tau).
      return {{"loop1", tau, 0.0, span, h}, {"loop2", tau, kPi + span, span, h}};
    }
    case Scheme::NHQC: {
      // [conv:nhqc-jump]
      const double jump = g - kPi;
      return {{"half1", kPi, 0.0, 0.0, kPi}, {"half2", kPi, jump, 0.0, kPi}};
    }
    case Scheme::C_NHQC: {
      // [conv:c-nhqc]
      const double jump = 0.5 * g - kPi;
      return {{"loop1_half1", kPi, 0.0, 0.0, kPi},
              {"loop1_half2", kPi, jump, 0.0, kPi},
              {"loop2_half1", kPi, kPi, 0.0, kPi},
              {"loop2_half2", kPi, kPi + jump, 0.0, kPi}};
    }
  }
  throw ConfigError("unknown scheme");
}

void validate(const SchemeSpec& spec) {
  if (!(spec.omega0 > 0.0) || !std::isfinite(spec.omega0))
    throw ConfigError("omega0 must be positive and finite");
  if (spec.grid_points < 500) throw ConfigError("grid_points must be >= 500");
  if (!std::isfinite(spec.theta) || !std::isfinite(spec.phi1) || !std::isfinite(spec.gamma))
    throw ConfigError("gate angles must be finite");
}

}  // namespace

double scheme_duration(const SchemeSpec& spec) {
  validate(spec);
  double t = 0.0;
  const double stretch = spec.envelope == Envelope::SIN2 ? 2.0 : 1.0;
  for (const auto& p : plan(spec)) t += stretch * p.area / spec.omega0;
  return t;
}

double nominal_area(const SchemeSpec& spec) {
  double a = 0.0;
  for (const auto& p : plan(spec)) a += p.area;
  return a;
}

PulseSchedule synth_pulse(const SchemeSpec& spec) {
  validate(spec);
  PulseSchedule out;
  out.spec = spec;
  out.drive = drive_angles(spec.theta, spec.phi1);
  const double stretch = spec.envelope == Envelope::SIN2 ? 2.0 : 1.0;
  const auto plans = plan(spec);
  const auto n = static_cast<std::size_t>(spec.grid_points);
  double t0 = 0.0;
  for (std::size_t k = 0; k < plans.size(); ++k) {
    const SegPlan& p = plans[k];
    Segment s;
    s.label = p.label;
    s.t_start = t0;
    s.duration = stretch * p.area / spec.omega0;
    s.omega0 = spec.omega0;
    s.envelope = spec.envelope;
    s.phase_start = p.phase_start;
    s.phase_span = p.phase_span;
    s.loop_gamma = p.loop_gamma;
    s.start_index = out.times.size();
    const bool last = k + 1 == plans.size();
    const double dt = s.duration / static_cast<double>(n);
    for (std::size_t i = 0; i < n + (last ? 1 : 0); ++i) {
      const double tl = static_cast<double>(i) * dt;
      out.times.push_back(t0 + tl);
      out.omega.push_back(s.omega(tl));
      out.phi.push_back(s.phase(tl));
      out.segment_of.push_back(k);
    }
    s.end_index = out.times.size();
    out.segments.push_back(s);
    t0 += s.duration;
  }
  const double area = pulse_area(out);
  const double want = nominal_area(spec);
  if (std::abs(area - want) > 1e-9 * want)
    throw InvariantViolation("pulse area " + std::to_string(area) + " differs from nominal " +
                             std::to_string(want));
  return out;
}

double pulse_area(const PulseSchedule& s, int points_per_segment) {
  int n = std::max(2, points_per_segment);
  if (n % 2) ++n;
  double total = 0.0;
  for (const auto& seg : s.segments) {
    const double h = seg.duration / n;
    double acc = seg.omega(0.0) + seg.omega(seg.duration);
    for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * seg.omega(i * h);
    total += acc * h / 3.0;
  }
  return total;
}

EtaPath eta_path(const PulseSchedule& s, int grid_points) {
  int n = std::max(4, grid_points);
  if (n % 2) ++n;
  EtaPath path;
  const double g0 = s.segments.front().loop_gamma;
  const double c3 = (g0 - kPi) / kPi;
  if (std::abs(c3) >= 1.0) throw ConfigError("no real eta3 for gamma");
  path.eta3 = std::acos(c3);
  const double s3 = std::sin(path.eta3);
  double eta1_start = 0.0;
  for (const auto& seg : s.segments) {
    if (std::abs(seg.loop_gamma - g0) > 1e-12)
      throw InvariantViolation("eta3 must be constant along the path");
    SegmentRange r;
    r.first = path.times.size();
    for (int i = 0; i <= n; ++i) {
      const double tl = seg.duration * i / n;
      path.times.push_back(seg.t_start + tl);
      // [conv:eta-closure] eta2 follows the drive phase, eta1 = area / sin(eta3).
      path.eta1.push_back(eta1_start + seg.area() * seg.area_fraction(tl) / s3);
      path.eta2.push_back(seg.phase(tl));
      path.omega.push_back(seg.omega(tl));
    }
    r.last = path.times.size() - 1;
    path.segments.push_back(r);
    eta1_start += seg.area() / s3;
  }
  path.loops = eta1_start / (2.0 * kPi);
  return path;
}

EtaPath eta_path(double gamma, double omega0, int grid_points) {
  if (!(std::abs(gamma - kPi) < kPi)) throw ConfigError("no real eta3: |gamma - pi| >= pi");
  SchemeSpec spec;
  spec.scheme = Scheme::B_NHQC;
  spec.gamma = gamma;
  spec.omega0 = omega0;
  spec.grid_points = std::max(grid_points, 500);
  return eta_path(synth_pulse(spec), grid_points);
}

void write_pulse_csv(std::ostream& os, const PulseSchedule& s) {
  CsvWriter w(os);
  w.header({"t", "omega", "phi", "segment"});
  for (std::size_t i = 0; i < s.times.size(); ++i)
    w.row(s.times[i], s.omega[i], s.phi[i], s.segments[s.segment_of[i]].label);
}

}  // namespace holoq
