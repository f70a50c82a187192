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

#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "holoq/qcore.hpp"

namespace holoq {

enum class Scheme { NHQC, C_NHQC, B_NHQC, CB_NHQC };
enum class Envelope { CONSTANT, SIN2 };

std::string to_string(Scheme s);
std::string to_string(Envelope e);
Scheme scheme_from_string(const std::string& s);
Envelope envelope_from_string(const std::string& s);

struct SchemeSpec {
  Scheme scheme = Scheme::B_NHQC;
  double theta = 0.0;
  double phi1 = 0.0;
  double gamma = kPi / 4;
  double omega0 = 1.0;
  Envelope envelope = Envelope::CONSTANT;
  int grid_points = 4000;  // per segment
};

// Mixing angles that enter the drive Hamiltonian for gate angles (theta, phi1).
// The bright state of the drive is the -1 eigenvector of n.sigma, so the
// Hamiltonian uses (pi - theta, -phi1).
struct DriveAngles {
  double theta;
  double phi1;
};
DriveAngles drive_angles(double theta, double phi1);

// One pulse segment. Within a segment the phase follows the pulse area:
// phi(t) = phase_start + phase_span * A(t) / A_seg.
struct Segment {
  std::string label;
  double t_start = 0.0;
  double duration = 0.0;
  double omega0 = 1.0;
  Envelope envelope = Envelope::CONSTANT;
  double phase_start = 0.0;
  double phase_span = 0.0;
  double loop_gamma = 0.0;  // phase of the loop this segment belongs to
  std::size_t start_index = 0;
  std::size_t end_index = 0;  // exclusive, into PulseSchedule arrays

  double omega(double t_local) const;
  double area_fraction(double t_local) const;
  double phase(double t_local) const;
  double area() const;
};

struct PulseSchedule {
  SchemeSpec spec;
  DriveAngles drive{};
  std::vector<Segment> segments;
  std::vector<double> times;
  std::vector<double> omega;
  std::vector<double> phi;
  std::vector<std::size_t> segment_of;  // per sample

  double duration() const;
  // Segment index containing t; at a boundary the later segment wins.
  std::size_t segment_at(double t) const;
  double omega_at(double t) const;
  double phi_at(double t) const;
};

PulseSchedule synth_pulse(const SchemeSpec& spec);

// Closed-form durations in units of 1/omega0.
double bnhqc_duration(double gamma, double omega0);
double scheme_duration(const SchemeSpec& spec);
double nominal_area(const SchemeSpec& spec);

// Simpson-integrated pulse area of the schedule (per-segment, analytic envelope).
double pulse_area(const PulseSchedule& s, int points_per_segment = 4000);

struct SegmentRange {
  std::size_t first = 0;
  std::size_t last = 0;  // inclusive
};

// Auxiliary-parameter path. Segments carry their own uniform grid; adjacent
// segments share the boundary time (it appears once in each).
struct EtaPath {
  std::vector<double> times;
  std::vector<double> eta1;
  std::vector<double> eta2;
  double eta3 = 0.0;
  std::vector<SegmentRange> segments;
  std::vector<double> omega;  // drive amplitude on the same grid
  double loops = 1.0;
};

// Single B-NHQC loop with constant envelope.
EtaPath eta_path(double gamma, double omega0, int grid_points);
// Path that generates a synthesized schedule (any scheme, any envelope).
EtaPath eta_path(const PulseSchedule& s, int grid_points);

void write_pulse_csv(std::ostream& os, const PulseSchedule& s);

}  // namespace holoq
