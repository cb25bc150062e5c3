// Copyright 2026 The sloqc Authors
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

#include <vector>

#include "sloqc/circuits.hpp"
#include "sloqc/metrics.hpp"
#include "sloqc/synthesis.hpp"

namespace sloqc {

struct Thresholds {
  double fidelity = 0.99;
  double success = 0.9999;
};

struct ParallelReport {
  std::vector<GateScore> per_qubit;  // one entry per register qubit
  Thresholds thresholds;
  Configuration config;

  // Number of qubits meeting both thresholds, recomputed from per_qubit.
  int count_above() const;
  // Fidelity-only count, the quantity the closed-form count formulas model.
  int count_fidelity_above(double f_th) const;
};

// Builds the cascade once and scores every qubit of the register against t.
ParallelReport evaluate_parallel(const Configuration& config, const GateTarget& target,
                                 EncodingKind kind, const ModeSpace& space,
                                 Thresholds thresholds);

// Truncated square-wave drive: odd harmonics 2n+1 with amplitudes
// mu_scale/(2n+1) and common phase theta, n = 0..order. The infinite series
// is the exact square wave with plateau mu_scale*pi/4.
RFDrive square_drive(int order, double mu_scale, double theta);

// Odd-harmonic drive whose amplitudes are the discrete sine-series
// coefficients of the exact +-plateau profile on the M-bin grid offset by
// theta. Coefficients vanish above harmonic M/2-1, so order >= M/4-1
// reproduces the plateau exactly at every bin (no Gibbs overshoot, unlike
// square_drive at any finite order).
RFDrive square_drive_discrete(int order, double plateau, double theta,
                              const ModeSpace& space);

// Per-qubit fidelity cos^2(phi_k - nu/2) of a phase gate diag(1, e^{-i nu})
// realized by a single effective EOM with the given drive.
std::vector<double> phase_gate_fidelity_profile(const RFDrive& drive, double nu,
                                                const ModeSpace& space);

// Per-qubit Hadamard fidelity with balanced shapers: sin^4(phi_k + pi/4) for
// EOM-shaper-EOM (both modulators sharing the drive), sin^2(phi_k + pi/4)
// for shaper-EOM-shaper.
std::vector<double> hadamard_fidelity_profile(const RFDrive& drive, ConfigKind kind,
                                              const ModeSpace& space);

// Closed-form count of qubits with phase-gate fidelity >= f_th when the
// modulation index is pinned to nu/2 + arccos(sqrt(f_th)):
//   floor((M/pi) * (pi/2 - arcsin A)) + 1,  A = (nu/2 - acos sqrt(f_th)) / mu,
// clamped to M/2. Valid in the single-branch regime nu/2 + mu < pi +
// window; for larger nu additional mod-pi fidelity branches open up and the
// brute-force oracle counts more. nu <= 0 degenerates to M/2.
int count_parallel_phase(double nu, double f_th, const ModeSpace& space);

// Ground truth for the above: full simulation of the same single-tone
// configuration (theta = pi/M) counting per-qubit fidelity >= f_th.
int count_parallel_phase_brute(double nu, double f_th, const ModeSpace& space);

// Closed-form count for parallel Hadamards, window half-width
// pi/2 - arcsin(f_th^{1/4}) for EPE and f_th^{1/2} for PEP; same floor
// placement and clamping as the phase count. PEP >= EPE for every f_th.
int count_parallel_hadamard(ConfigKind kind, double f_th, const ModeSpace& space);

// Full-simulation oracle for the Hadamard count (theta = pi/M).
int count_parallel_hadamard_brute(ConfigKind kind, double f_th, const ModeSpace& space);

struct OptimizeOptions {
  int budget = 2000;        // objective evaluations
  bool shared_drive = true; // EPE only: drive both modulators identically
  unsigned seed_policy = 0; // reserved; the search is fully deterministic
};

struct OptimizeResult {
  ParallelReport report;
  Configuration config;
  int evaluations = 0;
  bool budget_exhausted = false;
};

// Maximizes the number of qubits meeting the thresholds over the per-tone
// modulation indices and phases (odd harmonics 1..2*n_tones-1) plus the
// shaper angles. Deterministic: Nelder-Mead refinement seeded from the
// truncated square drive, an 8-point phase-grid restart, and a final grid
// alignment scan. Identical inputs give identical output.
OptimizeResult optimize_multitone(ConfigKind kind, const GateTarget& target,
                                  int n_tones, Thresholds thresholds,
                                  const ModeSpace& space, OptimizeOptions options = {});

struct GuardBandRow {
  int spacing;               // guard modes between adjacent qubits
  double crosstalk_prob;     // max leaked probability into the nearest qubit
  double crosstalk_amplitude;// sqrt of the above (the norm that sets the
                             // reported minimum spacing)
  double worst_fidelity;     // over all active qubits
  int capacity;              // qubits fitting in M modes at this spacing
};

// Frequency-encoding guard-band scan for the shaper-EOM-shaper cascade with
// every qubit driven at the target's settings (default use: the bit-flip
// gate, the widest scatterer). EPE has no closed-form settings here and is
// rejected.
std::vector<GuardBandRow> guard_band_scan(const GateTarget& target, ConfigKind kind,
                                          int max_spacing, const ModeSpace& space);

}  // namespace sloqc
