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

#include <optional>

#include "sloqc/circuits.hpp"
#include "sloqc/metrics.hpp"

namespace sloqc {

struct SynthesisSolution {
  Configuration config;
  GateScore predicted;
  QubitEncoding qubit;
};

// Exact EOM-shaper-EOM synthesis of an arbitrary target on time-antipodal
// qubit k with single-tone drives: |alpha| = cos(c/2), |beta| = sin(c/2),
// and per-EOM phases -d/2 - pi/4 and -b/2 + pi/4 placed at bin k. The tone
// phase is set a quarter period off the qubit bin so the sine is at its
// extremum: the modulation index then equals the wanted phase directly and
// never exceeds pi/2. Predicted fidelity and success are both 1.
SynthesisSolution solve_epe_time(const GateTarget& target, int qubit_index,
                                 const ModeSpace& space);

// Exact shaper-EOM-shaper synthesis on time-antipodal qubit k: the two
// shapers act as beamsplitters and the EOM as the internal phase of a
// Mach-Zehnder, via an X-Z-X Euler decomposition of the target. Predicted
// fidelity and success are both 1.
SynthesisSolution solve_pep_time(const GateTarget& target, int qubit_index,
                                 const ModeSpace& space);

// Shaper-EOM-shaper synthesis on frequency-adjacent qubit j. The modulation
// index solves J_0(mu) sin(c/2) = J_1(mu) cos(c/2) (unit fidelity branch),
// so predicted fidelity is 1 and predicted success is J_0^2 + J_1^2, which
// is below 1 for any coupling gate.
SynthesisSolution solve_pep_frequency(const GateTarget& target, int qubit_index,
                                      const ModeSpace& space);

// Single-component shortcuts: phase gates (c = 0) need one EOM and no
// shaper; the bit-flip family (c = pi) needs one shaper and at most one EOM,
// with X itself needing no drive at all. Unused stages are identities.
// Returns nothing for targets that genuinely need all three components.
std::optional<SynthesisSolution> trivial_gate_settings(const GateTarget& target,
                                                       const ModeSpace& space);

// Root of J_0(mu) sin(c/2) - J_1(mu) cos(c/2) on [0, 3.5] by bisection to
// 1e-10; equals 0 at c = 0 and the first J_0 zero at c = pi.
double pep_frequency_mu(double c);

}  // namespace sloqc
