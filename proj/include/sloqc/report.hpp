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

#include <string>

#include "sloqc/parallel.hpp"

namespace sloqc {

inline constexpr const char* kVersion = "0.1.0";

// One experiment request: either a synthesis run, a named dataset, or a
// one-parameter sweep. Angles (gate parameters, nu) are given in units of
// pi. All emission below is deterministic: identical requests give
// byte-identical output.
struct ExperimentConfig {
  int modes = 128;
  std::string gate = "hadamard";        // preset name or "custom"
  double a = 0, b = 0, c = 0, d = 0;    // used when gate == "custom", units of pi
  double nu = 0.5;                      // phase-gate angle, units of pi
  std::string configuration = "epe";    // "epe" | "pep"
  std::string encoding = "time";        // "time" | "freq"
  int qubit = 0;
  Thresholds thresholds{};
  // sweep
  std::string sweep_param;              // mu|theta|f_th|nu|n_tones|guard_spacing
  double sweep_from = 0.0;
  double sweep_to = 1.0;
  int sweep_steps = 11;

  GateTarget target() const;            // resolves preset / custom angles
  std::string canonical_string() const; // hashed into the provenance header
};

// Figure names: fig2, fig3, fig4, fig5, table1, table2, guardband.
bool is_known_figure(const std::string& name);
std::string figure_csv(const std::string& name, const ExperimentConfig& cfg);

std::string sweep_csv(const ExperimentConfig& cfg);

// Full synthesis report: solution parameters, predicted and re-simulated
// scores, and the reduced 2x2 matrix. Throws NumericalError if the
// re-simulation disagrees with the prediction beyond tolerance.
std::string synth_report_json(const ExperimentConfig& cfg);

// Raised when a simulated quantity violates its own contract (unitarity or
// prediction round-trip); the CLI maps it to exit code 2.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a_hash(const std::string& text);

}  // namespace sloqc
