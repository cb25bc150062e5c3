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

#include <Eigen/Dense>
#include <complex>
#include <variant>
#include <vector>

#include "sloqc/components.hpp"
#include "sloqc/mode_space.hpp"

namespace sloqc {

enum class ConfigKind { EPE, PEP };
enum class Basis { Time, Frequency };

using ShaperSetting = std::variant<PSProfile, TwoScatterPS>;

struct EpeStages {
  RFDrive eom_first;
  ShaperSetting shaper;
  RFDrive eom_second;
};

struct PepStages {
  ShaperSetting shaper_first;
  RFDrive eom;
  ShaperSetting shaper_second;
};

// Three-component cascade. Signal passes the stages first-to-last; the
// matrix product therefore composes right-to-left.
struct Configuration {
  std::variant<EpeStages, PepStages> stages;

  ConfigKind kind() const;
  static Configuration epe(RFDrive eom_first, ShaperSetting shaper, RFDrive eom_second);
  static Configuration pep(ShaperSetting shaper_first, RFDrive eom, ShaperSetting shaper_second);
};

struct ReducedGate {
  Eigen::Matrix2cd w;
  QubitEncoding qubit;
};

// The native basis in which a dual-rail encoding is diagonal-friendly.
Basis native_basis(EncodingKind kind);

// M x M matrix of the cascade expressed in `basis`.
Eigen::MatrixXcd full_unitary(const Configuration& config, const ModeSpace& space,
                              Basis basis);

// 2 x 2 block of V between the encoding's basis states. V must be expressed
// in the encoding's native basis.
ReducedGate reduce_to_qubit(const Eigen::MatrixXcd& v, const QubitEncoding& enc);

// reduce_to_qubit(full_unitary(...)) computed by applying the stages to the
// two encoding columns; O(M^2) instead of a dense build. Used wherever many
// configurations are scored.
ReducedGate simulate_reduced(const Configuration& config, const QubitEncoding& enc,
                             const ModeSpace& space);

// All M/2 reduced gates of a time-antipodal register in one pass, using the
// exact 2x2 block structure of diagonal modulators and two-scattering
// shapers. Requires every shaper stage to be a TwoScatterPS.
std::vector<Eigen::Matrix2cd> reduce_all_time_qubits(const Configuration& config,
                                                     const ModeSpace& space);

// Closed-form time-basis matrix elements of the cascades, evaluated by direct
// phase sums with xi = exp(-2*pi*i/M). Independent cross-checks for the
// matrix-product path; O(M^3) per element for the PEP triple sum.
std::complex<double> pep_time_element_sum(const std::vector<double>& shaper_first,
                                          const std::vector<double>& eom_phases,
                                          const std::vector<double>& shaper_second,
                                          int k_out, int k_in);
std::complex<double> epe_time_element_sum(const std::vector<double>& eom_first,
                                          const std::vector<double>& shaper,
                                          const std::vector<double>& eom_second,
                                          int k_out, int k_in);

}  // namespace sloqc
