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

#include "sloqc/circuits.hpp"
#include "sloqc/mode_space.hpp"

namespace sloqc {

// Four-angle parameterization of a 2x2 unitary, e^{ia} Rz(b) Ry(c) Rz(d).
// Canonical range keeps c in [0, pi] and the other angles in (-pi, pi].
struct GateTarget {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  // Equivalent parameters in canonical range; the induced matrix is unchanged.
  GateTarget canonicalized() const;

  static GateTarget identity() { return {0.0, 0.0, 0.0, 0.0}; }
  static GateTarget pauli_x();
  static GateTarget pauli_y();
  static GateTarget pauli_z();
  static GateTarget hadamard();
  static GateTarget phase(double nu);  // diag(1, e^{-i nu})
};

struct GateScore {
  double fidelity = 0.0;
  double success_prob = 0.0;
};

Eigen::Matrix2cd target_matrix(const GateTarget& t);

// Tr(W^dagger W) / Tr(T^dagger T): the amplitude fraction that stays in the
// qubit subspace.
double success_probability(const Eigen::Matrix2cd& w, const GateTarget& t);
double success_probability(const ReducedGate& w, const GateTarget& t);

// |Tr(W^dagger T)|^2 / (Tr(W^dagger W) Tr(T^dagger T)): global-phase
// invariant in both arguments. Throws std::domain_error for vanishing W.
double fidelity(const Eigen::Matrix2cd& w, const GateTarget& t);
double fidelity(const ReducedGate& w, const GateTarget& t);

GateScore score_gate(const Eigen::Matrix2cd& w, const GateTarget& t);

// Leakage from enc_a's subspace into enc_b's: the larger, over enc_a's two
// basis states, of the total squared magnitude landing on enc_b's pair.
// This is a probability; the sqrt of it is the amplitude-norm variant used
// by the guard-band scan. Requires distinct encodings of the same kind.
double crosstalk(const Eigen::MatrixXcd& v, const QubitEncoding& enc_a,
                 const QubitEncoding& enc_b);

}  // namespace sloqc
