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
#include <utility>

namespace sloqc {

// M optical modes, addressed either as frequency bins or as time bins.
// All physics below depends only on the dimensionless mode indices;
// delta_omega (= the RF fundamental) is carried for reports only.
struct ModeSpace {
  int modes;           // M, even, >= 4
  double delta_omega;  // frequency-bin spacing == RF fundamental (rad/s)

  explicit ModeSpace(int m, double spacing = 1.0);

  int half() const { return modes / 2; }
};

enum class EncodingKind {
  FrequencyAdjacent,  // qubit j on frequency modes {2j, 2j+1}
  TimeAntipodal,      // qubit k on time modes {k, k+M/2}
};

struct QubitEncoding {
  EncodingKind kind;
  int index;

  // Mode indices of (|0_L>, |1_L>) in the encoding's native basis.
  // Throws std::out_of_range if index is not in [0, M/2).
  std::pair<int, int> mode_pair(const ModeSpace& space) const;
};

// Unitary F with F(j,k) = exp(-2*pi*i*j*k/M)/sqrt(M): row j holds the
// time-bin amplitudes of frequency state j. The sign convention is fixed
// here once; flipping it mirrors the EOM sideband asymmetry and breaks the
// Bessel cross-checks in components.
Eigen::MatrixXcd dft_matrix(const ModeSpace& space);
Eigen::MatrixXcd dft_matrix(int modes);  // any even order >= 2

// (|0_L>, |1_L>) as standard basis columns in the encoding's native basis.
std::pair<Eigen::VectorXcd, Eigen::VectorXcd> qubit_basis_vectors(
    const ModeSpace& space, const QubitEncoding& enc);

}  // namespace sloqc
