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

#include "sloqc/mode_space.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sloqc {

ModeSpace::ModeSpace(int m, double spacing) : modes(m), delta_omega(spacing) {
  if (m < 4 || m % 2 != 0) {
    throw std::invalid_argument("ModeSpace: mode count must be even and >= 4");
  }
}

std::pair<int, int> QubitEncoding::mode_pair(const ModeSpace& space) const {
  if (index < 0 || index >= space.half()) {
    throw std::out_of_range("QubitEncoding: index outside [0, M/2)");
  }
  if (kind == EncodingKind::FrequencyAdjacent) {
    return {2 * index, 2 * index + 1};
  }
  return {index, index + space.half()};
}

Eigen::MatrixXcd dft_matrix(int modes) {
  if (modes < 2 || modes % 2 != 0) {
    throw std::invalid_argument("dft_matrix: order must be even and >= 2");
  }
  const double norm = 1.0 / std::sqrt(static_cast<double>(modes));
  const double step = 2.0 * std::numbers::pi / modes;
  Eigen::MatrixXcd f(modes, modes);
  for (int j = 0; j < modes; ++j) {
    for (int k = 0; k < modes; ++k) {
      // Reduce j*k mod M before forming the angle; keeps the entries exactly
      // periodic and the phase argument small.
      const int r = static_cast<int>((static_cast<long long>(j) * k) % modes);
      f(j, k) = std::polar(norm, -step * r);
    }
  }
  return f;
}

Eigen::MatrixXcd dft_matrix(const ModeSpace& space) { return dft_matrix(space.modes); }

std::pair<Eigen::VectorXcd, Eigen::VectorXcd> qubit_basis_vectors(
    const ModeSpace& space, const QubitEncoding& enc) {
  const auto [m0, m1] = enc.mode_pair(space);
  Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(space.modes);
  Eigen::VectorXcd one = Eigen::VectorXcd::Zero(space.modes);
  zero(m0) = 1.0;
  one(m1) = 1.0;
  return {zero, one};
}

}  // namespace sloqc
