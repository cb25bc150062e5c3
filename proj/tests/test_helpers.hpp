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
#include <numbers>
#include <random>

#include "sloqc/metrics.hpp"

namespace sloqc::testing {

inline double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double unitarity_defect(const Eigen::MatrixXcd& u) {
  return max_abs_diff(u.adjoint() * u, Eigen::MatrixXcd::Identity(u.rows(), u.cols()));
}

// Haar measure on U(2) in the four-angle parameterization: uniform phases and
// cos(c) uniform on [-1, 1].
inline GateTarget haar_target(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return GateTarget{angle(rng), angle(rng), 2.0 * std::asin(std::sqrt(unit(rng))),
                    angle(rng)};
}

// Smallest max-entry distance to the target over the global phase, i.e.
// "equal up to global phase" as a matrix norm.
inline double phase_aligned_distance(const Eigen::Matrix2cd& w, const Eigen::Matrix2cd& t) {
  const std::complex<double> overlap = (t.adjoint() * w).trace();
  const std::complex<double> phase =
      std::abs(overlap) > 0 ? overlap / std::abs(overlap) : std::complex<double>(1.0);
  return max_abs_diff(w * std::conj(phase), t);
}

}  // namespace sloqc::testing
