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
#include <vector>

#include "sloqc/mode_space.hpp"

namespace sloqc {

// Pulse shaper: one free phase per frequency mode.
struct PSProfile {
  std::vector<double> phases;
};

// Two-scattering pulse-shaper parameterization,
//   e^{i phi_j} = alpha + beta * (-1)^j,
// with alpha = |alpha| e^{i gamma} and beta = sign * i * |beta| e^{i gamma}.
// Unitarity forces |alpha|^2 + |beta|^2 = 1 and the mode separation M/2; in
// the time basis this shaper couples mode k only to k and k+M/2.
struct TwoScatterPS {
  double alpha_mag = 1.0;
  double beta_mag = 0.0;
  double gamma = 0.0;
  int sign = +1;  // branch of the i|beta| off-diagonal
};

// One sinusoidal component of the EOM's RF drive. theta is the absolute
// phase of this harmonic: the contribution is mu*sin(harmonic*2*pi*k/M + theta).
struct Tone {
  int harmonic = 1;
  double mu = 0.0;
  double theta = 0.0;
};

// RF drive of one EOM. phi_c is a constant phase applied to every time bin,
// i.e. a global phase factor on the EOM matrix. An empty tone list is the
// identity up to phi_c.
struct RFDrive {
  std::vector<Tone> tones;
  double phi_c = 0.0;

  static RFDrive single_tone(double mu, double theta, double phi_c = 0.0);
};

// diag(e^{i phi_j}) acting on frequency modes.
Eigen::MatrixXcd ps_frequency_matrix(const PSProfile& profile);

// The same shaper expressed on time modes: F * P * F^dagger.
Eigen::MatrixXcd ps_time_matrix(const PSProfile& profile, const ModeSpace& space);

// Frequency phases phi_j = arg(alpha + beta*(-1)^j) realizing the
// two-scattering shaper. Every e^{i phi_j} has unit modulus by construction.
PSProfile two_scatter_profile(const TwoScatterPS& ps, const ModeSpace& space);

// Closed block form of the two-scattering shaper on time modes:
//   e^{i gamma} [ |a| I   si|b| I ; si|b| I   |a| I ].
Eigen::MatrixXcd two_scatter_time_matrix(const TwoScatterPS& ps, const ModeSpace& space);

// phi_k = sum_n mu_n sin(h_n * 2*pi*k/M + theta_n), k = 0..M-1. phi_c is not
// included. Drives with only odd harmonics are antiperiodic over half the
// frame; the second half is produced by mirroring so that
// phi_{k+M/2} == -phi_k holds exactly.
std::vector<double> eom_time_phases(const RFDrive& drive, const ModeSpace& space);

// e^{i phi_c} diag(e^{i phi_k}) acting on time modes.
Eigen::MatrixXcd eom_time_matrix(const RFDrive& drive, const ModeSpace& space);

// The same modulator on frequency modes: F^dagger * E * F. For a single tone
// this scatters each mode into Bessel-weighted sidebands.
Eigen::MatrixXcd eom_frequency_matrix(const RFDrive& drive, const ModeSpace& space);

// Jacobi-Anger sideband coefficients of a single-tone drive:
//   c_k = e^{i phi_c} e^{i k theta} J_k(mu),  k in [-width, width],
// returned with index k+width, J_{-k} = (-1)^k J_k. With the dft_matrix sign
// convention c_k is the amplitude scattered from mode j to mode j-k (the
// mirrored set sits at ascending indices). width should be at least
// ceil(mu)+1 for the truncation to carry the full weight.
std::vector<std::complex<double>> bessel_sideband_column(double mu, double theta,
                                                         double phi_c, int width);

}  // namespace sloqc
