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

#include "sloqc/components.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "sloqc/bessel.hpp"

namespace sloqc {

namespace {

constexpr double kPi = std::numbers::pi;

void validate_two_scatter(const TwoScatterPS& ps) {
  const double norm = ps.alpha_mag * ps.alpha_mag + ps.beta_mag * ps.beta_mag;
  if (std::abs(norm - 1.0) > 1e-12) {
    throw std::invalid_argument("TwoScatterPS: |alpha|^2 + |beta|^2 must be 1");
  }
  if (ps.sign != 1 && ps.sign != -1) {
    throw std::invalid_argument("TwoScatterPS: sign must be +1 or -1");
  }
}

void validate_drive(const RFDrive& drive) {
  std::set<int> seen;
  for (const Tone& tone : drive.tones) {
    if (tone.harmonic < 1) {
      throw std::invalid_argument("RFDrive: harmonics must be positive");
    }
    if (!seen.insert(tone.harmonic).second) {
      throw std::invalid_argument("RFDrive: harmonics must be distinct");
    }
  }
}

Eigen::VectorXcd unit_phases(const std::vector<double>& phases) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(phases.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v(i) = std::polar(1.0, phases[static_cast<std::size_t>(i)]);
  }
  return v;
}

}  // namespace

RFDrive RFDrive::single_tone(double mu, double theta, double phi_c) {
  return RFDrive{{Tone{1, mu, theta}}, phi_c};
}

Eigen::MatrixXcd ps_frequency_matrix(const PSProfile& profile) {
  for (double phi : profile.phases) {
    if (!std::isfinite(phi)) {
      throw std::invalid_argument("PSProfile: phases must be finite");
    }
  }
  return Eigen::MatrixXcd(unit_phases(profile.phases).asDiagonal());
}

Eigen::MatrixXcd ps_time_matrix(const PSProfile& profile, const ModeSpace& space) {
  if (static_cast<int>(profile.phases.size()) != space.modes) {
    throw std::invalid_argument("ps_time_matrix: profile length must equal M");
  }
  const Eigen::MatrixXcd f = dft_matrix(space);
  const Eigen::VectorXcd p = unit_phases(profile.phases);
  return f * (p.asDiagonal() * f.adjoint());
}

PSProfile two_scatter_profile(const TwoScatterPS& ps, const ModeSpace& space) {
  validate_two_scatter(ps);
  // e^{i phi_j} = e^{i gamma} (|a| + s i |b| (-1)^j); unit modulus because
  // alpha and beta are a quarter turn apart.
  const double swing = std::atan2(ps.sign * ps.beta_mag, ps.alpha_mag);
  PSProfile profile;
  profile.phases.resize(static_cast<std::size_t>(space.modes));
  for (int j = 0; j < space.modes; ++j) {
    profile.phases[static_cast<std::size_t>(j)] =
        ps.gamma + (j % 2 == 0 ? swing : -swing);
  }
  return profile;
}

Eigen::MatrixXcd two_scatter_time_matrix(const TwoScatterPS& ps, const ModeSpace& space) {
  validate_two_scatter(ps);
  const int h = space.half();
  const std::complex<double> diag = std::polar(ps.alpha_mag, ps.gamma);
  const std::complex<double> off =
      std::polar(ps.beta_mag, ps.gamma) * std::complex<double>(0.0, ps.sign);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(space.modes, space.modes);
  for (int k = 0; k < h; ++k) {
    m(k, k) = diag;
    m(k + h, k + h) = diag;
    m(k, k + h) = off;
    m(k + h, k) = off;
  }
  return m;
}

std::vector<double> eom_time_phases(const RFDrive& drive, const ModeSpace& space) {
  validate_drive(drive);
  const int m = space.modes;
  const int h = space.half();
  const bool odd_only = std::all_of(drive.tones.begin(), drive.tones.end(),
                                    [](const Tone& t) { return t.harmonic % 2 == 1; });
  std::vector<double> phases(static_cast<std::size_t>(m), 0.0);
  const int upto = odd_only ? h : m;
  for (int k = 0; k < upto; ++k) {
    double phi = 0.0;
    for (const Tone& tone : drive.tones) {
      const int r = static_cast<int>((static_cast<long long>(tone.harmonic) * k) % m);
      phi += tone.mu * std::sin(2.0 * kPi * r / m + tone.theta);
    }
    phases[static_cast<std::size_t>(k)] = phi;
  }
  if (odd_only) {
    // Odd harmonics are antiperiodic over half the frame; mirroring keeps
    // phi_{k+M/2} == -phi_k exact rather than merely close.
    for (int k = 0; k < h; ++k) {
      phases[static_cast<std::size_t>(k + h)] = -phases[static_cast<std::size_t>(k)];
    }
  }
  return phases;
}

Eigen::MatrixXcd eom_time_matrix(const RFDrive& drive, const ModeSpace& space) {
  const std::vector<double> phases = eom_time_phases(drive, space);
  Eigen::VectorXcd diag = unit_phases(phases);
  diag *= std::polar(1.0, drive.phi_c);
  return Eigen::MatrixXcd(diag.asDiagonal());
}

Eigen::MatrixXcd eom_frequency_matrix(const RFDrive& drive, const ModeSpace& space) {
  const Eigen::MatrixXcd f = dft_matrix(space);
  Eigen::VectorXcd diag = unit_phases(eom_time_phases(drive, space));
  diag *= std::polar(1.0, drive.phi_c);
  return f.adjoint() * (diag.asDiagonal() * f);
}

std::vector<std::complex<double>> bessel_sideband_column(double mu, double theta,
                                                         double phi_c, int width) {
  if (width < 0) {
    throw std::invalid_argument("bessel_sideband_column: width must be >= 0");
  }
  const std::vector<double> j = bessel_j_sequence(width, std::abs(mu));
  const double mu_sign = mu < 0.0 ? -1.0 : 1.0;
  std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(2 * width + 1));
  for (int k = -width; k <= width; ++k) {
    double jk = j[static_cast<std::size_t>(std::abs(k))];
    if (k % 2 != 0) {
      if (k < 0) jk = -jk;        // J_{-k} = (-1)^k J_k
      if (mu_sign < 0.0) jk = -jk;
    }
    coeffs[static_cast<std::size_t>(k + width)] = std::polar(1.0, phi_c + k * theta) * jk;
  }
  return coeffs;
}

}  // namespace sloqc
