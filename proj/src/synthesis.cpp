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

#include "sloqc/synthesis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sloqc/bessel.hpp"

namespace sloqc {

namespace {

constexpr double kPi = std::numbers::pi;

// Reduces v mod pi into (-pi/2, pi/2]; *flips counts the pi shifts, each of
// which is a global sign on the synthesized gate.
double wrap_half_pi(double v, int* flips) {
  int n = 0;
  while (v > kPi / 2) {
    v -= kPi;
    ++n;
  }
  while (v <= -kPi / 2) {
    v += kPi;
    ++n;
  }
  if (flips != nullptr) *flips = n;
  return v;
}

void check_qubit_index(int index, const ModeSpace& space) {
  if (index < 0 || index >= space.half()) {
    throw std::out_of_range("synthesis: qubit index outside [0, M/2)");
  }
}

// Drive phase putting the sine extremum on bin k, so mu equals the wanted
// phase directly: sin(2 pi k / M + theta) = 1.
double quadrature_theta(int k, const ModeSpace& space) {
  return kPi / 2 - 2.0 * kPi * k / space.modes;
}

struct MachZehnder {
  TwoScatterPS first;
  TwoScatterPS second;
  double internal_phase;  // wanted EOM phase at the qubit bin
  double global_phase;    // phi_c completing the exact match
};

// X-Z-X Euler decomposition of the target: T = e^{i phase} Rx(xi2) Rz(lam)
// Rx(xi1), realized as shaper / modulator / shaper. The shaper arm of Rx(xi)
// is |alpha| = cos(|xi|/2), |beta| = |sin(xi/2)| with the branch sign
// carrying the sign of xi.
MachZehnder decompose_mach_zehnder(const GateTarget& target) {
  const Eigen::Matrix2cd t = target_matrix(target);
  const std::complex<double> det = t.determinant();
  const double delta = std::arg(det) / 2;
  const Eigen::Matrix2cd v = t * std::polar(1.0, -delta);

  // v = n0 I - i (nx X + ny Y + nz Z)
  const double n0 = v(0, 0).real();
  const double nz = -v(0, 0).imag();
  const double nx = -v(0, 1).imag();
  const double ny = -v(0, 1).real();

  const double cos_half = std::hypot(n0, nx);
  double sin_half = std::hypot(nz, ny);
  const double u = cos_half > 1e-14 ? std::atan2(nx, n0) : 0.0;
  double w = sin_half > 1e-14 ? std::atan2(-ny, nz) : 0.0;
  // Fold w into (-pi/2, pi/2]; keeps diagonal targets on the no-beamsplitter
  // solution. The fold flips the sign of sin(lam/2).
  if (w > kPi / 2) {
    w -= kPi;
    sin_half = -sin_half;
  } else if (w <= -kPi / 2) {
    w += kPi;
    sin_half = -sin_half;
  }
  const double lam = 2.0 * std::atan2(sin_half, cos_half);

  double extra = 0.0;
  auto arm = [&extra](double xi) {
    // Rx is 4*pi periodic; each 2*pi fold is a global sign.
    double x = std::remainder(xi, 2.0 * kPi);
    const double folds = std::round((xi - x) / (2.0 * kPi));
    if (std::abs(std::fmod(folds, 2.0)) > 0.5) extra += kPi;
    const double half = std::abs(x) / 2;
    const int sign = std::sin(x / 2) > 0.0 ? -1 : +1;
    return TwoScatterPS{std::cos(half), std::abs(std::sin(x / 2)), 0.0, sign};
  };

  MachZehnder mz;
  mz.first = arm(u - w);
  mz.second = arm(u + w);
  mz.internal_phase = -lam / 2;
  mz.global_phase = delta + extra;
  return mz;
}

}  // namespace

double pep_frequency_mu(double c) {
  if (c < 0.0 || c > kPi + 1e-12) {
    throw std::invalid_argument("pep_frequency_mu: c must lie in [0, pi]");
  }
  if (c < 1e-12) return 0.0;
  const double sc = std::sin(c / 2);
  const double cc = std::cos(c / 2);
  auto f = [&](double mu) { return bessel_j(0, mu) * sc - bessel_j(1, mu) * cc; };
  double lo = 0.0;
  double hi = 3.5;
  double flo = f(lo);
  for (int iter = 0; iter < 200 && hi - lo > 1e-10; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((flo >= 0.0) == (fm >= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

SynthesisSolution solve_epe_time(const GateTarget& target, int qubit_index,
                                 const ModeSpace& space) {
  check_qubit_index(qubit_index, space);
  const GateTarget t = target.canonicalized();
  const double theta = quadrature_theta(qubit_index, space);
  int flips1 = 0;
  int flips2 = 0;
  const double mu1 = wrap_half_pi(-t.d / 2 - kPi / 4, &flips1);
  const double mu2 = wrap_half_pi(-t.b / 2 + kPi / 4, &flips2);
  const double phi_c = t.a + kPi * ((flips1 + flips2) % 2);

  const TwoScatterPS shaper{std::cos(t.c / 2), std::sin(t.c / 2), 0.0, +1};
  Configuration config = Configuration::epe(RFDrive::single_tone(mu1, theta, phi_c),
                                            shaper,
                                            RFDrive::single_tone(mu2, theta, 0.0));
  return SynthesisSolution{std::move(config), GateScore{1.0, 1.0},
                           QubitEncoding{EncodingKind::TimeAntipodal, qubit_index}};
}

SynthesisSolution solve_pep_time(const GateTarget& target, int qubit_index,
                                 const ModeSpace& space) {
  check_qubit_index(qubit_index, space);
  const MachZehnder mz = decompose_mach_zehnder(target.canonicalized());
  const double theta = quadrature_theta(qubit_index, space);
  Configuration config = Configuration::pep(
      mz.first, RFDrive::single_tone(mz.internal_phase, theta, mz.global_phase),
      mz.second);
  return SynthesisSolution{std::move(config), GateScore{1.0, 1.0},
                           QubitEncoding{EncodingKind::TimeAntipodal, qubit_index}};
}

SynthesisSolution solve_pep_frequency(const GateTarget& target, int qubit_index,
                                      const ModeSpace& space) {
  check_qubit_index(qubit_index, space);
  const GateTarget t = target.canonicalized();
  const double mu = pep_frequency_mu(t.c);
  const double theta = kPi;  // the phase set below aligns all four entries at theta = pi

  PSProfile first{std::vector<double>(static_cast<std::size_t>(space.modes), 0.0)};
  PSProfile second = first;
  const auto m0 = static_cast<std::size_t>(2 * qubit_index);
  first.phases[m0] = -t.d / 2;
  first.phases[m0 + 1] = t.d / 2;
  second.phases[m0] = -(t.b + t.d) / 2 - t.d / 2;
  second.phases[m0 + 1] = (t.b - t.d) / 2 - t.d / 2;

  Configuration config = Configuration::pep(
      first, RFDrive::single_tone(mu, theta, t.a + t.d), second);

  const double j0 = bessel_j(0, mu);
  const double j1 = bessel_j(1, mu);
  const double success = j0 * j0 + j1 * j1;
  const double num = j0 * std::cos(t.c / 2) + j1 * std::sin(t.c / 2);
  return SynthesisSolution{std::move(config), GateScore{num * num / success, success},
                           QubitEncoding{EncodingKind::FrequencyAdjacent, qubit_index}};
}

std::optional<SynthesisSolution> trivial_gate_settings(const GateTarget& target,
                                                       const ModeSpace& space) {
  constexpr double kTol = 1e-12;
  const GateTarget t = target.canonicalized();
  const QubitEncoding qubit{EncodingKind::TimeAntipodal, 0};
  const double theta = quadrature_theta(0, space);
  const TwoScatterPS identity_shaper{1.0, 0.0, 0.0, +1};

  if (t.c < kTol) {
    // Phase family: one modulator, no shaper.
    int flips = 0;
    const double mu = wrap_half_pi(-(t.b + t.d) / 2, &flips);
    RFDrive drive = mu == 0.0 ? RFDrive{{}, 0.0} : RFDrive::single_tone(mu, theta, 0.0);
    drive.phi_c += t.a + kPi * (flips % 2);
    Configuration config = Configuration::epe(drive, identity_shaper, RFDrive{});
    return SynthesisSolution{std::move(config), GateScore{1.0, 1.0}, qubit};
  }

  if (std::abs(t.c - kPi) < kTol) {
    // Bit-flip family: full-swing shaper plus at most one modulator; the
    // shaper block is s*i*e^{i gamma}*X, so the modulator supplies the
    // off-diagonal phase split.
    // The off-diagonal ratio pins phi mod pi only; the global phase below is
    // written in terms of the wrapped value, so no sign correction is needed.
    const double phi = wrap_half_pi((t.b - t.d) / 2 - kPi / 2, nullptr);
    const double global = t.a + (t.b - t.d) / 2 - phi - kPi / 2;
    const TwoScatterPS swap_shaper{0.0, 1.0, 0.0, +1};
    RFDrive drive =
        std::abs(phi) < kTol ? RFDrive{{}, 0.0} : RFDrive::single_tone(phi, theta, 0.0);
    drive.phi_c += global;
    Configuration config = Configuration::epe(drive, swap_shaper, RFDrive{});
    return SynthesisSolution{std::move(config), GateScore{1.0, 1.0}, qubit};
  }

  return std::nullopt;
}

}  // namespace sloqc
