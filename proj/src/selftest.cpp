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

#include "sloqc/selftest.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "sloqc/bessel.hpp"
#include "sloqc/circuits.hpp"
#include "sloqc/components.hpp"
#include "sloqc/metrics.hpp"
#include "sloqc/mode_space.hpp"
#include "sloqc/parallel.hpp"

namespace sloqc {

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

double unitarity_defect(const Eigen::MatrixXcd& u) {
  return max_abs(u.adjoint() * u -
                 Eigen::MatrixXcd::Identity(u.rows(), u.cols()));
}

PSProfile random_profile(int m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.0, 2.0 * kPi);
  PSProfile p;
  p.phases.resize(static_cast<std::size_t>(m));
  for (double& v : p.phases) v = dist(rng);
  return p;
}

RFDrive random_drive(std::mt19937_64& rng, int max_tones = 3) {
  std::uniform_real_distribution<double> mu(0.0, 2.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_int_distribution<int> count(1, max_tones);
  RFDrive d;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) d.tones.push_back(Tone{2 * i + 1, mu(rng), angle(rng)});
  d.phi_c = angle(rng);
  return d;
}

}  // namespace

std::vector<CheckResult> run_selftest() {
  std::vector<CheckResult> results;
  auto record = [&results](const std::string& name, double metric, double tol) {
    results.push_back(CheckResult{name, metric < tol, metric, tol});
  };
  std::mt19937_64 rng(0x510c5eed);

  // Transform unitarity across the sizes the tests and runs use.
  {
    double worst = 0.0;
    for (int m : {4, 8, 16, 128, 512}) {
      worst = std::max(worst, unitarity_defect(dft_matrix(m)));
    }
    record("dft-unitarity", worst, 1e-12);
  }

  // Every component matrix is unitary.
  {
    double worst = 0.0;
    for (int m : {8, 128}) {
      const ModeSpace space(m);
      worst = std::max(worst, unitarity_defect(ps_frequency_matrix(random_profile(m, rng))));
      worst = std::max(worst, unitarity_defect(ps_time_matrix(random_profile(m, rng), space)));
      worst = std::max(worst, unitarity_defect(eom_time_matrix(random_drive(rng), space)));
      worst = std::max(worst, unitarity_defect(eom_frequency_matrix(random_drive(rng), space)));
    }
    record("component-unitarity", worst, 1e-11);
  }

  // Two-scattering shaper: transform route equals the closed block form,
  // and couples k only to k and k+M/2.
  {
    const ModeSpace space(128);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    double worst = 0.0;
    for (int rep = 0; rep < 4; ++rep) {
      const double arm = angle(rng) / 4;
      const TwoScatterPS ps{std::cos(arm), std::sin(arm), angle(rng), rep % 2 == 0 ? +1 : -1};
      const Eigen::MatrixXcd via_dft = ps_time_matrix(two_scatter_profile(ps, space), space);
      worst = std::max(worst, max_abs(via_dft - two_scatter_time_matrix(ps, space)));
    }
    record("two-scattering-block-form", worst, 1e-12);
  }

  // Unitarity forces the antipodal separation: any other alias spacing makes
  // some |e^{i phi_j}| leave 1.
  {
    const int m = 8;
    const int bad_separation = 2;
    double worst_departure = 0.0;
    const std::complex<double> alpha = std::sqrt(0.4);
    const std::complex<double> beta = std::complex<double>(0.0, 1.0) * std::sqrt(0.6);
    for (int j = 0; j < m; ++j) {
      const std::complex<double> value =
          alpha + beta * std::polar(1.0, -2.0 * kPi * bad_separation * j / m);
      worst_departure = std::max(worst_departure, std::abs(std::abs(value) - 1.0));
    }
    // pass means the departure is LARGE; store the shortfall from 0.1
    record("two-scattering-separation-forced", worst_departure > 0.1 ? 0.0 : 1.0, 0.5);
  }

  // Closed-form element sums against dense matrix products.
  {
    double worst = 0.0;
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int m : {4, 8, 16}) {
      const ModeSpace space(m);
      for (int rep = 0; rep < 8; ++rep) {
        const PSProfile p1 = random_profile(m, rng);
        const PSProfile p2 = random_profile(m, rng);
        std::vector<double> eom(static_cast<std::size_t>(m));
        for (double& v : eom) v = angle(rng);
        PSProfile eom_profile{eom};

        Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(m, m);
        for (int k = 0; k < m; ++k) e(k, k) = std::polar(1.0, eom[static_cast<std::size_t>(k)]);
        const Eigen::MatrixXcd pep =
            ps_time_matrix(p2, space) * e * ps_time_matrix(p1, space);
        const Eigen::MatrixXcd epe = e * ps_time_matrix(p1, space) * e;
        for (int k = 0; k < m; ++k) {
          for (int kp = 0; kp < m; ++kp) {
            worst = std::max(worst, std::abs(pep(kp, k) - pep_time_element_sum(
                                                 p1.phases, eom, p2.phases, kp, k)));
            worst = std::max(worst, std::abs(epe(kp, k) - epe_time_element_sum(
                                                 eom, p1.phases, eom, kp, k)));
          }
        }
      }
    }
    record("element-sum-oracle", worst, 1e-10);
  }

  // Single-tone sidebands follow the Jacobi-Anger coefficients.
  {
    const ModeSpace space(128);
    const int j0 = 64;
    double worst = 0.0;
    for (double mu : {0.5, 1.0, 2.0, 3.0}) {
      for (double theta : {0.0, 0.7}) {
        const Eigen::MatrixXcd e =
            eom_frequency_matrix(RFDrive::single_tone(mu, theta, 0.3), space);
        const auto coeffs = bessel_sideband_column(mu, theta, 0.3, 10);
        for (int k = -10; k <= 10; ++k) {
          const int row = ((j0 - k) % space.modes + space.modes) % space.modes;
          worst = std::max(worst, std::abs(e(row, j0) -
                                           coeffs[static_cast<std::size_t>(k + 10)]));
        }
      }
    }
    record("bessel-sideband-agreement", worst, 1e-8);
  }

  // Odd-harmonic drives are antiperiodic over half the frame, exactly.
  {
    const ModeSpace space(128);
    double worst = 0.0;
    for (int rep = 0; rep < 8; ++rep) {
      const auto phases = eom_time_phases(random_drive(rng), space);
      for (int k = 0; k < space.half(); ++k) {
        worst = std::max(worst, std::abs(phases[static_cast<std::size_t>(k)] +
                                         phases[static_cast<std::size_t>(k + space.half())]));
      }
    }
    record("odd-harmonic-antisymmetry", worst, 0.0 + 1e-300);
  }

  // Analytic per-qubit fidelity profiles equal full simulation.
  {
    const ModeSpace space(128);
    std::uniform_real_distribution<double> nu_dist(0.1, 2.8);
    double worst_phase = 0.0;
    double worst_had = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
      const RFDrive drive = random_drive(rng, 2);
      const double nu = nu_dist(rng);

      const Configuration phase_cfg =
          Configuration::epe(drive, TwoScatterPS{1.0, 0.0, 0.0, +1}, RFDrive{});
      const ParallelReport phase_rep = evaluate_parallel(
          phase_cfg, GateTarget::phase(nu), EncodingKind::TimeAntipodal, space, {});
      const auto phase_prof = phase_gate_fidelity_profile(drive, nu, space);
      for (int k = 0; k < space.half(); ++k) {
        worst_phase = std::max(worst_phase,
                               std::abs(phase_prof[static_cast<std::size_t>(k)] -
                                        phase_rep.per_qubit[static_cast<std::size_t>(k)].fidelity));
      }

      const TwoScatterPS balanced{1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2,
                                  0.0, +1};
      const Configuration epe_cfg = Configuration::epe(drive, balanced, drive);
      const Configuration pep_cfg = Configuration::pep(balanced, drive, balanced);
      const ParallelReport epe_rep = evaluate_parallel(
          epe_cfg, GateTarget::hadamard(), EncodingKind::TimeAntipodal, space, {});
      const ParallelReport pep_rep = evaluate_parallel(
          pep_cfg, GateTarget::hadamard(), EncodingKind::TimeAntipodal, space, {});
      const auto epe_prof = hadamard_fidelity_profile(drive, ConfigKind::EPE, space);
      const auto pep_prof = hadamard_fidelity_profile(drive, ConfigKind::PEP, space);
      for (int k = 0; k < space.half(); ++k) {
        const auto ks = static_cast<std::size_t>(k);
        worst_had = std::max(worst_had,
                             std::abs(epe_prof[ks] - epe_rep.per_qubit[ks].fidelity));
        worst_had = std::max(worst_had,
                             std::abs(pep_prof[ks] - pep_rep.per_qubit[ks].fidelity));
      }
    }
    record("phase-profile-vs-simulation", worst_phase, 1e-10);
    record("hadamard-profile-vs-simulation", worst_had, 1e-9);
  }

  // Column-application path equals the dense matrix path.
  {
    double worst = 0.0;
    for (int m : {8, 16}) {
      const ModeSpace space(m);
      for (int rep = 0; rep < 6; ++rep) {
        const Configuration config =
            rep % 2 == 0
                ? Configuration::epe(random_drive(rng), random_profile(m, rng),
                                     random_drive(rng))
                : Configuration::pep(random_profile(m, rng), random_drive(rng),
                                     random_profile(m, rng));
        for (EncodingKind kind :
             {EncodingKind::TimeAntipodal, EncodingKind::FrequencyAdjacent}) {
          const Eigen::MatrixXcd v = full_unitary(config, space, native_basis(kind));
          for (int q = 0; q < space.half(); ++q) {
            const QubitEncoding enc{kind, q};
            const ReducedGate dense = reduce_to_qubit(v, enc);
            const ReducedGate applied = simulate_reduced(config, enc, space);
            worst = std::max(worst, max_abs(dense.w - applied.w));
          }
        }
      }
    }
    record("column-apply-vs-dense", worst, 1e-12);
  }

  // Basis covariance: frequency-basis reduction of the conjugated cascade
  // equals the time-basis reduction with transformed encoding vectors.
  {
    const ModeSpace space(16);
    const Eigen::MatrixXcd f = dft_matrix(space);
    double worst = 0.0;
    for (int rep = 0; rep < 4; ++rep) {
      const Configuration config = Configuration::pep(
          random_profile(16, rng), random_drive(rng), random_profile(16, rng));
      const Eigen::MatrixXcd vt = full_unitary(config, space, Basis::Time);
      const Eigen::MatrixXcd vw = full_unitary(config, space, Basis::Frequency);
      worst = std::max(worst, max_abs(vw - f.adjoint() * vt * f));
      const QubitEncoding enc{EncodingKind::TimeAntipodal, 3};
      auto [zero, one] = qubit_basis_vectors(space, enc);
      const Eigen::VectorXcd zw = f.adjoint() * zero;
      const Eigen::VectorXcd ow = f.adjoint() * one;
      Eigen::Matrix2cd via_freq;
      via_freq << (zw.adjoint() * vw * zw).value(), (zw.adjoint() * vw * ow).value(),
          (ow.adjoint() * vw * zw).value(), (ow.adjoint() * vw * ow).value();
      worst = std::max(worst, max_abs(via_freq - reduce_to_qubit(vt, enc).w));
    }
    record("basis-covariance", worst, 1e-11);
  }

  // Bessel sum rule and reference points.
  {
    double worst = 0.0;
    for (double mu : {0.5, 1.4346956508195656, 2.404825557695773, 3.0}) {
      const auto seq = bessel_j_sequence(static_cast<int>(mu) + 25, mu);
      double total = seq[0] * seq[0];
      for (std::size_t n = 1; n < seq.size(); ++n) total += 2.0 * seq[n] * seq[n];
      worst = std::max(worst, std::abs(total - 1.0));
    }
    worst = std::max(worst, std::abs(bessel_j(0, 1.0) - 0.7651976865579666));
    worst = std::max(worst, std::abs(bessel_j(1, 1.0) - 0.44005058574493355));
    record("bessel-normalization", worst, 1e-12);
  }

  return results;
}

}  // namespace sloqc
