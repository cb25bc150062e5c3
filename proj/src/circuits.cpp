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

#include "sloqc/circuits.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sloqc {

namespace {

constexpr double kPi = std::numbers::pi;

PSProfile shaper_profile(const ShaperSetting& shaper, const ModeSpace& space) {
  if (const auto* profile = std::get_if<PSProfile>(&shaper)) {
    if (static_cast<int>(profile->phases.size()) != space.modes) {
      throw std::invalid_argument("shaper profile length must equal M");
    }
    return *profile;
  }
  return two_scatter_profile(std::get<TwoScatterPS>(shaper), space);
}

Eigen::MatrixXcd shaper_matrix(const ShaperSetting& shaper, const ModeSpace& space,
                               Basis basis) {
  const PSProfile profile = shaper_profile(shaper, space);
  return basis == Basis::Frequency ? ps_frequency_matrix(profile)
                                   : ps_time_matrix(profile, space);
}

Eigen::MatrixXcd eom_matrix(const RFDrive& drive, const ModeSpace& space, Basis basis) {
  return basis == Basis::Time ? eom_time_matrix(drive, space)
                              : eom_frequency_matrix(drive, space);
}

// Applies one stage to a state vector expressed in `basis`; diagonal stages
// are O(M), scattering stages go through the transform, O(M^2).
struct StageApplier {
  const ModeSpace& space;
  Basis basis;
  Eigen::MatrixXcd f;  // dft_matrix(space), built once per cascade

  void apply_shaper(const ShaperSetting& shaper, Eigen::VectorXcd& v) const {
    const PSProfile profile = shaper_profile(shaper, space);
    Eigen::VectorXcd diag(space.modes);
    for (int j = 0; j < space.modes; ++j) {
      diag(j) = std::polar(1.0, profile.phases[static_cast<std::size_t>(j)]);
    }
    if (basis == Basis::Frequency) {
      v.array() *= diag.array();
    } else {
      // F P F^dagger v
      Eigen::VectorXcd w = f.adjoint() * v;
      w.array() *= diag.array();
      v = f * w;
    }
  }

  void apply_eom(const RFDrive& drive, Eigen::VectorXcd& v) const {
    const std::vector<double> phases = eom_time_phases(drive, space);
    Eigen::VectorXcd diag(space.modes);
    for (int k = 0; k < space.modes; ++k) {
      diag(k) = std::polar(1.0, phases[static_cast<std::size_t>(k)] + drive.phi_c);
    }
    if (basis == Basis::Time) {
      v.array() *= diag.array();
    } else {
      // F^dagger E F v
      Eigen::VectorXcd w = f * v;
      w.array() *= diag.array();
      v = f.adjoint() * w;
    }
  }

  void apply_config(const Configuration& config, Eigen::VectorXcd& v) const {
    if (const auto* epe = std::get_if<EpeStages>(&config.stages)) {
      apply_eom(epe->eom_first, v);
      apply_shaper(epe->shaper, v);
      apply_eom(epe->eom_second, v);
    } else {
      const auto& pep = std::get<PepStages>(config.stages);
      apply_shaper(pep.shaper_first, v);
      apply_eom(pep.eom, v);
      apply_shaper(pep.shaper_second, v);
    }
  }
};

Eigen::Matrix2cd shaper_block(const ShaperSetting& shaper) {
  const auto* ps = std::get_if<TwoScatterPS>(&shaper);
  if (ps == nullptr) {
    throw std::invalid_argument(
        "blockwise reduction needs two-scattering shaper settings");
  }
  const std::complex<double> diag = std::polar(ps->alpha_mag, ps->gamma);
  const std::complex<double> off =
      std::polar(ps->beta_mag, ps->gamma) * std::complex<double>(0.0, ps->sign);
  Eigen::Matrix2cd b;
  b << diag, off, off, diag;
  return b;
}

}  // namespace

ConfigKind Configuration::kind() const {
  return std::holds_alternative<EpeStages>(stages) ? ConfigKind::EPE : ConfigKind::PEP;
}

Configuration Configuration::epe(RFDrive eom_first, ShaperSetting shaper,
                                 RFDrive eom_second) {
  return Configuration{EpeStages{std::move(eom_first), std::move(shaper),
                                 std::move(eom_second)}};
}

Configuration Configuration::pep(ShaperSetting shaper_first, RFDrive eom,
                                 ShaperSetting shaper_second) {
  return Configuration{PepStages{std::move(shaper_first), std::move(eom),
                                 std::move(shaper_second)}};
}

Basis native_basis(EncodingKind kind) {
  return kind == EncodingKind::FrequencyAdjacent ? Basis::Frequency : Basis::Time;
}

Eigen::MatrixXcd full_unitary(const Configuration& config, const ModeSpace& space,
                              Basis basis) {
  if (const auto* epe = std::get_if<EpeStages>(&config.stages)) {
    const Eigen::MatrixXcd e1 = eom_matrix(epe->eom_first, space, basis);
    const Eigen::MatrixXcd p = shaper_matrix(epe->shaper, space, basis);
    const Eigen::MatrixXcd e2 = eom_matrix(epe->eom_second, space, basis);
    return e2 * (p * e1);
  }
  const auto& pep = std::get<PepStages>(config.stages);
  const Eigen::MatrixXcd p1 = shaper_matrix(pep.shaper_first, space, basis);
  const Eigen::MatrixXcd e = eom_matrix(pep.eom, space, basis);
  const Eigen::MatrixXcd p2 = shaper_matrix(pep.shaper_second, space, basis);
  return p2 * (e * p1);
}

ReducedGate reduce_to_qubit(const Eigen::MatrixXcd& v, const QubitEncoding& enc) {
  if (v.rows() != v.cols()) {
    throw std::invalid_argument("reduce_to_qubit: matrix must be square");
  }
  const ModeSpace space(static_cast<int>(v.rows()));
  const auto [m0, m1] = enc.mode_pair(space);
  Eigen::Matrix2cd w;
  w << v(m0, m0), v(m0, m1), v(m1, m0), v(m1, m1);
  return ReducedGate{w, enc};
}

ReducedGate simulate_reduced(const Configuration& config, const QubitEncoding& enc,
                             const ModeSpace& space) {
  const Basis basis = native_basis(enc.kind);
  const StageApplier applier{space, basis, dft_matrix(space)};
  auto [zero, one] = qubit_basis_vectors(space, enc);
  applier.apply_config(config, zero);
  applier.apply_config(config, one);
  const auto [m0, m1] = enc.mode_pair(space);
  Eigen::Matrix2cd w;
  w << zero(m0), one(m0), zero(m1), one(m1);
  return ReducedGate{w, enc};
}

std::vector<Eigen::Matrix2cd> reduce_all_time_qubits(const Configuration& config,
                                                     const ModeSpace& space) {
  const int h = space.half();
  std::vector<Eigen::Matrix2cd> gates(static_cast<std::size_t>(h));

  auto eom_blocks = [&](const RFDrive& drive) {
    std::vector<double> phases = eom_time_phases(drive, space);
    const std::complex<double> global = std::polar(1.0, drive.phi_c);
    std::vector<Eigen::Matrix2cd> blocks(static_cast<std::size_t>(h));
    for (int k = 0; k < h; ++k) {
      Eigen::Matrix2cd b = Eigen::Matrix2cd::Zero();
      b(0, 0) = global * std::polar(1.0, phases[static_cast<std::size_t>(k)]);
      b(1, 1) = global * std::polar(1.0, phases[static_cast<std::size_t>(k + h)]);
      blocks[static_cast<std::size_t>(k)] = b;
    }
    return blocks;
  };

  if (const auto* epe = std::get_if<EpeStages>(&config.stages)) {
    const auto e1 = eom_blocks(epe->eom_first);
    const auto e2 = eom_blocks(epe->eom_second);
    const Eigen::Matrix2cd p = shaper_block(epe->shaper);
    for (int k = 0; k < h; ++k) {
      gates[static_cast<std::size_t>(k)] =
          e2[static_cast<std::size_t>(k)] * p * e1[static_cast<std::size_t>(k)];
    }
  } else {
    const auto& pep = std::get<PepStages>(config.stages);
    const auto e = eom_blocks(pep.eom);
    const Eigen::Matrix2cd p1 = shaper_block(pep.shaper_first);
    const Eigen::Matrix2cd p2 = shaper_block(pep.shaper_second);
    for (int k = 0; k < h; ++k) {
      gates[static_cast<std::size_t>(k)] = p2 * e[static_cast<std::size_t>(k)] * p1;
    }
  }
  return gates;
}

std::complex<double> pep_time_element_sum(const std::vector<double>& shaper_first,
                                          const std::vector<double>& eom_phases,
                                          const std::vector<double>& shaper_second,
                                          int k_out, int k_in) {
  const int m = static_cast<int>(eom_phases.size());
  if (static_cast<int>(shaper_first.size()) != m ||
      static_cast<int>(shaper_second.size()) != m) {
    throw std::invalid_argument("pep_time_element_sum: mismatched lengths");
  }
  const double step = 2.0 * kPi / m;
  std::complex<double> total = 0.0;
  for (int j = 0; j < m; ++j) {
    std::complex<double> inner = 0.0;
    std::complex<double> outer = 0.0;
    for (int j1 = 0; j1 < m; ++j1) {
      const int r_in = (((j - k_in) % m + m) * j1) % m;
      inner += std::polar(1.0, -step * r_in + shaper_first[static_cast<std::size_t>(j1)]);
      const int r_out = (((k_out - j) % m + m) * j1) % m;
      outer += std::polar(1.0, -step * r_out + shaper_second[static_cast<std::size_t>(j1)]);
    }
    total += std::polar(1.0, eom_phases[static_cast<std::size_t>(j)]) * inner * outer;
  }
  return total / static_cast<double>(m * m);
}

std::complex<double> epe_time_element_sum(const std::vector<double>& eom_first,
                                          const std::vector<double>& shaper,
                                          const std::vector<double>& eom_second,
                                          int k_out, int k_in) {
  const int m = static_cast<int>(shaper.size());
  if (static_cast<int>(eom_first.size()) != m ||
      static_cast<int>(eom_second.size()) != m) {
    throw std::invalid_argument("epe_time_element_sum: mismatched lengths");
  }
  const double step = 2.0 * kPi / m;
  std::complex<double> total = 0.0;
  for (int j = 0; j < m; ++j) {
    const int r = (((k_out - k_in) % m + m) * j) % m;
    total += std::polar(1.0, -step * r + shaper[static_cast<std::size_t>(j)]);
  }
  total *= std::polar(1.0, eom_second[static_cast<std::size_t>(k_out)] +
                               eom_first[static_cast<std::size_t>(k_in)]);
  return total / static_cast<double>(m);
}

}  // namespace sloqc
