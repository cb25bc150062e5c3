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

#include "sloqc/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "sloqc/bessel.hpp"

namespace sloqc {

namespace {

constexpr double kPi = std::numbers::pi;

int clamp_count(double x, const ModeSpace& space) {
  const int n = static_cast<int>(std::floor(x)) + 1;
  return std::clamp(n, 0, space.half());
}

// Shared single-window count: qubits whose sine sample clears A.
int analytic_window_count(double window_a, const ModeSpace& space) {
  const double a = std::clamp(window_a, -1.0, 1.0);
  const double x = (space.modes / kPi) * (kPi / 2 - std::asin(a));
  return clamp_count(x, space);
}

Configuration phase_gate_config(double nu, double f_th, const ModeSpace& space) {
  const double mu = nu / 2 + std::acos(std::sqrt(f_th));
  return Configuration::epe(RFDrive::single_tone(mu, kPi / space.modes),
                            TwoScatterPS{1.0, 0.0, 0.0, +1}, RFDrive{});
}

Configuration hadamard_config(ConfigKind kind, double mu, const ModeSpace& space) {
  const TwoScatterPS balanced{1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2, 0.0, +1};
  const RFDrive tone = RFDrive::single_tone(mu, kPi / space.modes);
  if (kind == ConfigKind::EPE) return Configuration::epe(tone, balanced, tone);
  return Configuration::pep(balanced, tone, balanced);
}

double hadamard_window_halfwidth(ConfigKind kind, double f_th) {
  const double root = kind == ConfigKind::EPE ? std::pow(f_th, 0.25) : std::sqrt(f_th);
  return kPi / 2 - std::asin(root);
}

}  // namespace

int ParallelReport::count_above() const {
  int n = 0;
  for (const GateScore& s : per_qubit) {
    if (s.fidelity >= thresholds.fidelity && s.success_prob >= thresholds.success) ++n;
  }
  return n;
}

int ParallelReport::count_fidelity_above(double f_th) const {
  int n = 0;
  for (const GateScore& s : per_qubit) {
    if (s.fidelity >= f_th) ++n;
  }
  return n;
}

ParallelReport evaluate_parallel(const Configuration& config, const GateTarget& target,
                                 EncodingKind kind, const ModeSpace& space,
                                 Thresholds thresholds) {
  const Eigen::MatrixXcd v = full_unitary(config, space, native_basis(kind));
  ParallelReport report{{}, thresholds, config};
  report.per_qubit.reserve(static_cast<std::size_t>(space.half()));
  for (int q = 0; q < space.half(); ++q) {
    const ReducedGate gate = reduce_to_qubit(v, QubitEncoding{kind, q});
    report.per_qubit.push_back(score_gate(gate.w, target));
  }
  return report;
}

RFDrive square_drive(int order, double mu_scale, double theta) {
  if (order < 0) throw std::invalid_argument("square_drive: order must be >= 0");
  RFDrive drive;
  drive.tones.reserve(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    const int h = 2 * n + 1;
    drive.tones.push_back(Tone{h, mu_scale / h, h * theta});
  }
  return drive;
}

RFDrive square_drive_discrete(int order, double plateau, double theta,
                              const ModeSpace& space) {
  if (order < 0) throw std::invalid_argument("square_drive_discrete: order must be >= 0");
  const int m = space.modes;
  std::vector<double> residual(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    residual[static_cast<std::size_t>(k)] = k < m / 2 ? plateau : -plateau;
  }
  RFDrive drive;
  for (int n = 0; n <= order; ++n) {
    const int h = 2 * n + 1;
    if (h > m / 2 - 1) break;  // higher odd harmonics alias back onto these
    double num = 0.0;
    double den = 0.0;
    std::vector<double> basis(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      const double s = std::sin(h * (2.0 * kPi * k / m + theta));
      basis[static_cast<std::size_t>(k)] = s;
      num += residual[static_cast<std::size_t>(k)] * s;
      den += s * s;
    }
    const double coeff = num / den;
    for (int k = 0; k < m; ++k) {
      residual[static_cast<std::size_t>(k)] -= coeff * basis[static_cast<std::size_t>(k)];
    }
    drive.tones.push_back(Tone{h, coeff, h * theta});
  }
  return drive;
}

std::vector<double> phase_gate_fidelity_profile(const RFDrive& drive, double nu,
                                                const ModeSpace& space) {
  const std::vector<double> phases = eom_time_phases(drive, space);
  std::vector<double> fid(static_cast<std::size_t>(space.half()));
  for (int k = 0; k < space.half(); ++k) {
    const double c = std::cos(phases[static_cast<std::size_t>(k)] - nu / 2);
    fid[static_cast<std::size_t>(k)] = c * c;
  }
  return fid;
}

std::vector<double> hadamard_fidelity_profile(const RFDrive& drive, ConfigKind kind,
                                              const ModeSpace& space) {
  const std::vector<double> phases = eom_time_phases(drive, space);
  std::vector<double> fid(static_cast<std::size_t>(space.half()));
  for (int k = 0; k < space.half(); ++k) {
    const double s = std::sin(phases[static_cast<std::size_t>(k)] + kPi / 4);
    const double s2 = s * s;
    fid[static_cast<std::size_t>(k)] = kind == ConfigKind::EPE ? s2 * s2 : s2;
  }
  return fid;
}

int count_parallel_phase(double nu, double f_th, const ModeSpace& space) {
  if (f_th <= 0.0 || f_th >= 1.0) {
    throw std::invalid_argument("count_parallel_phase: f_th must lie in (0, 1)");
  }
  if (nu <= 0.0) return space.half();
  const double delta = std::acos(std::sqrt(f_th));
  const double a = (nu / 2 - delta) / (nu / 2 + delta);
  return analytic_window_count(a, space);
}

int count_parallel_phase_brute(double nu, double f_th, const ModeSpace& space) {
  const GateTarget target = GateTarget::phase(nu);
  const ParallelReport report =
      evaluate_parallel(phase_gate_config(nu, f_th, space), target,
                        EncodingKind::TimeAntipodal, space, Thresholds{f_th, 0.0});
  return report.count_fidelity_above(f_th);
}

int count_parallel_hadamard(ConfigKind kind, double f_th, const ModeSpace& space) {
  if (f_th <= 0.0 || f_th >= 1.0) {
    throw std::invalid_argument("count_parallel_hadamard: f_th must lie in (0, 1)");
  }
  const double dv = hadamard_window_halfwidth(kind, f_th);
  const double a = (kPi / 4 - dv) / (kPi / 4 + dv);
  return analytic_window_count(a, space);
}

int count_parallel_hadamard_brute(ConfigKind kind, double f_th, const ModeSpace& space) {
  const double mu = kPi / 4 + hadamard_window_halfwidth(kind, f_th);
  const ParallelReport report =
      evaluate_parallel(hadamard_config(kind, mu, space), GateTarget::hadamard(),
                        EncodingKind::TimeAntipodal, space, Thresholds{f_th, 0.0});
  return report.count_fidelity_above(f_th);
}

// ---------------------------------------------------------------------------
// Multi-tone optimizer
// ---------------------------------------------------------------------------

namespace {

struct TimeObjective {
  ConfigKind kind;
  GateTarget target;
  int n_tones;
  bool shared_drive;
  Thresholds thresholds;
  const ModeSpace& space;
  // Shaper settings fixed from the target's exact single-qubit solution;
  // optional extra parameters perturb the arm angles.
  TwoScatterPS shaper_a;
  TwoScatterPS shaper_b;
  double phi_c = 0.0;
  mutable int evaluations = 0;

  int drive_params() const { return 2 * n_tones; }
  int param_count() const {
    const int drives = kind == ConfigKind::EPE && !shared_drive ? 2 : 1;
    return drives * drive_params() + 2;  // + the two shaper arm tweaks
  }

  RFDrive drive_from(const double* p) const {
    RFDrive d;
    d.tones.reserve(static_cast<std::size_t>(n_tones));
    for (int n = 0; n < n_tones; ++n) {
      d.tones.push_back(Tone{2 * n + 1, p[n], p[n_tones + n]});
    }
    return d;
  }

  static TwoScatterPS tweak(const TwoScatterPS& base, double darm) {
    const double arm = std::atan2(base.beta_mag, base.alpha_mag) + darm;
    return TwoScatterPS{std::cos(arm), std::sin(arm), base.gamma, base.sign};
  }

  Configuration build(const std::vector<double>& p) const {
    const int np = drive_params();
    const double arm_a = p[p.size() - 2];
    const double arm_b = p[p.size() - 1];
    if (kind == ConfigKind::EPE) {
      RFDrive first = drive_from(p.data());
      RFDrive second = shared_drive ? first : drive_from(p.data() + np);
      first.phi_c = phi_c;
      return Configuration::epe(std::move(first), tweak(shaper_a, arm_a),
                                std::move(second));
    }
    RFDrive eom = drive_from(p.data());
    eom.phi_c = phi_c;
    return Configuration::pep(tweak(shaper_a, arm_a), std::move(eom),
                              tweak(shaper_b, arm_b));
  }

  // count + hinge bonus: failing qubits near the threshold pull the search
  // toward configurations where one more qubit clears it.
  double value(const std::vector<double>& p) const {
    ++evaluations;
    const Configuration config = build(p);
    const auto gates = reduce_all_time_qubits(config, space);
    double score = 0.0;
    for (const Eigen::Matrix2cd& w : gates) {
      const GateScore s = score_gate(w, target);
      if (s.fidelity >= thresholds.fidelity && s.success_prob >= thresholds.success) {
        score += 1.0;
      } else {
        const double shortfall = thresholds.fidelity - s.fidelity;
        score -= std::min(shortfall, 0.35);
      }
    }
    return score;
  }
};

// Deterministic Nelder-Mead maximization; stops on budget or simplex collapse.
std::vector<double> nelder_mead(const TimeObjective& objective,
                                std::vector<double> start, double step,
                                int max_evals, int budget) {
  const int n = static_cast<int>(start.size());
  std::vector<std::vector<double>> simplex(static_cast<std::size_t>(n) + 1, start);
  std::vector<double> value(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) simplex[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(i)] += step;
  int used = 0;
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    if (objective.evaluations >= budget) return start;
    value[i] = objective.value(simplex[i]);
    ++used;
  }
  auto order = [&]() {
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      for (std::size_t j = i + 1; j < simplex.size(); ++j) {
        if (value[j] > value[i]) {
          std::swap(value[i], value[j]);
          std::swap(simplex[i], simplex[j]);
        }
      }
    }
  };
  order();
  while (used < max_evals && objective.evaluations < budget) {
    const std::size_t worst = simplex.size() - 1;
    std::vector<double> centroid(static_cast<std::size_t>(n), 0.0);
    for (std::size_t i = 0; i < worst; ++i) {
      for (int j = 0; j < n; ++j) centroid[static_cast<std::size_t>(j)] += simplex[i][static_cast<std::size_t>(j)];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    auto blend = [&](double coef) {
      std::vector<double> p(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        const auto js = static_cast<std::size_t>(j);
        p[js] = centroid[js] + coef * (centroid[js] - simplex[worst][js]);
      }
      return p;
    };

    std::vector<double> reflected = blend(1.0);
    const double fr = objective.value(reflected);
    ++used;
    if (fr > value[0]) {
      std::vector<double> expanded = blend(2.0);
      const double fe = objective.value(expanded);
      ++used;
      if (fe > fr) {
        simplex[worst] = std::move(expanded);
        value[worst] = fe;
      } else {
        simplex[worst] = std::move(reflected);
        value[worst] = fr;
      }
    } else if (fr > value[worst - 1]) {
      simplex[worst] = std::move(reflected);
      value[worst] = fr;
    } else {
      std::vector<double> contracted = blend(-0.5);
      const double fc = objective.value(contracted);
      ++used;
      if (fc > value[worst]) {
        simplex[worst] = std::move(contracted);
        value[worst] = fc;
      } else {
        // shrink toward the best vertex
        for (std::size_t i = 1; i < simplex.size(); ++i) {
          for (int j = 0; j < n; ++j) {
            const auto js = static_cast<std::size_t>(j);
            simplex[i][js] = simplex[0][js] + 0.5 * (simplex[i][js] - simplex[0][js]);
          }
          if (objective.evaluations >= budget) break;
          value[i] = objective.value(simplex[i]);
          ++used;
        }
      }
    }
    order();
    double spread = 0.0;
    for (int j = 0; j < n; ++j) {
      const auto js = static_cast<std::size_t>(j);
      spread = std::max(spread, std::abs(simplex.back()[js] - simplex[0][js]));
    }
    if (spread < 1e-10) break;
  }
  return simplex[0];
}

}  // namespace

OptimizeResult optimize_multitone(ConfigKind kind, const GateTarget& target,
                                  int n_tones, Thresholds thresholds,
                                  const ModeSpace& space, OptimizeOptions options) {
  if (n_tones < 1) throw std::invalid_argument("optimize_multitone: n_tones must be >= 1");

  TimeObjective objective{kind,       target.canonicalized(), n_tones,
                          options.shared_drive, thresholds, space,
                          TwoScatterPS{}, TwoScatterPS{}};

  // Shaper arms and the plateau phases come from the exact single-qubit
  // solution of the same cascade.
  double plateau_a = 0.0;
  double plateau_b = 0.0;
  if (kind == ConfigKind::EPE) {
    const SynthesisSolution sol = solve_epe_time(target, 0, space);
    const auto& stages = std::get<EpeStages>(sol.config.stages);
    objective.shaper_a = std::get<TwoScatterPS>(stages.shaper);
    objective.shaper_b = objective.shaper_a;
    objective.phi_c = stages.eom_first.phi_c + stages.eom_second.phi_c;
    plateau_a = stages.eom_first.tones.at(0).mu;
    plateau_b = stages.eom_second.tones.at(0).mu;
  } else {
    const SynthesisSolution sol = solve_pep_time(target, 0, space);
    const auto& stages = std::get<PepStages>(sol.config.stages);
    objective.shaper_a = std::get<TwoScatterPS>(stages.shaper_first);
    objective.shaper_b = std::get<TwoScatterPS>(stages.shaper_second);
    objective.phi_c = stages.eom.phi_c;
    plateau_a = stages.eom.tones.at(0).mu;
  }

  const int np = objective.param_count();
  const int budget = options.budget;

  // Seed: the truncated square drive shaped to the plateau phase. For the
  // shared-drive EPE the two plateaus coincide for every gate in the
  // sin^4 family of interest; seed from the first.
  auto square_seed = [&](double plateau, double scale) {
    std::vector<double> p(static_cast<std::size_t>(np), 0.0);
    for (int n = 0; n < n_tones; ++n) {
      const int h = 2 * n + 1;
      p[static_cast<std::size_t>(n)] = scale * plateau / h;
      p[static_cast<std::size_t>(n_tones + n)] = h * kPi / space.modes;
    }
    if (kind == ConfigKind::EPE && !options.shared_drive) {
      for (int n = 0; n < n_tones; ++n) {
        const int h = 2 * n + 1;
        p[static_cast<std::size_t>(2 * n_tones + n)] = scale * plateau_b / h;
        p[static_cast<std::size_t>(3 * n_tones + n)] = h * kPi / space.modes;
      }
    }
    return p;
  };

  std::vector<double> best = square_seed(plateau_a, 1.0);
  double best_value = objective.value(best);
  auto consider = [&](const std::vector<double>& p) {
    const double v = objective.value(p);
    if (v > best_value) {
      best_value = v;
      best = p;
    }
  };

  // Stage A: refine the square seed (and a widened copy).
  for (double scale : {1.0, 1.2}) {
    std::vector<double> refined = nelder_mead(
        objective, square_seed(plateau_a, scale), 0.08, budget / 5, budget);
    consider(refined);
  }

  // Stage B: restart from the incumbent over a coarse 8-point phase grid.
  const std::vector<double> anchor = best;
  for (int g = 0; g < 8 && objective.evaluations < budget; ++g) {
    std::vector<double> start = anchor;
    const double shift = (g + 1) * (2.0 * kPi / space.modes) / 8.0;
    for (int n = 0; n < n_tones; ++n) {
      start[static_cast<std::size_t>(n_tones + n)] += (2 * n + 1) * shift;
      if (kind == ConfigKind::EPE && !options.shared_drive) {
        start[static_cast<std::size_t>(3 * n_tones + n)] += (2 * n + 1) * shift;
      }
    }
    consider(nelder_mead(objective, start, 0.04, budget / 20, budget));
  }

  // Stage C: slide the whole profile across the register grid; alignment
  // decides whether the last marginal qubit is captured.
  const std::vector<double> shaped = best;
  const int slide_steps = 64;
  for (int g = 0; g < slide_steps && objective.evaluations < budget; ++g) {
    std::vector<double> start = shaped;
    const double shift = g * (2.0 * kPi / space.modes) / slide_steps;
    for (int n = 0; n < n_tones; ++n) {
      start[static_cast<std::size_t>(n_tones + n)] += (2 * n + 1) * shift;
      if (kind == ConfigKind::EPE && !options.shared_drive) {
        start[static_cast<std::size_t>(3 * n_tones + n)] += (2 * n + 1) * shift;
      }
    }
    consider(start);
  }
  consider(nelder_mead(objective, best, 0.01, budget / 10, budget));

  OptimizeResult result;
  result.config = objective.build(best);
  result.evaluations = objective.evaluations;
  result.budget_exhausted = objective.evaluations >= budget;
  result.report = evaluate_parallel(result.config, objective.target,
                                    EncodingKind::TimeAntipodal, space, thresholds);
  return result;
}

// ---------------------------------------------------------------------------
// Guard bands
// ---------------------------------------------------------------------------

std::vector<GuardBandRow> guard_band_scan(const GateTarget& target, ConfigKind kind,
                                          int max_spacing, const ModeSpace& space) {
  if (kind != ConfigKind::PEP) {
    throw std::invalid_argument(
        "guard_band_scan: only the shaper-EOM-shaper cascade has closed-form "
        "frequency-encoding settings");
  }
  if (max_spacing < 0 || max_spacing + 2 > space.modes) {
    throw std::invalid_argument("guard_band_scan: spacing outside [0, M-2]");
  }

  const GateTarget t = target.canonicalized();
  // Per-qubit settings replicated at each occupied mode pair.
  const SynthesisSolution reference = solve_pep_frequency(t, 0, space);
  const auto& ref_stages = std::get<PepStages>(reference.config.stages);
  const auto& ref_first = std::get<PSProfile>(ref_stages.shaper_first);
  const auto& ref_second = std::get<PSProfile>(ref_stages.shaper_second);

  std::vector<GuardBandRow> rows;
  rows.reserve(static_cast<std::size_t>(max_spacing) + 1);
  for (int g = 0; g <= max_spacing; ++g) {
    const int stride = 2 + g;
    const int qubits = space.modes / stride;

    PSProfile first{std::vector<double>(static_cast<std::size_t>(space.modes), 0.0)};
    PSProfile second = first;
    for (int q = 0; q < qubits; ++q) {
      const auto base = static_cast<std::size_t>(q * stride);
      first.phases[base] = ref_first.phases[0];
      first.phases[base + 1] = ref_first.phases[1];
      second.phases[base] = ref_second.phases[0];
      second.phases[base + 1] = ref_second.phases[1];
    }
    const Configuration config = Configuration::pep(first, ref_stages.eom, second);
    const Eigen::MatrixXcd v = full_unitary(config, space, Basis::Frequency);

    double worst_leak = 0.0;
    if (qubits >= 2) {
      for (int src : {0, 1}) {
        const double leak =
            std::norm(v(stride, src)) + std::norm(v(stride + 1, src));
        worst_leak = std::max(worst_leak, leak);
      }
    }
    double worst_fid = 1.0;
    for (int q = 0; q < qubits; ++q) {
      const int base = q * stride;
      Eigen::Matrix2cd w;
      w << v(base, base), v(base, base + 1), v(base + 1, base), v(base + 1, base + 1);
      worst_fid = std::min(worst_fid, fidelity(w, t));
    }
    rows.push_back(GuardBandRow{g, worst_leak, std::sqrt(worst_leak), worst_fid, qubits});
  }
  return rows;
}

}  // namespace sloqc
