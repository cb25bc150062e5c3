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

#include <doctest.h>

#include <numbers>
#include <random>

#include "sloqc/components.hpp"
#include "sloqc/metrics.hpp"
#include "test_helpers.hpp"

using namespace sloqc;
using sloqc::testing::haar_target;
using sloqc::testing::max_abs_diff;

namespace {
constexpr double kPi = std::numbers::pi;
const std::complex<double> kI(0, 1);
}  // namespace

TEST_CASE("named targets") {
  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  h /= std::numbers::sqrt2;
  CHECK(max_abs_diff(target_matrix(GateTarget::hadamard()), h) < 1e-15);

  Eigen::Matrix2cd x;
  x << 0, 1, 1, 0;
  CHECK(max_abs_diff(target_matrix(GateTarget::pauli_x()), x) < 1e-15);

  Eigen::Matrix2cd y;
  y << 0, -kI, kI, 0;
  CHECK(max_abs_diff(target_matrix(GateTarget::pauli_y()), y) < 1e-15);

  Eigen::Matrix2cd z;
  z << 1, 0, 0, -1;
  CHECK(max_abs_diff(target_matrix(GateTarget::pauli_z()), z) < 1e-15);

  CHECK(max_abs_diff(target_matrix(GateTarget::identity()),
                     Eigen::Matrix2cd::Identity()) == 0.0);

  const double nu = 0.73;
  Eigen::Matrix2cd ph;
  ph << 1, 0, 0, std::polar(1.0, -nu);
  CHECK(max_abs_diff(target_matrix(GateTarget::phase(nu)), ph) < 1e-15);
}

TEST_CASE("targets are unitary and canonicalization preserves them") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> wide(-10.0, 10.0);
  for (int rep = 0; rep < 200; ++rep) {
    const GateTarget t{wide(rng), wide(rng), wide(rng), wide(rng)};
    const Eigen::Matrix2cd m = target_matrix(t);
    CHECK(max_abs_diff(m.adjoint() * m, Eigen::Matrix2cd::Identity()) < 1e-14);
    const GateTarget canon = t.canonicalized();
    CHECK(canon.c >= 0.0);
    CHECK(canon.c <= kPi + 1e-12);
    CHECK(max_abs_diff(target_matrix(canon), m) < 1e-12);
  }
}

TEST_CASE("success probability") {
  const GateTarget h = GateTarget::hadamard();
  CHECK(success_probability(target_matrix(h), h) == doctest::Approx(1.0));
  const Eigen::Matrix2cd half = Eigen::Matrix2cd::Identity() / std::numbers::sqrt2;
  CHECK(success_probability(half, GateTarget::identity()) == doctest::Approx(0.5));
}

TEST_CASE("fidelity basics") {
  const GateTarget h = GateTarget::hadamard();
  SUBCASE("perfect match and global-phase invariance") {
    for (double chi : {0.0, 0.3, 2.9}) {
      const Eigen::Matrix2cd w = std::polar(1.0, chi) * target_matrix(h);
      CHECK(fidelity(w, h) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("orthogonal Paulis") {
    CHECK(fidelity(target_matrix(GateTarget::pauli_x()), GateTarget::pauli_z()) ==
          doctest::Approx(0.0));
  }
  SUBCASE("vanishing gate") {
    CHECK_THROWS_AS(fidelity(Eigen::Matrix2cd::Zero(), h), std::domain_error);
  }
}

TEST_CASE("scaling separates the two scores") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> p_dist(0.05, 1.0);
  for (int rep = 0; rep < 50; ++rep) {
    const GateTarget t = haar_target(rng);
    const double p = p_dist(rng);
    const Eigen::Matrix2cd w = std::sqrt(p) * target_matrix(t);
    CHECK(fidelity(w, t) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(success_probability(w, t) == doctest::Approx(p).epsilon(1e-12));
  }
}

TEST_CASE("scores stay within [0, 1] for unitary blocks") {
  std::mt19937_64 rng(41);
  const ModeSpace space(16);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int rep = 0; rep < 40; ++rep) {
    PSProfile p;
    for (int i = 0; i < 16; ++i) p.phases.push_back(angle(rng));
    const Eigen::MatrixXcd v = ps_time_matrix(p, space);
    const ReducedGate gate =
        reduce_to_qubit(v, QubitEncoding{EncodingKind::TimeAntipodal, rep % 8});
    const GateTarget t = haar_target(rng);
    if ((gate.w.adjoint() * gate.w).trace().real() < 1e-12) continue;
    const GateScore s = score_gate(gate.w, t);
    CHECK(s.fidelity >= -1e-12);
    CHECK(s.fidelity <= 1.0 + 1e-12);
    CHECK(s.success_prob >= -1e-12);
    CHECK(s.success_prob <= 1.0 + 1e-12);
  }
}

TEST_CASE("crosstalk") {
  const ModeSpace space(16);
  SUBCASE("identity leaks nothing") {
    const Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(16, 16);
    CHECK(crosstalk(v, QubitEncoding{EncodingKind::FrequencyAdjacent, 0},
                    QubitEncoding{EncodingKind::FrequencyAdjacent, 1}) == 0.0);
  }
  SUBCASE("two-scattering stays inside each antipodal pair") {
    const Eigen::MatrixXcd v = two_scatter_time_matrix(
        TwoScatterPS{std::cos(0.3), std::sin(0.3), 0.0, +1}, space);
    CHECK(crosstalk(v, QubitEncoding{EncodingKind::TimeAntipodal, 2},
                    QubitEncoding{EncodingKind::TimeAntipodal, 5}) < 1e-12);
  }
  SUBCASE("argument validation") {
    const Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(16, 16);
    CHECK_THROWS_AS(crosstalk(v, QubitEncoding{EncodingKind::FrequencyAdjacent, 1},
                              QubitEncoding{EncodingKind::FrequencyAdjacent, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(crosstalk(v, QubitEncoding{EncodingKind::FrequencyAdjacent, 0},
                              QubitEncoding{EncodingKind::TimeAntipodal, 1}),
                    std::invalid_argument);
  }
}
