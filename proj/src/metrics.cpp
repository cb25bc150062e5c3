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

#include "sloqc/metrics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sloqc {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_two_pi(double v) { return std::remainder(v, 2.0 * kPi); }

}  // namespace

GateTarget GateTarget::canonicalized() const {
  GateTarget t = *this;
  // c has period 4*pi in the parameterization; fold it into [0, pi] using
  // M(a,b,-c,d) = M(a,b+pi,c,d-pi) and M(a,b,2pi-c,d) = M(a,b+pi,c,d+pi).
  t.c = std::remainder(t.c, 4.0 * kPi);
  if (t.c < 0.0) {
    t.c = -t.c;
    t.b += kPi;
    t.d -= kPi;
  }
  if (t.c > 2.0 * kPi) t.c = 2.0 * kPi;  // remainder guard
  if (t.c > kPi) {
    t.c = 2.0 * kPi - t.c;
    t.b += kPi;
    t.d += kPi;
  }
  t.a = wrap_two_pi(t.a);
  t.b = wrap_two_pi(t.b);
  t.d = wrap_two_pi(t.d);
  return t;
}

GateTarget GateTarget::pauli_x() { return {-kPi / 2, kPi / 2, kPi, -kPi / 2}; }
GateTarget GateTarget::pauli_y() { return {kPi / 2, 0.0, kPi, 0.0}; }
GateTarget GateTarget::pauli_z() { return {kPi / 2, kPi, 0.0, 0.0}; }
GateTarget GateTarget::hadamard() { return {kPi / 2, 0.0, kPi / 2, kPi}; }
GateTarget GateTarget::phase(double nu) { return {-nu / 2, -nu, 0.0, 0.0}; }

Eigen::Matrix2cd target_matrix(const GateTarget& t) {
  const double ch = std::cos(t.c / 2);
  const double sh = std::sin(t.c / 2);
  const std::complex<double> global = std::polar(1.0, t.a);
  Eigen::Matrix2cd m;
  m << ch * std::polar(1.0, -(t.b + t.d) / 2), -sh * std::polar(1.0, -(t.b - t.d) / 2),
      sh * std::polar(1.0, (t.b - t.d) / 2), ch * std::polar(1.0, (t.b + t.d) / 2);
  return global * m;
}

double success_probability(const Eigen::Matrix2cd& w, const GateTarget& t) {
  const Eigen::Matrix2cd target = target_matrix(t);
  const double denom = (target.adjoint() * target).trace().real();
  return (w.adjoint() * w).trace().real() / denom;
}

double fidelity(const Eigen::Matrix2cd& w, const GateTarget& t) {
  const Eigen::Matrix2cd target = target_matrix(t);
  const double ww = (w.adjoint() * w).trace().real();
  const double tt = (target.adjoint() * target).trace().real();
  if (ww <= 1e-300) {
    throw std::domain_error("fidelity: undefined for a vanishing reduced gate");
  }
  // |Tr(W^dagger T)|^2 rather than Tr(W^dagger T) Tr(T^dagger W): identical
  // value, but real by construction.
  const std::complex<double> overlap = (w.adjoint() * target).trace();
  return std::norm(overlap) / (ww * tt);
}

double success_probability(const ReducedGate& w, const GateTarget& t) {
  return success_probability(w.w, t);
}

double fidelity(const ReducedGate& w, const GateTarget& t) { return fidelity(w.w, t); }

GateScore score_gate(const Eigen::Matrix2cd& w, const GateTarget& t) {
  return GateScore{fidelity(w, t), success_probability(w, t)};
}

double crosstalk(const Eigen::MatrixXcd& v, const QubitEncoding& enc_a,
                 const QubitEncoding& enc_b) {
  if (enc_a.kind != enc_b.kind) {
    throw std::invalid_argument("crosstalk: encodings must share a kind");
  }
  if (enc_a.index == enc_b.index) {
    throw std::invalid_argument("crosstalk: encodings must be distinct");
  }
  if (v.rows() != v.cols()) {
    throw std::invalid_argument("crosstalk: matrix must be square");
  }
  const ModeSpace space(static_cast<int>(v.rows()));
  const auto [a0, a1] = enc_a.mode_pair(space);
  const auto [b0, b1] = enc_b.mode_pair(space);
  double worst = 0.0;
  for (int src : {a0, a1}) {
    const double leaked = std::norm(v(b0, src)) + std::norm(v(b1, src));
    worst = std::max(worst, leaked);
  }
  return worst;
}

}  // namespace sloqc
