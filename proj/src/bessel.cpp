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

#include "sloqc/bessel.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace sloqc {

namespace {

// Downward recurrence J_{m-1} = (2m/x) J_m - J_{m+1} from a start order well
// above both n and x, normalized with J_0 + 2 sum_k J_{2k} = 1.
std::vector<double> miller_sequence(int nmax, double x) {
  std::vector<double> out(nmax + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  const int base = std::max(nmax, static_cast<int>(std::ceil(x)));
  int start = base + 1 + static_cast<int>(std::ceil(std::sqrt(40.0 * (base + 1))));
  if (start % 2 != 0) ++start;

  double high = 0.0;        // J_{m+1} (unnormalized)
  double mid = 1e-300;      // J_m
  double norm = 0.0;
  for (int m = start; m >= 1; --m) {
    const double low = (2.0 * m / x) * mid - high;
    high = mid;
    mid = low;
    if (m - 1 <= nmax) out[m - 1] = mid;
    if ((m - 1) % 2 == 0 && m - 1 > 0) norm += 2.0 * mid;
    if (std::abs(mid) > 1e250) {
      mid *= 1e-250;
      high *= 1e-250;
      norm *= 1e-250;
      for (double& v : out) v *= 1e-250;
    }
  }
  norm += mid;  // J_0 term
  for (double& v : out) v /= norm;
  return out;
}

}  // namespace

std::vector<double> bessel_j_sequence(int nmax, double x) {
  if (nmax < 0) throw std::invalid_argument("bessel_j_sequence: nmax must be >= 0");
  if (x < 0.0) {
    auto seq = miller_sequence(nmax, -x);
    for (int n = 1; n <= nmax; n += 2) seq[n] = -seq[n];
    return seq;
  }
  return miller_sequence(nmax, x);
}

double bessel_j(int n, double x) {
  int order = n;
  double sign = 1.0;
  if (order < 0) {
    order = -order;
    if (order % 2 != 0) sign = -sign;
  }
  if (x < 0.0) {
    x = -x;
    if (order % 2 != 0) sign = -sign;
  }
  return sign * miller_sequence(order, x)[order];
}

}  // namespace sloqc
