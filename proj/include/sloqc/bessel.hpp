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

#include <vector>

namespace sloqc {

// Integer-order Bessel function of the first kind, J_n(x), by Miller's
// downward recurrence with the J_0 + 2*sum_k J_{2k} = 1 normalization.
// Accurate to better than 1e-12 for |n| <= 60, |x| <= 12. Negative order
// and argument are handled by J_{-n}(x) = J_n(-x) = (-1)^n J_n(x).
double bessel_j(int n, double x);

// J_0(x) .. J_nmax(x) in a single recurrence pass. nmax >= 0.
std::vector<double> bessel_j_sequence(int nmax, double x);

}  // namespace sloqc
