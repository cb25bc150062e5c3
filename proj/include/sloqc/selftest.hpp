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

#include <string>
#include <vector>

namespace sloqc {

struct CheckResult {
  std::string name;
  bool pass = false;
  double metric = 0.0;     // worst observed deviation (or count mismatch)
  double tolerance = 0.0;
};

// Structural invariant suite: transform unitarity, component unitarity,
// two-scattering exactness, closed-form element sums against matrix
// products, Bessel sideband agreement, and the analytic per-qubit fidelity
// profiles against full simulation.
std::vector<CheckResult> run_selftest();

}  // namespace sloqc
