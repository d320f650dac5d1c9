// Copyright 2026 The extbloch authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace extbloch {

/// Outcome of one property suite run over random inputs.
struct SuiteResult {
  std::string name;
  bool pass = false;
  double worst_residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct SelfCheckOptions {
  std::vector<int> dims = {2, 3, 4, 6};
  std::vector<std::pair<int, int>> pairs = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};
  int trials = 25;
  std::uint64_t seed = 0;
  /// Test hook: swap the first two adapted generators before decomposing, to
  /// prove the four-component interference check detects basis-order bugs.
  bool corrupt_adapted_order = false;
};

/// Runs the module invariant suites (generator orthonormality, Bloch round
/// trip, orthogonal-basis geometry, decomposition reconstruction, the
/// four-component interference law, reduced states, simplex/Born equivalence,
/// overlap formula) over seeded random inputs.
std::vector<SuiteResult> run_selfcheck(const SelfCheckOptions& options);

}  // namespace extbloch
