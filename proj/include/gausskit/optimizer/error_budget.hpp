// Copyright 2026 The gausskit Authors
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

#include "gausskit/core/errors.hpp"
#include "gausskit/core/gate.hpp"

namespace gausskit {

enum class Allocation { Uniform, TwoToOne };

/// Per-gate synthesis error targets. The default allocation makes the
/// uncontrolled rotations twice as accurate as the controlled ones.
struct ErrorBudget {
  double delta_gate = 0.0;
  double delta_single = 0.0;
  double delta_controlled = 0.0;

  static ErrorBudget two_to_one(double delta) {
    check(delta);
    return {delta, delta, 2.0 * delta};
  }

  static ErrorBudget uniform(double delta) {
    check(delta);
    return {delta, delta, delta};
  }

  static ErrorBudget make(double delta, Allocation a) {
    return a == Allocation::TwoToOne ? two_to_one(delta) : uniform(delta);
  }

  /// Error target for one gate; a per-gate synthesis_error wins.
  double delta_for(const Gate& g) const {
    if (g.synthesis_error) return *g.synthesis_error;
    if (g.kind.is_clifford()) return 0.0;
    return g.controls.empty() ? delta_single : delta_controlled;
  }

 private:
  static void check(double delta) {
    if (!(delta >= 0.0 && delta < 0.5)) throw ParameterError("gate error must lie in [0, 0.5)");
  }
};

}  // namespace gausskit
