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

#include <cmath>
#include <string>

#include "gausskit/core/errors.hpp"
#include "gausskit/core/gate.hpp"

namespace gausskit {

enum class GateClass { Clifford, SingleRotation, ControlledRotation, DoublyControlledRotation };

enum class CostRounding { Real, Ceil };

/// How the T-depth of a doubly-controlled rotation is counted.
///   FullCount: its whole T-count, log term + 24.7 (the convention the resource
///              estimates use, giving +22.4 at accuracy 2 delta).
///   SharedToffoli: the Toffoli pair overlaps the first T stage of the inner
///              controlled rotation, so the depth equals a controlled rotation.
enum class DoublyControlledDepth { FullCount, SharedToffoli };

struct GateCost {
  double t_count = 0.0;
  double t_depth = 0.0;
};

/// Clifford+T cost of rotations synthesized to accuracy eps.
struct CostModel {
  double toffoli_pair_t = 4.0;
  DoublyControlledDepth doubly_depth = DoublyControlledDepth::FullCount;
  CostRounding rounding = CostRounding::Real;

  static double single_rotation(double eps) { return 1.15 * log2_inv(eps) + 9.2; }
  // Two single rotations at eps/2: 2 (1.15 log2(2/eps) + 9.2).
  static double controlled_rotation(double eps) { return 2.3 * log2_inv(eps) + 20.7; }
  double doubly_controlled(double eps) const { return controlled_rotation(eps) + toffoli_pair_t; }

  GateCost cost(GateClass cls, double eps) const {
    if (cls == GateClass::Clifford) return {};
    if (!(eps > 0.0 && eps < 1.0)) {
      throw ParameterError("synthesis accuracy must lie in (0,1), got " + std::to_string(eps));
    }
    GateCost c;
    switch (cls) {
      case GateClass::SingleRotation:
        c = {single_rotation(eps), single_rotation(eps)};
        break;
      case GateClass::ControlledRotation:
        c = {controlled_rotation(eps), controlled_rotation(eps)};
        break;
      case GateClass::DoublyControlledRotation:
        c.t_count = doubly_controlled(eps);
        c.t_depth = doubly_depth == DoublyControlledDepth::FullCount ? c.t_count
                                                                     : controlled_rotation(eps);
        break;
      case GateClass::Clifford:
        break;
    }
    if (rounding == CostRounding::Ceil) {
      c.t_count = std::ceil(c.t_count);
      c.t_depth = std::ceil(c.t_depth);
    }
    return c;
  }

 private:
  static double log2_inv(double eps) { return -std::log2(eps); }
};

/// Cost class of a gate. Rotations with three or more controls have no model.
inline GateClass classify(const Gate& g) {
  if (g.kind.is_clifford()) return GateClass::Clifford;
  switch (g.controls.size()) {
    case 0: return GateClass::SingleRotation;
    case 1: return GateClass::ControlledRotation;
    case 2: return GateClass::DoublyControlledRotation;
    default:
      throw UnsupportedDegreeError("no cost model for rotations with " +
                                   std::to_string(g.controls.size()) + " controls");
  }
}

inline GateCost gate_t_cost(GateClass cls, double eps, const CostModel& model = {}) {
  return model.cost(cls, eps);
}

}  // namespace gausskit
