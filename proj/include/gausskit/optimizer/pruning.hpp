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
#include <cstddef>
#include <vector>

#include "gausskit/core/circuit.hpp"
#include "gausskit/core/errors.hpp"

namespace gausskit {

struct PruneResult {
  LayeredCircuit circuit;
  std::size_t removed_gates = 0;   // rotations dropped as delta-close to identity
  std::size_t replaced_gates = 0;  // A rotations swapped for exact XH
  std::size_t removed_layers = 0;

  std::size_t touched_gates() const { return removed_gates + replaced_gates; }
};

/// Drops every windowed B rotation whose post-selected multiplier
/// alpha^(2^m) is within delta of 1, replaces merged A rotations within delta
/// of XH by an exact H then X, and drops A rotations within delta of the
/// identity. Layers left empty disappear.
inline PruneResult prune(const LayeredCircuit& in, double delta) {
  if (!(delta >= 0.0 && delta < 1.0)) throw ParameterError("delta must lie in [0,1)");
  const ExpBase& alpha = in.alpha();
  alpha.require_window();

  PruneResult out;
  out.circuit = in;
  LayeredCircuit& lc = out.circuit;

  std::vector<Element> prelude;
  for (const Element& e : in.prelude.elements) {
    const Gate* g = std::get_if<Gate>(&e);
    if (g == nullptr || g->kind.type != GateType::A) {
      prelude.push_back(e);
      continue;
    }
    const double ratio = alpha.pow2(g->kind.exponent);
    // A(m) = Ry(2 atan r), which is 2 sin(atan(r)/2) from the identity.
    const double from_identity = 2.0 * std::sin(std::atan(ratio) / 2.0);
    if (from_identity < delta) {
      ++out.removed_gates;
    } else if (distance_from_xh(g->kind.exponent, alpha) < delta) {
      prelude.emplace_back(make_gate(RotationKind::H(), g->target));
      prelude.emplace_back(make_gate(RotationKind::X(), g->target));
      ++out.replaced_gates;
    } else {
      prelude.push_back(e);
    }
  }
  lc.prelude.elements = std::move(prelude);

  std::vector<Layer> layers;
  for (const Layer& layer : in.layers) {
    Layer kept = layer;
    kept.gates.clear();
    for (const Gate& g : layer.gates) {
      if (g.kind.type == GateType::B && alpha.one_minus_pow(std::exp2(g.kind.exponent)) < delta) {
        ++out.removed_gates;
        if (g.controls.size() == 2) {
          const Qubit a = g.controls[0].qubit, b = g.controls[1].qubit;
          lc.pruned_pairs.emplace_back(std::min(a, b), std::max(a, b));
        }
      } else {
        kept.gates.push_back(g);
      }
    }
    if (kept.gates.empty()) {
      ++out.removed_layers;
    } else {
      layers.push_back(std::move(kept));
    }
  }
  lc.layers = std::move(layers);
  return out;
}

}  // namespace gausskit
