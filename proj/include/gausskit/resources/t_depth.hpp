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

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "gausskit/core/circuit.hpp"
#include "gausskit/optimizer/error_budget.hpp"
#include "gausskit/optimizer/ordering.hpp"
#include "gausskit/resources/cost_model.hpp"

namespace gausskit {

/// T-depth split for the repeat-until-success formula: n0 is paid on every
/// attempt, layer k only when the earlier layers succeeded, tail once after
/// success (Clifford symmetrization, normally zero).
struct RusDepths {
  double n0 = 0.0;
  std::vector<double> layers;
  double tail = 0.0;

  /// Same costs with n0 folded into the first layer. The expected value is
  /// unchanged because the first layer is always attempted.
  std::vector<double> folded() const {
    std::vector<double> out = layers;
    if (!out.empty()) out.front() += n0;
    return out;
  }

  std::vector<LayerCost> with_probs(const std::vector<double>& probs) const {
    if (probs.size() != layers.size()) {
      throw ParameterError("need one success probability per layer");
    }
    std::vector<LayerCost> out;
    for (std::size_t k = 0; k < layers.size(); ++k) out.push_back({layers[k], probs[k]});
    return out;
  }

  double expected(const std::vector<double>& probs) const {
    return expected_t_depth(n0, with_probs(probs)) + tail;
  }
};

/// ASAP T-depth: a rotation starts when all of its qubits are free; Cliffords
/// cost nothing but still synchronize their qubits.
inline double circuit_t_depth(const Circuit& c, const ErrorBudget& budget,
                              const CostModel& model = {}) {
  std::vector<double> ready(c.total_qubits(), 0.0);
  for (const Element& e : c.elements) {
    const Gate* g = std::get_if<Gate>(&e);
    if (g == nullptr) continue;
    double start = ready.at(g->target);
    for (const Control& k : g->controls) start = std::max(start, ready.at(k.qubit));
    const GateClass cls = classify(*g);
    const double d = cls == GateClass::Clifford ? 0.0 : model.cost(cls, budget.delta_for(*g)).t_depth;
    ready[g->target] = start + d;
    for (const Control& k : g->controls) ready[k.qubit] = start + d;
  }
  return ready.empty() ? 0.0 : *std::max_element(ready.begin(), ready.end());
}

/// n0 from the prelude, one parallel stage per layer, tail from the postlude.
inline RusDepths layered_t_depth(const LayeredCircuit& lc, const ErrorBudget& budget,
                                 const CostModel& model = {}) {
  RusDepths out;
  out.n0 = circuit_t_depth(lc.prelude, budget, model);
  for (std::size_t k = 0; k < lc.layers.size(); ++k) {
    std::set<Qubit> busy;
    double depth = 0.0;
    for (const Gate& g : lc.layers[k].gates) {
      if (!busy.insert(g.target).second) {
        throw InvalidLayerError("layer " + std::to_string(k) + " reuses q" +
                                std::to_string(g.target));
      }
      for (const Control& c : g.controls) {
        if (!busy.insert(c.qubit).second) {
          throw InvalidLayerError("layer " + std::to_string(k) + " has overlapping controls on q" +
                                  std::to_string(c.qubit));
        }
      }
      const GateClass cls = classify(g);
      if (cls != GateClass::Clifford) {
        depth = std::max(depth, model.cost(cls, budget.delta_for(g)).t_depth);
      }
    }
    out.layers.push_back(depth);
  }
  out.tail = circuit_t_depth(lc.postlude, budget, model);
  return out;
}

/// Generic split of a flat circuit at its measurement barriers: segment k ends
/// at barrier k; whatever follows the last barrier is the tail.
inline RusDepths segment_t_depths(const Circuit& c, const ErrorBudget& budget,
                                  const CostModel& model = {}) {
  RusDepths out;
  Circuit segment;
  segment.data_qubits = c.data_qubits;
  segment.ancilla_qubits = c.ancilla_qubits;
  segment.alpha = c.alpha;
  for (const Element& e : c.elements) {
    if (std::holds_alternative<MeasureBarrier>(e)) {
      out.layers.push_back(circuit_t_depth(segment, budget, model));
      segment.elements.clear();
    } else {
      segment.elements.push_back(e);
    }
  }
  out.tail = circuit_t_depth(segment, budget, model);
  return out;
}

}  // namespace gausskit
