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

#include <cstddef>
#include <string>
#include <vector>

#include "gausskit/core/circuit.hpp"
#include "gausskit/core/errors.hpp"
#include "gausskit/simulator/report.hpp"
#include "gausskit/simulator/state_vector.hpp"

namespace gausskit {

/// Data-register-only simulation. A gate U on a fresh ancilla followed by
/// post-selection of |0> acts on the data as the diagonal factor U(0,0) on
/// the subspace where its controls match, so ancilla are never stored.
///
/// Requires: an ancilla receives at most one gate between measurements, no
/// gate is controlled on a touched ancilla, and every barrier measures all
/// touched ancilla.
inline SimResult simulate_postselected(const Circuit& c, const GateOverrides& overrides = {}) {
  StateVector state(c.data_qubits);
  std::vector<bool> touched(c.ancilla_qubits, false);
  std::vector<double> probs;

  auto ancilla_name = [](std::size_t a) { return "a" + std::to_string(a); };

  for (std::size_t idx = 0; idx < c.elements.size(); ++idx) {
    const Element& e = c.elements[idx];
    if (const auto* m = std::get_if<MeasureBarrier>(&e)) {
      for (std::size_t a : m->ancilla) {
        if (a >= c.ancilla_qubits) throw ParameterError("measured ancilla out of range");
        touched[a] = false;
      }
      for (std::size_t a = 0; a < touched.size(); ++a) {
        if (touched[a]) {
          throw ParameterError("post-selected backend: " + ancilla_name(a) +
                               " must be measured at the next barrier");
        }
      }
      probs.push_back(sim_detail::close_barrier(state));
      continue;
    }
    const Gate& g = std::get<Gate>(e);
    ControlMask ctl;
    bool fires = true;
    for (const Control& k : g.controls) {
      if (k.qubit >= c.total_qubits()) throw ParameterError("control out of range");
      if (c.is_ancilla(k.qubit)) {
        const std::size_t a = k.qubit - c.data_qubits;
        if (touched[a]) {
          throw ParameterError("post-selected backend: gate controlled on touched ancilla " +
                               ancilla_name(a));
        }
        if (k.polarity == Polarity::Closed) fires = false;
        continue;
      }
      ctl.add(k.qubit, k.polarity);
    }
    if (!fires) continue;
    if (g.target >= c.total_qubits()) throw ParameterError("target out of range");
    const auto& o = sim_detail::override_at(overrides, idx);
    const Mat2 u = o ? *o : gate_matrix(g.kind, c.alpha);
    if (c.is_ancilla(g.target)) {
      const std::size_t a = g.target - c.data_qubits;
      if (touched[a]) {
        throw ParameterError("post-selected backend: " + ancilla_name(a) +
                             " receives a second gate before measurement");
      }
      touched[a] = true;
      if (u(0, 0) != Complex{1.0}) kernel::scale_subspace(state.amplitudes, ctl.mask, ctl.value, u(0, 0));
    } else {
      kernel::apply_single(state.amplitudes, g.target, u, ctl.mask, ctl.value);
    }
  }
  for (std::size_t a = 0; a < touched.size(); ++a) {
    if (touched[a]) throw ParameterError("ancilla " + ancilla_name(a) + " is never measured");
  }

  SimResult out;
  out.report = sim_detail::finish(c.data_qubits, state, std::move(probs));
  out.state = std::move(state);
  return out;
}

inline SimResult simulate_postselected(const LayeredCircuit& lc,
                                       const GateOverrides& overrides = {}) {
  return simulate_postselected(flatten(lc), overrides);
}

}  // namespace gausskit
