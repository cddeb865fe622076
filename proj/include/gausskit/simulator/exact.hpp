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
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gausskit/core/circuit.hpp"
#include "gausskit/core/errors.hpp"
#include "gausskit/simulator/report.hpp"
#include "gausskit/simulator/state_vector.hpp"

namespace gausskit {

namespace sim_detail {

/// Joint data + ancilla register where an ancilla occupies a bit only between
/// its first use and its measurement.
class ExactRegister {
 public:
  ExactRegister(std::size_t data, std::size_t ancilla)
      : data_(data), state_(data), slot_(ancilla, kFree) {}

  StateVector& state() { return state_; }

  bool live(std::size_t a) const { return slot_.at(a) != kFree; }

  /// Bit position of ancilla a, allocating a |0> bit on first use.
  std::size_t bit_of(std::size_t a) {
    if (slot_.at(a) == kFree) {
      const std::size_t bit = state_.n_qubits;
      check_capacity(bit + 1);
      state_.amplitudes.resize(state_.amplitudes.size() * 2, Complex{});
      ++state_.n_qubits;
      slot_[a] = bit;
    }
    return slot_[a];
  }

  /// Keeps the ancilla-a = 0 half and removes its bit.
  void project_out(std::size_t a) {
    if (slot_.at(a) == kFree) return;
    const std::size_t bit = slot_[a];
    const std::size_t low = (std::size_t{1} << bit) - 1;
    std::vector<Complex> kept(state_.amplitudes.size() / 2);
    for (std::size_t i = 0; i < kept.size(); ++i) {
      kept[i] = state_.amplitudes[((i & ~low) << 1) | (i & low)];
    }
    state_.amplitudes = std::move(kept);
    --state_.n_qubits;
    slot_[a] = kFree;
    for (std::size_t& s : slot_)
      if (s != kFree && s > bit) --s;
  }

  void require_all_measured() const {
    for (std::size_t a = 0; a < slot_.size(); ++a) {
      if (slot_[a] != kFree) {
        throw ParameterError("ancilla a" + std::to_string(a) + " is never measured");
      }
    }
  }

  std::size_t data() const { return data_; }

 private:
  static constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::size_t data_;
  StateVector state_;
  std::vector<std::size_t> slot_;
};

/// Post-selection bookkeeping shared by both backends. The state is
/// normalized on entry, so the surviving norm squared is the probability
/// (capped at 1 against rounding).
inline double close_barrier(StateVector& s) {
  const double p = std::min(s.norm_squared(), 1.0);
  if (!(p > 0.0)) throw ImpossibleBranchError("post-selected outcome has zero probability");
  s.normalize();
  s.cumulative_success *= p;
  return p;
}

}  // namespace sim_detail

/// Full unitary simulation of data plus live ancilla. Each barrier projects
/// its ancilla onto |0>, records the surviving probability and renormalizes.
inline SimResult simulate_exact(const Circuit& c, const GateOverrides& overrides = {}) {
  sim_detail::ExactRegister reg(c.data_qubits, c.ancilla_qubits);
  std::vector<double> probs;

  for (std::size_t idx = 0; idx < c.elements.size(); ++idx) {
    const Element& e = c.elements[idx];
    if (const auto* m = std::get_if<MeasureBarrier>(&e)) {
      for (std::size_t a : m->ancilla) {
        if (a >= c.ancilla_qubits) throw ParameterError("measured ancilla out of range");
        reg.project_out(a);
      }
      probs.push_back(sim_detail::close_barrier(reg.state()));
      continue;
    }
    const Gate& g = std::get<Gate>(e);
    ControlMask ctl;
    bool fires = true;
    for (const Control& k : g.controls) {
      if (k.qubit >= c.total_qubits()) throw ParameterError("control out of range");
      if (c.is_ancilla(k.qubit) && !reg.live(k.qubit - c.data_qubits)) {
        // A fresh ancilla is |0>: closed controls never fire, open ones always do.
        if (k.polarity == Polarity::Closed) fires = false;
        continue;
      }
      const std::size_t bit =
          c.is_ancilla(k.qubit) ? reg.bit_of(k.qubit - c.data_qubits) : k.qubit;
      ctl.add(bit, k.polarity);
    }
    if (!fires) continue;
    if (g.target >= c.total_qubits()) throw ParameterError("target out of range");
    const std::size_t target =
        c.is_ancilla(g.target) ? reg.bit_of(g.target - c.data_qubits) : g.target;
    const auto& o = sim_detail::override_at(overrides, idx);
    const Mat2 u = o ? *o : gate_matrix(g.kind, c.alpha);
    kernel::apply_single(reg.state().amplitudes, target, u, ctl.mask, ctl.value);
  }
  reg.require_all_measured();

  SimResult out;
  out.report = sim_detail::finish(c.data_qubits, reg.state(), std::move(probs));
  out.state = std::move(reg.state());
  return out;
}

inline SimResult simulate_exact(const LayeredCircuit& lc, const GateOverrides& overrides = {}) {
  return simulate_exact(flatten(lc), overrides);
}

}  // namespace gausskit
