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
#include <utility>
#include <variant>
#include <vector>

#include "gausskit/core/gate.hpp"

namespace gausskit {

/// Measures the listed ancilla (indices relative to the ancilla register) and
/// post-selects the all-zero outcome. Afterwards those ancilla are reset.
struct MeasureBarrier {
  std::vector<std::size_t> ancilla;

  friend bool operator==(const MeasureBarrier&, const MeasureBarrier&) = default;
};

using Element = std::variant<Gate, MeasureBarrier>;

/// Gate-level program on `data_qubits` data qubits (qubit j has binary weight
/// 2^j) followed by `ancilla_qubits` ancilla at indices data_qubits + i.
/// Encodes the post-selected success branch only.
struct Circuit {
  std::size_t data_qubits = 0;
  std::size_t ancilla_qubits = 0;
  ExpBase alpha;
  std::vector<Element> elements;

  std::size_t total_qubits() const noexcept {
    return data_qubits + ancilla_qubits;
  }
  Qubit ancilla(std::size_t i) const noexcept { return data_qubits + i; }
  bool is_ancilla(Qubit q) const noexcept {
    return q >= data_qubits && q < total_qubits();
  }

  void add(Gate g) { elements.emplace_back(std::move(g)); }
  void measure(std::vector<std::size_t> ancilla_indices) {
    elements.emplace_back(MeasureBarrier{std::move(ancilla_indices)});
  }

  std::size_t count_if(auto pred) const {
    return static_cast<std::size_t>(
        std::count_if(elements.begin(), elements.end(), [&](const Element& e) {
          const Gate* g = std::get_if<Gate>(&e);
          return g != nullptr && pred(*g);
        }));
  }

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

inline Gate make_gate(RotationKind kind, Qubit target,
                      std::vector<Control> controls = {}) {
  return Gate{kind, target, std::move(controls), std::nullopt};
}

struct Violation {
  std::size_t element;  // index into Circuit::elements
  std::string message;
};

/// Checks the structural invariants; an empty result means the circuit is
/// well formed.
inline std::vector<Violation> validate(const Circuit& c) {
  std::vector<Violation> out;
  const std::size_t total = c.total_qubits();
  std::vector<bool> dirty(c.ancilla_qubits, false);

  for (std::size_t idx = 0; idx < c.elements.size(); ++idx) {
    const Element& e = c.elements[idx];
    auto fail = [&](std::string msg) { out.push_back({idx, std::move(msg)}); };

    if (const auto* m = std::get_if<MeasureBarrier>(&e)) {
      if (m->ancilla.empty()) fail("measurement lists no ancilla");
      std::set<std::size_t> seen;
      for (std::size_t a : m->ancilla) {
        if (a >= c.ancilla_qubits) {
          fail("measured ancilla a" + std::to_string(a) + " out of range");
          continue;
        }
        if (!seen.insert(a).second) {
          fail("ancilla a" + std::to_string(a) + " measured twice");
        }
        dirty[a] = false;
      }
      continue;
    }

    const Gate& g = std::get<Gate>(e);
    const GateType t = g.kind.type;
    bool in_range = g.target < total;
    if (!in_range) fail("target q" + std::to_string(g.target) + " out of range");
    std::set<Qubit> ctl;
    for (const Control& k : g.controls) {
      if (k.qubit >= total) {
        fail("control c" + std::to_string(k.qubit) + " out of range");
        in_range = false;
      }
      if (k.qubit == g.target) fail("control coincides with target");
      if (!ctl.insert(k.qubit).second) fail("duplicate control");
    }
    const std::size_t nc = g.controls.size();
    switch (t) {
      case GateType::A:
        if (nc != 0) fail("A rotation must be uncontrolled");
        break;
      case GateType::B:
        if (nc > 2) fail("B rotation carries at most two controls");
        break;
      case GateType::CNOT:
        if (nc != 1) fail("CNOT needs exactly one control");
        break;
      case GateType::Hadamard:
      case GateType::PauliX:
        if (nc != 0) fail("Clifford single-qubit gate must be uncontrolled");
        break;
      case GateType::Z:
        break;
    }
    if ((t == GateType::A || t == GateType::B) && !c.alpha.is_window()) {
      fail("A/B rotation requires alpha in (0,1)");
    }
    if (g.kind.is_rotation() && !std::isfinite(g.kind.exponent)) {
      fail("non-finite exponent");
    }
    if (g.synthesis_error && !(*g.synthesis_error > 0.0 && *g.synthesis_error < 1.0)) {
      fail("synthesis error outside (0,1)");
    }
    if (in_range && c.is_ancilla(g.target)) {
      const std::size_t a = g.target - c.data_qubits;
      if (t == GateType::B && dirty[a]) {
        fail("ancilla not reset: a" + std::to_string(a) +
             " targeted again before measurement");
      }
      dirty[a] = true;
    }
  }
  for (std::size_t a = 0; a < dirty.size(); ++a) {
    if (dirty[a]) {
      out.push_back({c.elements.size(), "ancilla a" + std::to_string(a) + " never measured"});
    }
  }
  return out;
}

using ControlPair = std::pair<Qubit, Qubit>;  // first < second

/// A round of doubly-controlled B rotations executed in parallel and closed by
/// a measurement of their ancilla.
struct Layer {
  std::vector<Gate> gates;
  double t_depth = 0.0;        // n_k
  double success_prob = 1.0;   // p_k

  std::vector<ControlPair> pairs() const {
    std::vector<ControlPair> out;
    for (const Gate& g : gates) {
      if (g.controls.size() == 2) {
        Qubit a = g.controls[0].qubit, b = g.controls[1].qubit;
        out.emplace_back(std::min(a, b), std::max(a, b));
      }
    }
    return out;
  }

  friend bool operator==(const Layer&, const Layer&) = default;
};

struct LayeredCircuit {
  Circuit prelude;   // owns the register sizes and alpha
  std::vector<Layer> layers;
  Circuit postlude;
  std::size_t core_qubits = 0;           // pairs are drawn from 0..core-1
  std::vector<ControlPair> pruned_pairs; // required pairs dropped by pruning

  std::size_t data_qubits() const noexcept { return prelude.data_qubits; }
  std::size_t ancilla_qubits() const noexcept { return prelude.ancilla_qubits; }
  const ExpBase& alpha() const noexcept { return prelude.alpha; }

  friend bool operator==(const LayeredCircuit&, const LayeredCircuit&) = default;
};

/// Concatenates prelude, layers (each closed by a MeasureBarrier on the
/// ancilla it targets) and postlude.
inline Circuit flatten(const LayeredCircuit& lc) {
  Circuit c;
  c.data_qubits = lc.prelude.data_qubits;
  c.ancilla_qubits = lc.prelude.ancilla_qubits;
  c.alpha = lc.prelude.alpha;
  c.elements = lc.prelude.elements;
  for (const Layer& layer : lc.layers) {
    std::vector<std::size_t> measured;
    for (const Gate& g : layer.gates) {
      c.add(g);
      if (c.is_ancilla(g.target)) measured.push_back(g.target - c.data_qubits);
    }
    std::sort(measured.begin(), measured.end());
    measured.erase(std::unique(measured.begin(), measured.end()), measured.end());
    if (!measured.empty()) c.measure(std::move(measured));
  }
  c.elements.insert(c.elements.end(), lc.postlude.elements.begin(),
                    lc.postlude.elements.end());
  return c;
}

/// Layered invariants on top of the flat ones: controls disjoint within every
/// layer, and every required pair covered exactly once (or pruned).
inline std::vector<Violation> validate(const LayeredCircuit& lc) {
  std::vector<Violation> out = validate(flatten(lc));
  for (std::size_t k = 0; k < lc.layers.size(); ++k) {
    std::set<Qubit> used;
    std::set<Qubit> targets;
    for (const Gate& g : lc.layers[k].gates) {
      for (const Control& c : g.controls) {
        if (!used.insert(c.qubit).second) {
          out.push_back({k, "layer " + std::to_string(k) +
                                ": control qubits overlap on q" +
                                std::to_string(c.qubit)});
        }
      }
      if (!targets.insert(g.target).second) {
        out.push_back({k, "layer " + std::to_string(k) + ": ancilla reused"});
      }
    }
  }
  if (lc.core_qubits >= 2) {
    std::multiset<ControlPair> seen(lc.pruned_pairs.begin(), lc.pruned_pairs.end());
    for (const Layer& l : lc.layers)
      for (const ControlPair& p : l.pairs()) seen.insert(p);
    for (Qubit j = 0; j < lc.core_qubits; ++j)
      for (Qubit k = j + 1; k < lc.core_qubits; ++k) {
        const std::size_t n = seen.count({j, k});
        if (n != 1) {
          out.push_back({0, "pair (" + std::to_string(j) + "," + std::to_string(k) +
                                ") covered " + std::to_string(n) + " times"});
        }
      }
    const std::size_t expected = lc.core_qubits * (lc.core_qubits - 1) / 2;
    if (seen.size() != expected) {
      out.push_back({0, "layers contain pairs outside the core register"});
    }
  }
  return out;
}

}  // namespace gausskit
