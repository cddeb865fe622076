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
#include <limits>
#include <optional>
#include <vector>

#include "gausskit/core/matrix.hpp"
#include "gausskit/simulator/state_vector.hpp"

namespace gausskit {

/// Quantities reported for one simulated preparation. l2_error and
/// expected_t_depth stay NaN until a caller supplies an ideal state or a
/// cost model.
struct SimReport {
  double l2_error = std::numeric_limits<double>::quiet_NaN();
  double subnormalization = 1.0;  // gamma; gamma^2 = product of layer_probs
  std::vector<double> layer_probs;  // one per measurement barrier
  double expected_t_depth = std::numeric_limits<double>::quiet_NaN();
  std::size_t data_qubit_count = 0;

  friend bool operator==(const SimReport&, const SimReport&) = default;
};

struct SimResult {
  StateVector state;
  SimReport report;
};

/// Replacement 2x2 target matrices indexed by circuit element; an empty
/// vector or an empty slot means the ideal gate.
using GateOverrides = std::vector<std::optional<Mat2>>;

namespace sim_detail {

inline const std::optional<Mat2>& override_at(const GateOverrides& o, std::size_t i) {
  static const std::optional<Mat2> none;
  return i < o.size() ? o[i] : none;
}

inline SimReport finish(std::size_t data_qubits, StateVector& state, std::vector<double> probs) {
  SimReport r;
  r.data_qubit_count = data_qubits;
  r.layer_probs = std::move(probs);
  r.subnormalization = std::sqrt(state.cumulative_success);
  return r;
}

}  // namespace sim_detail

}  // namespace gausskit
