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
#include <cstdint>

#include "gausskit/core/circuit.hpp"
#include "gausskit/core/rng.hpp"
#include "gausskit/optimizer/error_budget.hpp"
#include "gausskit/resources/cost_model.hpp"
#include "gausskit/resources/t_depth.hpp"
#include "gausskit/simulator/ideal.hpp"
#include "gausskit/simulator/monte_carlo.hpp"
#include "gausskit/simulator/noise.hpp"
#include "gausskit/simulator/postselected.hpp"

namespace gausskit {

struct NoisyRunOptions {
  IdealKind ideal = IdealKind::Finite;
  CostModel model;
};

/// Post-selected run of a layered full Gaussian with every rotation perturbed
/// at its budgeted accuracy. The report carries the L2 error against the
/// ideal Gaussian and the expected T-depth under the measured p_k.
inline SimResult run_noisy(const LayeredCircuit& lc, const ErrorBudget& budget,
                           std::uint64_t seed, const NoisyRunOptions& opt = {}) {
  const Circuit flat = flatten(lc);
  Rng rng(seed);
  const GateOverrides noise = draw_noise(flat, budget, rng);
  SimResult r = simulate_postselected(flat, noise);
  r.report.l2_error = l2_error(ideal_gaussian(lc.data_qubits(), lc.alpha(), opt.ideal), r.state);
  if (budget.delta_single > 0.0 && budget.delta_controlled > 0.0) {
    r.report.expected_t_depth =
        layered_t_depth(lc, budget, opt.model).expected(r.report.layer_probs);
  }
  return r;
}

/// Monte Carlo execution of a layered circuit with its noiseless p_k.
inline MonteCarloResult monte_carlo_rus(const LayeredCircuit& lc, const ErrorBudget& budget,
                                        std::size_t trials, std::uint64_t seed,
                                        const CostModel& model = {}) {
  const SimResult sim = simulate_postselected(lc);
  const RusDepths depths = layered_t_depth(lc, budget, model);
  return monte_carlo_rus(depths.n0, depths.with_probs(sim.report.layer_probs), trials, seed,
                         depths.tail);
}

}  // namespace gausskit
