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
#include <cstdint>
#include <vector>

#include "gausskit/core/errors.hpp"
#include "gausskit/core/rng.hpp"
#include "gausskit/optimizer/ordering.hpp"

namespace gausskit {

struct MonteCarloResult {
  std::vector<double> costs;  // T-depth spent by each trial
  double mean = 0.0;
  double std_error = 0.0;
};

/// Repeat-until-success sampling: each attempt pays n0, then layer k's depth,
/// and passes layer k with probability p_k; a failure restarts the attempt.
/// Trial t draws from rng.split(t), so results do not depend on scheduling.
inline MonteCarloResult monte_carlo_rus(double n0, const std::vector<LayerCost>& layers,
                                        std::size_t trials, std::uint64_t seed,
                                        double tail = 0.0) {
  if (trials < 1) throw ParameterError("need at least one trial");
  // Validates the inputs and rejects layers that never succeed.
  (void)expected_t_depth(n0, layers);
  const Rng root(seed);
  MonteCarloResult r;
  r.costs.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = root.split(t);
    double cost = 0.0;
    bool done = false;
    while (!done) {
      cost += n0;
      done = true;
      for (const LayerCost& l : layers) {
        cost += l.t_depth;
        if (l.success_prob < 1.0 && rng.uniform() >= l.success_prob) {
          done = false;
          break;
        }
      }
    }
    r.costs.push_back(cost + tail);
  }
  double sum = 0.0;
  for (double c : r.costs) sum += c;
  r.mean = sum / static_cast<double>(trials);
  if (trials > 1) {
    double ss = 0.0;
    for (double c : r.costs) ss += (c - r.mean) * (c - r.mean);
    r.std_error = std::sqrt(ss / static_cast<double>(trials - 1) / static_cast<double>(trials));
  }
  return r;
}

}  // namespace gausskit
