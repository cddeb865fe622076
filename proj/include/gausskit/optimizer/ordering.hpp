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
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "gausskit/core/errors.hpp"

namespace gausskit {

/// T-depth n_k and success probability p_k of one post-selected layer.
struct LayerCost {
  double t_depth = 0.0;
  double success_prob = 1.0;
};

/// Expected T-depth of repeat-until-success execution: every attempt pays the
/// initial depth n0 and then layer k only if layers 1..k-1 succeeded, so
///   E = (n0 + sum_k n_k prod_{j<k} p_j) / prod_k p_k.
inline double expected_t_depth(double n0, const std::vector<LayerCost>& layers) {
  if (!(n0 >= 0.0)) throw ParameterError("initial T-depth must be non-negative");
  double attempt = n0;
  double reach = 1.0;
  for (std::size_t k = 0; k < layers.size(); ++k) {
    const LayerCost& l = layers[k];
    if (!(l.t_depth >= 0.0)) throw ParameterError("layer T-depth must be non-negative");
    if (!(l.success_prob <= 1.0)) throw ParameterError("success probability above 1");
    if (!(l.success_prob > 0.0)) {
      throw DivergentCostError("layer " + std::to_string(k) +
                               " never succeeds; expected T-depth diverges");
    }
    attempt += l.t_depth * reach;
    reach *= l.success_prob;
  }
  return attempt / reach;
}

struct OrderingPlan {
  std::vector<std::size_t> permutation;  // permutation[i] = original index run i-th
  double predicted_expected_t_depth = 0.0;
  std::vector<LayerCost> per_layer;      // in execution order
};

inline std::vector<LayerCost> permute(const std::vector<LayerCost>& layers,
                                      const std::vector<std::size_t>& perm) {
  std::vector<LayerCost> out;
  out.reserve(perm.size());
  for (std::size_t i : perm) out.push_back(layers.at(i));
  return out;
}

/// Largest instance searched exhaustively.
constexpr std::size_t kBruteForceOrderingLimit = 8;

/// Ordering of post-selected layers minimizing the expected T-depth.
///
/// Equal depths: ascending success probability, ties by original index.
/// Otherwise exhaustive search up to kBruteForceOrderingLimit layers, and the
/// adjacent-exchange criterion above that: running i before j is no worse
/// when n_i (1 - p_j) <= n_j (1 - p_i), i.e. ascending n/(1-p).
inline OrderingPlan order_layers(const std::vector<LayerCost>& layers, double n0 = 0.0) {
  if (layers.empty()) throw ParameterError("order_layers needs at least one layer");
  const std::size_t L = layers.size();
  std::vector<std::size_t> perm(L);
  std::iota(perm.begin(), perm.end(), 0);

  const bool equal_depths =
      std::all_of(layers.begin(), layers.end(),
                  [&](const LayerCost& l) { return l.t_depth == layers.front().t_depth; });
  if (equal_depths) {
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      return layers[a].success_prob < layers[b].success_prob;
    });
  } else if (L <= kBruteForceOrderingLimit) {
    std::vector<std::size_t> cand = perm;
    double best = std::numeric_limits<double>::infinity();
    do {
      const double v = expected_t_depth(n0, permute(layers, cand));
      if (v < best) {
        best = v;
        perm = cand;
      }
    } while (std::next_permutation(cand.begin(), cand.end()));
  } else {
    // Cross-multiplied to stay finite when p = 1.
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      const LayerCost& x = layers[a];
      const LayerCost& y = layers[b];
      return x.t_depth * (1.0 - y.success_prob) < y.t_depth * (1.0 - x.success_prob);
    });
  }

  OrderingPlan plan;
  plan.permutation = perm;
  plan.per_layer = permute(layers, perm);
  plan.predicted_expected_t_depth = expected_t_depth(n0, plan.per_layer);
  return plan;
}

}  // namespace gausskit
