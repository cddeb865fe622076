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
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "gausskit/builder/builders.hpp"
#include "gausskit/core/errors.hpp"
#include "gausskit/core/rng.hpp"
#include "gausskit/core/spec.hpp"
#include "gausskit/optimizer/error_budget.hpp"
#include "gausskit/optimizer/ordering.hpp"
#include "gausskit/optimizer/pruning.hpp"
#include "gausskit/optimizer/thresholds.hpp"
#include "gausskit/resources/cost_model.hpp"
#include "gausskit/resources/t_depth.hpp"
#include "gausskit/simulator/run_noisy.hpp"

namespace gausskit {

/// Execution order of the packed layers.
///   Optimal: sorted by the expected-T-depth criterion on noiseless p_k.
///   Random: a seeded shuffle.
///   Identity: packing order.
enum class LayerOrder { Optimal, Random, Identity };

struct EstimateOptions {
  LayerOrder order = LayerOrder::Optimal;
  Allocation alloc = Allocation::TwoToOne;
  IdealKind ideal = IdealKind::Finite;
  CostModel model;
  std::uint64_t seed = 0;
  bool prune = true;
};

struct Estimate {
  SimReport report;
  LayeredCircuit circuit;  // as executed
  RusDepths depths;
  ErrorBudget budget;
  std::size_t pruned_gates = 0;
  std::uint64_t seed = 0;

  std::size_t layer_count() const { return circuit.layers.size(); }
};

namespace estimate_detail {

inline void reorder(LayeredCircuit& lc, const std::vector<std::size_t>& perm) {
  std::vector<Layer> out;
  out.reserve(perm.size());
  for (std::size_t i : perm) out.push_back(lc.layers.at(i));
  lc.layers = std::move(out);
}

}  // namespace estimate_detail

/// Build, prune, order, then run the noisy post-selected simulation. The
/// reported p_k (and the expected T-depth) are those of the noisy run in the
/// final order; ordering itself uses noiseless p_k of the packing order.
inline Estimate estimate(const GaussianSpec& spec, const EstimateOptions& opt = {}) {
  spec.check();
  Estimate est;
  est.seed = opt.seed;
  est.budget = ErrorBudget::make(spec.gate_error, opt.alloc);

  LayeredCircuit lc = build_layered_gaussian(spec);
  if (opt.prune) {
    PruneResult pr = prune(lc, spec.gate_error);
    est.pruned_gates = pr.touched_gates();
    lc = std::move(pr.circuit);
  }
  const RusDepths depths = layered_t_depth(lc, est.budget, opt.model);

  if (lc.layers.size() > 1) {
    switch (opt.order) {
      case LayerOrder::Optimal: {
        const SimResult noiseless = simulate_postselected(lc);
        const OrderingPlan plan =
            order_layers(depths.with_probs(noiseless.report.layer_probs), depths.n0);
        estimate_detail::reorder(lc, plan.permutation);
        break;
      }
      case LayerOrder::Random: {
        std::vector<std::size_t> perm(lc.layers.size());
        std::iota(perm.begin(), perm.end(), 0);
        Rng rng = Rng(opt.seed).split(1);
        rng.shuffle(perm);
        estimate_detail::reorder(lc, perm);
        break;
      }
      case LayerOrder::Identity:
        break;
    }
  }

  NoisyRunOptions run;
  run.ideal = opt.ideal;
  run.model = opt.model;
  SimResult r = run_noisy(lc, est.budget, opt.seed, run);
  est.report = std::move(r.report);
  est.depths = layered_t_depth(lc, est.budget, opt.model);
  est.circuit = std::move(lc);
  return est;
}

/// A full-Gaussian spec whose register is the qubit threshold for (alpha, delta).
inline GaussianSpec spec_at_threshold(const ExpBase& alpha, double delta) {
  const int n = qubit_threshold(alpha, delta);
  if (n < 3) {
    throw ParameterError("qubit threshold " + std::to_string(n) +
                         " is below the 3 qubits a full Gaussian needs");
  }
  GaussianSpec s;
  s.alpha = alpha;
  s.n_qubits = static_cast<std::size_t>(n);
  s.gate_error = delta;
  s.check();
  return s;
}

/// Gate error delta on the grid 10^(-k/4).
inline double quarter_decade(int k) { return std::pow(10.0, -0.25 * k); }

/// Largest grid delta whose simulated error meets `target_epsilon`, with its
/// estimate. `make_spec(delta)` supplies the spec at each grid point, so the
/// register may grow as delta shrinks. The scan starts near target/8 and
/// walks the grid.
inline Estimate estimate_for_epsilon(const std::function<GaussianSpec(double)>& make_spec,
                                     double target_epsilon, const EstimateOptions& opt = {}) {
  if (!(target_epsilon > 0.0 && target_epsilon < 1.0)) {
    throw ParameterError("target epsilon must lie in (0,1)");
  }
  constexpr int kFirst = 8;  // delta = 1e-2
  constexpr int kLast = 60;  // delta = 1e-15
  auto run = [&](int k) { return estimate(make_spec(quarter_decade(k)), opt); };
  int k = std::clamp(static_cast<int>(std::ceil(-4.0 * std::log10(target_epsilon / 8.0))),
                     kFirst, kLast);
  Estimate cur = run(k);
  if (cur.report.l2_error <= target_epsilon) {
    while (k > kFirst) {
      Estimate up = run(k - 1);
      if (!(up.report.l2_error <= target_epsilon)) break;
      cur = std::move(up);
      --k;
    }
    return cur;
  }
  while (k < kLast) {
    ++k;
    cur = run(k);
    if (cur.report.l2_error <= target_epsilon) return cur;
  }
  throw ParameterError("no gate error down to 1e-15 reaches epsilon " +
                       std::to_string(target_epsilon));
}

inline Estimate estimate_for_epsilon(GaussianSpec spec, double target_epsilon,
                                     const EstimateOptions& opt = {}) {
  return estimate_for_epsilon(
      [&](double delta) {
        spec.gate_error = delta;
        return spec;
      },
      target_epsilon, opt);
}

}  // namespace gausskit
