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

#include <gtest/gtest.h>

#include <cmath>

#include "gausskit/gausskit.hpp"

namespace gausskit {
namespace {

TEST(CostModel, PublishedConstants) {
  const CostModel m;
  const double d = 1e-4;
  EXPECT_NEAR(m.cost(GateClass::DoublyControlledRotation, 2 * d).t_depth, 2.3 * std::log2(1 / d) + 22.4, 1e-12);
  EXPECT_NEAR(m.cost(GateClass::SingleRotation, 1e-3).t_count, 20.6607, 1e-4);
  EXPECT_NEAR(m.doubly_controlled(1e-5) - CostModel::controlled_rotation(1e-5), 4.0, 1e-12);
  EXPECT_NEAR(m.doubly_controlled(1e-5), 2.3 * std::log2(1e5) + 24.7, 1e-12);
  EXPECT_EQ(m.cost(GateClass::Clifford, 0.0).t_count, 0.0);
  EXPECT_THROW(m.cost(GateClass::SingleRotation, 1.0), ParameterError);
  EXPECT_THROW(m.cost(GateClass::SingleRotation, 0.0), ParameterError);
}

TEST(CostModel, AlternativeConventions) {
  CostModel shared;
  shared.doubly_depth = DoublyControlledDepth::SharedToffoli;
  EXPECT_EQ(shared.cost(GateClass::DoublyControlledRotation, 1e-3).t_depth,
            CostModel::controlled_rotation(1e-3));
  CostModel ceil;
  ceil.rounding = CostRounding::Ceil;
  EXPECT_EQ(ceil.cost(GateClass::SingleRotation, 1e-3).t_count, 21.0);
}

TEST(CostModel, Classification) {
  EXPECT_EQ(classify(make_gate(RotationKind::CNOT(), 0, {{1, Polarity::Open}})), GateClass::Clifford);
  EXPECT_EQ(classify(make_gate(RotationKind::Z(1), 0)), GateClass::SingleRotation);
  EXPECT_EQ(classify(make_gate(RotationKind::Z(1), 0, {{1, Polarity::Closed}})), GateClass::ControlledRotation);
  EXPECT_THROW(classify(make_gate(RotationKind::Z(1), 0, {{1, Polarity::Closed}, {2, Polarity::Closed}, {3, Polarity::Closed}})),
               UnsupportedDegreeError);
}

TEST(TDepth, LayeredGaussianStages) {
  const double d = 1e-4;
  const LayeredCircuit lc = build_layered_gaussian(GaussianSpec::from_alpha(0.9, 7, d));
  const RusDepths r = layered_t_depth(lc, ErrorBudget::two_to_one(d));
  EXPECT_NEAR(r.n0, 1.15 * std::log2(1 / d) + 9.2, 1e-12);
  ASSERT_EQ(r.layers.size(), 5u);
  for (double n : r.layers) EXPECT_NEAR(n, 2.3 * std::log2(1 / d) + 22.4, 1e-12);
  EXPECT_EQ(r.tail, 0.0);
  const std::vector<double> folded = r.folded();
  EXPECT_NEAR(folded[0], r.n0 + r.layers[0], 1e-12);
}

TEST(TDepth, PhaseCircuitStages) {
  const ErrorBudget b = ErrorBudget::uniform(1e-3);
  EXPECT_NEAR(circuit_t_depth(build_linear_phase(6, 0.3), b), CostModel::single_rotation(1e-3), 1e-12);
  EXPECT_GT(circuit_t_depth(build_poly_phase(4, 0.3, 2), b), CostModel::controlled_rotation(1e-3));
}

TEST(TDepth, OverlappingLayerRejected) {
  LayeredCircuit lc = build_layered_gaussian(GaussianSpec::from_alpha(0.9, 6, 1e-3));
  lc.layers[0].gates[1].controls[0] = lc.layers[0].gates[0].controls[0];
  EXPECT_THROW(layered_t_depth(lc, ErrorBudget::uniform(1e-3)), InvalidLayerError);
}

TEST(TDepth, SegmentsAgreeWithLayers) {
  const LayeredCircuit lc = build_layered_gaussian(GaussianSpec::from_alpha(0.9, 8, 1e-3));
  const ErrorBudget b = ErrorBudget::two_to_one(1e-3);
  const std::vector<double> p = simulate_postselected(lc).report.layer_probs;
  EXPECT_NEAR(segment_t_depths(flatten(lc), b).expected(p), layered_t_depth(lc, b).expected(p), 1e-9);
}

TEST(Estimate, ThresholdSelectsNineteenQubits) {
  const GaussianSpec s = spec_at_threshold(ExpBase::from_log(std::log1p(-1e-10)), 1e-10);
  EXPECT_EQ(s.n_qubits, 19u);
  EXPECT_THROW(spec_at_threshold(ExpBase::from_alpha(0.5), 0.1), ParameterError);
}

TEST(Estimate, PipelineReport) {
  EstimateOptions opt;
  opt.seed = 3;
  const Estimate e = estimate(GaussianSpec::from_alpha(0.95, 8, 1e-4), opt);
  EXPECT_EQ(e.report.data_qubit_count, 8u);
  EXPECT_EQ(e.report.layer_probs.size(), e.layer_count());
  EXPECT_GT(e.report.expected_t_depth, 0.0);
  EXPECT_NEAR(e.report.expected_t_depth, e.depths.expected(e.report.layer_probs), 1e-9);
  EXPECT_TRUE(validate(e.circuit).empty());
  // Same seed, same report.
  EXPECT_EQ(estimate(GaussianSpec::from_alpha(0.95, 8, 1e-4), opt).report, e.report);
}

TEST(Estimate, OptimalOrderNeverLosesToIdentity) {
  for (double alpha : {0.9, 0.99, 0.999}) {
    const GaussianSpec s = GaussianSpec::from_alpha(alpha, 9, 1e-6);
    const LayeredCircuit lc = build_layered_gaussian(s);
    const ErrorBudget b = ErrorBudget::two_to_one(1e-6);
    const RusDepths d = layered_t_depth(lc, b);
    const std::vector<LayerCost> costs = d.with_probs(simulate_postselected(lc).report.layer_probs);
    EXPECT_LE(order_layers(costs, d.n0).predicted_expected_t_depth, expected_t_depth(d.n0, costs) * (1 + 1e-12));
  }
}

TEST(Estimate, EpsilonTargetPicksLargestPassingDelta) {
  const GaussianSpec s = GaussianSpec::from_alpha(0.97, 7, 1e-3);
  EstimateOptions opt;
  opt.seed = 4;
  const Estimate e = estimate_for_epsilon(s, 1e-4, opt);
  EXPECT_LE(e.report.l2_error, 1e-4);
  GaussianSpec looser = s;
  looser.gate_error = e.budget.delta_gate * std::pow(10.0, 0.25);
  EXPECT_GT(estimate(looser, opt).report.l2_error, 1e-4);
}

}  // namespace
}  // namespace gausskit
