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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "gausskit/gausskit.hpp"
#include "oracle.hpp"

namespace gausskit {
namespace {

Circuit blank(std::size_t data, std::size_t ancilla, double alpha) {
  Circuit c;
  c.data_qubits = data;
  c.ancilla_qubits = ancilla;
  c.alpha = ExpBase::from_alpha(alpha);
  return c;
}

double product(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 1.0, std::multiplies<>());
}

TEST(Exact, SingleHadamard) {
  Circuit c = blank(1, 0, 0.5);
  c.add(make_gate(RotationKind::H(), 0));
  const SimResult r = simulate_exact(c);
  EXPECT_NEAR(r.state.amplitudes[0].real(), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(r.state.amplitudes[1].real(), std::sqrt(0.5), 1e-15);
  EXPECT_EQ(r.report.subnormalization, 1.0);
}

TEST(Exact, MergeIdentity) {
  for (auto [m, n, alpha] : {std::tuple{0.0, 2.0, 0.8}, {1.0, 1.0, 0.6}, {2.0, 0.0, 0.95}}) {
    Circuit two = blank(1, 1, alpha);
    two.add(make_gate(RotationKind::A(m), 0));
    two.add(make_gate(RotationKind::B(n), 1, {{0, Polarity::Closed}}));
    two.measure({0});
    Circuit one = blank(1, 0, alpha);
    one.add(make_gate(RotationKind::A(std::log2(std::exp2(m) + std::exp2(n))), 0));
    EXPECT_LT(l2_error(simulate_exact(one).state, simulate_exact(two).state), 1e-12);
  }
}

TEST(Exact, FullGaussianMatchesBruteForce) {
  const SimResult r = simulate_exact(build_full_gaussian(4, 0.7));
  EXPECT_LT(oracle::aligned_distance(oracle::gaussian(4, std::log(0.7L)), r.state.amplitudes), 1e-13);
}

TEST(Exact, UnmeasuredAncillaIsAnError) {
  Circuit c = blank(1, 1, 0.5);
  c.add(make_gate(RotationKind::B(1.0), 1, {{0, Polarity::Closed}}));
  EXPECT_THROW(simulate_exact(c), ParameterError);
  EXPECT_THROW(simulate_postselected(c), ParameterError);
}

TEST(Exact, ImpossibleBranch) {
  Circuit c = blank(1, 1, 0.5);
  c.add(make_gate(RotationKind::X(), 1));
  c.measure({0});
  EXPECT_THROW(simulate_exact(c), ImpossibleBranchError);
  EXPECT_THROW(simulate_postselected(c), ImpossibleBranchError);
}

TEST(Exact, FreshAncillaControls) {
  Circuit c = blank(1, 1, 0.5);
  c.add(make_gate(RotationKind::X(), 0, {{1, Polarity::Closed}}));
  c.add(make_gate(RotationKind::H(), 0, {{1, Polarity::Open}}));
  for (const SimResult& r : {simulate_exact(c), simulate_postselected(c)}) {
    EXPECT_NEAR(std::abs(r.state.amplitudes[1]), std::sqrt(0.5), 1e-15);
  }
}

TEST(Capacity, RegisterCeiling) {
  EXPECT_THROW(StateVector(27), CapacityError);
  const LayeredCircuit lc = build_layered_gaussian(GaussianSpec::from_beta(1.3e-14, 22, 1e-10));
  EXPECT_THROW(simulate_exact(lc), CapacityError);
  const SimResult r = simulate_postselected(lc);
  EXPECT_EQ(r.state.n_qubits, 22u);
  EXPECT_NEAR(r.state.norm_squared(), 1.0, 1e-12);
}

TEST(Capacity, MemoryLimitFromEnvironment) {
  ::setenv("GAUSSKIT_MEM_LIMIT_MB", "1", 1);
  EXPECT_THROW(StateVector(18), CapacityError);
  EXPECT_NO_THROW(StateVector(10));
  ::unsetenv("GAUSSKIT_MEM_LIMIT_MB");
  EXPECT_NO_THROW(StateVector(18));
}

TEST(PostSelected, AgreesWithExactAcrossBuilders) {
  std::vector<Circuit> circuits{build_full_gaussian(6, 0.8), build_half_gaussian(5, 0.9),
                                build_exponential(6, 0.5), build_poly_phase(5, 0.7, 2),
                                build_gaussian_2d(3, 2, QuadraticForm{1, 2, 3}, 0.9),
                                flatten(build_layered_gaussian(GaussianSpec::from_alpha(0.95, 8, 1e-3)))};
  for (const Circuit& c : circuits) {
    const SimResult a = simulate_exact(c), b = simulate_postselected(c);
    ASSERT_EQ(a.report.layer_probs.size(), b.report.layer_probs.size());
    for (std::size_t k = 0; k < a.report.layer_probs.size(); ++k) {
      EXPECT_NEAR(a.report.layer_probs[k], b.report.layer_probs[k], 1e-12);
    }
    for (std::size_t i = 0; i < a.state.dim(); ++i) {
      EXPECT_LT(std::abs(a.state.amplitudes[i] - b.state.amplitudes[i]), 1e-12);
    }
  }
}

TEST(PostSelected, HalfGaussianSuccessProbability) {
  const SimResult r = simulate_postselected(build_half_gaussian(3, 0.8));
  double want = 0.0;
  for (int x = 0; x < 8; ++x) want += std::pow(0.8, 2 * x * x);
  want /= 8.0;
  EXPECT_NEAR(r.report.subnormalization * r.report.subnormalization, want, 1e-12);
  EXPECT_NEAR(product(r.report.layer_probs), want, 1e-12);
}

TEST(PostSelected, PhaseCircuitsNeverFail) {
  const SimResult r = simulate_postselected(build_poly_phase(6, 0.41, 3));
  EXPECT_TRUE(r.report.layer_probs.empty());
  EXPECT_EQ(r.report.subnormalization, 1.0);
}

TEST(PostSelected, RejectsReusedAncilla) {
  Circuit c = blank(1, 1, 0.5);
  c.add(make_gate(RotationKind::B(1.0), 1, {{0, Polarity::Closed}}));
  c.add(make_gate(RotationKind::H(), 1));
  c.measure({0});
  EXPECT_THROW(simulate_postselected(c), ParameterError);
  EXPECT_NO_THROW(simulate_exact(c));

  Circuit d = blank(1, 2, 0.5);
  d.add(make_gate(RotationKind::B(1.0), 1, {{0, Polarity::Closed}}));
  d.add(make_gate(RotationKind::B(1.0), 2, {{0, Polarity::Closed}}));
  d.measure({0});
  d.measure({1});
  EXPECT_THROW(simulate_postselected(d), ParameterError);
}

TEST(PostSelected, NormalizationInvariant) {
  const LayeredCircuit lc = build_layered_gaussian(GaussianSpec::from_alpha(0.9, 9, 1e-3));
  const SimResult r = simulate_postselected(lc);
  EXPECT_NEAR(r.state.norm_squared(), 1.0, 1e-12);
  EXPECT_NEAR(r.report.subnormalization * r.report.subnormalization, product(r.report.layer_probs), 1e-10);
  for (double p : r.report.layer_probs) {
    EXPECT_GT(p, 0.0);
    EXPECT_LE(p, 1.0);
  }
}

TEST(Ideal, SmallCases) {
  const StateVector g = ideal_gaussian(3, ExpBase::from_alpha(0.5));
  EXPECT_LT(oracle::aligned_distance(oracle::gaussian(3, std::log(0.5L)), g.amplitudes), 1e-15);
  const StateVector b = ideal_beta(5, 1e-3);
  EXPECT_NEAR(std::abs(b.amplitudes[0] / b.amplitudes[31]), 1.0, 1e-12);
}

TEST(Ideal, BetaIsEndToCenterRatio) {
  // Endpoints sit at (x/(N-1) - 1/2)^2 = 1/4, so |a_0 / a_peak| = beta^(1/4 - t)
  // with t the center's offset; for N = 2^n the two middle points share it.
  const std::size_t n = 6;
  const double beta = 1e-6;
  const StateVector s = ideal_beta(n, beta);
  const double N1 = std::ldexp(1.0, n) - 1;
  const double mid = std::pow(31.0 / N1 - 0.5, 2);
  EXPECT_NEAR(std::abs(s.amplitudes[0] / s.amplitudes[31]), std::pow(beta, 0.25 - mid), 1e-12);
}

TEST(Ideal, InfiniteTailNorm) {
  const ExpBase steep = ExpBase::from_alpha(0.5);
  const StateVector f = ideal_gaussian(4, steep), inf = ideal_gaussian(4, steep, IdealKind::Infinite);
  EXPECT_LT(l2_error(f, inf), 1e-15);
  const ExpBase flat = ExpBase::from_alpha(0.999);
  const StateVector g = ideal_gaussian(4, flat, IdealKind::Infinite);
  EXPECT_LT(g.norm_squared(), 0.5);
  // Midpoint-rule branch for very flat windows agrees with the direct sum.
  const ExpBase flatter = ExpBase::from_log(-1e-6);
  const double direct = ideal_gaussian(3, flatter, IdealKind::Infinite).norm_squared();
  EXPECT_NEAR(direct, 8.0 / std::sqrt(std::numbers::pi / 2e-6), 1e-4);
}

TEST(L2, Examples) {
  const StateVector a(1, {Complex{1.0}, Complex{0.0}});
  EXPECT_EQ(l2_error(a, a), 0.0);
  EXPECT_NEAR(l2_error(a, StateVector(1, {Complex{0.0}, Complex{1.0}})), std::sqrt(2.0), 1e-15);
  const StateVector b(1, {Complex{std::sqrt(1 - 1e-4)}, Complex{1e-2}});
  const double gap = 1.0 - std::sqrt(1 - 1e-4);
  EXPECT_NEAR(l2_error(a, b), std::sqrt(gap * gap + 1e-4), 1e-15);
  EXPECT_NEAR(l2_error(a, b), 1.0000125e-2, 1e-9);
  EXPECT_NEAR(l2_error(a, StateVector(1, {Complex{0.0, 1.0}, Complex{0.0}})), 0.0, 1e-15);
  EXPECT_THROW(l2_error(a, StateVector(2)), ParameterError);
}

TEST(L2, ResolvesTinyErrors) {
  std::vector<Complex> x(4, Complex{0.5}), y = x;
  y[0] += 1e-11;
  y[1] -= 1e-11;
  EXPECT_NEAR(l2_error(StateVector(2, x), StateVector(2, y)), std::sqrt(2.0) * 1e-11, 1e-14);
}

TEST(Noise, PerturbationDistance) {
  Rng rng(1);
  for (double d : {1e-2, 1e-4, 1e-6}) {
    const Mat2 p = random_perturbation(d, rng);
    EXPECT_NEAR(operator_norm(p - Mat2::identity()), d, 1e-10);
    EXPECT_LT((p.adjoint() * p - Mat2::identity()).frobenius_norm(), 1e-15);
    const Mat2 u = gate_matrix(RotationKind::A(1.3), ExpBase::from_alpha(0.8));
    EXPECT_NEAR(operator_norm(apply_noisy_rotation(u, d, rng) - u), d, 1e-10);
  }
  EXPECT_THROW(random_perturbation(0.5, rng), ParameterError);
}

TEST(Noise, ZeroDeltaIsIdeal) {
  Rng rng(1);
  const Mat2 u = gate_matrix(RotationKind::B(2.0), ExpBase::from_alpha(0.8));
  EXPECT_EQ(apply_noisy_rotation(u, 0.0, rng), u);
  EXPECT_EQ(rng.next_u64(), Rng(1).next_u64());
}

TEST(Noise, AxesCoverTheSphere) {
  Rng rng(2);
  double sx = 0, sy = 0, sz = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const Mat2 p = random_perturbation(0.2, rng);
    const double s = std::sin(2.0 * std::asin(0.1));
    sz += -p(0, 0).imag() / s;
    sx += -p(1, 0).imag() / s;
    sy += p(1, 0).real() / s;
  }
  EXPECT_LT(std::abs(sx / n), 0.03);
  EXPECT_LT(std::abs(sy / n), 0.03);
  EXPECT_LT(std::abs(sz / n), 0.03);
}

TEST(Noise, SeededDrawsAreReproducible) {
  const Circuit c = build_full_gaussian(5, 0.8);
  Rng a(99), b(99);
  EXPECT_EQ(draw_noise(c, ErrorBudget::two_to_one(1e-3), a), draw_noise(c, ErrorBudget::two_to_one(1e-3), b));
}

TEST(RunNoisy, ZeroBudgetIsNoiseless) {
  const LayeredCircuit lc = build_layered_gaussian(GaussianSpec::from_alpha(0.9, 8, 1e-3));
  const SimResult r = run_noisy(lc, ErrorBudget::uniform(0.0), 1);
  EXPECT_LE(r.report.l2_error, 1e-10);
  EXPECT_TRUE(std::isnan(r.report.expected_t_depth));
}

TEST(RunNoisy, DeterministicPerSeed) {
  const LayeredCircuit lc = build_layered_gaussian(GaussianSpec::from_alpha(0.9, 8, 1e-3));
  const ErrorBudget b = ErrorBudget::two_to_one(1e-3);
  EXPECT_EQ(run_noisy(lc, b, 5).report, run_noisy(lc, b, 5).report);
  EXPECT_NE(run_noisy(lc, b, 5).report.l2_error, run_noisy(lc, b, 6).report.l2_error);
}

TEST(RunNoisy, XhCoupledErrorScale) {
  const double delta = 1e-4;
  GaussianSpec s;
  s.alpha = alpha_for_xh_distance(delta);
  s.n_qubits = 10;
  s.gate_error = delta;
  const SimResult r = run_noisy(build_layered_gaussian(s), ErrorBudget::two_to_one(delta), 3);
  EXPECT_GT(r.report.l2_error, delta);
  EXPECT_LT(r.report.l2_error, 100 * delta);
}

TEST(RunNoisy, MedianErrorIsStable) {
  const LayeredCircuit lc = build_layered_gaussian(GaussianSpec::from_alpha(0.95, 7, 1e-4));
  const ErrorBudget b = ErrorBudget::two_to_one(1e-4);
  auto median = [&](std::uint64_t first) {
    std::vector<double> e;
    for (std::uint64_t s = first; s < first + 50; ++s) e.push_back(run_noisy(lc, b, s).report.l2_error);
    std::nth_element(e.begin(), e.begin() + 25, e.end());
    return e[25];
  };
  const double m1 = median(0), m2 = median(1000);
  EXPECT_LT(std::abs(m1 / m2 - 1.0), 0.3);
}

TEST(MonteCarlo, CertainLayersCostTheirSum) {
  const MonteCarloResult r = monte_carlo_rus(5.0, {{3, 1.0}, {4, 1.0}}, 100, 1);
  for (double c : r.costs) EXPECT_EQ(c, 12.0);
  EXPECT_EQ(r.std_error, 0.0);
}

TEST(MonteCarlo, ConvergesToFormula) {
  const MonteCarloResult r = monte_carlo_rus(10.0, {{4, 0.5}, {4, 0.5}}, 100000, 17);
  EXPECT_LT(std::abs(r.mean - 64.0), 3.0 * r.std_error);
}

TEST(MonteCarlo, IncreasingProbabilityOrderIsCheaper) {
  const std::vector<LayerCost> up{{5, 0.3}, {5, 0.6}, {5, 0.9}};
  const std::vector<LayerCost> down{{5, 0.9}, {5, 0.6}, {5, 0.3}};
  EXPECT_LT(monte_carlo_rus(8.0, up, 50000, 4).mean, monte_carlo_rus(8.0, down, 50000, 4).mean);
  EXPECT_THROW(monte_carlo_rus(1.0, up, 0, 1), ParameterError);
}

TEST(MonteCarlo, LayeredWrapper) {
  const LayeredCircuit lc = build_layered_gaussian(GaussianSpec::from_alpha(0.9, 6, 1e-3));
  const ErrorBudget b = ErrorBudget::two_to_one(1e-3);
  const MonteCarloResult r = monte_carlo_rus(lc, b, 20000, 8);
  const double want = layered_t_depth(lc, b).expected(simulate_postselected(lc).report.layer_probs);
  EXPECT_LT(std::abs(r.mean - want), 4.0 * r.std_error);
}

}  // namespace
}  // namespace gausskit
