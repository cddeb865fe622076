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
#include <numbers>

#include "gausskit/core/circuit.hpp"
#include "gausskit/core/errors.hpp"
#include "gausskit/core/matrix.hpp"
#include "gausskit/core/rng.hpp"
#include "gausskit/optimizer/error_budget.hpp"
#include "gausskit/simulator/report.hpp"

namespace gausskit {

/// exp(-i (phi/2) n.sigma) with n uniform on the sphere and
/// phi = 4 asin(delta/2), so that its operator-norm distance from I is delta.
inline Mat2 random_perturbation(double delta, Rng& rng) {
  if (!(delta >= 0.0 && delta < 0.5)) throw ParameterError("perturbation size must lie in [0, 0.5)");
  const double z = 2.0 * rng.uniform() - 1.0;
  const double azimuth = 2.0 * std::numbers::pi * rng.uniform();
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double nx = rho * std::cos(azimuth);
  const double ny = rho * std::sin(azimuth);
  const double half = 2.0 * std::asin(delta / 2.0);
  const double c = std::cos(half);
  const double s = std::sin(half);
  const Complex i{0.0, 1.0};
  Mat2 p;
  p(0, 0) = Complex{c, 0.0} - i * s * z;
  p(0, 1) = -i * s * Complex{nx, -ny};
  p(1, 0) = -i * s * Complex{nx, ny};
  p(1, 1) = Complex{c, 0.0} + i * s * z;
  return p;
}

/// The ideal matrix left-multiplied by a random perturbation of size delta.
/// delta = 0 returns the ideal matrix and consumes no randomness.
inline Mat2 apply_noisy_rotation(const Mat2& ideal, double delta, Rng& rng) {
  if (delta == 0.0) return ideal;
  return random_perturbation(delta, rng) * ideal;
}

inline Mat2 apply_noisy_rotation(const Gate& g, const ExpBase& alpha, double delta, Rng& rng) {
  return apply_noisy_rotation(gate_matrix(g.kind, alpha), delta, rng);
}

/// One perturbation per rotation, in element order, at the budget's accuracy
/// for that gate. Clifford gates stay exact.
inline GateOverrides draw_noise(const Circuit& c, const ErrorBudget& budget, Rng& rng) {
  GateOverrides out(c.elements.size());
  for (std::size_t i = 0; i < c.elements.size(); ++i) {
    const Gate* g = std::get_if<Gate>(&c.elements[i]);
    if (g == nullptr || !g->kind.is_rotation()) continue;
    const double delta = budget.delta_for(*g);
    if (delta > 0.0) out[i] = apply_noisy_rotation(*g, c.alpha, delta, rng);
  }
  return out;
}

}  // namespace gausskit
