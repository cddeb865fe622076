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

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "gausskit/core/errors.hpp"
#include "gausskit/core/exp_base.hpp"

namespace gausskit {

enum class GaussianMode { HalfGaussian, FullGaussian, TwoDim };

/// Integer quadratic form xx*x^2 + xy*x*y + yy*y^2 over two registers.
struct QuadraticForm {
  std::int64_t xx = 1;
  std::int64_t xy = 0;
  std::int64_t yy = 1;

  /// From a symmetric matrix Q: form = Q11 x^2 + 2 Q12 xy + Q22 y^2.
  static QuadraticForm from_matrix(const std::array<std::array<std::int64_t, 2>, 2>& q) {
    if (q[0][1] != q[1][0]) throw ParameterError("covariance matrix must be symmetric");
    return {q[0][0], 2 * q[0][1], q[1][1]};
  }

  double operator()(double x, double y) const {
    return static_cast<double>(xx) * x * x + static_cast<double>(xy) * x * y +
           static_cast<double>(yy) * y * y;
  }

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

/// Parameters of a target Gaussian.
struct GaussianSpec {
  ExpBase alpha;
  std::size_t n_qubits = 2;
  double gate_error = 1e-3;  // delta
  GaussianMode mode = GaussianMode::FullGaussian;
  std::optional<double> beta;
  std::optional<QuadraticForm> covariance;
  std::size_t n_qubits_y = 0;  // second register for TwoDim

  static GaussianSpec from_alpha(double alpha, std::size_t n, double delta,
                                 GaussianMode mode = GaussianMode::FullGaussian) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha must lie in (0,1)");
    GaussianSpec s;
    s.alpha = ExpBase::from_alpha(alpha);
    s.n_qubits = n;
    s.gate_error = delta;
    s.mode = mode;
    s.check();
    return s;
  }

  /// Fixed-window form: amplitudes beta^((x/(N-1) - 1/2)^2), i.e.
  /// alpha = beta^(1/(N-1)^2).
  static GaussianSpec from_beta(double beta, std::size_t n, double delta) {
    if (!(beta > 0.0 && beta < 1.0)) throw ParameterError("beta must lie in (0,1)");
    if (n < 2 || n > 62) throw ParameterError("n_qubits must lie in [2, 62]");
    GaussianSpec s;
    const double span = std::ldexp(1.0, static_cast<int>(n)) - 1.0;
    s.alpha = ExpBase::from_log(std::log(beta) / (span * span));
    s.n_qubits = n;
    s.gate_error = delta;
    s.mode = GaussianMode::FullGaussian;
    s.beta = beta;
    s.check();
    const double round_trip = std::exp(s.alpha.log() * span * span);
    if (std::abs(round_trip - beta) > 1e-12 * beta) {
      throw ParameterError("beta does not round-trip through alpha");
    }
    return s;
  }

  void check() const {
    alpha.require_window();
    if (!(gate_error > 0.0 && gate_error < 1.0)) {
      throw ParameterError("gate error must lie in (0,1)");
    }
    if (n_qubits < 2) throw ParameterError("n_qubits must be at least 2");
  }
};

/// Half-width of a beta window in standard deviations of |psi|^2.
/// beta ~ 1.4e-11 gives 5; beta ~ 1.3e-14 gives 4*sqrt(2).
inline double beta_coverage_sigmas(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw ParameterError("beta must lie in (0,1)");
  return std::sqrt(-std::log(beta));
}

inline double beta_for_coverage(double sigmas) {
  if (!(sigmas > 0.0) || !std::isfinite(sigmas)) {
    throw ParameterError("coverage must be positive");
  }
  return std::exp(-sigmas * sigmas);
}

}  // namespace gausskit
