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
#include <limits>
#include <numbers>
#include <vector>

#include "gausskit/core/errors.hpp"
#include "gausskit/core/phase.hpp"
#include "gausskit/core/spec.hpp"
#include "gausskit/simulator/state_vector.hpp"

namespace gausskit {

/// Finite: the target restricted to the register and normalized there.
/// Infinite: the register slice of the normalized Gaussian on the whole
/// integer lattice, so its norm falls short of 1 by the tail mass.
enum class IdealKind { Finite, Infinite };

namespace ideal_detail {

inline StateVector from_log_weights(std::size_t n, auto log_weight) {
  check_capacity(n);
  std::vector<Complex> amps(std::size_t{1} << n);
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < amps.size(); ++x) top = std::max(top, log_weight(x));
  for (std::size_t x = 0; x < amps.size(); ++x) amps[x] = std::exp(log_weight(x) - top);
  StateVector s(n, std::move(amps));
  s.normalize();
  return s;
}

/// Sum over integers x outside [0, N) of alpha^(2 (x - c)^2), relative to the
/// in-register sum, for c = (N-1)/2. Both tails are equal by symmetry. For
/// very flat windows the sum is the midpoint-rule integral (relative error
/// below a/12 with a = -2 log alpha).
inline double tail_ratio(double log_alpha, std::size_t n, double inside) {
  const double N = std::ldexp(1.0, static_cast<int>(n));
  const double a = -2.0 * log_alpha;
  const double first = N / 2.0 + 0.5;
  double tail = 0.0;
  if (a < 1e-8) {
    tail = 0.5 * std::sqrt(std::numbers::pi / a) * std::erfc(std::sqrt(a) * (first - 0.5));
  } else {
    for (double d = first;; d += 1.0) {
      const double t = std::exp(-a * d * d);
      tail += t;
      if (t <= 1e-18 * (inside + tail)) break;
    }
  }
  return 2.0 * tail / inside;
}

}  // namespace ideal_detail

/// Normalized sum_x alpha^((x - (N-1)/2)^2) |x>.
inline StateVector ideal_gaussian(std::size_t n, const ExpBase& alpha,
                                  IdealKind kind = IdealKind::Finite) {
  alpha.require_window();
  const double center = (std::ldexp(1.0, static_cast<int>(n)) - 1.0) / 2.0;
  const double la = alpha.log();
  StateVector s = ideal_detail::from_log_weights(n, [&](std::size_t x) {
    const double d = static_cast<double>(x) - center;
    return la * d * d;
  });
  if (kind == IdealKind::Infinite) {
    double inside = 0.0;
    for (std::size_t x = 0; x < s.dim(); ++x) {
      const double d = static_cast<double>(x) - center;
      inside += std::exp(2.0 * la * d * d);
    }
    const double scale = 1.0 / std::sqrt(1.0 + ideal_detail::tail_ratio(la, n, inside));
    for (Complex& a : s.amplitudes) a *= scale;
  }
  return s;
}

/// Fixed-window form beta^((x/(N-1) - 1/2)^2).
inline StateVector ideal_beta(std::size_t n, double beta, IdealKind kind = IdealKind::Finite) {
  return ideal_gaussian(n, GaussianSpec::from_beta(beta, n, 0.25).alpha, kind);
}

/// Normalized sum_x alpha^(x^2) |x>.
inline StateVector ideal_half_gaussian(std::size_t n, const ExpBase& alpha) {
  alpha.require_window();
  const double la = alpha.log();
  return ideal_detail::from_log_weights(n, [&](std::size_t x) {
    const double v = static_cast<double>(x);
    return la * v * v;
  });
}

/// Normalized sum_x alpha^x |x>.
inline StateVector ideal_exponential(std::size_t n, const ExpBase& alpha) {
  alpha.require_window();
  const double la = alpha.log();
  return ideal_detail::from_log_weights(
      n, [&](std::size_t x) { return la * static_cast<double>(x); });
}

/// Normalized sum_{x,y} alpha^(Q(x,y)) |x>|y> with basis index y + 2^ny x.
inline StateVector ideal_gaussian_2d(std::size_t nx, std::size_t ny, const QuadraticForm& q,
                                     const ExpBase& alpha) {
  alpha.require_window();
  const double la = alpha.log();
  const std::size_t ymask = (std::size_t{1} << ny) - 1;
  return ideal_detail::from_log_weights(nx + ny, [&](std::size_t i) {
    return la * q(static_cast<double>(i >> ny), static_cast<double>(i & ymask));
  });
}

/// (1/sqrt N) sum_x e^{i alpha x^d} |x>.
inline StateVector ideal_phase_state(std::size_t n, double alpha, int d) {
  if (d < 1) throw ParameterError("phase degree must be at least 1");
  if (n * static_cast<std::size_t>(d) > 62) throw ParameterError("x^d overflows 62 bits");
  check_capacity(n);
  std::vector<Complex> amps(std::size_t{1} << n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(amps.size()));
  for (std::uint64_t x = 0; x < amps.size(); ++x) {
    std::uint64_t p = 1;
    for (int k = 0; k < d; ++k) p *= x;
    amps[x] = norm * unit_phase(alpha, p);
  }
  return StateVector(n, std::move(amps));
}

/// Closed-form target of a spec.
inline StateVector ideal_state(const GaussianSpec& spec, IdealKind kind = IdealKind::Finite) {
  switch (spec.mode) {
    case GaussianMode::FullGaussian:
      return ideal_gaussian(spec.n_qubits, spec.alpha, kind);
    case GaussianMode::HalfGaussian:
      return ideal_half_gaussian(spec.n_qubits, spec.alpha);
    case GaussianMode::TwoDim:
      return ideal_gaussian_2d(spec.n_qubits, spec.n_qubits_y,
                               spec.covariance.value_or(QuadraticForm{}), spec.alpha);
  }
  throw ParameterError("unknown Gaussian mode");
}

}  // namespace gausskit
