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
#include <optional>
#include <string>

#include "gausskit/core/errors.hpp"
#include "gausskit/core/exp_base.hpp"

namespace gausskit {

/// Largest supported data register.
constexpr int kMaxThresholdQubits = 62;

struct QubitThreshold {
  int n = 0;                       // direct evaluation of the keep condition
  std::optional<int> closed_form;  // floor(log2(sqrt(1 + 4 log d / log a) - 1))

  bool agree() const { return closed_form && *closed_form == n; }
};

namespace threshold_detail {

inline void check_domain(const ExpBase& alpha, double delta) {
  alpha.require_window();
  if (!(delta > 0.0 && delta < 1.0)) throw ParameterError("delta must lie in (0,1)");
}

}  // namespace threshold_detail

/// Number of qubits to keep: the largest n whose top merged rotation still
/// moves the state, alpha^(2^(n-1) + 4^(n-1)) > delta. Returns both the direct
/// count and the closed form so callers can report disagreement.
inline QubitThreshold qubit_threshold_full(const ExpBase& alpha, double delta) {
  threshold_detail::check_domain(alpha, delta);
  const double log_delta = std::log(delta);
  QubitThreshold out;
  int n = 0;
  while (true) {
    const int next = n + 1;
    const double e = std::ldexp(1.0, next - 1) + std::ldexp(1.0, 2 * (next - 1));
    if (!(e * alpha.log() > log_delta)) break;
    n = next;
    if (n > kMaxThresholdQubits) {
      throw SaturationError("qubit threshold exceeds " + std::to_string(kMaxThresholdQubits) +
                            " qubits; alpha is too close to 1 for delta");
    }
  }
  out.n = n;

  const double ratio = 4.0 * log_delta / alpha.log();
  const double arg = std::sqrt(1.0 + ratio) - 1.0;
  if (std::isfinite(ratio) && arg > 0.0) {
    const double v = std::floor(std::log2(arg));
    if (v >= -1.0 && v <= kMaxThresholdQubits) out.closed_form = static_cast<int>(v);
  }
  return out;
}

inline int qubit_threshold(double alpha, double delta) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha must lie in (0,1)");
  return qubit_threshold_full(ExpBase::from_alpha(alpha), delta).n;
}

inline int qubit_threshold(const ExpBase& alpha, double delta) {
  return qubit_threshold_full(alpha, delta).n;
}

/// Number of bottom qubits whose controlled rotations can all be dropped:
/// the largest k >= 0 with 1 - alpha^(2^(k+n-1)) < delta (0 when none),
/// evaluated directly.
inline int prunable_control_depth(const ExpBase& alpha, double delta, int n) {
  threshold_detail::check_domain(alpha, delta);
  if (n < 1) throw ParameterError("n must be positive");
  int k = 0;
  for (int cand = 0; cand + n - 1 < 1023; ++cand) {
    if (alpha.one_minus_pow(std::ldexp(1.0, cand + n - 1)) < delta) {
      k = cand;
    } else {
      break;
    }
  }
  return k;
}

inline int prunable_control_depth(double alpha, double delta, int n) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha must lie in (0,1)");
  return prunable_control_depth(ExpBase::from_alpha(alpha), delta, n);
}

/// floor(log2(log delta / log alpha)) + 1 - n. Kept for comparison only: it
/// solves alpha^(2^(k+n-1)) > delta, not the removal condition above.
inline int prunable_control_depth_closed_form(const ExpBase& alpha, double delta, int n) {
  threshold_detail::check_domain(alpha, delta);
  return static_cast<int>(std::floor(std::log2(std::log(delta) / alpha.log()))) + 1 - n;
}

/// The base alpha for which the bottom rotation A(1) sits exactly delta (in
/// operator norm) away from XH.
inline ExpBase alpha_for_xh_distance(double delta) {
  if (!(delta > 0.0 && delta < 0.5)) throw ParameterError("delta must lie in (0, 0.5)");
  const double x = 2.0 * std::asin(delta / 2.0);
  const double t = std::tan(x);
  // A(1) ratio r = alpha^2 = tan(pi/4 - x) = (1 - t) / (1 + t).
  const double log_r = std::log1p(-2.0 * t / (1.0 + t));
  return ExpBase::from_log(0.5 * log_r);
}

}  // namespace gausskit
