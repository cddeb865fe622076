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
#include <limits>
#include <string>

#include "gausskit/core/errors.hpp"

namespace gausskit {

/// The parameter alpha shared by every gate of a circuit.
///
/// For the real windows (A and B rotations) alpha is an exponential base in
/// (0,1) and is carried by its natural logarithm: bases derived from a beta
/// window sit within ~1e-12 of one, where a bare double would keep only a few
/// significant digits of 1-alpha. For phase circuits (Z rotations) alpha is an
/// arbitrary finite angle and `log()` is NaN.
class ExpBase {
 public:
  ExpBase() = default;

  static ExpBase from_alpha(double alpha) {
    if (!std::isfinite(alpha)) {
      throw ParameterError("alpha must be finite");
    }
    ExpBase b;
    b.value_ = alpha;
    b.log_ = (alpha > 0.0 && alpha < 1.0)
                 ? std::log(alpha)
                 : std::numeric_limits<double>::quiet_NaN();
    return b;
  }

  static ExpBase from_log(double log_alpha) {
    if (!std::isfinite(log_alpha) || !(log_alpha < 0.0)) {
      throw ParameterError("log(alpha) must be finite and negative");
    }
    ExpBase b;
    b.value_ = std::exp(log_alpha);
    b.log_ = log_alpha;
    return b;
  }

  double value() const noexcept { return value_; }
  double log() const noexcept { return log_; }
  bool is_window() const noexcept { return std::isfinite(log_); }

  void require_window() const {
    if (!is_window()) {
      throw ParameterError("alpha must lie in (0,1) for A/B rotations, got " +
                           std::to_string(value_));
    }
  }

  /// alpha^t for t >= 0.
  double pow(double t) const { return std::exp(t * log_); }

  /// 1 - alpha^t without cancellation.
  double one_minus_pow(double t) const { return -std::expm1(t * log_); }

  /// alpha^(2^m).
  double pow2(double m) const { return pow(std::exp2(m)); }

  friend bool operator==(const ExpBase& a, const ExpBase& b) {
    auto same = [](double x, double y) {
      return x == y || (std::isnan(x) && std::isnan(y));
    };
    return same(a.value_, b.value_) && same(a.log_, b.log_);
  }

 private:
  double value_ = 0.5;
  double log_ = -0.69314718055994530942;
};

}  // namespace gausskit
