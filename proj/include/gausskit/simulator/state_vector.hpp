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
#include <cstdlib>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "gausskit/core/errors.hpp"
#include "gausskit/core/gate.hpp"
#include "gausskit/core/matrix.hpp"

namespace gausskit {

/// Qubit ceiling for a materialized register.
constexpr std::size_t kMaxSimulatedQubits = 26;

/// Allocation cap in bytes: GAUSSKIT_MEM_LIMIT_MB, default 4096 MB.
inline std::size_t memory_limit_bytes() {
  std::size_t mb = 4096;
  if (const char* env = std::getenv("GAUSSKIT_MEM_LIMIT_MB")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) mb = static_cast<std::size_t>(v);
  }
  return mb * std::size_t{1024} * 1024;
}

inline std::size_t state_bytes(std::size_t n_qubits) {
  return sizeof(Complex) << n_qubits;
}

inline void check_capacity(std::size_t n_qubits) {
  if (n_qubits > kMaxSimulatedQubits) {
    throw CapacityError(std::to_string(n_qubits) + " qubits exceed the simulator ceiling of " +
                        std::to_string(kMaxSimulatedQubits));
  }
  if (state_bytes(n_qubits) > memory_limit_bytes()) {
    throw CapacityError(std::to_string(n_qubits) + " qubits need " +
                        std::to_string(state_bytes(n_qubits) >> 20) +
                        " MB, above GAUSSKIT_MEM_LIMIT_MB");
  }
}

/// Amplitudes over n qubits (qubit j is bit j of the index) plus the product
/// of post-selection probabilities accumulated so far.
struct StateVector {
  std::size_t n_qubits = 0;
  std::vector<Complex> amplitudes;
  double cumulative_success = 1.0;

  StateVector() = default;
  explicit StateVector(std::size_t n) : n_qubits(n) {
    check_capacity(n);
    amplitudes.assign(std::size_t{1} << n, Complex{});
    amplitudes[0] = 1.0;
  }
  StateVector(std::size_t n, std::vector<Complex> amps) : n_qubits(n), amplitudes(std::move(amps)) {
    if (amplitudes.size() != (std::size_t{1} << n)) {
      throw ParameterError("amplitude count does not match qubit count");
    }
  }

  std::size_t dim() const noexcept { return amplitudes.size(); }

  double norm_squared() const {
    double s = 0.0;
    for (const Complex& a : amplitudes) s += std::norm(a);
    return s;
  }

  void normalize() {
    const double n2 = norm_squared();
    if (!(n2 > 0.0)) throw ImpossibleBranchError("cannot normalize a zero state");
    const double inv = 1.0 / std::sqrt(n2);
    for (Complex& a : amplitudes) a *= inv;
  }
};

namespace kernel {

/// Applies `u` to `target` on the subspace where (index & mask) == value.
inline void apply_single(std::span<Complex> amps, std::size_t target, const Mat2& u,
                         std::uint64_t mask = 0, std::uint64_t value = 0) {
  const std::size_t bit = std::size_t{1} << target;
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  for (std::size_t base = 0; base < amps.size(); base += 2 * bit) {
    for (std::size_t i = base; i < base + bit; ++i) {
      if ((i & mask) != value) continue;
      const Complex a0 = amps[i];
      const Complex a1 = amps[i | bit];
      amps[i] = u00 * a0 + u01 * a1;
      amps[i | bit] = u10 * a0 + u11 * a1;
    }
  }
}

/// Multiplies every amplitude with (index & mask) == value by `factor`,
/// visiting only that subspace.
inline void scale_subspace(std::span<Complex> amps, std::uint64_t mask, std::uint64_t value,
                           Complex factor) {
  const std::uint64_t free = (static_cast<std::uint64_t>(amps.size()) - 1) & ~mask;
  std::uint64_t s = 0;
  do {
    amps[s | value] *= factor;
    s = (s - free) & free;
  } while (s != 0);
}

}  // namespace kernel

/// Controls as (mask, value) over register bit positions.
struct ControlMask {
  std::uint64_t mask = 0;
  std::uint64_t value = 0;

  void add(std::size_t bit, Polarity p) {
    mask |= std::uint64_t{1} << bit;
    if (p == Polarity::Closed) value |= std::uint64_t{1} << bit;
  }
};

/// Euclidean distance after aligning the global phase of b to a (b is
/// multiplied by the unit phase maximizing Re<a|b>). Summed termwise so that
/// errors near 1e-10 survive.
inline double l2_error(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw ParameterError("l2_error: dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()) + ")");
  }
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) overlap += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  const double mag = std::abs(overlap);
  const Complex phase = mag > 0.0 ? std::conj(overlap) / mag : Complex{1.0};
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::norm(a.amplitudes[i] - phase * b.amplitudes[i]);
  return std::sqrt(s);
}

}  // namespace gausskit
