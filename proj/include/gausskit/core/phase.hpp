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
#include <complex>
#include <cstdint>
#include <type_traits>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace gausskit {

/// Multiplier 2^m of a phase exponent. Values within 1e-9 (relative) of an
/// integer below 2^53 snap to it, so log2 of an integer coefficient round-trips
/// exactly.
inline double phase_multiplier(double m) {
  const double c = std::exp2(m);
  const double r = std::nearbyint(c);
  if (r >= 1.0 && r < 0x1.0p53 && std::abs(c - r) <= 1e-9 * r) return r;
  return c;
}

/// e^{i alpha c} with the product reduced modulo 2 pi in 113-bit precision;
/// angles reach 1e10 for quartic phases on eight qubits.
/// Integer multipliers are taken exactly.
template <typename Multiplier>
  requires std::is_arithmetic_v<Multiplier>
std::complex<double> unit_phase(double alpha, Multiplier c) {
  using Quad = boost::multiprecision::cpp_bin_float_quad;
  const Quad angle = Quad(alpha) * Quad(c);
  const Quad two_pi = boost::math::constants::two_pi<Quad>();
  const Quad reduced = angle - two_pi * floor(angle / two_pi);
  return std::polar(1.0, static_cast<double>(reduced));
}

}  // namespace gausskit
