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
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gausskit/core/errors.hpp"
#include "gausskit/core/gate.hpp"

namespace gausskit {

/// x^d written over the binary digits of x = sum_j 2^j x_j. Because
/// x_j^2 = x_j every product collapses onto its set of distinct digits:
/// x^d = sum_S c_S prod_{j in S} x_j with 1 <= |S| <= d.
struct MonomialExpansion {
  std::size_t n = 0;
  int degree = 1;
  std::map<std::vector<Qubit>, std::uint64_t> terms;  // sorted subsets

  std::uint64_t evaluate(std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (const auto& [subset, coeff] : terms) {
      bool all = true;
      for (Qubit j : subset) all = all && ((x >> j) & 1U);
      if (all) acc += coeff;
    }
    return acc;
  }
};

constexpr int kMaxMonomialDegree = 4;

inline MonomialExpansion monomial_coefficients(std::size_t n, int d) {
  if (d < 1) throw ParameterError("degree must be at least 1");
  if (d > kMaxMonomialDegree) {
    throw UnsupportedDegreeError("degree " + std::to_string(d) + " exceeds the supported maximum " +
                                 std::to_string(kMaxMonomialDegree));
  }
  if (n < 1) throw ParameterError("need at least one qubit");
  if (n * static_cast<std::size_t>(d) > 62) {
    throw ParameterError("x^d does not fit in 64-bit coefficients");
  }

  MonomialExpansion out;
  out.n = n;
  out.degree = d;
  // Sum 2^(j1+...+jd) over all ordered digit tuples, bucketed by their set.
  std::vector<Qubit> tuple(static_cast<std::size_t>(d), 0);
  while (true) {
    std::uint64_t weight = 0;
    for (Qubit j : tuple) weight += j;
    std::vector<Qubit> subset = tuple;
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    out.terms[subset] += std::uint64_t{1} << weight;

    std::size_t pos = 0;
    while (pos < tuple.size() && ++tuple[pos] == n) tuple[pos++] = 0;
    if (pos == tuple.size()) break;
  }
  return out;
}

}  // namespace gausskit
