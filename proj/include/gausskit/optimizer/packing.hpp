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
#include <numeric>
#include <vector>

#include "gausskit/core/circuit.hpp"
#include "gausskit/core/errors.hpp"
#include "gausskit/core/rng.hpp"

namespace gausskit {

using PairRound = std::vector<ControlPair>;

/// Round-robin (circle method) 1-factorization of the complete graph on
/// `core_qubits` vertices. Even counts give core-1 rounds of core/2 pairs; odd
/// counts add a bye vertex and give core rounds of (core-1)/2 pairs. Every
/// round is a matching and every pair appears exactly once.
inline std::vector<PairRound> pack_layers(std::size_t core_qubits) {
  if (core_qubits < 2) throw ParameterError("pack_layers needs at least two qubits");
  constexpr std::size_t kBye = static_cast<std::size_t>(-1);
  std::vector<std::size_t> ring(core_qubits);
  std::iota(ring.begin(), ring.end(), 0);
  if (core_qubits % 2 == 1) ring.push_back(kBye);
  const std::size_t m = ring.size();

  std::vector<PairRound> rounds;
  rounds.reserve(m - 1);
  for (std::size_t r = 0; r + 1 < m; ++r) {
    PairRound round;
    for (std::size_t i = 0; i < m / 2; ++i) {
      const std::size_t a = ring[i], b = ring[m - 1 - i];
      if (a == kBye || b == kBye) continue;
      round.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(round.begin(), round.end());
    rounds.push_back(std::move(round));
    // Keep ring[0] fixed, rotate the rest by one.
    std::rotate(ring.begin() + 1, ring.end() - 1, ring.end());
  }
  return rounds;
}

/// A random packing: the circle schedule under a random relabeling of the
/// vertices, with the rounds shuffled.
inline std::vector<PairRound> pack_layers_random(std::size_t core_qubits, Rng& rng) {
  std::vector<PairRound> rounds = pack_layers(core_qubits);
  std::vector<std::size_t> label(core_qubits);
  std::iota(label.begin(), label.end(), 0);
  rng.shuffle(label);
  for (PairRound& round : rounds) {
    for (ControlPair& p : round) {
      const std::size_t a = label[p.first], b = label[p.second];
      p = {std::min(a, b), std::max(a, b)};
    }
    std::sort(round.begin(), round.end());
  }
  rng.shuffle(rounds);
  return rounds;
}

}  // namespace gausskit
