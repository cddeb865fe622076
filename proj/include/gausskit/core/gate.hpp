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
#include <optional>
#include <string>
#include <vector>

#include "gausskit/core/errors.hpp"
#include "gausskit/core/exp_base.hpp"
#include "gausskit/core/matrix.hpp"
#include "gausskit/core/phase.hpp"

namespace gausskit {

using Qubit = std::size_t;

enum class GateType { A, B, Z, Hadamard, PauliX, CNOT };

/// Gate vocabulary. A, B and Z carry a real exponent m; the rotation encodes
/// alpha^(2^m) (A: amplitude ratio, B: top-left entry, Z: phase alpha*2^m).
/// Exponents are real because merged rotations use log2(2^k + 4^k).
struct RotationKind {
  GateType type = GateType::Hadamard;
  double exponent = 0.0;

  static RotationKind A(double m) { return {GateType::A, m}; }
  static RotationKind B(double m) { return {GateType::B, m}; }
  static RotationKind Z(double m) { return {GateType::Z, m}; }
  static RotationKind H() { return {GateType::Hadamard, 0.0}; }
  static RotationKind X() { return {GateType::PauliX, 0.0}; }
  static RotationKind CNOT() { return {GateType::CNOT, 0.0}; }

  bool is_rotation() const noexcept {
    return type == GateType::A || type == GateType::B || type == GateType::Z;
  }
  bool is_clifford() const noexcept { return !is_rotation(); }

  friend bool operator==(const RotationKind&, const RotationKind&) = default;
};

inline const char* gate_name(GateType t) {
  switch (t) {
    case GateType::A: return "A";
    case GateType::B: return "B";
    case GateType::Z: return "Z";
    case GateType::Hadamard: return "H";
    case GateType::PauliX: return "X";
    case GateType::CNOT: return "CNOT";
  }
  return "?";
}

enum class Polarity { Closed, Open };

struct Control {
  Qubit qubit = 0;
  Polarity polarity = Polarity::Closed;

  friend bool operator==(const Control&, const Control&) = default;
};

struct Gate {
  RotationKind kind;
  Qubit target = 0;
  std::vector<Control> controls;
  std::optional<double> synthesis_error;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// The 2x2 unitary acting on the target (the controlled gates apply it on
/// the subspace where every control matches its polarity).
inline Mat2 gate_matrix(const RotationKind& kind, const ExpBase& alpha) {
  if (!std::isfinite(kind.exponent)) {
    throw ParameterError(std::string("non-finite exponent for ") +
                         gate_name(kind.type) + " gate");
  }
  Mat2 m;
  switch (kind.type) {
    case GateType::A: {
      alpha.require_window();
      const double r = alpha.pow2(kind.exponent);
      const double c = 1.0 / std::sqrt(1.0 + r * r);
      m(0, 0) = c;
      m(0, 1) = -r * c;
      m(1, 0) = r * c;
      m(1, 1) = c;
      return m;
    }
    case GateType::B: {
      alpha.require_window();
      const double w = alpha.pow2(kind.exponent);
      const double s = std::sqrt(alpha.one_minus_pow(std::exp2(kind.exponent + 1.0)));
      m(0, 0) = w;
      m(0, 1) = -s;
      m(1, 0) = s;
      m(1, 1) = w;
      return m;
    }
    case GateType::Z: {
      m(0, 0) = 1.0;
      m(1, 1) = unit_phase(alpha.value(), phase_multiplier(kind.exponent));
      return m;
    }
    case GateType::Hadamard:
      return hadamard();
    case GateType::PauliX:
    case GateType::CNOT:
      return pauli_x();
  }
  return Mat2::identity();
}

/// Singly-controlled form in the basis |target control> (target is the high
/// bit), so the rotation acts on indices 1 and 3.
inline Mat4 controlled_matrix(const RotationKind& kind, const ExpBase& alpha) {
  const Mat2 u = gate_matrix(kind, alpha);
  Mat4 m;
  m(0, 0) = 1.0;
  m(2, 2) = 1.0;
  m(1, 1) = u(0, 0);
  m(1, 3) = u(0, 1);
  m(3, 1) = u(1, 0);
  m(3, 3) = u(1, 1);
  return m;
}

/// Operator-norm distance of A(m) from XH, evaluated without cancellation.
/// A(m) = Ry(2 atan r) and XH = Ry(pi/2), so the distance is
/// 2 sin(|atan r - pi/4| / 2) with atan r - pi/4 = atan((r-1)/(r+1)).
inline double distance_from_xh(double exponent, const ExpBase& alpha) {
  alpha.require_window();
  const double t = std::exp2(exponent);
  const double r = alpha.pow(t);
  const double r_minus_one = -alpha.one_minus_pow(t);
  const double angle = std::atan(r_minus_one / (r + 1.0));
  return 2.0 * std::sin(std::abs(angle) / 2.0);
}

}  // namespace gausskit
