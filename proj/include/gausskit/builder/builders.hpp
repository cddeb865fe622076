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
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gausskit/builder/monomial.hpp"
#include "gausskit/core/circuit.hpp"
#include "gausskit/core/spec.hpp"
#include "gausskit/optimizer/packing.hpp"

namespace gausskit {

namespace builder_detail {

inline void require_qubits(std::size_t n, std::size_t min, const char* family) {
  if (n < min) {
    throw ParameterError(std::string(family) + " needs at least " + std::to_string(min) +
                         " qubits");
  }
  if (n > 62) throw ParameterError(std::string(family) + ": too many qubits");
}

inline Control on(Qubit q) { return {q, Polarity::Closed}; }

/// Exponent of the merged single-qubit rotation on core qubit k:
/// log2(2^k + 4^k) = k + log2(1 + 2^k).
inline double merged_exponent(std::size_t k) {
  return static_cast<double>(k) + std::log2(1.0 + std::ldexp(1.0, static_cast<int>(k)));
}

/// Appends a rotation on a fresh ancilla immediately followed by its
/// post-selected measurement.
inline void add_windowed(Circuit& c, RotationKind kind, std::vector<Control> controls) {
  const std::size_t a = c.ancilla_qubits++;
  c.add(make_gate(kind, c.ancilla(a), std::move(controls)));
  c.measure({a});
}

inline Circuit empty_circuit(std::size_t data, const ExpBase& alpha) {
  Circuit c;
  c.data_qubits = data;
  c.alpha = alpha;
  return c;
}

}  // namespace builder_detail

/// Hadamards then Z(j) on qubit j: (1/sqrt N) sum_x e^{i alpha x} |x>.
inline Circuit build_linear_phase(std::size_t n, double alpha) {
  builder_detail::require_qubits(n, 1, "linear phase");
  Circuit c = builder_detail::empty_circuit(n, ExpBase::from_alpha(alpha));
  for (std::size_t q = n; q-- > 0;) c.add(make_gate(RotationKind::H(), q));
  for (std::size_t q = n; q-- > 0;) {
    c.add(make_gate(RotationKind::Z(static_cast<double>(q)), q));
  }
  return c;
}

/// Diagonal e^{i alpha x^d} applied to the uniform superposition. Each
/// monomial term c_S becomes Z(log2 c_S) on the highest qubit of S controlled
/// on the rest. Degree 1 emits exactly the linear-phase circuit.
inline Circuit build_poly_phase(std::size_t n, double alpha, int d) {
  builder_detail::require_qubits(n, 1, "polynomial phase");
  const MonomialExpansion mono = monomial_coefficients(n, d);
  Circuit c = builder_detail::empty_circuit(n, ExpBase::from_alpha(alpha));
  for (std::size_t q = n; q-- > 0;) c.add(make_gate(RotationKind::H(), q));

  std::vector<std::pair<std::vector<Qubit>, std::uint64_t>> terms(mono.terms.begin(),
                                                                  mono.terms.end());
  // Uncontrolled terms first, highest qubit first within each size.
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first > b.first;
  });
  for (const auto& [subset, coeff] : terms) {
    std::vector<Control> controls;
    for (std::size_t i = 0; i + 1 < subset.size(); ++i) {
      controls.push_back(builder_detail::on(subset[i]));
    }
    c.add(make_gate(RotationKind::Z(std::log2(static_cast<double>(coeff))), subset.back(),
                    std::move(controls)));
  }
  return c;
}

/// A(j) on qubit j: a product state proportional to sum_x alpha^x |x>.
inline Circuit build_exponential(std::size_t n, double alpha) {
  builder_detail::require_qubits(n, 1, "exponential");
  Circuit c = builder_detail::empty_circuit(n, ExpBase::from_alpha(alpha));
  c.alpha.require_window();
  for (std::size_t q = n; q-- > 0;) {
    c.add(make_gate(RotationKind::A(static_cast<double>(q)), q));
  }
  return c;
}

/// Unmerged half-Gaussian window on the uniform state: B(2j) controlled on
/// qubit j and B(j+k+1) controlled on qubits j<k, each on its own ancilla and
/// measured right after. Post-selected output is proportional to
/// sum_x alpha^(x^2) |x>.
inline Circuit build_half_gaussian(std::size_t n, const ExpBase& alpha) {
  using builder_detail::on;
  builder_detail::require_qubits(n, 2, "half Gaussian");
  alpha.require_window();
  Circuit c = builder_detail::empty_circuit(n, alpha);
  for (std::size_t q = n; q-- > 0;) c.add(make_gate(RotationKind::H(), q));
  for (std::size_t j = 0; j < n; ++j) {
    builder_detail::add_windowed(c, RotationKind::B(2.0 * static_cast<double>(j)), {on(j)});
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      builder_detail::add_windowed(c, RotationKind::B(static_cast<double>(j + k + 1)),
                                   {on(j), on(k)});
    }
  return c;
}

inline Circuit build_half_gaussian(std::size_t n, double alpha) {
  return build_half_gaussian(n, ExpBase::from_alpha(alpha));
}

namespace builder_detail {

/// Merged A rotations on the n-1 core qubits.
inline void add_core_prelude(Circuit& c, std::size_t core) {
  for (std::size_t k = core; k-- > 0;) {
    c.add(make_gate(RotationKind::A(merged_exponent(k)), k));
  }
}

/// Hadamard on the top qubit and open-control CNOTs onto every core qubit;
/// the top-qubit |0> branch is reflected x -> N/2 - 1 - x.
inline void add_symmetrization(Circuit& c, std::size_t n) {
  const Qubit top = n - 1;
  c.add(make_gate(RotationKind::H(), top));
  for (std::size_t k = top; k-- > 0;) {
    c.add(make_gate(RotationKind::CNOT(), k, {Control{top, Polarity::Open}}));
  }
}

}  // namespace builder_detail

/// Full Gaussian proportional to sum_x alpha^((x - (N-1)/2)^2) |x>, unlayered:
/// one ancilla per control pair, each measured right after its rotation.
inline Circuit build_full_gaussian(std::size_t n, const ExpBase& alpha) {
  using builder_detail::on;
  builder_detail::require_qubits(n, 3, "full Gaussian");
  alpha.require_window();
  const std::size_t core = n - 1;
  Circuit c = builder_detail::empty_circuit(n, alpha);
  builder_detail::add_core_prelude(c, core);
  for (std::size_t j = 0; j < core; ++j)
    for (std::size_t k = j + 1; k < core; ++k) {
      builder_detail::add_windowed(c, RotationKind::B(static_cast<double>(j + k + 1)),
                                   {on(j), on(k)});
    }
  builder_detail::add_symmetrization(c, n);
  return c;
}

inline Circuit build_full_gaussian(std::size_t n, double alpha) {
  return build_full_gaussian(n, ExpBase::from_alpha(alpha));
}

/// Layered full Gaussian with the given pair rounds over the n-1 core qubits.
/// Gate i of a round targets ancilla i, so the register holds the size of the
/// largest round.
inline LayeredCircuit build_layered_gaussian(std::size_t n, const ExpBase& alpha,
                                             const std::vector<PairRound>& rounds) {
  using builder_detail::on;
  builder_detail::require_qubits(n, 3, "layered Gaussian");
  alpha.require_window();
  const std::size_t core = n - 1;

  LayeredCircuit lc;
  lc.core_qubits = core;
  lc.prelude = builder_detail::empty_circuit(n, alpha);
  std::size_t width = 0;
  for (const PairRound& r : rounds) width = std::max(width, r.size());
  lc.prelude.ancilla_qubits = width;
  builder_detail::add_core_prelude(lc.prelude, core);

  for (const PairRound& round : rounds) {
    Layer layer;
    for (std::size_t i = 0; i < round.size(); ++i) {
      const auto [j, k] = round[i];
      if (j >= core || k >= core || j >= k) throw ParameterError("pair outside core register");
      layer.gates.push_back(make_gate(RotationKind::B(static_cast<double>(j + k + 1)),
                                      lc.prelude.ancilla(i), {on(j), on(k)}));
    }
    lc.layers.push_back(std::move(layer));
  }

  lc.postlude = builder_detail::empty_circuit(n, alpha);
  lc.postlude.ancilla_qubits = width;
  builder_detail::add_symmetrization(lc.postlude, n);
  return lc;
}

/// Layered full Gaussian with the round-robin packing.
inline LayeredCircuit build_layered_gaussian(std::size_t n, const ExpBase& alpha) {
  builder_detail::require_qubits(n, 3, "layered Gaussian");
  return build_layered_gaussian(n, alpha, pack_layers(n - 1));
}

inline LayeredCircuit build_layered_gaussian(const GaussianSpec& spec) {
  if (spec.mode != GaussianMode::FullGaussian) {
    throw ParameterError("layered builder needs a full Gaussian spec");
  }
  builder_detail::require_qubits(spec.n_qubits, 3, "layered Gaussian");
  return build_layered_gaussian(spec.n_qubits, spec.alpha, pack_layers(spec.n_qubits - 1));
}

/// Two-register Gaussian sum_{x,y} alpha^(Q(x,y)) |x>|y>. The y register is
/// qubits 0..ny-1 and x sits above it, so the basis index is y + 2^ny x.
/// Diagonal terms a 4^j become merged A rotations, within-register pairs
/// become B(log2(a 2^(j+k+1))) and cross-register pairs B(log2(b 2^(j+k))).
inline Circuit build_gaussian_2d(std::size_t nx, std::size_t ny, const QuadraticForm& q,
                                 const ExpBase& alpha) {
  using builder_detail::on;
  builder_detail::require_qubits(nx, 1, "2-D Gaussian x register");
  builder_detail::require_qubits(ny, 1, "2-D Gaussian y register");
  builder_detail::require_qubits(nx + ny, 2, "2-D Gaussian");
  alpha.require_window();
  if (q.xx <= 0 || q.yy <= 0) throw ParameterError("quadratic form needs a positive diagonal");
  if (q.xy < 0) throw ParameterError("negative cross coefficients are not supported");

  Circuit c = builder_detail::empty_circuit(nx + ny, alpha);
  struct Reg {
    Qubit offset;
    std::size_t width;
    double log_coeff;
  };
  const std::array<Reg, 2> regs{Reg{ny, nx, std::log2(static_cast<double>(q.xx))},
                                Reg{0, ny, std::log2(static_cast<double>(q.yy))}};
  for (const Reg& r : regs)
    for (std::size_t j = r.width; j-- > 0;) {
      c.add(make_gate(RotationKind::A(r.log_coeff + 2.0 * static_cast<double>(j)), r.offset + j));
    }
  for (const Reg& r : regs)
    for (std::size_t j = 0; j < r.width; ++j)
      for (std::size_t k = j + 1; k < r.width; ++k) {
        builder_detail::add_windowed(
            c, RotationKind::B(r.log_coeff + static_cast<double>(j + k + 1)),
            {on(r.offset + j), on(r.offset + k)});
      }
  if (q.xy > 0) {
    const double lb = std::log2(static_cast<double>(q.xy));
    for (std::size_t j = 0; j < nx; ++j)
      for (std::size_t k = 0; k < ny; ++k) {
        builder_detail::add_windowed(c, RotationKind::B(lb + static_cast<double>(j + k)),
                                     {on(ny + j), on(k)});
      }
  }
  return c;
}

inline Circuit build_gaussian_2d(std::size_t nx, std::size_t ny,
                                 const std::array<std::array<std::int64_t, 2>, 2>& q,
                                 double alpha) {
  return build_gaussian_2d(nx, ny, QuadraticForm::from_matrix(q), ExpBase::from_alpha(alpha));
}

inline Circuit build_gaussian_2d(std::size_t nx, std::size_t ny, const QuadraticForm& q,
                                 double alpha) {
  return build_gaussian_2d(nx, ny, q, ExpBase::from_alpha(alpha));
}

}  // namespace gausskit
