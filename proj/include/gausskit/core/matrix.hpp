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
#include <complex>
#include <cstddef>

namespace gausskit {

using Complex = std::complex<double>;

/// Dense row-major D x D complex matrix. Only D = 2 and D = 4 are used.
template <std::size_t D>
struct SquareMatrix {
  std::array<Complex, D * D> data{};

  constexpr Complex& operator()(std::size_t r, std::size_t c) {
    return data[r * D + c];
  }
  constexpr const Complex& operator()(std::size_t r, std::size_t c) const {
    return data[r * D + c];
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < D; ++i) m(i, i) = 1.0;
    return m;
  }

  SquareMatrix adjoint() const {
    SquareMatrix m;
    for (std::size_t r = 0; r < D; ++r)
      for (std::size_t c = 0; c < D; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix m;
    for (std::size_t r = 0; r < D; ++r)
      for (std::size_t c = 0; c < D; ++c) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < D; ++k) acc += a(r, k) * b(k, c);
        m(r, c) = acc;
      }
    return m;
  }

  friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix m;
    for (std::size_t i = 0; i < D * D; ++i) m.data[i] = a.data[i] - b.data[i];
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data) s += std::norm(z);
    return std::sqrt(s);
  }
};

using Mat2 = SquareMatrix<2>;
using Mat4 = SquareMatrix<4>;

/// Largest singular value of a 2x2 matrix.
inline double operator_norm(const Mat2& m) {
  const Mat2 h = m.adjoint() * m;
  const double tr = h(0, 0).real() + h(1, 1).real();
  const double det = (h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0)).real();
  const double disc = std::max(0.0, tr * tr - 4.0 * det);
  return std::sqrt(std::max(0.0, 0.5 * (tr + std::sqrt(disc))));
}

/// Largest singular value of a 4x4 matrix by power iteration on M^dagger M.
inline double operator_norm(const Mat4& m) {
  const Mat4 h = m.adjoint() * m;
  std::array<Complex, 4> v{1.0, 0.5, 0.25, 0.125};
  double lambda = 0.0;
  for (int it = 0; it < 500; ++it) {
    std::array<Complex, 4> w{};
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) w[r] += h(r, c) * v[c];
    double n = 0.0;
    for (const auto& z : w) n += std::norm(z);
    n = std::sqrt(n);
    if (n == 0.0) return 0.0;
    for (auto& z : w) z /= n;
    const double prev = lambda;
    lambda = n;
    v = w;
    if (std::abs(lambda - prev) <= 1e-16 * lambda) break;
  }
  return std::sqrt(lambda);
}

inline Mat2 pauli_x() {
  Mat2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

inline Mat2 hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  Mat2 m;
  m(0, 0) = s;
  m(0, 1) = s;
  m(1, 0) = s;
  m(1, 1) = -s;
  return m;
}

}  // namespace gausskit
