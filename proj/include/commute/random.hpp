// Copyright 2026 The Commute Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded sampling helpers. std::mt19937_64's output sequence is fixed by the
// standard; the distributions below are written out by hand so samples are
// identical across standard library implementations.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "commute/core.hpp"

namespace commute {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

/// Index uniform in [0, n).
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n)) % n;
}

/// Standard normal via Box-Muller.
inline double normal(Rng& rng) {
  double u1 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// Entries with real and imaginary parts uniform in [-1, 1).
inline ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  std::vector<Complex> e(rows * cols);
  for (Complex& z : e) {
    const double re = uniform(rng, -1.0, 1.0);
    z = {re, uniform(rng, -1.0, 1.0)};
  }
  return ComplexMatrix(rows, cols, std::move(e));
}

inline std::vector<Complex> random_vector(Rng& rng, std::size_t n) {
  std::vector<Complex> v(n);
  for (Complex& z : v) {
    const double re = uniform(rng, -1.0, 1.0);
    z = {re, uniform(rng, -1.0, 1.0)};
  }
  return v;
}

/// Haar-ish random unitary: Gram-Schmidt on a complex Gaussian matrix.
inline ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
  std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
  for (auto& col : cols)
    for (Complex& z : col) {
      const double re = normal(rng);
      z = {re, normal(rng)};
    }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Complex dot{};
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(cols[j][i]) * cols[k][i];
      for (std::size_t i = 0; i < n; ++i) cols[k][i] -= dot * cols[j][i];
    }
    double norm = 0.0;
    for (const Complex& z : cols[k]) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (Complex& z : cols[k]) z /= norm;
  }
  ComplexMatrix u(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) u.set(r, c, cols[c][r]);
  return u;
}

}  // namespace commute
