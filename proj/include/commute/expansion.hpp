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

// Expansion of matrices in an operator family through Hilbert-Schmidt inner
// products. The Gram system is solved directly, so the family need not be
// orthogonal or even linearly independent.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "commute/bases.hpp"
#include "commute/core.hpp"

namespace commute {

inline constexpr std::size_t kMaxExpansionBasis = 256;

struct ExpansionResult {
  std::vector<Complex> coefficients;  // aligned with basis element order
  double residual_frob = 0.0;
  double gram_condition_estimate = 1.0;
  std::size_t rank = 0;
  bool singular = false;      // Gram matrix was rank deficient; least-squares solve
  bool orthogonal = false;    // diagonal Gram fast path was taken
};

/// G[a][c] = Tr(B_a^dagger B_c).
inline ComplexMatrix gram(const MatrixBasis& b) {
  if (b.elements.empty()) throw InvalidArgument("gram: empty basis");
  const std::size_t k = b.size();
  ComplexMatrix g(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t c = a; c < k; ++c) {
      const Complex v = hs_inner(b.elements[a], b.elements[c]);
      g.set(a, c, v);
      if (c != a) g.set(c, a, std::conj(v));
    }
  return g;
}

namespace expansion_detail {

/// Solution of G X = V for every column of V (row-major k x m).
struct GramSolution {
  std::vector<Complex> x;
  std::size_t rank = 0;
  bool singular = false;
  bool orthogonal = false;
  double condition = 1.0;
};

/// Gaussian elimination with partial pivoting. A column whose best pivot is
/// below 1e-12 * max|G| is treated as dependent: its unknown is fixed at zero
/// and elimination continues, which gives a least-squares solution for the
/// consistent Gram systems produced here.
inline GramSolution solve_gram(const ComplexMatrix& g, std::vector<Complex> v, std::size_t m) {
  const std::size_t k = g.rows();
  GramSolution sol;
  const double scale = max_abs(g);
  const double threshold = 1e-12 * scale;

  double off_diag = 0.0;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      if (r != c) off_diag = std::max(off_diag, std::abs(g(r, c)));

  if (off_diag <= threshold) {
    sol.orthogonal = true;
    double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
    sol.x.assign(k * m, Complex{});
    for (std::size_t r = 0; r < k; ++r) {
      const Complex d = g(r, r);
      if (std::abs(d) <= threshold) {
        sol.singular = true;
        continue;
      }
      ++sol.rank;
      dmax = std::max(dmax, std::abs(d));
      dmin = std::min(dmin, std::abs(d));
      for (std::size_t j = 0; j < m; ++j) sol.x[r * m + j] = v[r * m + j] / d;
    }
    sol.condition = sol.rank ? dmax / dmin : std::numeric_limits<double>::infinity();
    return sol;
  }

  std::vector<Complex> a(g.entries().begin(), g.entries().end());
  std::vector<std::size_t> pivot_col;  // pivot column of each eliminated row
  double pmax = 0.0, pmin = std::numeric_limits<double>::infinity();
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < k; ++col) {
    std::size_t best = row;
    for (std::size_t r = row + 1; r < k; ++r)
      if (std::abs(a[r * k + col]) > std::abs(a[best * k + col])) best = r;
    const double piv = std::abs(a[best * k + col]);
    if (piv <= threshold) {
      sol.singular = true;
      continue;
    }
    if (best != row) {
      for (std::size_t c = 0; c < k; ++c) std::swap(a[row * k + c], a[best * k + c]);
      for (std::size_t j = 0; j < m; ++j) std::swap(v[row * m + j], v[best * m + j]);
    }
    pmax = std::max(pmax, piv);
    pmin = std::min(pmin, piv);
    const Complex p = a[row * k + col];
    for (std::size_t r = row + 1; r < k; ++r) {
      const Complex f = a[r * k + col] / p;
      if (f == Complex{}) continue;
      for (std::size_t c = col; c < k; ++c) a[r * k + c] -= f * a[row * k + c];
      for (std::size_t j = 0; j < m; ++j) v[r * m + j] -= f * v[row * m + j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (pivot_col.size() < k) sol.singular = true;
  sol.rank = pivot_col.size();
  sol.condition = sol.rank ? pmax / pmin : std::numeric_limits<double>::infinity();

  sol.x.assign(k * m, Complex{});
  for (std::size_t rr = pivot_col.size(); rr-- > 0;) {
    const std::size_t col = pivot_col[rr];
    for (std::size_t j = 0; j < m; ++j) {
      Complex acc = v[rr * m + j];
      for (std::size_t c = col + 1; c < k; ++c) acc -= a[rr * k + c] * sol.x[c * m + j];
      sol.x[col * m + j] = acc / a[rr * k + col];
    }
  }
  return sol;
}

inline void check_basis(const MatrixBasis& b) {
  if (b.elements.empty()) throw InvalidArgument("expansion: empty basis");
  if (b.size() > kMaxExpansionBasis) {
    throw DimensionError("expansion: basis has more than " +
                         std::to_string(kMaxExpansionBasis) + " elements");
  }
}

}  // namespace expansion_detail

/// sum_i c_i B_i.
inline ComplexMatrix reconstruct(std::span<const Complex> c, const MatrixBasis& b) {
  if (c.size() != b.size()) {
    throw ShapeError("reconstruct: " + std::to_string(c.size()) + " coefficients for " +
                     std::to_string(b.size()) + " elements");
  }
  ComplexMatrix out(b.dim, b.dim);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == Complex{}) continue;
    out += c[i] * b.elements[i];
  }
  return out;
}

/// Coefficients c minimising ||m - sum c_i B_i||_F, from G c = v with v_a = <B_a, m>.
inline ExpansionResult expand(const ComplexMatrix& m, const MatrixBasis& b) {
  expansion_detail::check_basis(b);
  if (!m.is_square() || m.rows() != b.dim) {
    throw ShapeError("expand: matrix " + shape_string(m) + " vs basis dim " +
                     std::to_string(b.dim));
  }
  std::vector<Complex> v(b.size());
  for (std::size_t a = 0; a < b.size(); ++a) v[a] = hs_inner(b.elements[a], m);
  const auto sol = expansion_detail::solve_gram(gram(b), std::move(v), 1);

  ExpansionResult res;
  res.coefficients = sol.x;
  res.rank = sol.rank;
  res.singular = sol.singular;
  res.orthogonal = sol.orthogonal;
  res.gram_condition_estimate = sol.condition;
  res.residual_frob = frob_dist(reconstruct(res.coefficients, b), m);
  return res;
}

/// Coefficients C[a][c] of m over the products B_a kron B_c.
struct KronPairExpansion {
  ComplexMatrix coefficients;
  double residual_frob = 0.0;
  bool singular = false;

  /// True when every off-diagonal coefficient has modulus <= tol.
  bool is_diagonal(double tol) const {
    for (std::size_t r = 0; r < coefficients.rows(); ++r)
      for (std::size_t c = 0; c < coefficients.cols(); ++c)
        if (r != c && std::abs(coefficients(r, c)) > tol) return false;
    return true;
  }
};

/// The pair Gram matrix is G kron G, so the k^2 x k^2 system reduces to
/// G C G^T = V, solved as two k x k solves.
inline KronPairExpansion expand_kron_pair(const ComplexMatrix& m, const MatrixBasis& b) {
  expansion_detail::check_basis(b);
  const std::size_t d = b.dim;
  const std::size_t k = b.size();
  if (!m.is_square() || m.rows() != d * d) {
    throw ShapeError("expand_kron_pair: matrix " + shape_string(m) + " vs basis dim " +
                     std::to_string(d) + "^2");
  }
  // W_a = sum_{r1,c1} conj(B_a[r1,c1]) * block(r1,c1) of m; V[a][c] = <B_c, W_a>.
  std::vector<Complex> vmat(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    const ComplexMatrix& ba = b.elements[a];
    std::vector<Complex> w(d * d);
    for (std::size_t r1 = 0; r1 < d; ++r1)
      for (std::size_t c1 = 0; c1 < d; ++c1) {
        const Complex f = std::conj(ba(r1, c1));
        if (f == Complex{}) continue;
        for (std::size_t r2 = 0; r2 < d; ++r2)
          for (std::size_t c2 = 0; c2 < d; ++c2) w[r2 * d + c2] += f * m(r1 * d + r2, c1 * d + c2);
      }
    for (std::size_t c = 0; c < k; ++c) {
      const auto bc = b.elements[c].entries();
      Complex acc{};
      for (std::size_t e = 0; e < d * d; ++e) acc += std::conj(bc[e]) * w[e];
      vmat[a * k + c] = acc;
    }
  }

  const ComplexMatrix g = gram(b);
  // G X = V gives X = C G^T; then G C^T = X^T.
  const auto first = expansion_detail::solve_gram(g, std::move(vmat), k);
  std::vector<Complex> xt(k * k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) xt[c * k + r] = first.x[r * k + c];
  const auto second = expansion_detail::solve_gram(g, std::move(xt), k);

  std::vector<Complex> coeffs(k * k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) coeffs[r * k + c] = second.x[c * k + r];

  KronPairExpansion res{ComplexMatrix(k, k, std::move(coeffs)), 0.0,
                        first.singular || second.singular};
  ComplexMatrix rebuilt(d * d, d * d);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t c = 0; c < k; ++c) {
      const Complex coef = res.coefficients(a, c);
      if (coef != Complex{}) rebuilt.add_kron(coef, b.elements[a], b.elements[c]);
    }
  res.residual_frob = frob_dist(rebuilt, m);
  return res;
}

}  // namespace commute
