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

// Generalized Pauli families: Pauli, Gell-Mann (plain and rescaled), the
// Kibler and nonion 3x3 families, and n-fold Pauli strings.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "commute/core.hpp"

namespace commute {

/// Named, ordered family of dim x dim matrices.
///
/// `hs_norm` is the expected Tr(B^dagger B) of non-identity elements; the
/// identity element (if present) has norm `dim`.
struct MatrixBasis {
  std::string name;
  std::size_t dim = 0;
  std::vector<ComplexMatrix> elements;
  std::optional<std::size_t> identity_index;
  double hs_norm = 0.0;

  std::size_t size() const { return elements.size(); }

  bool is_identity_element(std::size_t i) const {
    return identity_index && *identity_index == i;
  }

  /// Expected HS self inner product of element i.
  double expected_norm(std::size_t i) const {
    return is_identity_element(i) ? static_cast<double>(dim) : hs_norm;
  }
};

inline MatrixBasis pauli() {
  const Complex i{0.0, 1.0};
  MatrixBasis b;
  b.name = "pauli";
  b.dim = 2;
  b.elements = {
      ComplexMatrix::identity(2),
      ComplexMatrix::from_rows({{0, 1}, {1, 0}}),
      ComplexMatrix::from_rows({{0, -i}, {i, 0}}),
      ComplexMatrix::from_rows({{1, 0}, {0, -1}}),
  };
  b.identity_index = 0;
  b.hs_norm = 2.0;
  return b;
}

/// The n^2-1 generalized Gell-Mann matrices, normalized to Tr(L_a L_b) = 2 delta_ab.
///
/// Order: symmetric E_jk + E_kj for j < k (lexicographic), then the
/// antisymmetric -i(E_jk - E_kj) in the same order, then the diagonal
/// elements sqrt(2/(l(l+1))) (E_11 + ... + E_ll - l E_{l+1,l+1}), l = 1..n-1.
inline MatrixBasis gell_mann(std::size_t n) {
  if (n < 2) throw InvalidArgument("gell_mann: n must be >= 2");
  if (n > 1024) throw DimensionError("gell_mann: n too large");
  const Complex i{0.0, 1.0};
  MatrixBasis b;
  b.name = "gell-mann";
  b.dim = n;
  b.hs_norm = 2.0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      ComplexMatrix m(n, n);
      m.set(j, k, 1.0);
      m.set(k, j, 1.0);
      b.elements.push_back(std::move(m));
    }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      ComplexMatrix m(n, n);
      m.set(j, k, -i);
      m.set(k, j, i);
      b.elements.push_back(std::move(m));
    }
  for (std::size_t l = 1; l < n; ++l) {
    const double ld = static_cast<double>(l);
    const double scale = std::sqrt(2.0 / (ld * (ld + 1.0)));
    ComplexMatrix m(n, n);
    for (std::size_t d = 0; d < l; ++d) m.set(d, d, scale);
    m.set(l, l, -ld * scale);
    b.elements.push_back(std::move(m));
  }
  return b;
}

/// Gell-Mann matrices rescaled by sqrt(n/2), so Tr(s_a s_b) = n delta_ab.
inline MatrixBasis scaled_gell_mann(std::size_t n) {
  MatrixBasis b = gell_mann(n);
  const double scale = std::sqrt(static_cast<double>(n) / 2.0);
  for (ComplexMatrix& m : b.elements) m *= scale;
  b.name = "scaled-gell-mann";
  b.hs_norm = static_cast<double>(n);
  return b;
}

/// The nine 3x3 Kibler matrices k_1..k_9 (stored at indices 0..8), with q the
/// primitive cube root of unity. k_1 is the identity.
inline MatrixBasis kibler() {
  const Complex q = cube_root_of_unity();
  const Complex q2 = q * q;
  MatrixBasis b;
  b.name = "kibler";
  b.dim = 3;
  b.elements = {
      ComplexMatrix::identity(3),
      ComplexMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}),
      ComplexMatrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}),
      ComplexMatrix::from_rows({{1, 0, 0}, {0, q, 0}, {0, 0, q2}}),
      ComplexMatrix::from_rows({{1, 0, 0}, {0, q2, 0}, {0, 0, q}}),
      ComplexMatrix::from_rows({{0, q, 0}, {0, 0, q2}, {1, 0, 0}}),
      ComplexMatrix::from_rows({{0, 0, q}, {1, 0, 0}, {0, q2, 0}}),
      ComplexMatrix::from_rows({{0, 0, q2}, {1, 0, 0}, {0, q, 0}}),
      ComplexMatrix::from_rows({{0, q2, 0}, {0, 0, q}, {1, 0, 0}}),
  };
  b.identity_index = 0;
  b.hs_norm = 3.0;
  return b;
}

/// The nine nonions q_0..q_8 with j the primitive cube root of unity.
inline MatrixBasis nonions() {
  const Complex j = cube_root_of_unity();
  const Complex j2 = j * j;
  MatrixBasis b;
  b.name = "nonions";
  b.dim = 3;
  b.elements = {
      ComplexMatrix::identity(3),
      ComplexMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}),
      ComplexMatrix::from_rows({{0, 1, 0}, {0, 0, j}, {j2, 0, 0}}),
      ComplexMatrix::from_rows({{0, 1, 0}, {0, 0, j2}, {j, 0, 0}}),
      ComplexMatrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}),
      ComplexMatrix::from_rows({{0, 0, j}, {1, 0, 0}, {0, j2, 0}}),
      ComplexMatrix::from_rows({{0, 0, j2}, {1, 0, 0}, {0, j, 0}}),
      ComplexMatrix::from_rows({{j, 0, 0}, {0, j2, 0}, {0, 0, 1}}),
      ComplexMatrix::from_rows({{j2, 0, 0}, {0, j, 0}, {0, 0, 1}}),
  };
  b.identity_index = 0;
  b.hs_norm = 3.0;
  return b;
}

/// Digits (i_1, ..., i_n) of a Pauli-string index, i_1 most significant.
inline std::vector<std::size_t> pauli_string_digits(std::size_t index, std::size_t n) {
  std::vector<std::size_t> digits(n);
  for (std::size_t k = n; k-- > 0;) {
    digits[k] = index % 4;
    index /= 4;
  }
  return digits;
}

/// The 4^n products sigma_{i_1} kron ... kron sigma_{i_n}, in base-4 index order.
inline MatrixBasis pauli_strings(std::size_t n) {
  if (n < 1) throw InvalidArgument("pauli_strings: n must be >= 1");
  // 4^n elements of 2^n x 2^n entries; 8 keeps the family under 2^30 entries.
  if (n > 8) throw DimensionError("pauli_strings: n too large");
  const MatrixBasis p = pauli();
  MatrixBasis b;
  b.name = "pauli-strings";
  b.dim = std::size_t{1} << n;
  b.identity_index = 0;
  b.hs_norm = static_cast<double>(b.dim);
  std::vector<ComplexMatrix> current = p.elements;
  for (std::size_t level = 1; level < n; ++level) {
    std::vector<ComplexMatrix> next;
    next.reserve(current.size() * 4);
    for (const ComplexMatrix& prefix : current)
      for (const ComplexMatrix& s : p.elements) next.push_back(kron(prefix, s));
    current = std::move(next);
  }
  b.elements = std::move(current);
  return b;
}

/// Family with the identity prepended (if it has none); makes Gell-Mann spanning.
inline MatrixBasis with_identity(MatrixBasis b) {
  if (b.identity_index) return b;
  b.elements.insert(b.elements.begin(), ComplexMatrix::identity(b.dim));
  b.identity_index = 0;
  b.name += "+identity";
  return b;
}

/// Family of all products B_a kron B_c, index a*size + c.
inline MatrixBasis product_basis(const MatrixBasis& b) {
  MatrixBasis out;
  out.name = b.name + "-pairs";
  out.dim = b.dim * b.dim;
  out.hs_norm = b.hs_norm * b.hs_norm;
  out.elements.reserve(b.size() * b.size());
  for (const ComplexMatrix& x : b.elements)
    for (const ComplexMatrix& y : b.elements) out.elements.push_back(kron(x, y));
  if (b.identity_index) out.identity_index = *b.identity_index * b.size() + *b.identity_index;
  return out;
}

inline const std::vector<std::string_view>& family_names() {
  static const std::vector<std::string_view> names = {
      "pauli", "gell-mann", "scaled-gell-mann", "kibler", "nonions", "pauli-strings"};
  return names;
}

inline bool family_is_parametric(std::string_view name) {
  return name == "gell-mann" || name == "scaled-gell-mann" || name == "pauli-strings";
}

/// Looks a family up by name. Parametric families require n.
inline MatrixBasis family_by_name(std::string_view name, std::optional<std::size_t> n = {}) {
  if (family_is_parametric(name) && !n) {
    throw InvalidArgument("family '" + std::string(name) + "' requires n");
  }
  if (name == "pauli") return pauli();
  if (name == "gell-mann") return gell_mann(*n);
  if (name == "scaled-gell-mann") return scaled_gell_mann(*n);
  if (name == "kibler") return kibler();
  if (name == "nonions") return nonions();
  if (name == "pauli-strings") return pauli_strings(*n);
  throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

struct ElementProperties {
  double hermitian_dev = 0.0;
  double involution_dev = 0.0;
  double unitarity_dev = 0.0;
  double trace_abs = 0.0;
  bool hermitian = false;
  bool involutory = false;
  bool unitary = false;
  bool traceless = false;
};

struct PropertyReport {
  std::string basis;
  double tolerance = 0.0;
  std::vector<ElementProperties> elements;
  /// max over pairs (a, b) of |Tr(B_a^dagger B_b) - norm_a delta_ab|.
  double orthogonality_dev = 0.0;
  bool hermitian = true;
  bool involutory = true;
  bool unitary = true;
  bool traceless = true;  // non-identity elements only
  bool orthogonal = true;
};

inline PropertyReport check_properties(const MatrixBasis& b, Tolerance tol = {}) {
  PropertyReport rep;
  rep.basis = b.name;
  rep.tolerance = tol.atol;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const ComplexMatrix& m = b.elements[i];
    ElementProperties e;
    e.hermitian_dev = hermitian_deviation(m);
    e.involution_dev = involution_deviation(m);
    e.unitarity_dev = unitarity_deviation(m);
    e.trace_abs = std::abs(trace(m));
    e.hermitian = e.hermitian_dev <= tol.atol;
    e.involutory = e.involution_dev <= tol.atol;
    e.unitary = e.unitarity_dev <= tol.atol;
    e.traceless = e.trace_abs <= tol.atol;
    rep.hermitian = rep.hermitian && e.hermitian;
    rep.involutory = rep.involutory && e.involutory;
    rep.unitary = rep.unitary && e.unitary;
    if (!b.is_identity_element(i)) rep.traceless = rep.traceless && e.traceless;
    rep.elements.push_back(e);
  }
  for (std::size_t a = 0; a < b.size(); ++a)
    for (std::size_t c = a; c < b.size(); ++c) {
      const Complex g = hs_inner(b.elements[a], b.elements[c]);
      const double expect = a == c ? b.expected_norm(a) : 0.0;
      rep.orthogonality_dev = std::max(rep.orthogonality_dev, std::abs(g - expect));
    }
  rep.orthogonal = rep.orthogonality_dev <= tol.atol;
  return rep;
}

}  // namespace commute
