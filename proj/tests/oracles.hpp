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

// Reference implementations for tests. Nothing here calls into the library
// beyond the ComplexMatrix container, so results are independent.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "commute/core.hpp"

namespace oracle {

using commute::Complex;
using commute::ComplexMatrix;

inline Complex cube_root() { return std::polar(1.0, 2.0 * std::numbers::pi / 3.0); }

/// Entry-by-entry definition of the Kronecker product.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      out.set(i, j, a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols()));
  return out;
}

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex s{};
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      out.set(i, j, s);
    }
  return out;
}

inline ComplexMatrix basis_vector(std::size_t n, std::size_t i) {
  ComplexMatrix v(n, 1);
  v.set(i, 0, 1.0);
  return v;
}

/// S_{n,p} from its definition: column of e_i kron e_j is e_j kron e_i.
inline ComplexMatrix swap(std::size_t n, std::size_t p) {
  ComplexMatrix s(n * p, n * p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      const ComplexMatrix in = oracle::kron(basis_vector(n, i), basis_vector(p, j));
      const ComplexMatrix out = oracle::kron(basis_vector(p, j), basis_vector(n, i));
      std::size_t col = 0, row = 0;
      for (std::size_t k = 0; k < n * p; ++k) {
        if (in(k, 0) == 1.0) col = k;
        if (out(k, 0) == 1.0) row = k;
      }
      s.set(row, col, 1.0);
    }
  return s;
}

inline double max_dev(const ComplexMatrix& a, const ComplexMatrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

inline double frob2(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j));
  return s;
}

/// Parses rows like "0 q 0; 0 0 q2; 1 0 0" where q and j are the cube root
/// of unity and a trailing 2 squares it.
inline ComplexMatrix parse(const std::string& text) {
  std::vector<std::vector<Complex>> rows(1);
  std::string spaced;
  for (char ch : text) {
    if (ch == ';') spaced += " ; ";
    else spaced += ch;
  }
  std::istringstream in(spaced);
  std::string tok;
  while (in >> tok) {
    if (tok == ";") {
      rows.emplace_back();
      continue;
    }
    Complex v;
    if (tok == "q" || tok == "j") v = cube_root();
    else if (tok == "q2" || tok == "j2") v = cube_root() * cube_root();
    else v = std::stod(tok);
    rows.back().push_back(v);
  }
  if (rows.back().empty()) rows.pop_back();
  ComplexMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
  return m;
}

// Matrices as printed in the source text.

inline ComplexMatrix printed_swap_2x2() {
  return parse("1 0 0 0; 0 0 1 0; 0 1 0 0; 0 0 0 1");
}

inline ComplexMatrix printed_swap_3x3() {
  return parse(
      "1 0 0 0 0 0 0 0 0; 0 0 0 1 0 0 0 0 0; 0 0 0 0 0 0 1 0 0;"
      "0 1 0 0 0 0 0 0 0; 0 0 0 0 1 0 0 0 0; 0 0 0 0 0 0 0 1 0;"
      "0 0 1 0 0 0 0 0 0; 0 0 0 0 0 1 0 0 0; 0 0 0 0 0 0 0 0 1");
}

inline ComplexMatrix printed_p() {
  return parse(
      "0 0 0 0 1 0 0 0 0; 0 1 0 0 0 0 0 0 0; 0 0 0 0 0 0 0 1 0;"
      "0 0 0 1 0 0 0 0 0; 1 0 0 0 0 0 0 0 0; 0 0 0 0 0 0 1 0 0;"
      "0 0 0 0 0 1 0 0 0; 0 0 1 0 0 0 0 0 0; 0 0 0 0 0 0 0 0 1");
}

inline std::vector<ComplexMatrix> printed_kibler() {
  return {parse("1 0 0; 0 1 0; 0 0 1"),  parse("0 1 0; 0 0 1; 1 0 0"),
          parse("0 0 1; 1 0 0; 0 1 0"),  parse("1 0 0; 0 q 0; 0 0 q2"),
          parse("1 0 0; 0 q2 0; 0 0 q"), parse("0 q 0; 0 0 q2; 1 0 0"),
          parse("0 0 q; 1 0 0; 0 q2 0"), parse("0 0 q2; 1 0 0; 0 q 0"),
          parse("0 q2 0; 0 0 q; 1 0 0")};
}

inline std::vector<ComplexMatrix> printed_nonions() {
  return {parse("1 0 0; 0 1 0; 0 0 1"),  parse("0 1 0; 0 0 1; 1 0 0"),
          parse("0 1 0; 0 0 j; j2 0 0"), parse("0 1 0; 0 0 j2; j 0 0"),
          parse("0 0 1; 1 0 0; 0 1 0"),  parse("0 0 j; 1 0 0; 0 j2 0"),
          parse("0 0 j2; 1 0 0; 0 j 0"), parse("j 0 0; 0 j2 0; 0 0 1"),
          parse("j2 0 0; 0 j 0; 0 0 1")};
}

inline std::vector<ComplexMatrix> paulis() {
  const Complex i{0.0, 1.0};
  return {parse("1 0; 0 1"), parse("0 1; 1 0"),
          ComplexMatrix::from_rows({{0.0, -i}, {i, 0.0}}), parse("1 0; 0 -1")};
}

/// Scalar function of a flat real parameter vector: central differences.
inline std::vector<double> central_difference(const std::function<double(const std::vector<double>&)>& f,
                                              std::vector<double> x, double h) {
  std::vector<double> g(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double x0 = x[k];
    x[k] = x0 + h;
    const double fp = f(x);
    x[k] = x0 - h;
    const double fm = f(x);
    x[k] = x0;
    g[k] = (fp - fm) / (2.0 * h);
  }
  return g;
}

}  // namespace oracle
