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

#pragma once

#include <cstddef>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "commute/core.hpp"
#include "commute/matc.hpp"
#include "commute/report.hpp"

namespace commute {

/// Permutation matrix stored as an image map: column k holds its single 1 in
/// row image[k], so the matrix sends basis vector e_k to e_{image[k]}.
class PermutationMatrix {
 public:
  explicit PermutationMatrix(std::vector<std::size_t> image) : image_(std::move(image)) {
    if (image_.empty()) throw InvalidArgument("permutation size must be positive");
    if (image_.size() > kDimensionCap) throw DimensionError("permutation exceeds dimension cap");
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t v : image_) {
      if (v >= image_.size() || seen[v]) {
        throw InvalidArgument("image is not a bijection on [0, " +
                              std::to_string(image_.size()) + ")");
      }
      seen[v] = true;
    }
  }

  static PermutationMatrix identity(std::size_t n) {
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{0});
    return PermutationMatrix(std::move(image));
  }

  std::size_t size() const { return image_.size(); }
  std::span<const std::size_t> image() const { return image_; }
  std::size_t operator[](std::size_t k) const { return image_[k]; }

  bool is_identity() const {
    for (std::size_t k = 0; k < image_.size(); ++k)
      if (image_[k] != k) return false;
    return true;
  }

  PermutationMatrix inverse() const {
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t k = 0; k < image_.size(); ++k) inv[image_[k]] = k;
    return PermutationMatrix(std::move(inv));
  }

  friend bool operator==(const PermutationMatrix&, const PermutationMatrix&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// Matrix product a*b as permutations: image[k] = a[b[k]].
inline PermutationMatrix compose(const PermutationMatrix& a, const PermutationMatrix& b) {
  if (a.size() != b.size()) throw ShapeError("compose: size mismatch");
  std::vector<std::size_t> image(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) image[k] = a[b[k]];
  return PermutationMatrix(std::move(image));
}

/// Tensor commutation matrix S_{n,p}: S (a kron b) = b kron a for a in C^n,
/// b in C^p. Composite index i*p + j maps to j*n + i.
inline PermutationMatrix build_tcm(std::size_t n, std::size_t p) {
  if (n == 0 || p == 0) throw InvalidArgument("build_tcm: n and p must be positive");
  if (n > kDimensionCap / p) {
    throw DimensionError("build_tcm: n*p exceeds dimension cap");
  }
  std::vector<std::size_t> image(n * p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j) image[i * p + j] = j * n + i;
  return PermutationMatrix(std::move(image));
}

inline ComplexMatrix to_dense(const PermutationMatrix& s) {
  ComplexMatrix m(s.size(), s.size());
  for (std::size_t k = 0; k < s.size(); ++k) m.set(s[k], k, 1.0);
  return m;
}

/// out[image[k]] = v[k]; O(N).
inline std::vector<Complex> apply_perm(const PermutationMatrix& s,
                                       std::span<const Complex> v) {
  if (v.size() != s.size()) {
    throw ShapeError("apply_perm: vector length " + std::to_string(v.size()) +
                     " != permutation size " + std::to_string(s.size()));
  }
  std::vector<Complex> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[s[k]] = v[k];
  return out;
}

/// S * m, as a row permutation.
inline ComplexMatrix permute_rows(const PermutationMatrix& s, const ComplexMatrix& m) {
  if (m.rows() != s.size()) throw ShapeError("permute_rows: size mismatch");
  std::vector<Complex> out(m.rows() * m.cols());
  const auto src = m.entries();
  for (std::size_t k = 0; k < s.size(); ++k)
    std::copy_n(&src[k * m.cols()], m.cols(), &out[s[k] * m.cols()]);
  return ComplexMatrix(m.rows(), m.cols(), std::move(out));
}

/// m * S, as a column permutation: column k of the result is column image[k] of m.
inline ComplexMatrix permute_cols(const ComplexMatrix& m, const PermutationMatrix& s) {
  if (m.cols() != s.size()) throw ShapeError("permute_cols: size mismatch");
  std::vector<Complex> out(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t k = 0; k < s.size(); ++k) out[r * m.cols() + k] = m(r, s[k]);
  return ComplexMatrix(m.rows(), m.cols(), std::move(out));
}

/// Checks S_{n,p} (A kron B) == (B kron A) S_{n,p}.
inline VerificationReport commute_check(std::size_t n, std::size_t p,
                                        const ComplexMatrix& a, const ComplexMatrix& b,
                                        Tolerance tol = {}) {
  if (a.rows() != n || a.cols() != n || b.rows() != p || b.cols() != p) {
    throw ShapeError("commute_check: expected A " + std::to_string(n) + "x" +
                     std::to_string(n) + " and B " + std::to_string(p) + "x" +
                     std::to_string(p) + ", got " + shape_string(a) + " and " +
                     shape_string(b));
  }
  const PermutationMatrix s = build_tcm(n, p);
  const ComplexMatrix left = permute_rows(s, kron(a, b));
  const ComplexMatrix right = permute_cols(kron(b, a), s);
  return compare_matrices("tcm-commutes(" + std::to_string(n) + "," + std::to_string(p) + ")",
                          left, right, tol);
}

// PERM v1 text format: `PERM 1`, then N, then N image integers.

inline void write_perm(std::ostream& out, const PermutationMatrix& s) {
  out << "PERM 1\n" << s.size() << '\n';
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out << ' ';
    out << s[k];
  }
  out << '\n';
}

inline PermutationMatrix read_perm(std::istream& in) {
  using namespace io_detail;
  LineReader reader(in);
  expect_header(reader, "PERM");
  std::string line;
  if (!reader.next_nonblank(line)) throw ParseError(reader.number() + 1, 1, "missing size");
  auto tokens = split_tokens(line);
  const auto n = parse_size(tokens[0].text);
  if (!n || *n == 0 || *n > kDimensionCap) {
    throw ParseError(reader.number(), tokens[0].column, "bad permutation size");
  }
  std::vector<std::size_t> image;
  image.reserve(*n);
  auto consume = [&](std::span<const Token> toks) {
    for (const Token& t : toks) {
      if (image.size() == *n) throw ParseError(reader.number(), t.column, "too many entries");
      const auto v = parse_size(t.text);
      if (!v || *v >= *n) throw ParseError(reader.number(), t.column, "bad image entry");
      image.push_back(*v);
    }
  };
  consume(std::span<const Token>(tokens).subspan(1));
  while (image.size() < *n) {
    if (!reader.next_nonblank(line)) {
      throw ParseError(reader.number() + 1, 1,
                       "expected " + std::to_string(*n) + " entries, got " +
                           std::to_string(image.size()));
    }
    tokens = split_tokens(line);
    consume(tokens);
  }
  expect_end(reader);
  try {
    return PermutationMatrix(std::move(image));
  } catch (const InvalidArgument& e) {
    throw ParseError(reader.number(), 1, e.what());
  }
}

inline void save_perm(const std::string& path, const PermutationMatrix& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  write_perm(out, s);
}

inline PermutationMatrix load_perm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_perm(in);
}

}  // namespace commute
