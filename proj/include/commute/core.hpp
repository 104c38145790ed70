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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace commute {

using Complex = std::complex<double>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible with the requested operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A result would exceed the per-side dimension cap.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Bad argument value (non-finite entry, negative tolerance, bad n, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Maximum number of rows or columns any matrix may have.
inline constexpr std::size_t kDimensionCap = std::size_t{1} << 20;

/// Absolute tolerance applied to the maximum entrywise deviation.
struct Tolerance {
  double atol = 1e-10;

  Tolerance() = default;
  explicit Tolerance(double a) : atol(a) {
    if (!(a >= 0.0) || !std::isfinite(a)) {
      throw InvalidArgument("tolerance must be finite and non-negative");
    }
  }
};

/// Primitive cube root of unity exp(2*pi*i/3).
inline Complex cube_root_of_unity() {
  return {-0.5, std::numbers::sqrt3 / 2.0};
}

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Dense row-major complex matrix. Entries are always finite.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols) {
    check_shape(rows, cols);
    data_.assign(rows * cols, Complex{});
  }

  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    check_shape(rows, cols);
    if (data_.size() != rows * cols) {
      throw ShapeError("entry count " + std::to_string(data_.size()) +
                       " does not match " + std::to_string(rows) + "x" +
                       std::to_string(cols));
    }
    for (const Complex& z : data_) {
      if (!is_finite(z)) throw InvalidArgument("matrix entries must be finite");
    }
  }

  /// Row-by-row literal, e.g. from_rows({{0, 1}, {1, 0}}).
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Complex> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw ShapeError("ragged row literal");
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return ComplexMatrix(r, c, std::move(entries));
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void set(std::size_t r, std::size_t c, Complex value) {
    if (r >= rows_ || c >= cols_) throw ShapeError("index out of range");
    if (!is_finite(value)) throw InvalidArgument("matrix entries must be finite");
    data_[r * cols_ + c] = value;
  }

  std::span<const Complex> entries() const { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other) {
    require_same_shape(other, "+=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& other) {
    require_same_shape(other, "-=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
  }

  ComplexMatrix& operator*=(Complex scale) {
    if (!is_finite(scale)) throw InvalidArgument("scale must be finite");
    for (Complex& z : data_) z *= scale;
    return *this;
  }

  /// Adds scale * (a kron b) in place, without materialising the product.
  ComplexMatrix& add_kron(Complex scale, const ComplexMatrix& a,
                          const ComplexMatrix& b) {
    if (a.rows_ * b.rows_ != rows_ || a.cols_ * b.cols_ != cols_) {
      throw ShapeError("add_kron: operand shapes do not tile the target");
    }
    for (std::size_t ra = 0; ra < a.rows_; ++ra) {
      for (std::size_t ca = 0; ca < a.cols_; ++ca) {
        const Complex f = scale * a(ra, ca);
        if (f == Complex{}) continue;
        for (std::size_t rb = 0; rb < b.rows_; ++rb) {
          Complex* dst = &data_[(ra * b.rows_ + rb) * cols_ + ca * b.cols_];
          const Complex* src = &b.data_[rb * b.cols_];
          for (std::size_t cb = 0; cb < b.cols_; ++cb) dst[cb] += f * src[cb];
        }
      }
    }
    return *this;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  static void check_shape(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
      throw ShapeError("matrix dimensions must be positive");
    }
    if (rows > kDimensionCap || cols > kDimensionCap) {
      throw DimensionError("matrix dimension exceeds cap of " +
                           std::to_string(kDimensionCap));
    }
  }

  void require_same_shape(const ComplexMatrix& other, const char* op) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw ShapeError(std::string(op) + ": shape mismatch");
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

inline ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  return a += b;
}
inline ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  return a -= b;
}
inline ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
inline ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }

inline std::string shape_string(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

/// Kronecker product: entry (ra*b.rows + rb, ca*b.cols + cb) is a(ra,ca)*b(rb,cb).
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > kDimensionCap || cols > kDimensionCap) {
    throw DimensionError("kron result " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " exceeds dimension cap");
  }
  ComplexMatrix out(rows, cols);
  out.add_kron(1.0, a, b);
  return out;
}

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: " + shape_string(a) + " * " + shape_string(b));
  }
  std::vector<Complex> out(a.rows() * b.cols());
  const auto bd = b.entries();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex* row = &out[i * b.cols()];
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      const Complex* brow = &bd[k * b.cols()];
      for (std::size_t j = 0; j < b.cols(); ++j) row[j] += aik * brow[j];
    }
  }
  return ComplexMatrix(a.rows(), b.cols(), std::move(out));
}

inline ComplexMatrix transpose(const ComplexMatrix& a) {
  std::vector<Complex> out(a.rows() * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[c * a.rows() + r] = a(r, c);
  return ComplexMatrix(a.cols(), a.rows(), std::move(out));
}

/// Conjugate transpose.
inline ComplexMatrix adjoint(const ComplexMatrix& a) {
  std::vector<Complex> out(a.rows() * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out[c * a.rows() + r] = std::conj(a(r, c));
  return ComplexMatrix(a.cols(), a.rows(), std::move(out));
}

inline Complex trace(const ComplexMatrix& a) {
  if (!a.is_square()) throw ShapeError("trace of non-square " + shape_string(a));
  Complex sum{};
  for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

/// Hilbert-Schmidt inner product Tr(a^dagger b), computed without forming a^dagger b.
inline Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("hs_inner: " + shape_string(a) + " vs " + shape_string(b));
  }
  const auto ad = a.entries();
  const auto bd = b.entries();
  Complex sum{};
  for (std::size_t k = 0; k < ad.size(); ++k) sum += std::conj(ad[k]) * bd[k];
  return sum;
}

inline double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const Complex& z : a.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

inline double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const Complex& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

inline void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                               const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(op) + ": " + shape_string(a) + " vs " +
                     shape_string(b));
  }
}

inline double frob_dist(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "frob_dist");
  const auto ad = a.entries();
  const auto bd = b.entries();
  double sum = 0.0;
  for (std::size_t k = 0; k < ad.size(); ++k) sum += std::norm(ad[k] - bd[k]);
  return std::sqrt(sum);
}

inline double max_abs_dev(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_dev");
  const auto ad = a.entries();
  const auto bd = b.entries();
  double m = 0.0;
  for (std::size_t k = 0; k < ad.size(); ++k) m = std::max(m, std::abs(ad[k] - bd[k]));
  return m;
}

/// Max deviation of a from a^dagger.
inline double hermitian_deviation(const ComplexMatrix& a) {
  if (!a.is_square()) return std::numeric_limits<double>::infinity();
  double m = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = r; c < a.cols(); ++c)
      m = std::max(m, std::abs(a(r, c) - std::conj(a(c, r))));
  return m;
}

/// Max deviation of a*a from the identity.
inline double involution_deviation(const ComplexMatrix& a) {
  if (!a.is_square()) return std::numeric_limits<double>::infinity();
  return max_abs_dev(matmul(a, a), ComplexMatrix::identity(a.rows()));
}

/// Max deviation of a^dagger * a from the identity.
inline double unitarity_deviation(const ComplexMatrix& a) {
  if (!a.is_square()) return std::numeric_limits<double>::infinity();
  return max_abs_dev(matmul(adjoint(a), a), ComplexMatrix::identity(a.rows()));
}

}  // namespace commute
