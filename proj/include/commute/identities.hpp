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

// Sum formulas of the form c0 (I kron I) + c1 sum_i B_i kron B_i and checks of
// them against the tensor commutation matrix.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "commute/bases.hpp"
#include "commute/core.hpp"
#include "commute/permutation.hpp"
#include "commute/random.hpp"
#include "commute/report.hpp"

namespace commute {

inline std::string square_label(std::size_t n) {
  return std::to_string(n) + "x" + std::to_string(n);
}

/// c0 (I kron I) + c1 sum over non-identity elements of B_i kron B_i.
inline ComplexMatrix sum_formula(const MatrixBasis& b, double c0, double c1) {
  if (b.elements.empty()) throw InvalidArgument("sum_formula: empty basis");
  const std::size_t n = b.dim;
  ComplexMatrix out(n * n, n * n);
  if (c0 != 0.0) {
    for (std::size_t k = 0; k < n * n; ++k) out.set(k, k, c0);
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b.is_identity_element(i)) continue;
    out.add_kron(c1, b.elements[i], b.elements[i]);
  }
  return out;
}

/// Dense S_{n,n}.
inline ComplexMatrix swap_matrix(std::size_t n) { return to_dense(build_tcm(n, n)); }

/// The 9x9 permutation e_i kron e_j -> e_{1-j} kron e_{1-i} (indices mod 3):
/// what the nonion sum produces in place of S_{3,3}.
inline PermutationMatrix reflected_swap_3x3() {
  return PermutationMatrix({4, 1, 7, 3, 0, 6, 5, 2, 8});
}

/// (1/2) I kron I + (1/2) sum sigma_i kron sigma_i == S_{2,2}.
inline VerificationReport verify_eq1(Tolerance tol = {}) {
  return compare_matrices("pauli-sum == S(2x2)", sum_formula(pauli(), 0.5, 0.5),
                          swap_matrix(2), tol, "c0=1/2, c1=1/2");
}

/// (1/n) I kron I + (1/2) sum Lambda_i kron Lambda_i == S_{n,n}.
inline VerificationReport verify_eq2(std::size_t n, Tolerance tol = {}) {
  if (n < 2) throw InvalidArgument("verify_eq2: n must be >= 2");
  return compare_matrices("gell-mann-sum == S(" + square_label(n) + ")",
                          sum_formula(gell_mann(n), 1.0 / static_cast<double>(n), 0.5),
                          swap_matrix(n), tol, "c0=1/n, c1=1/2");
}

/// (1/n) I kron I + (1/n) sum s_i kron s_i == S_{n,n}, identity element excluded.
inline VerificationReport verify_eq5(const MatrixBasis& b, std::size_t n, Tolerance tol = {}) {
  if (b.dim != n) {
    throw ShapeError("verify_eq5: basis dim " + std::to_string(b.dim) + " != n " +
                     std::to_string(n));
  }
  const double c = 1.0 / static_cast<double>(n);
  return compare_matrices(b.name + ": 1/n-sum == S(" + square_label(n) + ")",
                          sum_formula(b, c, c), swap_matrix(n), tol, "c0=1/n, c1=1/n");
}

/// Checks (1/3) I kron I + (1/3) sum of eight family elements against the
/// reflected swap P. Two readings of "the eight elements" are computed: the
/// eight non-identity elements, and the first eight as listed (identity
/// included). The report carries the better-matching reading; `detail` lists both.
inline VerificationReport verify_cube_root_family(const MatrixBasis& b, Tolerance tol = {}) {
  if (b.dim != 3 || b.size() != 9 || b.identity_index != std::size_t{0}) {
    throw InvalidArgument("verify_cube_root_family: expected a 9-element 3x3 family "
                          "with the identity first");
  }
  const ComplexMatrix target = to_dense(reflected_swap_3x3());
  const double third = 1.0 / 3.0;

  const ComplexMatrix non_identity = sum_formula(b, third, third);

  ComplexMatrix first_eight(9, 9);
  for (std::size_t k = 0; k < 9; ++k) first_eight.set(k, k, third);
  for (std::size_t i = 0; i < 8; ++i) first_eight.add_kron(third, b.elements[i], b.elements[i]);

  const double dev_a = max_abs_dev(non_identity, target);
  const double dev_b = max_abs_dev(first_eight, target);
  const bool use_a = dev_a <= dev_b;
  std::string detail = std::string("reading=") +
                       (use_a ? "non-identity elements 1..8" : "first eight elements 0..7") +
                       "; dev(non-identity)=" + io_detail::format_double(dev_a) +
                       "; dev(first-eight)=" + io_detail::format_double(dev_b);
  return compare_matrices(b.name + "-sum == P", use_a ? non_identity : first_eight, target,
                          tol, std::move(detail));
}

inline VerificationReport verify_kibler(Tolerance tol = {}) {
  return verify_cube_root_family(kibler(), tol);
}

inline VerificationReport verify_nonions(Tolerance tol = {}) {
  return verify_cube_root_family(nonions(), tol);
}

/// (1/2^n) sum over all 4^n Pauli strings (identity included) of s kron s.
inline ComplexMatrix pauli_string_swap_sum(std::size_t n) {
  const MatrixBasis strings = pauli_strings(n);
  const std::size_t d = strings.dim;
  const double c = 1.0 / static_cast<double>(d);
  ComplexMatrix out(d * d, d * d);
  for (const ComplexMatrix& s : strings.elements) out.add_kron(c, s, s);
  return out;
}

inline VerificationReport verify_proposition(std::size_t n, Tolerance tol = {}) {
  if (n < 1) throw InvalidArgument("verify_proposition: n must be >= 1");
  if (n > 5) throw DimensionError("verify_proposition: n > 5 is impractical densely");
  const std::size_t d = std::size_t{1} << n;
  return compare_matrices("pauli-string-sum == S(" + square_label(d) + ")",
                          pauli_string_swap_sum(n), swap_matrix(d), tol,
                          "all 4^n strings summed, identity term included, scale 1/2^n");
}

// ---------------------------------------------------------------------------
// Inserting a middle factor into equal tensor sums.

struct TensorTerm {
  ComplexMatrix left;
  ComplexMatrix right;
};

/// sum_t left_t kron right_t. All lefts share a shape, as do all rights.
class TensorSum {
 public:
  TensorSum() = default;
  explicit TensorSum(std::vector<TensorTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw InvalidArgument("TensorSum: no terms");
    for (const TensorTerm& t : terms_) {
      require_same_shape(t.left, terms_.front().left, "TensorSum left factors");
      require_same_shape(t.right, terms_.front().right, "TensorSum right factors");
    }
  }

  const std::vector<TensorTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const ComplexMatrix& first_left() const { return terms_.front().left; }
  const ComplexMatrix& first_right() const { return terms_.front().right; }

  ComplexMatrix evaluate() const {
    const auto& l = first_left();
    const auto& r = first_right();
    ComplexMatrix out(l.rows() * r.rows(), l.cols() * r.cols());
    for (const TensorTerm& t : terms_) out.add_kron(1.0, t.left, t.right);
    return out;
  }

  /// The sum with k inserted between the factors: sum left kron k kron right.
  TensorSum with_middle(const ComplexMatrix& k) const {
    std::vector<TensorTerm> out;
    out.reserve(terms_.size());
    for (const TensorTerm& t : terms_) out.push_back({kron(t.left, k), t.right});
    return TensorSum(std::move(out));
  }

 private:
  std::vector<TensorTerm> terms_;
};

/// The two sums handed to lemma_insert do not agree to begin with.
class LemmaPreconditionError : public Error {
 public:
  explicit LemmaPreconditionError(double dev)
      : Error("tensor sums differ before insertion (max dev " +
              io_detail::format_double(dev) + ")"),
        deviation(dev) {}
  double deviation;
};

struct LemmaResult {
  TensorSum inserted_lhs;
  TensorSum inserted_rhs;
  double precondition_dev = 0.0;
  VerificationReport report;
};

/// Given sum M_j kron N_j == sum A_i kron B_i (checked first), builds
/// sum M_j kron K kron N_j and sum A_i kron K kron B_i and compares them.
inline LemmaResult lemma_insert(const TensorSum& lhs, const TensorSum& rhs,
                                const ComplexMatrix& k, Tolerance tol = {}) {
  require_same_shape(lhs.first_left(), rhs.first_left(), "lemma_insert left factors");
  require_same_shape(lhs.first_right(), rhs.first_right(), "lemma_insert right factors");
  const double pre = max_abs_dev(lhs.evaluate(), rhs.evaluate());
  if (pre > tol.atol) throw LemmaPreconditionError(pre);
  LemmaResult res{lhs.with_middle(k), rhs.with_middle(k), pre, {}};
  res.report = compare_matrices("middle-insertion", res.inserted_lhs.evaluate(),
                                res.inserted_rhs.evaluate(), tol,
                                "K " + shape_string(k) + ", " + std::to_string(lhs.size()) +
                                    " vs " + std::to_string(rhs.size()) + " terms");
  return res;
}

/// (1/2) sigma_i kron sigma_i, i = 0..3: the Pauli expansion of S_{2,2}.
inline TensorSum swap2_pauli_terms() {
  std::vector<TensorTerm> terms;
  for (const ComplexMatrix& s : pauli().elements) terms.push_back({0.5 * s, s});
  return TensorSum(std::move(terms));
}

/// E_ab kron E_ba over all a, b: the elementary expansion of S_{n,n}.
inline TensorSum swap_elementary_terms(std::size_t n) {
  std::vector<TensorTerm> terms;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      ComplexMatrix eab(n, n), eba(n, n);
      eab.set(a, b, 1.0);
      eba.set(b, a, 1.0);
      terms.push_back({std::move(eab), std::move(eba)});
    }
  return TensorSum(std::move(terms));
}

/// Re-expresses t as a different but equal tensor sum: rescales factor pairs,
/// splits left factors, shears pairs of terms into each other, adds a
/// cancelling pair and shuffles.
inline TensorSum regroup(const TensorSum& t, Rng& rng) {
  const std::size_t lr = t.first_left().rows(), lc = t.first_left().cols();
  const std::size_t rr = t.first_right().rows(), rc = t.first_right().cols();
  std::vector<TensorTerm> terms;
  for (const TensorTerm& term : t.terms()) {
    const Complex c = std::polar(uniform(rng, 0.5, 2.0), uniform(rng, 0.0, 6.283185307179586));
    ComplexMatrix l = c * term.left;
    ComplexMatrix r = (1.0 / c) * term.right;
    if (uniform01(rng) < 0.5) {
      ComplexMatrix x = random_matrix(rng, lr, lc);
      terms.push_back({l - x, r});
      terms.push_back({std::move(x), std::move(r)});
    } else {
      terms.push_back({std::move(l), std::move(r)});
    }
  }
  // (L1, R1), (L2, R2) -> (L1, R1 - s R2), (L2 + s L1, R2)
  if (terms.size() >= 2) {
    const std::size_t i = uniform_index(rng, terms.size());
    std::size_t j = uniform_index(rng, terms.size() - 1);
    if (j >= i) ++j;
    const Complex s{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
    ComplexMatrix new_ri = terms[i].right - s * terms[j].right;
    ComplexMatrix new_lj = terms[j].left + s * terms[i].left;
    terms[i].right = std::move(new_ri);
    terms[j].left = std::move(new_lj);
  }
  ComplexMatrix y = random_matrix(rng, lr, lc);
  ComplexMatrix z = random_matrix(rng, rr, rc);
  terms.push_back({-y, z});
  terms.push_back({std::move(y), std::move(z)});
  for (std::size_t k = terms.size(); k > 1; --k) {
    std::swap(terms[k - 1], terms[uniform_index(rng, k)]);
  }
  return TensorSum(std::move(terms));
}

/// Random tensor sum with 1..4 terms and factor shapes up to max_side.
inline TensorSum random_tensor_sum(Rng& rng, std::size_t max_side = 3) {
  auto side = [&] { return 1 + uniform_index(rng, max_side); };
  const std::size_t lr = side(), lc = side(), rr = side(), rc = side();
  const std::size_t m = 1 + uniform_index(rng, 4);
  std::vector<TensorTerm> terms;
  for (std::size_t k = 0; k < m; ++k)
    terms.push_back({random_matrix(rng, lr, lc), random_matrix(rng, rr, rc)});
  return TensorSum(std::move(terms));
}

struct LemmaSuiteSummary {
  std::size_t trials = 0;
  std::size_t failures = 0;
  double worst_dev = 0.0;
  double tolerance = 0.0;
};

/// Seeded random instances: equal sums via regroup(), K up to 4x3.
inline LemmaSuiteSummary run_lemma_trials(std::size_t trials, std::uint64_t seed,
                                          Tolerance tol = Tolerance(1e-10)) {
  Rng rng(seed);
  LemmaSuiteSummary s;
  s.trials = trials;
  s.tolerance = tol.atol;
  for (std::size_t t = 0; t < trials; ++t) {
    const TensorSum lhs = random_tensor_sum(rng);
    const TensorSum rhs = regroup(lhs, rng);
    const ComplexMatrix k = random_matrix(rng, 1 + uniform_index(rng, 4), 1 + uniform_index(rng, 3));
    try {
      const LemmaResult r = lemma_insert(lhs, rhs, k, tol);
      s.worst_dev = std::max(s.worst_dev, r.report.max_abs_dev);
      if (!r.report.pass) ++s.failures;
    } catch (const LemmaPreconditionError& e) {
      s.worst_dev = std::max(s.worst_dev, e.deviation);
      ++s.failures;
    }
  }
  return s;
}

}  // namespace commute
