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

// Numerical search for families s_1..s_{n^2-1} of n x n matrices with
//
//   S_{n,n} = (1/n) I kron I + (1/n) sum_i s_i kron s_i.
//
// The objective is the squared Frobenius norm of the difference; real and
// imaginary parts of every entry are optimised as independent real variables.

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "commute/core.hpp"
#include "commute/descent.hpp"
#include "commute/permutation.hpp"
#include "commute/random.hpp"

namespace commute {

enum class SearchFamily { unconstrained, hermitian, monomial_cube_root };

inline std::string_view to_string(SearchFamily f) {
  switch (f) {
    case SearchFamily::unconstrained: return "unconstrained";
    case SearchFamily::hermitian: return "hermitian";
    case SearchFamily::monomial_cube_root: return "monomial-cube-root";
  }
  return "?";
}

inline std::optional<SearchFamily> parse_search_family(std::string_view s) {
  if (s == "unconstrained") return SearchFamily::unconstrained;
  if (s == "hermitian") return SearchFamily::hermitian;
  if (s == "monomial-cube-root") return SearchFamily::monomial_cube_root;
  return std::nullopt;
}

struct SearchConfig {
  std::size_t dim = 3;
  std::size_t restarts = 50;
  std::size_t max_iters = 5000;
  std::uint64_t seed = 0;
  double step_init = 0.1;
  double grad_tol = 1e-10;
  SearchFamily family = SearchFamily::hermitian;
  std::size_t threads = 1;
  bool record_history = false;
  double success_threshold = 1e-8;

  void validate() const {
    if (restarts < 1) throw InvalidArgument("search: restarts must be >= 1");
    if (max_iters < 1) throw InvalidArgument("search: max_iters must be >= 1");
    if (dim < 2 || dim > 8) throw InvalidArgument("search: dim must be in 2..8");
    if (!(step_init > 0.0)) throw InvalidArgument("search: step_init must be positive");
    if (!(grad_tol >= 0.0)) throw InvalidArgument("search: grad_tol must be non-negative");
    if (threads < 1) throw InvalidArgument("search: threads must be >= 1");
  }
};

/// Residual of the swap decomposition for families of `dim x dim` matrices.
/// Parameters are stored flat: matrix i, entry (r, c) at i*dim*dim + r*dim + c.
class SwapObjective {
 public:
  explicit SwapObjective(std::size_t dim)
      : n_(dim), count_(dim * dim - 1), big_(dim * dim), target_(big_ * big_) {
    if (dim < 2) throw InvalidArgument("SwapObjective: dim must be >= 2");
    const PermutationMatrix s = build_tcm(n_, n_);
    const double inv = 1.0 / static_cast<double>(n_);
    for (std::size_t k = 0; k < big_; ++k) {
      target_[s[k] * big_ + k] += 1.0;
      target_[k * big_ + k] -= inv;
    }
  }

  std::size_t dim() const { return n_; }
  std::size_t count() const { return count_; }
  std::size_t param_count() const { return count_ * n_ * n_; }

  double value(const ParamVector& x) const {
    const auto r = residual_matrix(x);
    double sum = 0.0;
    for (const Complex& z : r) sum += std::norm(z);
    return sum;
  }

  ParamVector gradient(const ParamVector& x) const {
    const auto r = residual_matrix(x);
    const std::size_t nn = n_ * n_;
    const double scale = -2.0 / static_cast<double>(n_);
    ParamVector g(x.size());
    for (std::size_t i = 0; i < count_; ++i) {
      const Complex* s = &x[i * nn];
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) {
          // <R, E_ab kron s + s kron E_ab>
          Complex acc{};
          for (std::size_t rr = 0; rr < n_; ++rr)
            for (std::size_t cc = 0; cc < n_; ++cc) {
              const Complex sv = s[rr * n_ + cc];
              acc += std::conj(r[(a * n_ + rr) * big_ + b * n_ + cc]) * sv;
              acc += std::conj(r[(rr * n_ + a) * big_ + cc * n_ + b]) * sv;
            }
          g[i * nn + a * n_ + b] = scale * std::conj(acc);
        }
    }
    return g;
  }

 private:
  /// T - (1/n) sum s_i kron s_i, flat big x big.
  std::vector<Complex> residual_matrix(const ParamVector& x) const {
    if (x.size() != param_count()) throw ShapeError("SwapObjective: wrong parameter count");
    std::vector<Complex> r = target_;
    const std::size_t nn = n_ * n_;
    const double inv = 1.0 / static_cast<double>(n_);
    for (std::size_t i = 0; i < count_; ++i) {
      const Complex* s = &x[i * nn];
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) {
          const Complex f = inv * s[a * n_ + b];
          if (f == Complex{}) continue;
          for (std::size_t rr = 0; rr < n_; ++rr) {
            Complex* row = &r[(a * n_ + rr) * big_ + b * n_];
            const Complex* srow = &s[rr * n_];
            for (std::size_t cc = 0; cc < n_; ++cc) row[cc] -= f * srow[cc];
          }
        }
    }
    return r;
  }

  std::size_t n_;
  std::size_t count_;
  std::size_t big_;
  std::vector<Complex> target_;
};

inline ParamVector flatten(const std::vector<ComplexMatrix>& family) {
  ParamVector x;
  for (const ComplexMatrix& m : family) x.insert(x.end(), m.entries().begin(), m.entries().end());
  return x;
}

inline std::vector<ComplexMatrix> unflatten(const ParamVector& x, std::size_t dim) {
  const std::size_t nn = dim * dim;
  std::vector<ComplexMatrix> out;
  for (std::size_t i = 0; i + nn <= x.size(); i += nn)
    out.emplace_back(dim, dim, std::vector<Complex>(x.begin() + i, x.begin() + i + nn));
  return out;
}

/// Squared Frobenius residual of S_{n,n} - (1/n) I - (1/n) sum s_i kron s_i.
inline double residual(const std::vector<ComplexMatrix>& family) {
  if (family.empty()) throw InvalidArgument("residual: empty family");
  const std::size_t n = family.front().rows();
  if (family.size() != n * n - 1) {
    throw ShapeError("residual: expected " + std::to_string(n * n - 1) + " matrices of size " +
                     std::to_string(n));
  }
  for (const auto& m : family)
    if (m.rows() != n || m.cols() != n) throw ShapeError("residual: mixed matrix sizes");
  return SwapObjective(n).value(flatten(family));
}

/// Gradient with respect to (re, im) of every entry, packed as re + i*im per entry.
inline std::vector<ComplexMatrix> gradient(const std::vector<ComplexMatrix>& family) {
  if (family.empty()) throw InvalidArgument("gradient: empty family");
  const std::size_t n = family.front().rows();
  residual(family);  // shape checks
  return unflatten(SwapObjective(n).gradient(flatten(family)), n);
}

/// Projects every n x n block onto hermitian matrices: (s + s^dagger) / 2.
inline void project_hermitian(ParamVector& x, std::size_t n) {
  const std::size_t nn = n * n;
  for (std::size_t base = 0; base < x.size(); base += nn)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r; c < n; ++c) {
        const Complex u = x[base + r * n + c];
        const Complex l = x[base + c * n + r];
        const Complex avg = 0.5 * (u + std::conj(l));
        x[base + r * n + c] = avg;
        x[base + c * n + r] = std::conj(avg);
      }
}

struct MatrixFlags {
  bool hermitian = false;
  bool unitary = false;
  bool involutory = false;
  bool traceless = false;
};

inline MatrixFlags matrix_flags(const ComplexMatrix& m, double tol = 1e-8) {
  return {hermitian_deviation(m) <= tol, unitarity_deviation(m) <= tol,
          involution_deviation(m) <= tol, std::abs(trace(m)) <= tol};
}

struct SearchCandidate {
  std::vector<ComplexMatrix> matrices;
  double objective = 0.0;
  std::vector<MatrixFlags> flags;
  std::size_t restart_index = 0;
  std::size_t iterations = 0;
  double grad_norm = 0.0;
  bool converged = false;
  std::vector<double> history;
};

/// Gradient descent with Armijo backtracking from `init`, projected onto the
/// configured family after every step. Deterministic in (init, cfg).
inline SearchCandidate local_search(const std::vector<ComplexMatrix>& init,
                                    const SearchConfig& cfg) {
  cfg.validate();
  if (cfg.family == SearchFamily::monomial_cube_root) {
    throw InvalidArgument("local_search: the monomial family is discrete; use monomial_enumeration");
  }
  const SwapObjective obj(cfg.dim);
  if (init.size() != obj.count()) {
    throw ShapeError("local_search: expected " + std::to_string(obj.count()) + " matrices");
  }
  for (const auto& m : init)
    if (m.rows() != cfg.dim || m.cols() != cfg.dim) throw ShapeError("local_search: bad matrix size");

  const std::size_t n = cfg.dim;
  const bool herm = cfg.family == SearchFamily::hermitian;
  DescentOptions opt;
  opt.max_iters = cfg.max_iters;
  opt.step_init = cfg.step_init;
  opt.grad_tol = cfg.grad_tol;
  opt.record_history = cfg.record_history;
  auto res = projected_descent(
      flatten(init), [&](const ParamVector& x) { return obj.value(x); },
      [&](const ParamVector& x) { return obj.gradient(x); },
      [&](ParamVector& x) {
        if (herm) project_hermitian(x, n);
      },
      opt);

  SearchCandidate cand;
  cand.matrices = unflatten(res.x, n);
  cand.objective = res.objective;
  cand.iterations = res.iterations;
  cand.grad_norm = res.grad_norm;
  cand.converged = res.converged;
  cand.history = std::move(res.history);
  for (const auto& m : cand.matrices) cand.flags.push_back(matrix_flags(m));
  return cand;
}

/// Start point for restart r: entries with re, im uniform in [-0.5, 0.5),
/// drawn from an RNG seeded with seed + r.
inline std::vector<ComplexMatrix> random_start(const SearchConfig& cfg, std::size_t restart) {
  Rng rng(cfg.seed + restart);
  const std::size_t count = cfg.dim * cfg.dim - 1;
  std::vector<ComplexMatrix> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Complex> e(cfg.dim * cfg.dim);
    for (Complex& z : e) {
      const double re = uniform(rng, -0.5, 0.5);
      z = {re, uniform(rng, -0.5, 0.5)};
    }
    out.emplace_back(cfg.dim, cfg.dim, std::move(e));
  }
  return out;
}

struct ObjectiveQuantiles {
  double min = 0.0, q25 = 0.0, median = 0.0, q75 = 0.0, max = 0.0;
};

inline ObjectiveQuantiles quantiles(std::vector<double> xs) {
  ObjectiveQuantiles q;
  if (xs.empty()) return q;
  std::sort(xs.begin(), xs.end());
  auto at = [&](double p) {
    const double pos = p * static_cast<double>(xs.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, xs.size() - 1);
    return xs[lo] + (pos - static_cast<double>(lo)) * (xs[hi] - xs[lo]);
  };
  q.min = xs.front();
  q.q25 = at(0.25);
  q.median = at(0.5);
  q.q75 = at(0.75);
  q.max = xs.back();
  return q;
}

struct MultistartResult {
  SearchCandidate best;
  std::vector<double> objectives;  // per restart, restart order
  std::vector<std::size_t> iterations;
  ObjectiveQuantiles summary;
  std::size_t successes = 0;  // restarts below cfg.success_threshold
};

/// Independent local searches from seeded random starts. Restarts may run on
/// cfg.threads workers; the selected candidate is the minimum objective with
/// ties going to the lowest restart index, whatever the completion order.
inline MultistartResult multistart(const SearchConfig& cfg) {
  cfg.validate();
  std::vector<SearchCandidate> slots(cfg.restarts);
  auto run = [&](std::size_t r) {
    SearchCandidate c = local_search(random_start(cfg, r), cfg);
    c.restart_index = r;
    slots[r] = std::move(c);
  };
  if (cfg.threads <= 1) {
    for (std::size_t r = 0; r < cfg.restarts; ++r) run(r);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    const std::size_t workers = std::min(cfg.threads, cfg.restarts);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t r = next.fetch_add(1); r < cfg.restarts; r = next.fetch_add(1)) run(r);
      });
    }
  }

  MultistartResult out;
  std::size_t best = 0;
  for (std::size_t r = 0; r < slots.size(); ++r) {
    out.objectives.push_back(slots[r].objective);
    out.iterations.push_back(slots[r].iterations);
    if (slots[r].objective < cfg.success_threshold) ++out.successes;
    if (slots[r].objective < slots[best].objective) best = r;
  }
  out.summary = quantiles(out.objectives);
  out.best = std::move(slots[best]);
  return out;
}

}  // namespace commute
