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

// Hermitian involutions with zero diagonal ("hollow"). A hermitian involution
// has eigenvalues +-1, so its trace has the parity of its dimension. In odd
// dimension the trace is therefore nonzero and no hollow one exists.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "commute/core.hpp"
#include "commute/descent.hpp"
#include "commute/random.hpp"

namespace commute {

struct HollowConfig {
  std::size_t dim = 3;
  std::size_t restarts = 50;
  std::uint64_t seed = 0;
  std::size_t max_iters = 5000;
  double step_init = 0.1;
  double grad_tol = 1e-12;
  std::size_t parity_samples = 200;
  double floor = 0.9;         // required lower bound on the minimum in odd dimension
  double solved_tol = 1e-12;  // objective counted as an exact hollow involution

  void validate() const {
    if (dim < 2 || dim > 16) throw InvalidArgument("hollow: dim must be in 2..16");
    if (restarts < 1) throw InvalidArgument("hollow: restarts must be >= 1");
    if (max_iters < 1) throw InvalidArgument("hollow: max_iters must be >= 1");
    if (!(step_init > 0.0) || !std::isfinite(step_init)) {
      throw InvalidArgument("hollow: step_init must be positive");
    }
    if (!(grad_tol >= 0.0)) throw InvalidArgument("hollow: grad_tol must be >= 0");
  }
};

struct ParityCheck {
  std::size_t samples = 0;
  double max_involution_dev = 0.0;
  double max_hermitian_dev = 0.0;
  double max_integer_dev = 0.0;  // distance of the trace from the nearest integer
  bool parity_matches = true;    // every trace has the parity of dim
  double min_abs_trace = std::numeric_limits<double>::infinity();
};

struct HollowScan {
  std::vector<double> objectives;  // final objective per restart
  double min_objective = std::numeric_limits<double>::infinity();
  std::size_t best_restart = 0;
  ComplexMatrix best{1, 1};
};

struct HollowReport {
  std::size_t dim = 0;
  ParityCheck parity;
  HollowScan scan;
  double floor = 0.0;
  bool hollow_found = false;  // min objective <= solved_tol
  bool gap_holds = false;     // odd dim and min objective >= floor
};

/// ||M^2 - I||_F^2.
inline double hollow_objective(const ComplexMatrix& m) {
  ComplexMatrix f = matmul(m, m);
  f -= ComplexMatrix::identity(m.rows());
  const double n = frobenius_norm(f);
  return n * n;
}

/// U diag(+-1) U^dagger with Haar-like U and random signs.
inline ComplexMatrix random_hermitian_involution(Rng& rng, std::size_t n) {
  std::vector<Complex> signs(n);
  for (auto& s : signs) s = uniform01(rng) < 0.5 ? -1.0 : 1.0;
  const ComplexMatrix u = random_unitary(rng, n);
  return matmul(matmul(u, ComplexMatrix::diagonal(signs)), adjoint(u));
}

inline ParityCheck parity_check(std::size_t dim, std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  ParityCheck out;
  out.samples = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    const ComplexMatrix m = random_hermitian_involution(rng, dim);
    out.max_involution_dev = std::max(out.max_involution_dev, involution_deviation(m));
    out.max_hermitian_dev = std::max(out.max_hermitian_dev, hermitian_deviation(m));
    const double t = trace(m).real();
    const double r = std::round(t);
    out.max_integer_dev = std::max(out.max_integer_dev, std::abs(t - r));
    const auto ri = static_cast<long long>(r);
    if (((ri % 2) + 2) % 2 != static_cast<long long>(dim % 2)) out.parity_matches = false;
    out.min_abs_trace = std::min(out.min_abs_trace, std::abs(t));
  }
  return out;
}

namespace hollow_detail {

inline void project(ParamVector& x, std::size_t n) {
  for (std::size_t r = 0; r < n; ++r) {
    x[r * n + r] = 0.0;
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex avg = 0.5 * (x[r * n + c] + std::conj(x[c * n + r]));
      x[r * n + c] = avg;
      x[c * n + r] = std::conj(avg);
    }
  }
}

}  // namespace hollow_detail

/// Multistart descent of ||M^2 - I||_F^2 over zero-diagonal hermitian M.
inline HollowScan hollow_scan(const HollowConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.dim;
  auto value = [n](const ParamVector& x) {
    return hollow_objective(ComplexMatrix(n, n, x));
  };
  // complex gradient 2 (F M^dagger + M^dagger F) with F = M^2 - I
  auto gradient = [n](const ParamVector& x) {
    const ComplexMatrix m(n, n, x);
    ComplexMatrix f = matmul(m, m);
    f -= ComplexMatrix::identity(n);
    const ComplexMatrix md = adjoint(m);
    ComplexMatrix g = matmul(f, md);
    g += matmul(md, f);
    g *= Complex{2.0};
    const auto e = g.entries();
    return ParamVector(e.begin(), e.end());
  };
  auto project = [n](ParamVector& x) { hollow_detail::project(x, n); };

  DescentOptions opt;
  opt.max_iters = cfg.max_iters;
  opt.step_init = cfg.step_init;
  opt.grad_tol = cfg.grad_tol;

  Rng rng(cfg.seed);
  HollowScan scan;
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    ParamVector x(n * n);
    for (auto& v : x) v = Complex{uniform(rng, -0.5, 0.5), uniform(rng, -0.5, 0.5)};
    const DescentResult d = projected_descent(std::move(x), value, gradient, project, opt);
    scan.objectives.push_back(d.objective);
    if (d.objective < scan.min_objective) {
      scan.min_objective = d.objective;
      scan.best_restart = r;
      scan.best = ComplexMatrix(n, n, d.x);
    }
  }
  return scan;
}

/// Parity check plus numerical scan.
inline HollowReport hollow_involution(const HollowConfig& cfg = {}) {
  cfg.validate();
  HollowReport rep;
  rep.dim = cfg.dim;
  rep.floor = cfg.floor;
  rep.parity = parity_check(cfg.dim, cfg.parity_samples, cfg.seed);
  rep.scan = hollow_scan(cfg);
  rep.hollow_found = rep.scan.min_objective <= cfg.solved_tol;
  rep.gap_holds = cfg.dim % 2 == 1 && rep.scan.min_objective >= cfg.floor;
  return rep;
}

}  // namespace commute
