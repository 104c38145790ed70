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

#include <cmath>
#include <cstddef>
#include <vector>

#include "commute/core.hpp"

namespace commute {

/// Parameters are complex numbers whose real and imaginary parts are
/// independent real variables. A gradient entry packs the two partial
/// derivatives as (d/d re) + i (d/d im).
using ParamVector = std::vector<Complex>;

struct DescentOptions {
  std::size_t max_iters = 5000;
  double step_init = 0.1;
  double grad_tol = 1e-10;
  double armijo = 1e-4;
  bool record_history = false;
};

struct DescentResult {
  ParamVector x;
  double objective = 0.0;
  double grad_norm = 0.0;
  std::size_t iterations = 0;  // accepted steps
  bool converged = false;      // stopped on grad_tol
  std::vector<double> history;  // objective after each accepted step (index 0 = start)
};

inline double real_dot(const ParamVector& a, const ParamVector& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k].real() * b[k].real() + a[k].imag() * b[k].imag();
  return s;
}

/// Projected gradient descent with Armijo backtracking (step halving).
///
/// `project` must be the orthogonal projection onto a linear subspace; it is
/// applied to the start point and to every gradient. The trial step starts at
/// twice the last accepted step (initially step_init).
template <class Value, class Gradient, class Project>
DescentResult projected_descent(ParamVector x, Value&& value, Gradient&& gradient,
                                Project&& project, const DescentOptions& opt) {
  DescentResult res;
  project(x);
  double f = value(x);
  if (opt.record_history) res.history.push_back(f);
  double step = opt.step_init;
  ParamVector trial(x.size());
  for (;;) {
    ParamVector g = gradient(x);
    project(g);
    const double gn2 = real_dot(g, g);
    res.grad_norm = std::sqrt(gn2);
    if (res.grad_norm <= opt.grad_tol) {
      res.converged = true;
      break;
    }
    if (res.iterations >= opt.max_iters) break;

    double t = step;
    bool accepted = false;
    while (t > 1e-300) {
      for (std::size_t k = 0; k < x.size(); ++k) trial[k] = x[k] - t * g[k];
      const double ft = value(trial);
      if (ft <= f - opt.armijo * t * gn2) {
        x.swap(trial);
        f = ft;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) break;  // no decrease representable in double precision
    ++res.iterations;
    if (opt.record_history) res.history.push_back(f);
    step = 2.0 * t;
  }
  res.x = std::move(x);
  res.objective = f;
  return res;
}

}  // namespace commute
