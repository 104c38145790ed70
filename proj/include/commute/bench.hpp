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
#include <chrono>
#include <cstdint>
#include <vector>

#include "commute/core.hpp"
#include "commute/permutation.hpp"
#include "commute/random.hpp"

namespace commute {

struct BenchReport {
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double perm_apply_ns = 0.0;   // median
  double dense_apply_ns = 0.0;  // median
  double speedup = 0.0;
  double correctness_max_dev = 0.0;
  double atol = 1e-12;
  bool valid = false;
};

namespace bench_detail {

inline std::vector<Complex> dense_apply(const ComplexMatrix& m, const std::vector<Complex>& v) {
  std::vector<Complex> out(m.rows());
  const auto d = m.entries();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Complex acc{};
    const Complex* row = &d[r * m.cols()];
    for (std::size_t c = 0; c < m.cols(); ++c) acc += row[c] * v[c];
    out[r] = acc;
  }
  return out;
}

inline double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  return xs.size() % 2 ? xs[m] : 0.5 * (xs[m - 1] + xs[m]);
}

}  // namespace bench_detail

/// Times apply_perm against a dense matrix-vector product with to_dense(S).
/// Both paths are checked for agreement before any timing; timings are
/// informational only.
inline BenchReport bench_swap(std::size_t n, std::size_t p, std::size_t trials,
                              std::uint64_t seed, double atol = 1e-12) {
  using Clock = std::chrono::steady_clock;
  if (trials == 0) throw InvalidArgument("bench_swap: trials must be >= 1");
  const PermutationMatrix s = build_tcm(n, p);
  const ComplexMatrix dense = to_dense(s);

  BenchReport rep;
  rep.n = n;
  rep.p = p;
  rep.trials = trials;
  rep.seed = seed;
  rep.atol = atol;

  Rng rng(seed);
  std::vector<std::vector<Complex>> inputs;
  inputs.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) inputs.push_back(random_vector(rng, n * p));

  for (const auto& v : inputs) {
    const auto a = apply_perm(s, v);
    const auto b = bench_detail::dense_apply(dense, v);
    for (std::size_t k = 0; k < a.size(); ++k)
      rep.correctness_max_dev = std::max(rep.correctness_max_dev, std::abs(a[k] - b[k]));
  }

  std::vector<double> perm_ns, dense_ns;
  Complex sink{};
  for (const auto& v : inputs) {
    auto t0 = Clock::now();
    const auto a = apply_perm(s, v);
    auto t1 = Clock::now();
    const auto b = bench_detail::dense_apply(dense, v);
    auto t2 = Clock::now();
    sink += a.back() + b.back();
    perm_ns.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
    dense_ns.push_back(std::chrono::duration<double, std::nano>(t2 - t1).count());
  }
  volatile double keep = sink.real();
  static_cast<void>(keep);

  rep.perm_apply_ns = bench_detail::median(perm_ns);
  rep.dense_apply_ns = bench_detail::median(dense_ns);
  rep.speedup = rep.perm_apply_ns > 0.0 ? rep.dense_apply_ns / rep.perm_apply_ns : 0.0;
  rep.valid = rep.correctness_max_dev <= atol;
  return rep;
}

}  // namespace commute
