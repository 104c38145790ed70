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
#include <string>
#include <string_view>
#include <utility>

#include "commute/core.hpp"

namespace commute {

/// Outcome of comparing a computed matrix against a target.
///
/// `pass` is always `max_abs_dev <= tolerance`. `expected_pass` marks records
/// whose failure is the documented result (for example a family whose sum is
/// known to miss the swap matrix); such records do not fail a run.
struct VerificationReport {
  std::string identity_name;
  std::size_t dim = 0;
  double max_abs_dev = 0.0;
  double frob_dev = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool expected_pass = true;
  std::string detail;

  bool as_expected() const { return pass == expected_pass; }

  std::string_view outcome() const {
    if (pass) return expected_pass ? "pass" : "unexpected-pass";
    return expected_pass ? "FAIL" : "expected-fail";
  }
};

inline VerificationReport compare_matrices(std::string name,
                                           const ComplexMatrix& computed,
                                           const ComplexMatrix& target,
                                           Tolerance tol, std::string detail = {}) {
  VerificationReport r;
  r.identity_name = std::move(name);
  r.dim = target.rows();
  r.max_abs_dev = max_abs_dev(computed, target);
  r.frob_dev = frob_dist(computed, target);
  r.tolerance = tol.atol;
  r.pass = r.max_abs_dev <= tol.atol;
  r.detail = std::move(detail);
  return r;
}

}  // namespace commute
