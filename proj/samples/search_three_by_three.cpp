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

// Looks for eight 3x3 matrices with S(3x3) = (1/3) I + (1/3) sum s_i kron s_i,
// then checks the two structured alternatives.

#include <cstdio>

#include "commute/hollow.hpp"
#include "commute/monomial.hpp"
#include "commute/search.hpp"

int main() {
  using namespace commute;
  SearchConfig cfg;
  cfg.restarts = 10;
  cfg.seed = 7;
  const MultistartResult res = multistart(cfg);
  std::printf("hermitian multistart: best %.3e at restart %zu, %zu/%zu below 1e-8\n",
              res.best.objective, res.best.restart_index, res.successes, cfg.restarts);
  for (std::size_t i = 0; i < res.best.flags.size(); ++i) {
    const MatrixFlags& f = res.best.flags[i];
    std::printf("  s_%zu hermitian=%d unitary=%d involutory=%d traceless=%d\n", i + 1,
                f.hermitian, f.unitary, f.involutory, f.traceless);
  }

  const MonomialSearchResult mono = monomial_enumeration();
  std::printf("monomial cube-root family: %s\n  %s\n", std::string(to_string(mono.status)).c_str(),
              mono.certificate.c_str());

  HollowConfig hc;
  hc.restarts = 10;
  const HollowReport hollow = hollow_involution(hc);
  std::printf("zero-diagonal hermitian: min ||M^2 - I||^2 = %.6f (floor %.2f)\n",
              hollow.scan.min_objective, hollow.floor);
  return 0;
}
