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

// Builds S(4x4) three ways: as a permutation, from the Pauli strings on two
// qubits, and from the scaled Gell-Mann family. Then expands it back.

#include <cstdio>

#include "commute/bases.hpp"
#include "commute/expansion.hpp"
#include "commute/identities.hpp"
#include "commute/permutation.hpp"

int main() {
  using namespace commute;
  const PermutationMatrix s = build_tcm(4, 4);
  std::printf("S(4x4) image:");
  for (std::size_t k = 0; k < s.size(); ++k) std::printf(" %zu", s[k]);
  std::printf("\n");

  const VerificationReport strings = verify_proposition(2);
  const VerificationReport gm = verify_eq5(scaled_gell_mann(4), 4);
  std::printf("%-40s %s (max dev %.2e)\n", strings.identity_name.c_str(),
              std::string(strings.outcome()).c_str(), strings.max_abs_dev);
  std::printf("%-40s %s (max dev %.2e)\n", gm.identity_name.c_str(),
              std::string(gm.outcome()).c_str(), gm.max_abs_dev);

  // Coefficients over the products of Pauli strings: diagonal, all 1/4.
  const KronPairExpansion e = expand_kron_pair(to_dense(s), pauli_strings(2));
  std::printf("pair expansion diagonal: %s, C[0][0] = %.6f, residual %.2e\n",
              e.is_diagonal(1e-12) ? "yes" : "no", e.coefficients(0, 0).real(), e.residual_frob);
  return strings.pass && gm.pass ? 0 : 1;
}
