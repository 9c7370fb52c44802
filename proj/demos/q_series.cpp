// Copyright 2026 The jmobius Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// q-binomials and the J-Möbius polynomial of subspace lattices.

#include <iostream>

#include "jmobius/invariants.hpp"
#include "jmobius/qseries.hpp"
#include "jmobius/subspace.hpp"

int main() {
  using namespace jmobius;
  std::cout << "[4 2]_q = " << to_string(qbinom(4, 2)) << "\n";
  std::cout << "(-1;q)_3 = " << to_string(qpoch_minus_one(3)) << "\n";
  const BiPoly m2 = m_subspace_formula(2);
  std::cout << "M(L_q^2, t) = " << to_string(m2) << "\n";
  std::cout << "at q = 2: " << specialize(m2, 2).to_string() << "\n";
  std::cout << "direct on L2^2: " << j_mobius_poly(subspace_lattice(2, 2)).to_string() << "\n";
}
