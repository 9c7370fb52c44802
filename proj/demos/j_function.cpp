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

// The J-function of a small lattice and the near-ring product.

#include <iostream>

#include "jmobius/poset.hpp"
#include "jmobius/trincidence.hpp"

int main() {
  using namespace jmobius;
  const Poset c3 = chain(3);
  const auto J = j_fast(c3);
  c3.for_each_flag3([&](std::size_t i, Element x, Element y, Element z) {
    std::cout << "J(" << x << "," << y << "," << z << ") = " << J.value(i) << "\n";
  });
  std::cout << "zeta3 * J = delta3: " << (tri_mul(zeta3(c3), J) == delta3(c3) ? "yes" : "no") << "\n";
  std::cout << "J * zeta3 = delta3: " << (tri_mul(J, zeta3(c3)) == delta3(c3) ? "yes" : "no") << "\n";

  for (const auto& w : structure_witnesses(c3))
    std::cout << w.property << " fails: " << w.lhs_expr << " = " << w.lhs << ", " << w.rhs_expr << " = " << w.rhs
              << "\n";
}
