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

// Möbius function of the Boolean lattice B3 and a cross-cut evaluation.

#include <iostream>

#include "jmobius/incidence.hpp"
#include "jmobius/poset.hpp"

int main() {
  using namespace jmobius;
  const Poset b3 = boolean_lattice(3);
  const auto mu = mobius(b3);
  for (auto [x, y] : b3.flags2())
    if (x == 0) std::cout << "mu(" << b3.label(x) << "," << b3.label(y) << ") = " << mu(x, y) << "\n";

  const Element bottom = *b3.bottom(), top = *b3.top();
  const auto cut = CrossCut::atoms_of(b3, bottom, top);
  std::cout << "atom cross-cut sum on [0,1]: " << crosscut_sum(b3, cut) << "\n";
  std::cout << "Hall chain sum on [0,1]: " << hall_sum(b3, bottom, top) << "\n";
}
