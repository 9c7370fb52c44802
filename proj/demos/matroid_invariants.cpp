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

// J-characteristic and J-Möbius polynomials of matroids.

#include <iostream>

#include "jmobius/invariants.hpp"
#include "jmobius/matroid.hpp"
#include "jmobius/search.hpp"

int main() {
  using namespace jmobius;
  for (const Matroid& m : {uniform(2, 4), uniform(3, 4), graphic(complete_graph(4), "graphic(K4)")}) {
    const Poset flats = flats_lattice(m);
    std::cout << m.name() << ": " << flats.size() << " flats\n";
    std::cout << "  chi     = " << char_poly(flats).to_string() << "\n";
    std::cout << "  jchar   = " << j_char_poly(flats).to_string() << "\n";
    const LaurentPoly M = j_mobius_poly(flats);
    std::cout << "  jmobius = " << M.to_string() << "\n";
    std::cout << "  jmobius(-1) = " << M.eval_integer(-1) << "\n";
  }
  const Poset k33 = flats_lattice(dual_k33());
  std::cout << "M*(K3,3): jmobius(-1) = " << j_mobius_poly(k33).eval_integer(-1)
            << ", modular = " << (is_modular_lattice(k33) ? "yes" : "no") << "\n";
}
