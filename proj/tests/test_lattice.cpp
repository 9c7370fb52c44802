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

#include <gtest/gtest.h>

#include <utility>
#include <vector>

#include "jmobius/errors.hpp"
#include "jmobius/lattice.hpp"
#include "jmobius/matroid.hpp"
#include "jmobius/registry.hpp"
#include "jmobius/subspace.hpp"

namespace jmobius {
namespace {

TEST(Lattice, BooleanJoinIsUnion) {
  const Poset b = boolean_lattice(3);
  for (Element x = 0; x < 8; ++x)
    for (Element y = 0; y < 8; ++y) {
      EXPECT_EQ(join(b, x, y), x | y);
      EXPECT_EQ(meet(b, x, y), x & y);
    }
}

TEST(Lattice, BowtieHasNoJoin) {
  const Poset p = bowtie();
  EXPECT_FALSE(try_join(p, 0, 1).has_value());
  EXPECT_FALSE(is_lattice(p));
  EXPECT_THROW(join(p, 0, 1), NotALatticeError);
  EXPECT_THROW(LatticeOps{p}, NotALatticeError);
}

TEST(Lattice, AntichainIsNotALattice) { EXPECT_FALSE(is_lattice(antichain(2))); }

TEST(Lattice, ClassifiesSmallLattices) {
  EXPECT_TRUE(is_modular_lattice(diamond_m3()));
  EXPECT_TRUE(is_geometric(diamond_m3()));
  EXPECT_TRUE(is_lattice(pentagon()));
  EXPECT_THROW(is_semimodular(pentagon()), RankError);
  EXPECT_TRUE(is_semimodular(chain(3)));
  EXPECT_FALSE(is_atomic(chain(3)));
  EXPECT_FALSE(is_geometric(chain(3)));
  EXPECT_TRUE(is_geometric(boolean_lattice(3)));
}

TEST(Lattice, SubspaceLatticesAreModular) {
  EXPECT_TRUE(is_modular_lattice(subspace_lattice(2, 3)));
  EXPECT_TRUE(is_modular_lattice(subspace_lattice(3, 2)));
}

TEST(Lattice, FlatsOfUniformMatroidAreGeometricNotModular) {
  const Poset u34 = flats_lattice(uniform(3, 4));
  EXPECT_TRUE(is_geometric(u34));
  EXPECT_FALSE(is_modular_lattice(u34));
  // Rank-2 geometric lattices are modular.
  EXPECT_TRUE(is_modular_lattice(flats_lattice(uniform(2, 5))));
}

TEST(Lattice, AtomsOfBooleanLattice) {
  EXPECT_EQ(atoms(boolean_lattice(3)), (std::vector<Element>{1, 2, 4}));
  EXPECT_THROW(atoms(antichain(2)), NoBoundsError);
}

TEST(Lattice, OpsMatchBruteForce) {
  const Poset l = subspace_lattice(2, 3);
  LatticeOps ops(l);
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = 0; y < l.size(); ++y) {
      const Element j = ops.join(x, y);
      EXPECT_TRUE(l.leq(x, j) && l.leq(y, j));
      for (Element u = 0; u < l.size(); ++u)
        if (l.leq(x, u) && l.leq(y, u)) {
          EXPECT_TRUE(l.leq(j, u));
        }
    }
}

}  // namespace
}  // namespace jmobius
