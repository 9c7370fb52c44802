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

// Seeded property tests on random posets, lattices, matroids and functions.

#include <gtest/gtest.h>

#include "jmobius/invariants.hpp"
#include "jmobius/lattice.hpp"
#include "jmobius/matroid.hpp"
#include "jmobius/trincidence.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace jmobius {
namespace {

constexpr int kPosetTrials = 40;
constexpr int kLatticeTrials = 25;
constexpr int kMatroidTrials = 12;

// (f ⋗ g)(x,y,z) straight from the definition, over every pair (a, b).
IncFn3<Integer> tri_mul_by_definition(const IncFn3<Integer>& f, const IncFn3<Integer>& g) {
  const Poset& p = f.poset();
  const oracle::Order o(p);
  return tabulate3<Integer>(p, [&](Element x, Element y, Element z) {
    Integer acc = 0;
    for (Element a = 0; a < o.n; ++a)
      for (Element b = 0; b < o.n; ++b)
        if (o.le[x][a] && o.le[a][y] && o.le[y][b] && o.le[b][z]) acc += f(x, a, a) * g(a, y, b) * f(b, b, z);
    return acc;
  });
}

TEST(Properties, MobiusMatchesChainCount) {
  gen::Rng rng;
  for (int t = 0; t < kPosetTrials; ++t) {
    const Poset p = gen::random_poset(rng, static_cast<std::size_t>(rng.uniform(1, 8)));
    const oracle::Order o(p);
    const auto mu = mobius(p);
    for (auto [x, y] : p.flags2()) ASSERT_EQ(mu(x, y), oracle::mobius_by_chains(o, x, y)) << "trial " << t;
    EXPECT_EQ(convolve2(zeta2(p), mu), delta2(p));
    EXPECT_EQ(convolve2(mu, zeta2(p)), delta2(p));
  }
}

TEST(Properties, JMatchesDefiningEquation) {
  gen::Rng rng(11);
  for (int t = 0; t < kPosetTrials; ++t) {
    const Poset p = gen::random_poset(rng, static_cast<std::size_t>(rng.uniform(1, 7)));
    const oracle::Order o(p);
    oracle::JSolver solve(o);
    const auto J = j_fast(p);
    for (const auto& f : p.flags3()) ASSERT_EQ(J(f.x, f.y, f.z), solve(f.x, f.y, f.z)) << "trial " << t;
    EXPECT_EQ(j_recursive(p), J);
    EXPECT_EQ(tri_mul(zeta3(p), J), delta3(p));
    EXPECT_EQ(tri_mul(J, zeta3(p)), delta3(p));
  }
}

TEST(Properties, HallAndOthersideSums) {
  gen::Rng rng(12);
  for (int t = 0; t < kPosetTrials / 2; ++t) {
    const Poset p = gen::random_poset(rng, static_cast<std::size_t>(rng.uniform(1, 6)));
    const auto J = j_fast(p);
    for (const auto& f : p.flags3()) {
      ASSERT_EQ(hall_gen_sum(p, f.x, f.y, f.z), J(f.x, f.y, f.z));
      const auto s = otherside_sum(p, f.x, f.y, f.z);
      const Integer want = f.x == f.z ? 1 : 0;
      ASSERT_EQ(s.j_form, want);
      ASSERT_EQ(s.mu_form, want);
    }
  }
}

TEST(Properties, TriMulMatchesDefinition) {
  gen::Rng rng(13);
  for (int t = 0; t < kPosetTrials / 2; ++t) {
    const Poset p = gen::random_poset(rng, static_cast<std::size_t>(rng.uniform(1, 6)));
    const auto f = gen::random_fn3(rng, p), g = gen::random_fn3(rng, p);
    EXPECT_EQ(tri_mul(f, g), tri_mul_by_definition(f, g));
  }
}

TEST(Properties, NearRingLaws) {
  gen::Rng rng(14);
  for (int t = 0; t < kPosetTrials; ++t) {
    const Poset p = gen::random_poset(rng, static_cast<std::size_t>(rng.uniform(1, 6)));
    const auto f = gen::random_fn3(rng, p), g = gen::random_fn3(rng, p), h = gen::random_fn3(rng, p);
    EXPECT_TRUE(left_distributivity_check(f, g, h));
    EXPECT_EQ(tri_mul(delta3(p), f), f);
  }
}

TEST(Properties, DiamondCompatibility) {
  gen::Rng rng(15);
  for (int t = 0; t < kPosetTrials / 2; ++t) {
    const Poset p = gen::random_poset(rng, static_cast<std::size_t>(rng.uniform(1, 6)));
    auto f = gen::random_fn2(rng, p), g = gen::random_fn2(rng, p);
    const auto r = gen::random_fn2(rng, p), s = gen::random_fn2(rng, p);
    EXPECT_TRUE(addhom_check(f, g, r, s));
    // Diagonals of ±1 with f(b,b) g(a,a) = 1 everywhere.
    const int sign = rng.coin() ? 1 : -1;
    for (Element a = 0; a < p.size(); ++a) {
      f.at(a, a) = sign;
      g.at(a, a) = sign;
    }
    EXPECT_TRUE(almosthom_check(f, g, r, s));
  }
}

TEST(Properties, ProductsFactor) {
  gen::Rng rng(16);
  for (int t = 0; t < 10; ++t) {
    const Poset p = gen::random_poset(rng, static_cast<std::size_t>(rng.uniform(1, 4)));
    const Poset q = gen::random_poset(rng, static_cast<std::size_t>(rng.uniform(1, 3)));
    EXPECT_EQ(tensor2(mobius(p), mobius(q)), mobius(product(p, q)));
    EXPECT_EQ(tensor3(j_fast(p), j_fast(q)), j_fast(product(p, q)));
    const auto f = gen::random_fn2(rng, p), g = gen::random_fn2(rng, p);
    const auto r = gen::random_fn2(rng, q), s = gen::random_fn2(rng, q);
    EXPECT_TRUE(dia_tensor_check(f, g, r, s));
  }
}

TEST(Properties, LatticeCrossCuts) {
  gen::Rng rng(17);
  for (int t = 0; t < kLatticeTrials; ++t) {
    const Poset l = gen::random_lattice(rng, 4, rng.uniform(2, 7));
    ASSERT_TRUE(is_lattice(l));
    const auto mu = mobius(l);
    for (auto [x, y] : l.flags2()) {
      EXPECT_EQ(crosscut_sum(l, CrossCut::atoms_of(l, x, y)), mu(x, y));
      EXPECT_EQ(crosscut_sum(l, CrossCut::coatoms_of(l, x, y)), mu(x, y));
    }
    for (Element a = 0; a < l.size(); ++a)
      if (a != *l.top()) {
        EXPECT_EQ(weisner_sum(l, a), 0);
      }
  }
}

TEST(Properties, LatticeDoubleCrossCutsAndWeisner) {
  gen::Rng rng(18);
  const CutKind kinds[] = {CutKind::lower, CutKind::upper};
  for (int t = 0; t < kLatticeTrials; ++t) {
    const Poset l = gen::random_lattice(rng, 4, rng.uniform(2, 6));
    const auto J = j_fast(l);
    for (const auto& f : l.flags3())
      for (CutKind k1 : kinds)
        for (CutKind k2 : kinds)
          ASSERT_EQ(double_crosscut_sum(l, DoubleCrossCut::of_kinds(l, f.x, f.y, f.z, k1, k2)), J(f.x, f.y, f.z));
    const Element bot = *l.bottom(), top = *l.top();
    for (auto [a, b] : l.flags2()) {
      if (a != b && a != bot) {
        EXPECT_EQ(weisner_gen_sum(J, a, b), 0);
      }
      if (a != b && b != top) {
        EXPECT_EQ(weisner_gen_sum_dual(J, b, a), 0);
      }
    }
  }
}

TEST(Properties, GeometricLatticePolynomials) {
  gen::Rng rng(19);
  for (int t = 0; t < kMatroidTrials; ++t) {
    const long long p = rng.coin() ? 2 : 3;
    const Matroid m = gen::random_vector_matroid(rng, p, 3, static_cast<std::size_t>(rng.uniform(3, 7)));
    const Poset l = flats_lattice(m);
    ASSERT_TRUE(is_geometric(l));
    const LaurentPoly mp = j_mobius_poly(l);
    EXPECT_EQ(mp.eval_integer(1), 0);
    EXPECT_TRUE(check_positive_coeffs(l));
    EXPECT_EQ(m_decomposition(l), mp);
    const Poset b1 = boolean_lattice(1);
    EXPECT_EQ(j_mobius_poly(product(l, b1)), mp * j_mobius_poly(b1));
    EXPECT_EQ(j_char_poly(product(l, b1)), j_char_poly(l) * j_char_poly(b1));
    if (is_modular_lattice(l)) {
      EXPECT_EQ(mp.eval_integer(-1), 0);
    }
  }
}

TEST(Properties, MatroidFlatsAndDuality) {
  gen::Rng rng(20);
  for (int t = 0; t < kMatroidTrials; ++t) {
    const Matroid m = gen::random_vector_matroid(rng, 3, static_cast<std::size_t>(rng.uniform(2, 3)),
                                                 static_cast<std::size_t>(rng.uniform(3, 6)));
    auto lib = flats_lattice_with_sets(m).flats;
    std::sort(lib.begin(), lib.end());
    EXPECT_EQ(lib, oracle::flats(m.ground_size(), m.bases()));
    EXPECT_EQ(dual(dual(m)).bases(), m.bases());
    for (std::size_t e = 0; e < m.ground_size(); ++e) {
      if (m.is_loop(e) || m.is_coloop(e)) continue;
      EXPECT_EQ(deletion(m, e).bases().size() + contraction(m, e).bases().size(), m.bases().size());
    }
  }
}

TEST(Properties, LaurentRing) {
  gen::Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    const auto a = gen::random_laurent(rng, -2, 3), b = gen::random_laurent(rng, -1, 2), c = gen::random_laurent(rng, 0, 2);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a * b).eval(2), a.eval(2) * b.eval(2));
    if (!b.is_zero()) {
      EXPECT_EQ((a * b).exact_div(b), a);
    }
  }
}

}  // namespace
}  // namespace jmobius
