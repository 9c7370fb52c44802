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

#include <set>

#include "jmobius/errors.hpp"
#include "jmobius/search.hpp"
#include "support/oracles.hpp"

namespace jmobius {
namespace {

TEST(Search, RankThreeCountsMatchBruteForce) {
  const auto levels = simple_rank3_matroids(6);
  ASSERT_EQ(levels.size(), 4U);
  for (std::size_t n = 3; n <= 6; ++n) EXPECT_EQ(levels[n - 3].size(), oracle::count_simple_rank3(n)) << n;
}

TEST(Search, RankThreeCountsMatchKnownTable) {
  // Simple rank-3 matroids on 3..8 points up to isomorphism.
  const auto levels = simple_rank3_matroids(8);
  const std::vector<std::size_t> want{1, 2, 4, 9, 23, 68};
  ASSERT_EQ(levels.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(levels[i].size(), want[i]);
}

TEST(Search, LinearSpacesBecomeSimpleRankThreeMatroids) {
  for (const auto& level : simple_rank3_matroids(6))
    for (const auto& s : level) {
      const Matroid m = s.to_matroid();
      EXPECT_EQ(m.rank(), 3) << s.name();
      EXPECT_TRUE(is_simple(m)) << s.name();
    }
}

TEST(Search, ModularRowsVanishAtMinusOne) {
  const auto cat = search_minus_one_roots(7, 3);
  EXPECT_TRUE(cat.modular_violations().empty());
  std::size_t modular = 0;
  for (const auto& r : cat.rows)
    if (r.modular) ++modular;
  EXPECT_GE(modular, 3U);  // U1,1, U2,n and the Fano plane at least
}

TEST(Search, RowsAreDistinctAndConsistent) {
  const auto cat = search_minus_one_roots(6, 3);
  std::set<std::string> names;
  for (const auto& r : cat.rows) {
    EXPECT_TRUE(names.insert(r.name).second) << r.name;
    EXPECT_EQ(r.m_at_minus_one, r.m_poly.eval_integer(-1)) << r.name;
    EXPECT_EQ(r.rank, r.matroid.rank()) << r.name;
  }
  // U1,1, U2,2..U2,6, and 1 + 2 + 4 + 9 rank-3 classes, plus one pinned row.
  EXPECT_EQ(cat.rows.size(), 1U + 5U + 16U + 1U);
}

TEST(Search, PinnedDualK33) {
  const auto cat = search_minus_one_roots(3, 3);
  ASSERT_FALSE(cat.rows.empty());
  const auto& last = cat.rows.back();
  EXPECT_TRUE(last.pinned);
  EXPECT_EQ(last.name, "M*(K3,3)");
  EXPECT_FALSE(last.modular);
  EXPECT_TRUE(last.connected);
  EXPECT_EQ(last.m_at_minus_one, 0);

  // (t^10 - 9t^9 + 22t^8 + 12t^7 - 81t^6 + 21t^5 + 69t^4 - 18t^3 - 34t^2 + 15t - 1)(t + 1)(t - 1)
  const auto want = oracle::mul(oracle::from_coeffs({-1, 15, -34, -18, 69, 21, -81, 12, 22, -9, 1}),
                                oracle::from_coeffs({-1, 0, 1}));
  EXPECT_EQ(last.m_poly, oracle::to_laurent(want));
}

TEST(Search, UnpinnedCatalogOmitsDualK33) {
  const auto cat = search_minus_one_roots(4, 2, false);
  for (const auto& r : cat.rows) EXPECT_FALSE(r.pinned);
  EXPECT_EQ(cat.rows.size(), 1U + 3U);
}

TEST(Search, Bounds) {
  EXPECT_THROW(search_minus_one_roots(9, 3), SizeBoundError);
  EXPECT_THROW(search_minus_one_roots(5, 4), SizeBoundError);
  EXPECT_THROW(search_minus_one_roots(0, 3), SizeBoundError);
}

TEST(Search, Isomorphism) {
  const LinearSpace a{5, {make_set({0, 1, 2})}};
  const LinearSpace b{5, {make_set({2, 3, 4})}};
  const LinearSpace c{5, {}};
  EXPECT_TRUE(detail::linear_spaces_isomorphic(a, b));
  EXPECT_FALSE(detail::linear_spaces_isomorphic(a, c));
}

}  // namespace
}  // namespace jmobius
