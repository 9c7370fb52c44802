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

#include "jmobius/errors.hpp"
#include "jmobius/valuation.hpp"
#include "support/oracles.hpp"

namespace jmobius {
namespace {

LaurentPoly j_char_by_oracle(const Matroid& m) {
  // (-1)^rk Σ_x μ(0,x) μ(x,1) t^{crk x} on the lattice of flats.
  const Poset l = flats_lattice(m);
  const oracle::Order ord(l);
  const Element bot = *l.bottom(), top = *l.top();
  oracle::SparsePoly p;
  for (Element x = 0; x < l.size(); ++x)
    p[l.rank() - l.rank(x)] +=
        (l.rank() % 2 ? -1 : 1) * oracle::mobius_by_chains(ord, bot, x) * oracle::mobius_by_chains(ord, x, top);
  return oracle::to_laurent(oracle::normalize(p));
}

TEST(Valuation, SplitFixturesAreValid) {
  for (const auto& name : fixture_names()) EXPECT_NO_THROW(fixture_by_name(name).validate()) << name;
  const auto f = fixture_u24_split();
  ASSERT_EQ(f.pieces.size(), 2U);
  EXPECT_EQ(f.pieces[0].bases().size(), 5U);
  EXPECT_EQ(f.pieces[1].bases().size(), 5U);
  EXPECT_EQ(f.intersections.at({0, 1})->bases().size(), 4U);
}

TEST(Valuation, JCharIsValuative) {
  for (const auto& name : fixture_names()) {
    const auto rep = valuation_check(fixture_by_name(name), matroid_j_char_poly);
    EXPECT_TRUE(rep.holds()) << name << ": " << rep.residual.to_string();
  }
}

TEST(Valuation, JCharAgreesWithOracleOnPieces) {
  const auto f = fixture_u35_split();
  EXPECT_EQ(matroid_j_char_poly(f.parent), j_char_by_oracle(f.parent));
  for (const auto& p : f.pieces) EXPECT_EQ(matroid_j_char_poly(p), j_char_by_oracle(p));
}

TEST(Valuation, ReportArithmetic) {
  const auto rep = valuation_check(fixture_u24_split(), matroid_j_mobius_poly);
  ASSERT_EQ(rep.terms.size(), 3U);
  EXPECT_EQ(rep.terms[2].sign, -1);
  LaurentPoly sum;
  for (const auto& t : rep.terms)
    if (t.value) sum += t.sign > 0 ? *t.value : -*t.value;
  EXPECT_EQ(sum, rep.alternating_sum);
  EXPECT_EQ(rep.residual, rep.parent_value - rep.alternating_sum);
}

TEST(Valuation, TrivialFixtureHasNoResidual) {
  const auto rep = valuation_check(fixture_trivial(), matroid_j_mobius_poly);
  EXPECT_TRUE(rep.holds());
  EXPECT_EQ(rep.terms.size(), 1U);
}

TEST(Valuation, EmptyIntersectionCountsZero) {
  const Matroid a = Matroid::from_bases(2, {make_set({0})});
  const Matroid b = Matroid::from_bases(2, {make_set({1})});
  SubdivisionFixture f{"disjoint", uniform(1, 2), {a, b}, {{{0, 1}, std::nullopt}}};
  const auto rep = valuation_check(f, matroid_char_poly);
  ASSERT_EQ(rep.terms.size(), 3U);
  EXPECT_FALSE(rep.terms[2].value.has_value());
}

TEST(Valuation, ValidationErrors) {
  auto f = fixture_u24_split();
  f.intersections.clear();
  EXPECT_THROW(f.validate(), FixtureError);

  f = fixture_u24_split();
  f.intersections[{0, 1}] = uniform(2, 4);
  EXPECT_THROW(f.validate(), FixtureError);

  f = fixture_u24_split();
  f.intersections[{0, 1}] = std::nullopt;
  EXPECT_THROW(f.validate(), FixtureError);

  f = fixture_u24_split();
  f.pieces[0] = uniform(2, 5);
  EXPECT_THROW(f.validate(), FixtureError);

  f = fixture_u24_split();
  f.pieces.clear();
  EXPECT_THROW(f.validate(), FixtureError);

  f = fixture_u24_split();
  f.intersections[{0, 3}] = std::nullopt;
  EXPECT_THROW(f.validate(), FixtureError);

  EXPECT_THROW(fixture_by_name("nope"), FixtureError);
}

}  // namespace
}  // namespace jmobius
