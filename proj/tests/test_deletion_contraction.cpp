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

#include "jmobius/deletion_contraction.hpp"
#include "jmobius/errors.hpp"
#include "jmobius/valuation.hpp"
#include "support/oracles.hpp"

namespace jmobius {
namespace {

const oracle::SparsePoly kTPlus1 = oracle::from_coeffs({1, 1});
const oracle::SparsePoly kTMinus1 = oracle::from_coeffs({-1, 1});

LaurentPoly basis_count(const Matroid& m) { return LaurentPoly(Integer(m.bases().size())); }

TEST(DeletionContraction, TripleHypotheses) {
  EXPECT_THROW(deletion_contraction_triple(boolean_matroid(2), 0, matroid_char_poly), HypothesisError);
  EXPECT_THROW(deletion_contraction_triple(graphic({{0, 0}, {0, 1}, {1, 2}, {0, 2}}), 0, matroid_char_poly),
               HypothesisError);
  EXPECT_THROW(deletion_contraction_triple(uniform(2, 3), 5, matroid_char_poly), IndexError);
  EXPECT_THROW(tutte_grothendieck_fit({}), ArityError);
}

TEST(DeletionContraction, BasisCountFitsWithUnitCoefficients) {
  const auto fit = tutte_grothendieck_fit({deletion_contraction_triple(uniform(2, 4), 0, basis_count),
                                           deletion_contraction_triple(uniform(3, 5), 1, basis_count)});
  ASSERT_TRUE(fit.consistent);
  EXPECT_EQ(fit.degree, 0);
  EXPECT_EQ(fit.a, LaurentPoly(1));
  EXPECT_EQ(fit.b, LaurentPoly(1));
}

TEST(DeletionContraction, CharacteristicPolynomialFits) {
  const Matroid k4 = graphic(complete_graph(4));
  const auto fit = tutte_grothendieck_fit({deletion_contraction_triple(uniform(2, 3), 0, matroid_char_poly),
                                           deletion_contraction_triple(uniform(2, 4), 0, matroid_char_poly),
                                           deletion_contraction_triple(k4, 0, matroid_char_poly)});
  ASSERT_TRUE(fit.consistent);
  EXPECT_EQ(fit.degree, 0);
  EXPECT_TRUE(fit.unique);
  EXPECT_EQ(fit.a, LaurentPoly(1));
  EXPECT_EQ(fit.b, LaurentPoly(-1));
}

TEST(DeletionContraction, JCharHasRootCertificate) {
  const auto tr = deletion_contraction_triple(uniform(2, 3), 0, matroid_j_char_poly);
  EXPECT_EQ(tr.deletion.eval_integer(-1), 0);
  EXPECT_EQ(tr.contraction.eval_integer(-1), 0);
  const auto fit = tutte_grothendieck_fit({tr});
  EXPECT_FALSE(fit.consistent);
  ASSERT_TRUE(fit.root_certificate.has_value());
  EXPECT_EQ(fit.root_certificate->root, -1);
  EXPECT_EQ(fit.root_certificate->whole_value, 1);
}

TEST(DeletionContraction, MUniformRankTwoDisplay) {
  // M(U2,3) = (t+1)^2 (t-1)^4 - t (t+1)^2 (t-1)^2.
  const auto first = oracle::mul(oracle::power(kTPlus1, 2), oracle::power(kTMinus1, 4));
  const auto second =
      oracle::mul(oracle::from_coeffs({0, -1}), oracle::mul(oracle::power(kTPlus1, 2), oracle::power(kTMinus1, 2)));
  EXPECT_EQ(matroid_j_mobius_poly(uniform(2, 3)), oracle::to_laurent(oracle::add(first, second)));
}

TEST(DeletionContraction, MFitForcedThenRefuted) {
  const auto fit = tutte_grothendieck_fit({deletion_contraction_triple(uniform(2, 3), 0, matroid_j_mobius_poly),
                                           deletion_contraction_triple(uniform(2, 4), 0, matroid_j_mobius_poly),
                                           deletion_contraction_triple(uniform(3, 4), 0, matroid_j_mobius_poly)});
  EXPECT_FALSE(fit.consistent);
  EXPECT_EQ(fit.prefix_length, 2U);
  EXPECT_TRUE(fit.prefix_unique);
  EXPECT_EQ(fit.prefix_a, LaurentPoly(1));
  EXPECT_EQ(fit.prefix_b, oracle::to_laurent(oracle::from_coeffs({0, -1, -1})));
  ASSERT_TRUE(fit.failing_triple.has_value());
  EXPECT_EQ(*fit.failing_triple, 2U);
  EXPECT_EQ(fit.residual, oracle::to_laurent(oracle::from_coeffs({0, -2, 0, 3, 1, -3, 1})));
  EXPECT_NE(fit.residual.eval_integer(-1), 0);
}

TEST(DeletionContraction, MAtMinusOneOnU34) {
  // (t-1)(t^8 - 3t^7 - t^6 + 12t^5 - 2t^4 - 12t^3 + 3t^2 + 5t - 1)
  const auto want = oracle::mul(kTMinus1, oracle::from_coeffs({-1, 5, 3, -12, -2, 12, -1, -3, 1}));
  const LaurentPoly m = matroid_j_mobius_poly(uniform(3, 4));
  EXPECT_EQ(m, oracle::to_laurent(want));
  EXPECT_EQ(m.eval_integer(-1), 4);
}

}  // namespace
}  // namespace jmobius
