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

#include <vector>

#include "jmobius/errors.hpp"
#include "jmobius/laurent.hpp"
#include "jmobius/poly.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace jmobius {
namespace {

oracle::SparsePoly to_sparse(const LaurentPoly& p) {
  oracle::SparsePoly r;
  for (int e = p.min_exp(); e <= p.max_exp() && !p.is_zero(); ++e)
    if (p.coeff(e) != 0) r[e] = static_cast<long long>(p.coeff(e));
  return r;
}

TEST(Laurent, NormalizesZeros) {
  const LaurentPoly p(-2, {0, 0, 3, 0, 1, 0});
  EXPECT_EQ(p.min_exp(), 0);
  EXPECT_EQ(p.max_exp(), 2);
  EXPECT_EQ(p.coeff(0), 3);
  EXPECT_EQ(p.coeff(1), 0);
  EXPECT_TRUE(LaurentPoly(3, {0, 0}).is_zero());
  EXPECT_EQ(LaurentPoly(3, {0}).min_exp(), 0);
}

TEST(Laurent, Printing) {
  EXPECT_EQ(LaurentPoly::from_coeffs({1, -1, -1, 1}).to_string(), "t^3 - t^2 - t + 1");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_EQ(LaurentPoly(-2, {2, 0, -1}).to_string(), "-1 + 2t^-2");
  EXPECT_EQ(LaurentPoly::from_coeffs({0, -3}).to_string("q"), "-3q");
}

TEST(Laurent, ArithmeticMatchesSparseOracle) {
  gen::Rng rng;
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = gen::random_laurent(rng, -3, 4);
    const auto b = gen::random_laurent(rng, -2, 3);
    EXPECT_EQ(to_sparse(a * b), oracle::mul(to_sparse(a), to_sparse(b)));
    EXPECT_EQ(to_sparse(a + b), oracle::add(to_sparse(a), to_sparse(b)));
    EXPECT_EQ(a - a, LaurentPoly());
    EXPECT_EQ(-(-a), a);
  }
}

TEST(Laurent, RingAxioms) {
  gen::Rng rng;
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = gen::random_laurent(rng, -2, 2), b = gen::random_laurent(rng, -2, 2),
               c = gen::random_laurent(rng, -2, 2);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(Laurent, PowerAndShift) {
  const LaurentPoly x = t_plus(1);
  EXPECT_EQ(x.pow(3), LaurentPoly::from_coeffs({1, 3, 3, 1}));
  EXPECT_EQ(x.pow(0), LaurentPoly(1));
  EXPECT_EQ(x.shifted(-1), LaurentPoly(-1, {1, 1}));
}

TEST(Laurent, Reciprocal) {
  const LaurentPoly p = LaurentPoly::from_coeffs({1, 2, 3});
  EXPECT_EQ(p.reciprocal(), LaurentPoly(-2, {3, 2, 1}));
  EXPECT_EQ(p.reciprocal().reciprocal(), p);
}

TEST(Laurent, Evaluation) {
  const LaurentPoly p = LaurentPoly::from_coeffs({1, -1, -1, 1});
  EXPECT_EQ(p.eval_integer(-1), 0);
  EXPECT_EQ(p.eval_integer(2), 3);
  const LaurentPoly q(-1, {1});
  EXPECT_EQ(q.eval(2), Rational(1, 2));
  EXPECT_EQ(q.eval(-1), Rational(-1));
  EXPECT_THROW(q.eval(0), DomainError);
  EXPECT_THROW(q.eval_integer(2), DomainError);
}

TEST(Laurent, ExactDivision) {
  const LaurentPoly a = t_plus(1) * t_minus(2) * LaurentPoly::from_coeffs({1, 0, 1});
  auto q = a.exact_div(t_plus(1));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q * t_plus(1), a);
  EXPECT_FALSE(a.exact_div(t_plus(3)).has_value());
  EXPECT_FALSE(LaurentPoly::from_coeffs({1, 1}).exact_div(LaurentPoly::from_coeffs({1, 2})).has_value());
  EXPECT_THROW(a.exact_div(LaurentPoly()), DomainError);
}

TEST(Poly, DenseArithmetic) {
  const QPoly a(std::vector<Integer>{1, 1});
  EXPECT_EQ(a.pow(2), QPoly(std::vector<Integer>{1, 2, 1}));
  EXPECT_EQ(a - a, QPoly());
  EXPECT_EQ(QPoly().degree(), -1);
  EXPECT_EQ(QPoly::x().shifted(2), QPoly::monomial(1, 3));
}

TEST(Poly, Evaluation) {
  const QPoly a(std::vector<Integer>{1, 1, 1});
  EXPECT_EQ(eval(a, 2), 7);
  EXPECT_EQ(to_string(a), "q^2 + q + 1");
}

TEST(Poly, Bivariate) {
  // (t - q)(t - 1) = t^2 - (q + 1) t + q
  const BiPoly tq(std::vector<QPoly>{-QPoly::x(), QPoly(1)});
  const BiPoly t1(std::vector<QPoly>{QPoly(-1), QPoly(1)});
  const BiPoly prod = tq * t1;
  EXPECT_EQ(to_string(prod), "t^2 + (-q - 1)t + q");
  EXPECT_EQ(specialize(prod, 3), LaurentPoly::from_coeffs({3, -4, 1}));
  EXPECT_EQ(eval_t(prod, 1), QPoly());
}

}  // namespace
}  // namespace jmobius
