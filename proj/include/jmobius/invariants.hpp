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

#pragma once

#include <vector>

#include "jmobius/errors.hpp"
#include "jmobius/incidence.hpp"
#include "jmobius/integer.hpp"
#include "jmobius/laurent.hpp"
#include "jmobius/lattice.hpp"
#include "jmobius/poset.hpp"
#include "jmobius/trincidence.hpp"

namespace jmobius {

/// A ranked poset with 0̂ and 1̂ identified.
class RankedLatticeView {
 public:
  explicit RankedLatticeView(Poset p) : poset_(std::move(p)) {
    if (!poset_.ranked()) throw RankError("expected a ranked poset");
    auto b = poset_.bottom();
    auto t = poset_.top();
    if (!b || !t) throw NoBoundsError("expected a poset with 0̂ and 1̂");
    bottom_ = *b;
    top_ = *t;
  }

  const Poset& poset() const { return poset_; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  int rk() const { return poset_.rank(); }
  int rk(Element x) const { return poset_.rank(x); }
  int crk(Element x) const { return poset_.corank(x); }
  /// ρ(x,y,z) = 3 rk(P) - rk(x) - rk(y) - rk(z).
  int rho(Element x, Element y, Element z) const { return 3 * rk() - rk(x) - rk(y) - rk(z); }

 private:
  Poset poset_;
  Element bottom_ = 0;
  Element top_ = 0;
};

namespace detail {

inline void require_ranked(const Poset& p) {
  if (!p.ranked()) throw RankError("expected a ranked poset");
}

inline Element require_bottom(const Poset& p) {
  auto b = p.bottom();
  if (!b) throw NoBoundsError("expected a poset with 0̂");
  return *b;
}

inline LaurentPoly from_exponent_table(const std::vector<Integer>& by_exp) {
  return LaurentPoly(0, by_exp);
}

}  // namespace detail

/// χ(P,t) = Σ_x μ(0̂,x) t^{crk(x)}.
inline LaurentPoly char_poly(const Poset& p) {
  detail::require_ranked(p);
  const Element z = detail::require_bottom(p);
  const auto mu = mobius(p);
  std::vector<Integer> c(static_cast<std::size_t>(p.rank()) + 1, 0);
  for (Element x : p.up(z)) c[static_cast<std::size_t>(p.corank(x))] += mu(z, x);
  return detail::from_exponent_table(c);
}

/// 𝒥(P,t) = (-1)^{rk P} Σ_x J(0̂,x,1̂) t^{crk(x)} for a given J on P.
inline LaurentPoly j_char_poly(const IncFn3<Integer>& J) {
  RankedLatticeView v(J.poset());
  std::vector<Integer> c(static_cast<std::size_t>(v.rk()) + 1, 0);
  for (Element x = 0; x < v.poset().size(); ++x) c[static_cast<std::size_t>(v.crk(x))] += J(v.bottom(), x, v.top());
  if (v.rk() % 2 != 0)
    for (auto& e : c) e = -e;
  return detail::from_exponent_table(c);
}

inline LaurentPoly j_char_poly(const Poset& p) {
  RankedLatticeView v(p);
  return j_char_poly(j_fast(p));
}

/// ℳ(P,t) = Σ_{(x,y,z) ∈ Fl³} J(x,y,z) t^{ρ(x,y,z)} for a given J on P.
inline LaurentPoly j_mobius_poly(const IncFn3<Integer>& J) {
  const Poset& p = J.poset();
  detail::require_ranked(p);
  const int rk = p.empty() ? 0 : p.rank();
  std::vector<Integer> c(static_cast<std::size_t>(3 * rk) + 1, 0);
  p.for_each_flag3([&](std::size_t i, Element x, Element y, Element z) {
    const Integer& v = J.value(i);
    if (v != 0) c[static_cast<std::size_t>(3 * rk - p.rank(x) - p.rank(y) - p.rank(z))] += v;
  });
  return detail::from_exponent_table(c);
}

inline LaurentPoly j_mobius_poly(const Poset& p) {
  detail::require_ranked(p);
  return j_mobius_poly(j_fast(p));
}

/// t^{rk L} Σ_y t^{crk y} χ(L^y, t) χ((L^op)^y, t^{-1}).
inline LaurentPoly m_decomposition(const Poset& l) {
  LatticeOps ops(l);
  RankedLatticeView v(l);
  const Poset op = opposite(l);
  LaurentPoly sum;
  for (Element y = 0; y < l.size(); ++y) {
    const LaurentPoly up = char_poly(upper_interval(l, y).poset);
    const LaurentPoly down = char_poly(upper_interval(op, y).poset).reciprocal();
    sum += (up * down).shifted(v.crk(y));
  }
  return sum.shifted(v.rk());
}

/// Strict positivity of every coefficient of 𝒥(L,t) from t^0 to t^{rk L}.
/// HypothesisError unless L is a semimodular lattice (pass false to probe
/// outside the hypothesis).
inline bool check_positive_coeffs(const Poset& l, bool enforce_hypothesis = true) {
  if (enforce_hypothesis && !is_semimodular(l)) throw HypothesisError("expected a semimodular lattice");
  const LaurentPoly j = j_char_poly(l);
  for (int e = 0; e <= l.rank(); ++e)
    if (j.coeff(e) <= 0) return false;
  return true;
}

/// ℳ(L,1) = 0; HypothesisError for fewer than two elements.
inline bool check_root_at_one(const Poset& l) {
  if (l.size() < 2) throw HypothesisError("expected at least two elements");
  return j_mobius_poly(l).eval_integer(1) == 0;
}

/// ℳ(L,-1).
inline Integer eval_at_minus_one(const Poset& l) { return j_mobius_poly(l).eval_integer(-1); }

}  // namespace jmobius
