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

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jmobius/errors.hpp"
#include "jmobius/incidence.hpp"
#include "jmobius/integer.hpp"
#include "jmobius/lattice.hpp"
#include "jmobius/poset.hpp"

namespace jmobius {

/// A function on 3-flags x <= y <= z: an element of the 3-variable incidence
/// near-ring. Addition is pointwise; the product is `tri_mul`.
template <Ring R = Integer>
class IncFn3 {
 public:
  using value_type = R;

  /// The zero function Z on `p`.
  explicit IncFn3(Poset p) : poset_(std::move(p)), values_(poset_.num_flags3(), R(0)) {}

  IncFn3(Poset p, std::vector<R> values) : poset_(std::move(p)), values_(std::move(values)) {
    if (values_.size() != poset_.num_flags3())
      throw IndexError("expected " + std::to_string(poset_.num_flags3()) + " values on Fl^3");
  }

  const Poset& poset() const { return poset_; }

  const R& operator()(Element x, Element y, Element z) const { return values_[poset_.flag3_index(x, y, z)]; }
  R& at(Element x, Element y, Element z) { return values_[poset_.flag3_index(x, y, z)]; }

  const R& value(std::size_t flag_index) const { return values_[flag_index]; }
  R& value(std::size_t flag_index) { return values_[flag_index]; }
  std::span<const R> values() const { return values_; }

  IncFn3& operator+=(const IncFn3& o) {
    require_same_poset(poset_, o.poset_);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  IncFn3& operator-=(const IncFn3& o) {
    require_same_poset(poset_, o.poset_);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  friend IncFn3 operator+(IncFn3 a, const IncFn3& b) { return a += b; }
  friend IncFn3 operator-(IncFn3 a, const IncFn3& b) { return a -= b; }
  friend IncFn3 operator-(IncFn3 a) {
    for (auto& v : a.values_) v = -v;
    return a;
  }
  /// Pointwise scalar action r·f.
  friend IncFn3 operator*(const R& r, IncFn3 a) {
    for (auto& v : a.values_) v = r * v;
    return a;
  }

  friend bool operator==(const IncFn3& a, const IncFn3& b) {
    return a.poset_.same_order(b.poset_) && a.values_ == b.values_;
  }

 private:
  Poset poset_;
  std::vector<R> values_;
};

template <Ring R = Integer, class Fn>
IncFn3<R> tabulate3(const Poset& p, Fn&& fn) {
  std::vector<R> v(p.num_flags3(), R(0));
  p.for_each_flag3([&](std::size_t i, Element x, Element y, Element z) { v[i] = R(fn(x, y, z)); });
  return IncFn3<R>(p, std::move(v));
}

template <Ring R = Integer>
IncFn3<R> delta3(const Poset& p) {
  return tabulate3<R>(p, [](Element x, Element y, Element z) { return x == y && y == z ? R(1) : R(0); });
}

template <Ring R = Integer>
IncFn3<R> zeta3(const Poset& p) {
  return tabulate3<R>(p, [](Element, Element, Element) { return R(1); });
}

/// (f ⋗ g)(x,y,z) = Σ_{x<=a<=y<=b<=z} f(x,a,a) g(a,y,b) f(b,b,z).
template <Ring R>
IncFn3<R> tri_mul(const IncFn3<R>& f, const IncFn3<R>& g) {
  require_same_poset(f.poset(), g.poset());
  const Poset& p = f.poset();
  IncFn3<R> out(p);
  std::vector<Element> lows, highs;
  p.for_each_flag3([&](std::size_t i, Element x, Element y, Element z) {
    lows.clear();
    highs.clear();
    for (Element a : p.up(x))
      if (p.leq(a, y)) lows.push_back(a);
    for (Element b : p.up(y))
      if (p.leq(b, z)) highs.push_back(b);
    R acc(0);
    for (Element a : lows) {
      const R& left = f.value(p.unchecked_flag3_index(x, a, a));
      if (left == R(0)) continue;
      for (Element b : highs)
        acc += left * g.value(p.unchecked_flag3_index(a, y, b)) * f.value(p.unchecked_flag3_index(b, b, z));
    }
    out.value(i) = std::move(acc);
  });
  return out;
}

/// Pointwise sum; same as `f + g`.
template <Ring R>
IncFn3<R> tri_add(const IncFn3<R>& f, const IncFn3<R>& g) {
  return f + g;
}

/// (f ◇ g)(x,y,z) = f(x,y) g(y,z).
template <Ring R>
IncFn3<R> diamond(const IncFn2<R>& f, const IncFn2<R>& g) {
  require_same_poset(f.poset(), g.poset());
  const Poset& p = f.poset();
  return tabulate3<R>(p, [&](Element x, Element y, Element z) {
    return f.value(p.unchecked_flag2_index(x, y)) * g.value(p.unchecked_flag2_index(y, z));
  });
}

/// (f × g)((x1,x2),(y1,y2),(z1,z2)) = f(x1,y1,z1) g(x2,y2,z2) on P × Q.
template <Ring R>
IncFn3<R> tensor3(const IncFn3<R>& f, const IncFn3<R>& g) {
  const Poset& p = f.poset();
  const Poset& q = g.poset();
  const std::size_t m = q.size();
  return tabulate3<R>(product(p, q), [&](Element u, Element v, Element w) {
    return f.value(p.unchecked_flag3_index(u / m, v / m, w / m)) *
           g.value(q.unchecked_flag3_index(u % m, v % m, w % m));
  });
}

/// J from its defining recursion Σ_{(a,b) ⊴ (x,y,z)} J(a,y,b) = δ3(x,y,z),
/// solved over flags in order of increasing |[x,y]| + |[y,z]|.
template <Ring R = Integer>
IncFn3<R> j_recursive(const Poset& p) {
  std::vector<Flag3> fl = p.flags3();
  std::vector<std::size_t> weight(fl.size());
  for (std::size_t i = 0; i < fl.size(); ++i)
    weight[i] = p.interval_size(fl[i].x, fl[i].y) + p.interval_size(fl[i].y, fl[i].z);
  std::vector<std::size_t> order(fl.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weight[a] < weight[b]; });

  IncFn3<R> J(p);
  for (std::size_t i : order) {
    auto [x, y, z] = fl[i];
    if (x == y && y == z) {
      J.value(i) = R(1);
      continue;
    }
    R acc(0);
    for (Element a : p.up(x)) {
      if (!p.leq(a, y)) continue;
      for (Element b : p.up(y)) {
        if (!p.leq(b, z) || (a == x && b == z)) continue;
        acc += J.value(p.unchecked_flag3_index(a, y, b));
      }
    }
    J.value(i) = -acc;
  }
  return J;
}

/// J = μ ◇ μ.
template <Ring R = Integer>
IncFn3<R> j_fast(const Poset& p) {
  const auto mu = mobius<R>(p);
  return diamond(mu, mu);
}

// Classical theorems lifted to J ------------------------------------------

struct OthersideSums {
  Integer j_form;   ///< Σ J(x,a,a) J(b,b,z)
  Integer mu_form;  ///< Σ μ(x,a) μ(b,z)
};

/// Both forms of Σ_{(a,b) ⊴ (x,y,z)} J(x,a,a) J(b,b,z); each equals δ3(x,y,z).
inline OthersideSums otherside_sum(const Poset& p, Element x, Element y, Element z) {
  p.require_leq(x, y);
  p.require_leq(y, z);
  const auto mu = mobius(p);
  const auto J = diamond(mu, mu);
  OthersideSums s{0, 0};
  for (Element a : p.up(x)) {
    if (!p.leq(a, y)) continue;
    for (Element b : p.up(y)) {
      if (!p.leq(b, z)) continue;
      s.j_form += J(x, a, a) * J(b, b, z);
      s.mu_form += mu(x, a) * mu(b, z);
    }
  }
  return s;
}

/// Σ_{i,j} (-1)^{i+j} c_{i,j}(x,y,z).
inline Integer hall_gen_sum(const Poset& p, Element x, Element y, Element z) {
  p.require_leq(x, y);
  p.require_leq(y, z);
  const std::size_t max_i = p.interval_size(x, y);
  const std::size_t max_j = p.interval_size(y, z);
  Integer s = 0;
  for (std::size_t i = 0; i < max_i; ++i)
    for (std::size_t j = 0; j < max_j; ++j)
      s += sign_power(static_cast<long long>(i + j)) * chain_count_cij(p, x, y, z, i, j);
  return s;
}

/// A double cross-cut of (x, y, z): one cross-cut on [x, y] and one on
/// [y, z], combined as a disjoint union. Lower/lower is the S form, upper/upper
/// the T form, and the mixed kinds the ST and TS forms.
struct DoubleCrossCut {
  Element x = 0;
  Element y = 0;
  Element z = 0;
  CrossCut first;
  CrossCut second;

  static DoubleCrossCut of_kinds(const Poset& p, Element x, Element y, Element z, CutKind k1, CutKind k2) {
    p.require_leq(x, y);
    p.require_leq(y, z);
    auto make = [&](CutKind k, Element lo, Element hi) {
      return k == CutKind::lower ? CrossCut::atoms_of(p, lo, hi) : CrossCut::coatoms_of(p, lo, hi);
    };
    return {x, y, z, make(k1, x, y), make(k2, y, z)};
  }
  /// S_{x,y,z}: atoms of both intervals.
  static DoubleCrossCut lower(const Poset& p, Element x, Element y, Element z) {
    return of_kinds(p, x, y, z, CutKind::lower, CutKind::lower);
  }
  /// T_{x,y,z}: coatoms of both intervals.
  static DoubleCrossCut upper(const Poset& p, Element x, Element y, Element z) {
    return of_kinds(p, x, y, z, CutKind::upper, CutKind::upper);
  }

  void validate(const Poset& p) const {
    if (first.x != x || first.y != y || second.x != y || second.y != z)
      throw InvalidCrossCutError("double cross-cut components do not match the triple");
    first.validate(p);
    second.validate(p);
  }
};

/// Signed count of subsets A of the disjoint union whose part in each
/// component reaches that component's target: for a lower component the join
/// of its part must be the interval top, for an upper one the meet must be the
/// interval bottom. Enumerates subsets of the union directly.
inline Integer double_crosscut_sum(const Poset& p, const DoubleCrossCut& cut) {
  LatticeOps ops(p);
  cut.validate(p);
  const std::size_t n1 = cut.first.members.size();
  const std::size_t n2 = cut.second.members.size();
  if (n1 + n2 > detail::kMaxCutSize) throw SizeBoundError("double cross-cut is too large to enumerate");

  auto start = [](const CrossCut& c) { return c.kind == CutKind::lower ? c.x : c.y; };
  auto target = [](const CrossCut& c) { return c.kind == CutKind::lower ? c.y : c.x; };
  auto step = [&](const CrossCut& c, Element acc, Element m) {
    return c.kind == CutKind::lower ? ops.join(acc, m) : ops.meet(acc, m);
  };

  Integer total = 0;
  std::function<void(std::size_t, Element, Element, bool)> rec = [&](std::size_t i, Element acc1, Element acc2,
                                                                     bool odd) {
    if (i == n1 + n2) {
      if (acc1 == target(cut.first) && acc2 == target(cut.second)) total += odd ? -1 : 1;
      return;
    }
    rec(i + 1, acc1, acc2, odd);
    if (i < n1)
      rec(i + 1, step(cut.first, acc1, cut.first.members[i]), acc2, !odd);
    else
      rec(i + 1, acc1, step(cut.second, acc2, cut.second.members[i - n1]), !odd);
  };
  rec(0, start(cut.first), start(cut.second), false);
  return total;
}

/// Σ_{x ∧ a = 0̂} J(x, b, 1̂) for 0̂ < a < b; vanishes.
template <Ring R>
R weisner_gen_sum(const IncFn3<R>& J, Element a, Element b) {
  const Poset& p = J.poset();
  LatticeOps ops(p);
  if (p.size() < 3) throw HypothesisError("generalized Weisner sum needs a lattice with at least three elements");
  if (a >= p.size() || b >= p.size()) throw IndexError("element out of range");
  if (!(p.lt(ops.bottom(), a) && p.lt(a, b))) throw HypothesisError("generalized Weisner sum needs 0̂ < a < b");
  R s(0);
  for (Element x : p.down(b))
    if (ops.meet(x, a) == ops.bottom()) s += J(x, b, ops.top());
  return s;
}

inline Integer weisner_gen_sum(const Poset& p, Element a, Element b) { return weisner_gen_sum(j_fast(p), a, b); }

/// Σ_{z ∨ a = 1̂} J(0̂, b, z) for b < a < 1̂, summing over the rightmost
/// variable; vanishes.
template <Ring R>
R weisner_gen_sum_dual(const IncFn3<R>& J, Element a, Element b) {
  const Poset& p = J.poset();
  LatticeOps ops(p);
  if (p.size() < 3) throw HypothesisError("generalized Weisner sum needs a lattice with at least three elements");
  if (a >= p.size() || b >= p.size()) throw IndexError("element out of range");
  if (!(p.lt(b, a) && p.lt(a, ops.top()))) throw HypothesisError("dual generalized Weisner sum needs b < a < 1̂");
  R s(0);
  for (Element z : p.up(b))
    if (ops.join(z, a) == ops.top()) s += J(ops.bottom(), b, z);
  return s;
}

inline Integer weisner_gen_sum_dual(const Poset& p, Element a, Element b) {
  return weisner_gen_sum_dual(j_fast(p), a, b);
}

// Algebraic structure ----------------------------------------------------

/// f ⋗ (g + h) == (f ⋗ g) + (f ⋗ h).
template <Ring R>
bool left_distributivity_check(const IncFn3<R>& f, const IncFn3<R>& g, const IncFn3<R>& h) {
  return tri_mul(f, g + h) == tri_mul(f, g) + tri_mul(f, h);
}

/// (f ◇ g) ⋗ (r ◇ s) == (f ∗ r) ◇ (s ∗ g), without checking any hypothesis.
template <Ring R>
bool almosthom_identity_holds(const IncFn2<R>& f, const IncFn2<R>& g, const IncFn2<R>& r, const IncFn2<R>& s) {
  return tri_mul(diamond(f, g), diamond(r, s)) == diamond(convolve2(f, r), convolve2(s, g));
}

/// The ◇/⋗ compatibility identity under its hypothesis f(b,b) g(a,a) = 1 for
/// all a, b; HypothesisError when the hypothesis fails.
template <Ring R>
bool almosthom_check(const IncFn2<R>& f, const IncFn2<R>& g, const IncFn2<R>& r, const IncFn2<R>& s) {
  const Poset& p = f.poset();
  require_same_poset(p, g.poset());
  for (Element a = 0; a < p.size(); ++a)
    for (Element b = 0; b < p.size(); ++b)
      if (!(f(b, b) * g(a, a) == R(1)))
        throw HypothesisError("f(b,b) g(a,a) = 1 fails at a=" + p.label(a) + ", b=" + p.label(b));
  return almosthom_identity_holds(f, g, r, s);
}

/// (f + g) ◇ (r + s) == f◇r + f◇s + g◇r + g◇s.
template <Ring R>
bool addhom_check(const IncFn2<R>& f, const IncFn2<R>& g, const IncFn2<R>& r, const IncFn2<R>& s) {
  return diamond(f + g, r + s) == diamond(f, r) + diamond(f, s) + diamond(g, r) + diamond(g, s);
}

/// (F ⋗ G) × (R ⋗ S) == (F × R) ⋗ (G × S) for F, G on P and R, S on Q.
template <Ring V>
bool trimul_tensor_check(const IncFn3<V>& F, const IncFn3<V>& G, const IncFn3<V>& Rq, const IncFn3<V>& Sq) {
  return tensor3(tri_mul(F, G), tri_mul(Rq, Sq)) == tri_mul(tensor3(F, Rq), tensor3(G, Sq));
}

/// Checks both product factorizations for f, g on P and r, s on Q:
/// (f ◇ g) × (r ◇ s) == (f × r) ◇ (g × s), and the ⋗ factorization on the
/// lifted functions F = f◇g, G = g◇f, R = r◇s, S = s◇r.
template <Ring V>
bool dia_tensor_check(const IncFn2<V>& f, const IncFn2<V>& g, const IncFn2<V>& r, const IncFn2<V>& s) {
  const bool dia = tensor3(diamond(f, g), diamond(r, s)) == diamond(tensor2(f, r), tensor2(g, s));
  return dia && trimul_tensor_check(diamond(f, g), diamond(g, f), diamond(r, s), diamond(s, r));
}

/// One explicit failure of an identity in the near-ring.
struct StructureWitness {
  std::string property;      ///< the identity that fails
  std::string construction;  ///< how f was built
  Flag3 triple;              ///< where the two sides differ
  IncFn3<Integer> f;
  std::string lhs_expr;
  std::string rhs_expr;
  Integer lhs;
  Integer rhs;

  bool violated() const { return lhs != rhs; }
};

/// Witnesses that ⋗ is not commutative, has no right identity δ3, is not
/// associative and is not right distributive. Each f is ζ3 perturbed at one
/// diagonal flag; both sides are evaluated with the full product.
///
/// Needs two comparable elements x < y. Non-associativity uses a strict
/// 3-chain x < y < z when one exists and otherwise the non-idempotent integer
/// 2 on the diagonal.
inline std::vector<StructureWitness> structure_witnesses(const Poset& p) {
  std::optional<std::pair<Element, Element>> pair;
  for (auto [x, y] : p.flags2())
    if (x != y) {
      pair = std::make_pair(x, y);
      break;
    }
  if (!pair) throw HypothesisError("no witness required: poset has no two comparable elements");
  const auto [x, y] = *pair;

  const auto d = delta3(p);
  const auto z3 = zeta3(p);
  auto perturbed = [&](Element e) {
    auto f = zeta3(p);
    f.at(e, e, e) = 2;
    return f;
  };
  const std::string sx = p.label(x), sy = p.label(y);

  std::vector<StructureWitness> out;
  {
    auto f = perturbed(x);
    auto fd = tri_mul(f, d);
    auto df = tri_mul(d, f);
    Flag3 t{x, x, y};
    out.push_back({"commutativity", "zeta3 with f(" + sx + "," + sx + "," + sx + ") = 2", t, f, "(f * delta3)",
                   "(delta3 * f)", fd(t.x, t.y, t.z), df(t.x, t.y, t.z)});
    out.push_back({"right identity", out.back().construction, t, f, "(f * delta3)", "f", fd(t.x, t.y, t.z),
                   f(t.x, t.y, t.z)});
  }
  {
    std::optional<Flag3> chain3;
    for (auto [a, b] : p.flags2()) {
      if (a == b) continue;
      for (Element c : p.upper_covers(b)) {
        chain3 = Flag3{a, b, c};
        break;
      }
      if (chain3) break;
    }
    Flag3 t = chain3 ? *chain3 : Flag3{x, x, y};
    Element bump = chain3 ? t.y : x;
    auto f = perturbed(bump);
    auto left = tri_mul(tri_mul(f, d), d);
    auto right = tri_mul(f, tri_mul(d, d));
    std::string how = "zeta3 with f(" + p.label(bump) + "," + p.label(bump) + "," + p.label(bump) + ") = 2";
    how += chain3 ? " on the chain " + p.label(t.x) + " < " + p.label(t.y) + " < " + p.label(t.z)
                  : " (2 is not idempotent in the integers)";
    out.push_back({"associativity", how, t, f, "((f * delta3) * delta3)", "(f * (delta3 * delta3))",
                   left(t.x, t.y, t.z), right(t.x, t.y, t.z)});
  }
  {
    auto f = zeta3(p);
    Flag3 t{x, x, y};
    auto left = tri_mul(f + z3, d);
    auto right = tri_mul(f, d) + tri_mul(z3, d);
    out.push_back({"right distributivity", "f = zeta3, so f(x,y,y) + f(y,y,z) = 2", t, f, "((f + zeta3) * delta3)",
                   "(f * delta3) + (zeta3 * delta3)", left(t.x, t.y, t.z), right(t.x, t.y, t.z)});
  }
  return out;
}

}  // namespace jmobius
