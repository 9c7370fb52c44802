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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jmobius/errors.hpp"
#include "jmobius/integer.hpp"
#include "jmobius/lattice.hpp"
#include "jmobius/poset.hpp"

namespace jmobius {

inline void require_same_poset(const Poset& a, const Poset& b) {
  if (!a.same_order(b)) throw PosetMismatchError("incidence functions live on different posets");
}

/// An element of the incidence algebra: a value for every pair x <= y.
///
/// Values are stored densely in Fl^2 index order. Lookups off the flag set
/// throw OrderError.
template <Ring R = Integer>
class IncFn2 {
 public:
  using value_type = R;

  /// The zero function on `p`.
  explicit IncFn2(Poset p) : poset_(std::move(p)), values_(poset_.num_flags2(), R(0)) {}

  IncFn2(Poset p, std::vector<R> values) : poset_(std::move(p)), values_(std::move(values)) {
    if (values_.size() != poset_.num_flags2())
      throw IndexError("expected " + std::to_string(poset_.num_flags2()) + " values on Fl^2");
  }

  const Poset& poset() const { return poset_; }

  const R& operator()(Element x, Element y) const { return values_[poset_.flag2_index(x, y)]; }
  R& at(Element x, Element y) { return values_[poset_.flag2_index(x, y)]; }

  const R& value(std::size_t flag_index) const { return values_[flag_index]; }
  R& value(std::size_t flag_index) { return values_[flag_index]; }
  std::span<const R> values() const { return values_; }

  IncFn2& operator+=(const IncFn2& o) {
    require_same_poset(poset_, o.poset_);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  IncFn2& operator-=(const IncFn2& o) {
    require_same_poset(poset_, o.poset_);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  friend IncFn2 operator+(IncFn2 a, const IncFn2& b) { return a += b; }
  friend IncFn2 operator-(IncFn2 a, const IncFn2& b) { return a -= b; }
  friend IncFn2 operator-(IncFn2 a) {
    for (auto& v : a.values_) v = -v;
    return a;
  }
  friend IncFn2 operator*(const R& r, IncFn2 a) {
    for (auto& v : a.values_) v = r * v;
    return a;
  }

  /// Exact pointwise equality over all of Fl^2 (false across posets).
  friend bool operator==(const IncFn2& a, const IncFn2& b) {
    return a.poset_.same_order(b.poset_) && a.values_ == b.values_;
  }

 private:
  Poset poset_;
  std::vector<R> values_;
};

/// Builds a function from fn(x, y) over Fl^2.
template <Ring R = Integer, class Fn>
IncFn2<R> tabulate2(const Poset& p, Fn&& fn) {
  std::vector<R> v;
  v.reserve(p.num_flags2());
  for (auto [x, y] : p.flags2()) v.push_back(R(fn(x, y)));
  return IncFn2<R>(p, std::move(v));
}

template <Ring R = Integer>
IncFn2<R> delta2(const Poset& p) {
  return tabulate2<R>(p, [](Element x, Element y) { return x == y ? R(1) : R(0); });
}

template <Ring R = Integer>
IncFn2<R> zeta2(const Poset& p) {
  return tabulate2<R>(p, [](Element, Element) { return R(1); });
}

/// (f ∗ g)(x, y) = Σ_{x<=a<=y} f(x, a) g(a, y).
template <Ring R>
IncFn2<R> convolve2(const IncFn2<R>& f, const IncFn2<R>& g) {
  require_same_poset(f.poset(), g.poset());
  const Poset& p = f.poset();
  IncFn2<R> out(p);
  for (std::size_t i = 0; i < p.num_flags2(); ++i) {
    auto [x, y] = p.flags2()[i];
    R acc(0);
    for (Element a : p.up(x))
      if (p.leq(a, y)) acc += f.value(p.unchecked_flag2_index(x, a)) * g.value(p.unchecked_flag2_index(a, y));
    out.value(i) = std::move(acc);
  }
  return out;
}

/// The Möbius function by interval recursion μ(x,x) = 1,
/// μ(x,y) = -Σ_{x<=a<y} μ(x,a).
template <Ring R = Integer>
IncFn2<R> mobius(const Poset& p) {
  IncFn2<R> mu(p);
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y : p.linear_extension()) {
      if (!p.leq(x, y)) continue;
      if (x == y) {
        mu.value(p.unchecked_flag2_index(x, x)) = R(1);
        continue;
      }
      R acc(0);
      for (Element a : p.up(x))
        if (a != y && p.leq(a, y)) acc += mu.value(p.unchecked_flag2_index(x, a));
      mu.value(p.unchecked_flag2_index(x, y)) = -acc;
    }
  }
  return mu;
}

/// (f × g)((x1,x2),(y1,y2)) = f(x1,y1) g(x2,y2) on the product poset.
template <Ring R>
IncFn2<R> tensor2(const IncFn2<R>& f, const IncFn2<R>& g) {
  const Poset& p = f.poset();
  const Poset& q = g.poset();
  const Poset pq = product(p, q);
  const std::size_t m = q.size();
  return tabulate2<R>(pq, [&](Element u, Element v) {
    return f.value(p.unchecked_flag2_index(u / m, v / m)) * g.value(q.unchecked_flag2_index(u % m, v % m));
  });
}

/// Σ_i (-1)^i c_i(x, y).
inline Integer hall_sum(const Poset& p, Element x, Element y) {
  const auto c = chain_counts(p, x, y);
  Integer s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += sign_power(static_cast<long long>(i)) * c[i];
  return s;
}

// Cross-cuts ------------------------------------------------------------

enum class CutKind { lower, upper };

/// A lower or upper cross-cut of the interval [x, y].
struct CrossCut {
  CutKind kind = CutKind::lower;
  Element x = 0;
  Element y = 0;
  std::vector<Element> members;

  /// Atoms of [x, y], a lower cross-cut.
  static CrossCut atoms_of(const Poset& p, Element x, Element y) {
    p.require_leq(x, y);
    CrossCut c{CutKind::lower, x, y, {}};
    for (Element a : p.upper_covers(x))
      if (p.leq(a, y)) c.members.push_back(a);
    return c;
  }

  /// Coatoms of [x, y], an upper cross-cut.
  static CrossCut coatoms_of(const Poset& p, Element x, Element y) {
    p.require_leq(x, y);
    CrossCut c{CutKind::upper, x, y, {}};
    for (Element a : p.lower_covers(y))
      if (p.leq(x, a)) c.members.push_back(a);
    return c;
  }

  /// Throws InvalidCrossCutError unless the cross-cut condition holds.
  void validate(const Poset& p) const {
    if (x >= p.size() || y >= p.size() || !p.leq(x, y))
      throw InvalidCrossCutError("cross-cut interval is not a flag");
    const Element excluded = kind == CutKind::lower ? x : y;
    std::vector<Element> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidCrossCutError("cross-cut has repeated members");
    for (Element m : members)
      if (m >= p.size() || !p.leq(x, m) || !p.leq(m, y) || m == excluded)
        throw InvalidCrossCutError("cross-cut member " + std::to_string(m) + " outside the allowed range");
    for (Element b : p.interval_elements(x, y)) {
      if (b == excluded || std::binary_search(sorted.begin(), sorted.end(), b)) continue;
      bool covered = std::any_of(members.begin(), members.end(), [&](Element m) {
        return kind == CutKind::lower ? p.lt(m, b) : p.lt(b, m);
      });
      if (!covered)
        throw InvalidCrossCutError("element " + p.label(b) + " is not separated by the cross-cut");
    }
  }
};

namespace detail {

inline constexpr std::size_t kMaxCutSize = 26;

// Signed count Σ (-1)^{|A|} over subsets A of `members` whose join (lower) or
// meet (upper), starting from `start`, lands on `target`.
inline Integer signed_subset_count(const LatticeOps& ops, std::span<const Element> members, CutKind kind,
                                   Element start, Element target) {
  if (members.size() > kMaxCutSize)
    throw SizeBoundError("cross-cut with " + std::to_string(members.size()) + " members is too large");
  Integer total = 0;
  std::function<void(std::size_t, Element, bool)> rec = [&](std::size_t i, Element acc, bool odd) {
    if (i == members.size()) {
      if (acc == target) total += odd ? -1 : 1;
      return;
    }
    rec(i + 1, acc, odd);
    rec(i + 1, kind == CutKind::lower ? ops.join(acc, members[i]) : ops.meet(acc, members[i]), !odd);
  };
  rec(0, start, false);
  return total;
}

}  // namespace detail

/// Lower cut: Σ_{A ⊆ S, ∨A = y} (-1)^|A| (with ∨∅ = x).
/// Upper cut: Σ_{B ⊆ T, ∧B = x} (-1)^|B| (with ∧∅ = y).
inline Integer crosscut_sum(const Poset& p, const CrossCut& cut) {
  LatticeOps ops(p);
  cut.validate(p);
  if (cut.kind == CutKind::lower) return detail::signed_subset_count(ops, cut.members, cut.kind, cut.x, cut.y);
  return detail::signed_subset_count(ops, cut.members, cut.kind, cut.y, cut.x);
}

/// Σ_{x ∧ a = 0̂} μ(x, 1̂). Vanishes whenever a ≠ 1̂.
inline Integer weisner_sum(const Poset& p, Element a) {
  LatticeOps ops(p);
  if (p.size() < 2) throw HypothesisError("Weisner's sum needs a lattice with at least two elements");
  if (a >= p.size()) throw IndexError("element out of range");
  if (a == ops.top()) throw BadElementError("Weisner's sum needs a != 1̂");
  const auto mu = mobius(p);
  Integer s = 0;
  for (Element x = 0; x < p.size(); ++x)
    if (ops.meet(x, a) == ops.bottom()) s += mu(x, ops.top());
  return s;
}

}  // namespace jmobius
