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

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jmobius/errors.hpp"
#include "jmobius/poset.hpp"

namespace jmobius {

namespace detail {

// The element e of `set` whose row in `above` contains all of `set`, or
// nullopt. With the leq matrix this is the least element of the set, with the
// geq matrix the greatest.
inline std::optional<Element> least_in(const Poset& p, const std::vector<std::uint64_t>& set,
                                       const BitMatrix& above) {
  const std::size_t words = above.words();
  std::optional<Element> best;
  std::size_t best_count = 0;
  for (Element e = 0; e < p.size(); ++e) {
    if (!((set[e / 64] >> (e % 64)) & 1U)) continue;
    std::size_t c = 0;
    const std::uint64_t* r = above.row(e);
    for (std::size_t w = 0; w < words; ++w) c += static_cast<std::size_t>(std::popcount(r[w] & set[w]));
    if (!best || c > best_count) {
      best = e;
      best_count = c;
    }
  }
  if (!best) return std::nullopt;
  std::size_t total = 0;
  for (std::size_t w = 0; w < words; ++w) total += static_cast<std::size_t>(std::popcount(set[w]));
  if (best_count != total) return std::nullopt;
  return best;
}

inline std::optional<Element> bound_of(const Poset& p, Element x, Element y, bool upper) {
  const BitMatrix& m = upper ? p.leq_matrix() : p.geq_matrix();
  std::vector<std::uint64_t> set(m.words());
  for (std::size_t w = 0; w < m.words(); ++w) set[w] = m.row(x)[w] & m.row(y)[w];
  return least_in(p, set, m);
}

}  // namespace detail

/// Least upper bound, or nullopt if it does not exist.
inline std::optional<Element> try_join(const Poset& p, Element x, Element y) {
  return detail::bound_of(p, x, y, true);
}
/// Greatest lower bound, or nullopt if it does not exist.
inline std::optional<Element> try_meet(const Poset& p, Element x, Element y) {
  return detail::bound_of(p, x, y, false);
}

inline Element join(const Poset& p, Element x, Element y) {
  auto j = try_join(p, x, y);
  if (!j) throw NotALatticeError("no unique join of " + p.label(x) + " and " + p.label(y));
  return *j;
}
inline Element meet(const Poset& p, Element x, Element y) {
  auto m = try_meet(p, x, y);
  if (!m) throw NotALatticeError("no unique meet of " + p.label(x) + " and " + p.label(y));
  return *m;
}

inline bool is_lattice(const Poset& p) {
  if (p.empty()) return false;
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = x + 1; y < p.size(); ++y)
      if (!try_join(p, x, y) || !try_meet(p, x, y)) return false;
  return true;
}

/// Precomputed join and meet tables of a finite lattice.
class LatticeOps {
 public:
  explicit LatticeOps(const Poset& p) : n_(p.size()), join_(n_ * n_), meet_(n_ * n_) {
    if (p.empty()) throw NotALatticeError("the empty poset is not a lattice");
    for (Element x = 0; x < n_; ++x)
      for (Element y = x; y < n_; ++y) {
        auto j = try_join(p, x, y);
        auto m = try_meet(p, x, y);
        if (!j || !m) throw NotALatticeError("no unique join/meet of " + p.label(x) + " and " + p.label(y));
        join_[x * n_ + y] = join_[y * n_ + x] = *j;
        meet_[x * n_ + y] = meet_[y * n_ + x] = *m;
      }
    bottom_ = *p.bottom();
    top_ = *p.top();
  }

  Element join(Element x, Element y) const { return join_[x * n_ + y]; }
  Element meet(Element x, Element y) const { return meet_[x * n_ + y]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

 private:
  std::size_t n_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  Element bottom_ = 0;
  Element top_ = 0;
};

namespace detail {
inline LatticeOps require_ranked_lattice(const Poset& p) {
  if (!p.ranked()) throw RankError("lattice predicate needs a ranked poset");
  return LatticeOps(p);
}
}  // namespace detail

/// Elements covering 0̂.
inline std::vector<Element> atoms(const Poset& p) {
  auto b = p.bottom();
  if (!b) throw NoBoundsError("poset has no minimum element");
  auto c = p.upper_covers(*b);
  return {c.begin(), c.end()};
}

/// rk(x) + rk(y) >= rk(x ∨ y) + rk(x ∧ y) for all pairs.
inline bool is_semimodular(const Poset& p) {
  auto ops = detail::require_ranked_lattice(p);
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = x + 1; y < p.size(); ++y)
      if (p.rank(x) + p.rank(y) < p.rank(ops.join(x, y)) + p.rank(ops.meet(x, y))) return false;
  return true;
}

/// rk(x) + rk(y) = rk(x ∨ y) + rk(x ∧ y) for all pairs.
inline bool is_modular_lattice(const Poset& p) {
  auto ops = detail::require_ranked_lattice(p);
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = x + 1; y < p.size(); ++y)
      if (p.rank(x) + p.rank(y) != p.rank(ops.join(x, y)) + p.rank(ops.meet(x, y))) return false;
  return true;
}

/// Every element is the join of the atoms below it.
inline bool is_atomic(const Poset& p) {
  LatticeOps ops(p);
  const auto at = atoms(p);
  for (Element x = 0; x < p.size(); ++x) {
    Element j = ops.bottom();
    for (Element a : at)
      if (p.leq(a, x)) j = ops.join(j, a);
    if (j != x) return false;
  }
  return true;
}

/// Semimodular and atomic.
inline bool is_geometric(const Poset& p) { return is_semimodular(p) && is_atomic(p); }

}  // namespace jmobius
