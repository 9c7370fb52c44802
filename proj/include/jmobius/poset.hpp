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
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jmobius/errors.hpp"
#include "jmobius/integer.hpp"

namespace jmobius {

using Element = std::size_t;

/// A weakly increasing pair x <= y.
struct Flag2 {
  Element x = 0;
  Element y = 0;
  friend auto operator<=>(const Flag2&, const Flag2&) = default;
};

/// A weakly increasing triple x <= y <= z.
struct Flag3 {
  Element x = 0;
  Element y = 0;
  Element z = 0;
  friend auto operator<=>(const Flag3&, const Flag3&) = default;
};

namespace detail {

/// Dense square bit matrix, one row of 64-bit words per element.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }

  bool test(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U; }
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }

  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
  std::uint64_t* row(std::size_t i) { return bits_.data() + i * words_; }

  BitMatrix transposed() const {
    BitMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (test(i, j)) t.set(j, i);
    return t;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < words; ++w) c += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  return c;
}

}  // namespace detail

/// A finite partially ordered set on the elements 0..size()-1.
///
/// Immutable after construction; copies share the underlying tables, so a
/// Poset is cheap to pass by value. Construction validates reflexivity,
/// antisymmetry and transitivity, and, when ranks are supplied, that they
/// form a grading (every cover raises the rank by one, minimal elements sit
/// at rank 0).
///
/// Besides the order itself a Poset carries the indexing of its flag sets
/// Fl^2 and Fl^3 in lexicographic element order; incidence functions store
/// their values densely against those indices.
class Poset {
 public:
  Poset() : Poset(build(0, detail::BitMatrix(0), {}, std::nullopt)) {}

  /// Reflexive-transitive closure of a cover list.
  static Poset from_covers(std::size_t size, std::span<const std::pair<Element, Element>> covers,
                           std::vector<std::string> labels = {},
                           std::optional<std::vector<int>> ranks = std::nullopt) {
    detail::BitMatrix adj(size);
    for (auto [a, b] : covers) {
      if (a >= size || b >= size)
        throw IndexError("cover (" + std::to_string(a) + "," + std::to_string(b) + ") out of range for size " +
                         std::to_string(size));
      if (a == b) throw CycleError("self-cover at element " + std::to_string(a));
      adj.set(a, b);
    }
    // Closure by DFS from each element.
    detail::BitMatrix leq(size);
    std::vector<Element> stack;
    for (Element s = 0; s < size; ++s) {
      leq.set(s, s);
      stack.assign(1, s);
      while (!stack.empty()) {
        Element u = stack.back();
        stack.pop_back();
        for (Element v = 0; v < size; ++v) {
          if (adj.test(u, v) && !leq.test(s, v)) {
            leq.set(s, v);
            stack.push_back(v);
          }
        }
      }
    }
    for (Element a = 0; a < size; ++a)
      for (Element b = a + 1; b < size; ++b)
        if (leq.test(a, b) && leq.test(b, a))
          throw CycleError("covers contain a cycle through elements " + std::to_string(a) + " and " +
                           std::to_string(b));
    return build(size, std::move(leq), std::move(labels), std::move(ranks));
  }

  /// From an explicit relation; `leq(a, b)` must be a partial order.
  template <class Relation>
  static Poset from_relation(std::size_t size, Relation&& leq_fn, std::vector<std::string> labels = {},
                             std::optional<std::vector<int>> ranks = std::nullopt) {
    detail::BitMatrix leq(size);
    for (Element a = 0; a < size; ++a)
      for (Element b = 0; b < size; ++b)
        if (leq_fn(a, b)) leq.set(a, b);
    validate_order(leq);
    return build(size, std::move(leq), std::move(labels), std::move(ranks));
  }

  std::size_t size() const { return impl_->n; }
  bool empty() const { return impl_->n == 0; }

  bool leq(Element a, Element b) const { return impl_->leq.test(a, b); }
  bool lt(Element a, Element b) const { return a != b && impl_->leq.test(a, b); }
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }

  /// Elements >= x, ascending by index.
  std::span<const Element> up(Element x) const { return impl_->up[x]; }
  /// Elements <= x, ascending by index.
  std::span<const Element> down(Element x) const { return impl_->down[x]; }
  std::span<const Element> upper_covers(Element x) const { return impl_->upper_covers[x]; }
  std::span<const Element> lower_covers(Element x) const { return impl_->lower_covers[x]; }

  /// All elements ordered so that a < b implies a precedes b.
  std::span<const Element> linear_extension() const { return impl_->linear; }

  /// Elements of [x, y] in linear-extension order.
  std::vector<Element> interval_elements(Element x, Element y) const {
    require_leq(x, y);
    std::vector<Element> out;
    for (Element a : impl_->linear)
      if (leq(x, a) && leq(a, y)) out.push_back(a);
    return out;
  }

  std::size_t interval_size(Element x, Element y) const {
    if (!leq(x, y)) return 0;
    return detail::popcount_and(impl_->leq.row(x), impl_->geq.row(y), impl_->leq.words());
  }

  /// Cover pairs (x, y) with x ⋖ y, sorted.
  std::vector<std::pair<Element, Element>> covers() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element x = 0; x < size(); ++x)
      for (Element y : impl_->upper_covers[x]) out.emplace_back(x, y);
    return out;
  }

  std::vector<Element> minimal_elements() const {
    std::vector<Element> out;
    for (Element x = 0; x < size(); ++x)
      if (impl_->down[x].size() == 1) out.push_back(x);
    return out;
  }
  std::vector<Element> maximal_elements() const {
    std::vector<Element> out;
    for (Element x = 0; x < size(); ++x)
      if (impl_->up[x].size() == 1) out.push_back(x);
    return out;
  }
  /// The minimum element, if there is one.
  std::optional<Element> bottom() const {
    for (Element x = 0; x < size(); ++x)
      if (impl_->up[x].size() == size()) return x;
    return std::nullopt;
  }
  /// The maximum element, if there is one.
  std::optional<Element> top() const {
    for (Element x = 0; x < size(); ++x)
      if (impl_->down[x].size() == size()) return x;
    return std::nullopt;
  }

  // Ranks -------------------------------------------------------------

  bool ranked() const { return impl_->ranks.has_value(); }
  int rank(Element x) const {
    if (!ranked()) throw RankError("poset is not ranked");
    return (*impl_->ranks)[x];
  }
  /// Largest rank of any element (the rank of 1̂ when it exists).
  int rank() const {
    if (!ranked()) throw RankError("poset is not ranked");
    int r = 0;
    for (int v : *impl_->ranks) r = std::max(r, v);
    return r;
  }
  std::span<const int> ranks() const {
    if (!ranked()) throw RankError("poset is not ranked");
    return *impl_->ranks;
  }
  /// rk(P) - rk(x).
  int corank(Element x) const { return rank() - rank(x); }

  /// Same order with the given grading (validated).
  Poset with_ranks(std::vector<int> ranks) const {
    return build(size(), impl_->leq, impl_->labels, std::move(ranks));
  }

  /// Ranks computed from the cover structure; RankError if the poset is not graded.
  Poset graded() const {
    std::vector<int> r(size(), -1);
    for (Element x : impl_->linear) {
      if (impl_->lower_covers[x].empty()) {
        r[x] = 0;
        continue;
      }
      int v = r[impl_->lower_covers[x].front()] + 1;
      for (Element c : impl_->lower_covers[x])
        if (r[c] + 1 != v) throw RankError("poset is not graded at element " + std::to_string(x));
      r[x] = v;
    }
    return with_ranks(std::move(r));
  }

  Poset without_ranks() const { return build(size(), impl_->leq, impl_->labels, std::nullopt); }

  // Labels ------------------------------------------------------------

  const std::string& label(Element x) const { return impl_->labels[x]; }
  const std::vector<std::string>& labels() const { return impl_->labels; }
  Poset with_labels(std::vector<std::string> labels) const {
    return build(size(), impl_->leq, std::move(labels), impl_->ranks);
  }

  // Flag indexing -----------------------------------------------------

  std::size_t num_flags2() const { return impl_->flags2.size(); }
  std::size_t num_flags3() const { return impl_->num_flags3; }

  /// Position of (x, y) in lexicographic Fl^2; OrderError off the flag set.
  std::size_t flag2_index(Element x, Element y) const {
    require_leq(x, y);
    return static_cast<std::size_t>(impl_->idx2[x * size() + y]);
  }
  /// Position of (x, y, z) in lexicographic Fl^3; OrderError off the flag set.
  std::size_t flag3_index(Element x, Element y, Element z) const {
    require_leq(x, y);
    require_leq(y, z);
    return unchecked_flag3_index(x, y, z);
  }
  std::size_t unchecked_flag2_index(Element x, Element y) const {
    return static_cast<std::size_t>(impl_->idx2[x * size() + y]);
  }
  std::size_t unchecked_flag3_index(Element x, Element y, Element z) const {
    return impl_->off3[static_cast<std::size_t>(impl_->idx2[x * size() + y])] +
           static_cast<std::size_t>(impl_->pos_up[y * size() + z]);
  }

  const std::vector<Flag2>& flags2() const { return impl_->flags2; }
  /// Fl^3 in lexicographic order; materialized on each call.
  std::vector<Flag3> flags3() const {
    std::vector<Flag3> out;
    out.reserve(num_flags3());
    for (auto [x, y] : impl_->flags2)
      for (Element z : impl_->up[y]) out.push_back({x, y, z});
    return out;
  }

  /// Calls fn(index, x, y, z) over Fl^3 in index order.
  template <class Fn>
  void for_each_flag3(Fn&& fn) const {
    std::size_t i = 0;
    for (auto [x, y] : impl_->flags2)
      for (Element z : impl_->up[y]) fn(i++, x, y, z);
  }

  void require_leq(Element x, Element y) const {
    if (x >= size() || y >= size())
      throw IndexError("element out of range for poset of size " + std::to_string(size()));
    if (!leq(x, y)) throw OrderError(label(x) + " is not <= " + label(y));
  }

  /// Same elements and the same order relation (ranks and labels ignored).
  bool same_order(const Poset& other) const {
    return impl_ == other.impl_ || (size() == other.size() && impl_->leq == other.impl_->leq);
  }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.same_order(b) && a.impl_->ranks == b.impl_->ranks;
  }

  const detail::BitMatrix& leq_matrix() const { return impl_->leq; }
  const detail::BitMatrix& geq_matrix() const { return impl_->geq; }

 private:
  struct Impl {
    std::size_t n = 0;
    detail::BitMatrix leq;
    detail::BitMatrix geq;
    std::vector<std::vector<Element>> up, down, upper_covers, lower_covers;
    std::vector<Element> linear;
    std::vector<std::string> labels;
    std::optional<std::vector<int>> ranks;
    std::vector<Flag2> flags2;
    std::vector<std::int32_t> idx2;
    std::vector<std::int32_t> pos_up;
    std::vector<std::size_t> off3;
    std::size_t num_flags3 = 0;
  };

  explicit Poset(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  static void validate_order(const detail::BitMatrix& leq) {
    const std::size_t n = leq.size();
    for (Element a = 0; a < n; ++a)
      if (!leq.test(a, a)) throw CycleError("relation is not reflexive at element " + std::to_string(a));
    for (Element a = 0; a < n; ++a)
      for (Element b = a + 1; b < n; ++b)
        if (leq.test(a, b) && leq.test(b, a))
          throw CycleError("relation is not antisymmetric on elements " + std::to_string(a) + ", " +
                           std::to_string(b));
    // Transitivity: a <= b implies up(b) ⊆ up(a).
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        if (!leq.test(a, b)) continue;
        const std::uint64_t* ra = leq.row(a);
        const std::uint64_t* rb = leq.row(b);
        for (std::size_t w = 0; w < leq.words(); ++w)
          if ((rb[w] & ~ra[w]) != 0)
            throw OrderError("relation is not transitive through elements " + std::to_string(a) + ", " +
                             std::to_string(b));
      }
  }

  static Poset build(std::size_t n, detail::BitMatrix leq, std::vector<std::string> labels,
                     std::optional<std::vector<int>> ranks) {
    auto impl = std::make_shared<Impl>();
    impl->n = n;
    impl->geq = leq.transposed();
    impl->leq = std::move(leq);
    impl->up.resize(n);
    impl->down.resize(n);
    impl->upper_covers.resize(n);
    impl->lower_covers.resize(n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (impl->leq.test(a, b)) {
          impl->up[a].push_back(b);
          impl->down[b].push_back(a);
        }
    // a ⋖ b iff a < b and [a, b] has exactly two elements.
    for (Element a = 0; a < n; ++a)
      for (Element b : impl->up[a]) {
        if (a == b) continue;
        if (detail::popcount_and(impl->leq.row(a), impl->geq.row(b), impl->leq.words()) == 2) {
          impl->upper_covers[a].push_back(b);
          impl->lower_covers[b].push_back(a);
        }
      }
    impl->linear.resize(n);
    for (Element a = 0; a < n; ++a) impl->linear[a] = a;
    std::stable_sort(impl->linear.begin(), impl->linear.end(),
                     [&](Element a, Element b) { return impl->down[a].size() < impl->down[b].size(); });

    if (labels.empty()) {
      labels.reserve(n);
      for (Element a = 0; a < n; ++a) labels.push_back(std::to_string(a));
    }
    if (labels.size() != n) throw IndexError("expected " + std::to_string(n) + " labels");
    impl->labels = std::move(labels);

    if (ranks) {
      if (ranks->size() != n) throw RankError("expected " + std::to_string(n) + " ranks");
      for (Element a = 0; a < n; ++a) {
        if ((*ranks)[a] < 0) throw RankError("negative rank at element " + std::to_string(a));
        if (impl->lower_covers[a].empty() && (*ranks)[a] != 0)
          throw RankError("minimal element " + std::to_string(a) + " must have rank 0");
        for (Element b : impl->upper_covers[a])
          if ((*ranks)[b] != (*ranks)[a] + 1)
            throw RankError("ranks are not a grading across cover " + std::to_string(a) + " < " +
                            std::to_string(b));
      }
    }
    impl->ranks = std::move(ranks);

    impl->idx2.assign(n * n, -1);
    impl->pos_up.assign(n * n, -1);
    for (Element y = 0; y < n; ++y)
      for (std::size_t k = 0; k < impl->up[y].size(); ++k)
        impl->pos_up[y * n + impl->up[y][k]] = static_cast<std::int32_t>(k);
    std::size_t offset = 0;
    for (Element x = 0; x < n; ++x)
      for (Element y : impl->up[x]) {
        impl->idx2[x * n + y] = static_cast<std::int32_t>(impl->flags2.size());
        impl->flags2.push_back({x, y});
        impl->off3.push_back(offset);
        offset += impl->up[y].size();
      }
    impl->num_flags3 = offset;
    return Poset(std::move(impl));
  }

  std::shared_ptr<const Impl> impl_;
};

/// Fl^2(P) in lexicographic order.
inline std::vector<Flag2> flags2(const Poset& p) { return p.flags2(); }
/// Fl^3(P) in lexicographic order.
inline std::vector<Flag3> flags3(const Poset& p) { return p.flags3(); }

// Standard posets -------------------------------------------------------

/// The n-element chain 0 < 1 < ... < n-1, ranked.
inline Poset chain(std::size_t n) {
  std::vector<std::pair<Element, Element>> covers;
  std::vector<int> ranks(n);
  for (std::size_t i = 0; i < n; ++i) ranks[i] = static_cast<int>(i);
  for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return Poset::from_covers(n, covers, {}, ranks);
}

/// n pairwise incomparable elements.
inline Poset antichain(std::size_t n) {
  return Poset::from_covers(n, std::span<const std::pair<Element, Element>>{}, {}, std::vector<int>(n, 0));
}

/// The Boolean lattice B_n: subsets of {0..n-1} by inclusion, element index =
/// bitmask, ranked by cardinality.
inline Poset boolean_lattice(unsigned n) {
  if (n > 16) throw SizeBoundError("boolean_lattice supports n <= 16");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::pair<Element, Element>> covers;
  std::vector<int> ranks(size);
  std::vector<std::string> labels(size);
  for (std::size_t s = 0; s < size; ++s) {
    ranks[s] = std::popcount(s);
    std::string l = "{";
    for (unsigned i = 0; i < n; ++i) {
      if (s & (std::size_t{1} << i)) {
        if (l.size() > 1) l += ",";
        l += std::to_string(i);
      } else {
        covers.emplace_back(s, s | (std::size_t{1} << i));
      }
    }
    labels[s] = l + "}";
  }
  return Poset::from_covers(size, covers, std::move(labels), std::move(ranks));
}

// Derived posets --------------------------------------------------------

/// Componentwise order on P × Q; (a, b) has index a·|Q| + b. Ranks add when
/// both factors are ranked.
inline Poset product(const Poset& p, const Poset& q) {
  const std::size_t m = q.size();
  std::vector<std::string> labels;
  labels.reserve(p.size() * m);
  for (Element a = 0; a < p.size(); ++a)
    for (Element b = 0; b < m; ++b) labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
  std::optional<std::vector<int>> ranks;
  if (p.ranked() && q.ranked()) {
    ranks.emplace(p.size() * m);
    for (Element a = 0; a < p.size(); ++a)
      for (Element b = 0; b < m; ++b) (*ranks)[a * m + b] = p.rank(a) + q.rank(b);
  }
  return Poset::from_relation(
      p.size() * m,
      [&](Element u, Element v) { return p.leq(u / m, v / m) && q.leq(u % m, v % m); }, std::move(labels),
      std::move(ranks));
}

inline Element product_index(Element a, Element b, const Poset& q) { return a * q.size() + b; }

/// Order reversed. A ranked input must have a maximum; its coranks become the
/// new ranks.
inline Poset opposite(const Poset& p) {
  std::optional<std::vector<int>> ranks;
  if (p.ranked()) {
    auto t = p.top();
    if (!t) throw RankError("opposite of a ranked poset needs a maximum element to re-grade");
    ranks.emplace(p.size());
    for (Element a = 0; a < p.size(); ++a) (*ranks)[a] = p.rank(*t) - p.rank(a);
  }
  return Poset::from_relation(
      p.size(), [&](Element a, Element b) { return p.leq(b, a); }, p.labels(), std::move(ranks));
}

/// An induced sub-poset together with the map back into its parent.
struct SubPoset {
  Poset poset;
  std::vector<Element> to_parent;

  std::optional<Element> from_parent(Element parent) const {
    auto it = std::find(to_parent.begin(), to_parent.end(), parent);
    if (it == to_parent.end()) return std::nullopt;
    return static_cast<Element>(it - to_parent.begin());
  }
};

/// Sub-poset on `elements` (kept in the given order), ranks shifted so the
/// smallest rank present is 0.
inline SubPoset induced(const Poset& p, std::vector<Element> elements) {
  std::optional<std::vector<int>> ranks;
  if (p.ranked()) {
    int lo = 0;
    if (!elements.empty()) {
      lo = p.rank(elements.front());
      for (Element e : elements) lo = std::min(lo, p.rank(e));
    }
    ranks.emplace();
    for (Element e : elements) ranks->push_back(p.rank(e) - lo);
  }
  std::vector<std::string> labels;
  for (Element e : elements) labels.push_back(p.label(e));
  Poset sub = Poset::from_relation(
      elements.size(), [&](Element a, Element b) { return p.leq(elements[a], elements[b]); }, std::move(labels),
      std::move(ranks));
  return {std::move(sub), std::move(elements)};
}

namespace detail {
inline std::vector<Element> sorted_copy(std::span<const Element> s) { return {s.begin(), s.end()}; }
}  // namespace detail

/// L^y = {x : x >= y}.
inline SubPoset upper_interval(const Poset& p, Element y) {
  p.require_leq(y, y);
  return induced(p, detail::sorted_copy(p.up(y)));
}
/// L_y = {x : x <= y}.
inline SubPoset lower_interval(const Poset& p, Element y) {
  p.require_leq(y, y);
  return induced(p, detail::sorted_copy(p.down(y)));
}
/// [x, y]; OrderError unless x <= y.
inline SubPoset interval(const Poset& p, Element x, Element y) {
  p.require_leq(x, y);
  std::vector<Element> els;
  for (Element a : p.up(x))
    if (p.leq(a, y)) els.push_back(a);
  return induced(p, std::move(els));
}

// Chain counts ----------------------------------------------------------

/// c_i(x, y) for every i: entry i counts strict chains x = a_0 < ... < a_i = y.
inline std::vector<Integer> chain_counts(const Poset& p, Element x, Element y) {
  p.require_leq(x, y);
  const std::vector<Element> iv = p.interval_elements(x, y);
  // ways[e] = chains of the current length from x ending at e.
  std::vector<Integer> ways(p.size(), 0);
  ways[x] = 1;
  std::vector<Integer> out{ways[y]};
  for (std::size_t len = 1; len < iv.size(); ++len) {
    std::vector<Integer> next(p.size(), 0);
    for (Element b : iv)
      for (Element a : iv)
        if (p.lt(a, b)) next[b] += ways[a];
    ways = std::move(next);
    out.push_back(ways[y]);
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

/// c_i(x, y): strict chains of length i from x to y.
inline Integer chain_count_c(const Poset& p, Element x, Element y, std::size_t i) {
  auto c = chain_counts(p, x, y);
  return i < c.size() ? c[i] : Integer(0);
}

/// c_{i,j}(x, y, z): strict chains a_0 < ... < a_{i+j} with a_0 = x, a_i = y,
/// a_{i+j} = z. Counted directly over [x, z], not as a product.
inline Integer chain_count_cij(const Poset& p, Element x, Element y, Element z, std::size_t i, std::size_t j) {
  p.require_leq(x, y);
  p.require_leq(y, z);
  const std::vector<Element> iv = p.interval_elements(x, z);
  std::vector<Integer> ways(p.size(), 0);
  ways[x] = 1;
  auto pin = [&](std::size_t step) {
    if (step != i) return;
    for (Element e : iv)
      if (e != y) ways[e] = 0;
  };
  pin(0);
  for (std::size_t len = 1; len <= i + j; ++len) {
    std::vector<Integer> next(p.size(), 0);
    for (Element b : iv)
      for (Element a : iv)
        if (p.lt(a, b)) next[b] += ways[a];
    ways = std::move(next);
    pin(len);
  }
  return ways[z];
}

}  // namespace jmobius
