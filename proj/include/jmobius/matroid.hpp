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
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jmobius/errors.hpp"
#include "jmobius/lattice.hpp"
#include "jmobius/poset.hpp"

namespace jmobius {

/// Subset of the ground set {0, ..., n-1} as a bitmask.
using ElementSet = std::uint64_t;

inline constexpr std::size_t kMaxGround = 24;

inline int set_size(ElementSet s) { return std::popcount(s); }

inline std::vector<std::size_t> set_members(ElementSet s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; s; ++i, s >>= 1U)
    if (s & 1U) out.push_back(i);
  return out;
}

inline ElementSet make_set(const std::vector<std::size_t>& members) {
  ElementSet s = 0;
  for (std::size_t m : members) s |= ElementSet{1} << m;
  return s;
}

/// "{0,2,3}".
inline std::string set_label(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t m : set_members(s)) {
    if (!first) out += ",";
    out += std::to_string(m);
    first = false;
  }
  return out + "}";
}

/// A matroid on {0, ..., n-1} given by its bases.
class Matroid {
 public:
  /// Validates cardinality and the basis-exchange axiom.
  static Matroid from_bases(std::size_t ground_size, std::vector<ElementSet> bases, std::string name = {}) {
    if (ground_size > kMaxGround)
      throw SizeBoundError("ground set of " + std::to_string(ground_size) + " elements exceeds " +
                           std::to_string(kMaxGround));
    if (bases.empty()) throw ExchangeAxiomError("a matroid needs at least one basis");
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    const ElementSet full = ground_mask(ground_size);
    const int r = set_size(bases.front());
    for (ElementSet b : bases) {
      if (b & ~full) throw IndexError("basis " + set_label(b) + " leaves the ground set");
      if (set_size(b) != r) throw ExchangeAxiomError("bases have different cardinalities");
    }
    for (ElementSet b1 : bases)
      for (ElementSet b2 : bases) {
        for (std::size_t e : set_members(b1 & ~b2)) {
          bool found = false;
          for (std::size_t f : set_members(b2 & ~b1)) {
            ElementSet c = (b1 & ~(ElementSet{1} << e)) | (ElementSet{1} << f);
            if (std::binary_search(bases.begin(), bases.end(), c)) {
              found = true;
              break;
            }
          }
          if (!found)
            throw ExchangeAxiomError("exchange fails for " + set_label(b1) + ", " + set_label(b2) + ", e=" +
                                     std::to_string(e));
        }
      }
    return Matroid(ground_size, std::move(bases), std::move(name));
  }

  std::size_t ground_size() const { return n_; }
  ElementSet ground() const { return ground_mask(n_); }
  const std::vector<ElementSet>& bases() const { return bases_; }
  int rank() const { return set_size(bases_.front()); }
  const std::string& name() const { return name_; }
  Matroid renamed(std::string name) const { return Matroid(n_, bases_, std::move(name)); }

  bool is_basis(ElementSet s) const { return std::binary_search(bases_.begin(), bases_.end(), s); }

  /// max |S ∩ B| over bases.
  int rank(ElementSet s) const {
    int best = 0;
    for (ElementSet b : bases_) best = std::max(best, set_size(s & b));
    return best;
  }

  /// {e : rank(S ∪ e) = rank(S)}.
  ElementSet closure(ElementSet s) const {
    const int r = rank(s);
    ElementSet c = s;
    for (std::size_t e = 0; e < n_; ++e) {
      const ElementSet bit = ElementSet{1} << e;
      if (!(c & bit) && rank(s | bit) == r) c |= bit;
    }
    return c;
  }

  bool is_loop(std::size_t e) const { return rank(ElementSet{1} << e) == 0; }
  bool is_coloop(std::size_t e) const {
    const ElementSet bit = ElementSet{1} << e;
    return std::all_of(bases_.begin(), bases_.end(), [&](ElementSet b) { return (b & bit) != 0; });
  }

  friend bool operator==(const Matroid& a, const Matroid& b) { return a.n_ == b.n_ && a.bases_ == b.bases_; }

 private:
  Matroid(std::size_t n, std::vector<ElementSet> bases, std::string name)
      : n_(n), bases_(std::move(bases)), name_(std::move(name)) {}

  static ElementSet ground_mask(std::size_t n) { return n == 64 ? ~ElementSet{0} : (ElementSet{1} << n) - 1; }

  std::size_t n_ = 0;
  std::vector<ElementSet> bases_;
  std::string name_;
};

namespace detail {

// Calls fn(mask) for every k-subset of {0..n-1} in increasing mask order.
template <class Fn>
void for_each_k_subset(std::size_t n, int k, Fn&& fn) {
  if (k < 0 || static_cast<std::size_t>(k) > n) return;
  if (k == 0) {
    fn(ElementSet{0});
    return;
  }
  ElementSet s = (ElementSet{1} << k) - 1;
  const ElementSet limit = ElementSet{1} << n;
  while (s < limit) {
    fn(s);
    const ElementSet c = s & (~s + 1);
    const ElementSet r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace detail

/// U_{r,n}: every r-subset is a basis.
inline Matroid uniform(int r, std::size_t n) {
  if (r < 0 || static_cast<std::size_t>(r) > n) throw ArityError("uniform matroid needs 0 <= r <= n");
  if (n > kMaxGround) throw SizeBoundError("ground set too large");
  std::vector<ElementSet> bases;
  detail::for_each_k_subset(n, r, [&](ElementSet s) { bases.push_back(s); });
  return Matroid::from_bases(n, std::move(bases), "U" + std::to_string(r) + "," + std::to_string(n));
}

/// The free matroid U_{n,n}, whose flats form B_n.
inline Matroid boolean_matroid(std::size_t n) {
  return uniform(static_cast<int>(n), n).renamed("B" + std::to_string(n));
}

/// Cycle matroid of a multigraph; ground element i is edge i. Self-loops are
/// matroid loops.
inline Matroid graphic(const std::vector<std::pair<std::size_t, std::size_t>>& edges, std::string name = {}) {
  std::size_t vertices = 0;
  for (auto [u, v] : edges) vertices = std::max({vertices, u + 1, v + 1});
  const std::size_t m = edges.size();
  if (m > kMaxGround) throw SizeBoundError("graph has too many edges");
  detail::UnionFind all(vertices);
  int r = 0;
  for (auto [u, v] : edges) r += all.unite(u, v) ? 1 : 0;
  std::vector<ElementSet> bases;
  detail::for_each_k_subset(m, r, [&](ElementSet s) {
    detail::UnionFind uf(vertices);
    for (std::size_t e : set_members(s))
      if (!uf.unite(edges[e].first, edges[e].second)) return;
    bases.push_back(s);
  });
  return Matroid::from_bases(m, std::move(bases), std::move(name));
}

/// Complete graph K_k.
inline std::vector<std::pair<std::size_t, std::size_t>> complete_graph(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return e;
}

/// Complete bipartite graph K_{a,b}.
inline std::vector<std::pair<std::size_t, std::size_t>> complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return e;
}

/// Bases are complements of bases.
inline Matroid dual(const Matroid& m) {
  std::vector<ElementSet> bases;
  bases.reserve(m.bases().size());
  for (ElementSet b : m.bases()) bases.push_back(m.ground() & ~b);
  return Matroid::from_bases(m.ground_size(), std::move(bases),
                             m.name().empty() ? std::string{} : "dual(" + m.name() + ")");
}

/// M ⊕ N; elements of N are shifted by |E(M)|.
inline Matroid direct_sum(const Matroid& m, const Matroid& n) {
  if (m.ground_size() + n.ground_size() > kMaxGround) throw SizeBoundError("direct sum too large");
  std::vector<ElementSet> bases;
  for (ElementSet a : m.bases())
    for (ElementSet b : n.bases()) bases.push_back(a | (b << m.ground_size()));
  std::string name;
  if (!m.name().empty() && !n.name().empty()) name = m.name() + "+" + n.name();
  return Matroid::from_bases(m.ground_size() + n.ground_size(), std::move(bases), std::move(name));
}

namespace detail {

inline bool is_small_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline long long mod_inverse(long long a, long long p) {
  long long r = 1, e = p - 2, b = ((a % p) + p) % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Rank over GF(p) of the columns of `m` selected by `cols`.
inline int column_rank(const std::vector<std::vector<long long>>& m, ElementSet cols, long long p) {
  std::vector<std::vector<long long>> a;
  for (const auto& row : m) {
    std::vector<long long> r;
    for (std::size_t c : set_members(cols)) r.push_back(((row[c] % p) + p) % p);
    a.push_back(std::move(r));
  }
  const std::size_t ncols = static_cast<std::size_t>(set_size(cols));
  int rank = 0;
  for (std::size_t c = 0; c < ncols && static_cast<std::size_t>(rank) < a.size(); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[static_cast<std::size_t>(rank)]);
    auto& pr = a[static_cast<std::size_t>(rank)];
    const long long inv = mod_inverse(pr[c], p);
    for (auto& v : pr) v = v * inv % p;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || a[r][c] == 0) continue;
      const long long f = a[r][c];
      for (std::size_t k = 0; k < ncols; ++k) a[r][k] = ((a[r][k] - f * pr[k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Column matroid of an integer matrix read over GF(p).
inline Matroid vector_matroid(const std::vector<std::vector<long long>>& rows, long long p, std::string name = {}) {
  if (!detail::is_small_prime(p)) throw ArityError("vector matroids need a prime field size");
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != n) throw ArityError("matrix rows have different lengths");
  if (n > kMaxGround) throw SizeBoundError("too many columns");
  const ElementSet all = n == 0 ? 0 : (ElementSet{1} << n) - 1;
  const int r = detail::column_rank(rows, all, p);
  std::vector<ElementSet> bases;
  detail::for_each_k_subset(n, r, [&](ElementSet s) {
    if (detail::column_rank(rows, s, p) == r) bases.push_back(s);
  });
  return Matroid::from_bases(n, std::move(bases), std::move(name));
}

namespace detail {
// Removes element e and shifts higher elements down by one.
inline ElementSet drop_element(ElementSet s, std::size_t e) {
  const ElementSet low = s & ((ElementSet{1} << e) - 1);
  return low | ((s >> (e + 1)) << e);
}
}  // namespace detail

/// M \ e, re-indexed so that elements above e shift down.
inline Matroid deletion(const Matroid& m, std::size_t e) {
  if (e >= m.ground_size()) throw IndexError("element out of range");
  const ElementSet bit = ElementSet{1} << e;
  const bool coloop = m.is_coloop(e);
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases())
    if (coloop || !(b & bit)) bases.push_back(detail::drop_element(b & ~bit, e));
  return Matroid::from_bases(m.ground_size() - 1, std::move(bases));
}

/// M / e, re-indexed so that elements above e shift down.
inline Matroid contraction(const Matroid& m, std::size_t e) {
  if (e >= m.ground_size()) throw IndexError("element out of range");
  const ElementSet bit = ElementSet{1} << e;
  const bool loop = m.is_loop(e);
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases())
    if (loop || (b & bit)) bases.push_back(detail::drop_element(b & ~bit, e));
  return Matroid::from_bases(m.ground_size() - 1, std::move(bases));
}

/// Flats of a matroid and the lattice they form under inclusion.
struct FlatsLattice {
  Poset poset;                   ///< ranked by matroid rank; labels are flats
  std::vector<ElementSet> flats;  ///< flat of each element, sorted by (rank, mask)
};

/// All flats, ordered by inclusion and ranked by matroid rank. The bottom is
/// the closure of the empty set (the loops).
inline FlatsLattice flats_lattice_with_sets(const Matroid& m) {
  std::set<ElementSet> seen;
  std::vector<ElementSet> frontier{m.closure(0)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (ElementSet f : frontier)
      for (std::size_t e = 0; e < m.ground_size(); ++e) {
        const ElementSet bit = ElementSet{1} << e;
        if (f & bit) continue;
        const ElementSet c = m.closure(f | bit);
        if (seen.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  std::vector<std::pair<int, ElementSet>> keyed;
  for (ElementSet f : seen) keyed.emplace_back(m.rank(f), f);
  std::sort(keyed.begin(), keyed.end());
  FlatsLattice out;
  std::vector<int> ranks;
  std::vector<std::string> labels;
  for (auto [r, f] : keyed) {
    out.flats.push_back(f);
    ranks.push_back(r);
    labels.push_back(set_label(f));
  }
  const auto& fl = out.flats;
  out.poset = Poset::from_relation(
      fl.size(), [&](Element a, Element b) { return (fl[a] & ~fl[b]) == 0; }, std::move(labels), std::move(ranks));
  return out;
}

inline Poset flats_lattice(const Matroid& m) { return flats_lattice_with_sets(m).poset; }

/// Modularity of the lattice of flats.
inline bool is_modular_matroid(const Matroid& m) { return is_modular_lattice(flats_lattice(m)); }

/// Fundamental circuit of e with respect to basis b (e not in b).
inline ElementSet fundamental_circuit(const Matroid& m, ElementSet b, std::size_t e) {
  const ElementSet bit = ElementSet{1} << e;
  ElementSet c = bit;
  for (std::size_t f : set_members(b))
    if (m.is_basis((b & ~(ElementSet{1} << f)) | bit)) c |= ElementSet{1} << f;
  return c;
}

/// All circuits (minimal dependent sets), sorted.
inline std::vector<ElementSet> circuits(const Matroid& m) {
  std::set<ElementSet> out;
  for (ElementSet b : m.bases())
    for (std::size_t e = 0; e < m.ground_size(); ++e)
      if (!(b & (ElementSet{1} << e))) out.insert(fundamental_circuit(m, b, e));
  return {out.begin(), out.end()};
}

/// Connected components: e ~ f when some circuit contains both.
inline std::vector<ElementSet> components(const Matroid& m) {
  detail::UnionFind uf(m.ground_size());
  for (ElementSet c : circuits(m)) {
    const auto mem = set_members(c);
    for (std::size_t i = 1; i < mem.size(); ++i) uf.unite(mem[0], mem[i]);
  }
  std::map<std::size_t, ElementSet> by_root;
  for (std::size_t e = 0; e < m.ground_size(); ++e) by_root[uf.find(e)] |= ElementSet{1} << e;
  std::vector<ElementSet> out;
  for (auto& [root, s] : by_root) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

/// At most one connected component.
inline bool is_connected(const Matroid& m) { return components(m).size() <= 1; }

/// Simple: no loops and no parallel pairs.
inline bool is_simple(const Matroid& m) {
  for (std::size_t e = 0; e < m.ground_size(); ++e) {
    if (m.is_loop(e)) return false;
    for (std::size_t f = e + 1; f < m.ground_size(); ++f)
      if (m.rank((ElementSet{1} << e) | (ElementSet{1} << f)) < 2) return false;
  }
  return true;
}

}  // namespace jmobius
