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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jmobius/errors.hpp"
#include "jmobius/invariants.hpp"
#include "jmobius/matroid.hpp"

namespace jmobius {

/// A simple rank-3 matroid as a linear space: n points and the lines with at
/// least three points. Every other pair of points spans a two-point line.
struct LinearSpace {
  std::size_t n = 0;
  std::vector<ElementSet> lines;  ///< sorted

  /// Line through i and j, or the pair itself when no long line holds both.
  ElementSet line_through(std::size_t i, std::size_t j) const {
    const ElementSet pair = (ElementSet{1} << i) | (ElementSet{1} << j);
    for (ElementSet l : lines)
      if ((l & pair) == pair) return l;
    return pair;
  }

  /// All lines, two-point ones included.
  std::vector<ElementSet> all_lines() const {
    std::vector<ElementSet> out = lines;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const ElementSet l = line_through(i, j);
        if (set_size(l) == 2) out.push_back(l);
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// 3-subsets not contained in a long line.
  Matroid to_matroid(std::string name = {}) const {
    std::vector<ElementSet> bases;
    detail::for_each_k_subset(n, 3, [&](ElementSet s) {
      for (ElementSet l : lines)
        if ((l & s) == s) return;
      bases.push_back(s);
    });
    return Matroid::from_bases(n, std::move(bases), std::move(name));
  }

  /// "rank3 n=6 lines=012,345".
  std::string name() const {
    std::string s = "rank3 n=" + std::to_string(n) + " lines=";
    if (lines.empty()) return s + "none";
    for (std::size_t k = 0; k < lines.size(); ++k) {
      if (k) s += ",";
      for (std::size_t e : set_members(lines[k])) s += std::to_string(e);
    }
    return s;
  }
};

namespace detail {

// Isomorphism-invariant summary: line sizes and per-point line signatures.
inline std::vector<std::vector<int>> linear_space_key(const LinearSpace& s) {
  std::vector<std::vector<int>> key;
  std::vector<int> sizes;
  for (ElementSet l : s.lines) sizes.push_back(set_size(l));
  std::sort(sizes.begin(), sizes.end());
  key.push_back(sizes);
  std::vector<std::vector<int>> sig(s.n);
  for (std::size_t p = 0; p < s.n; ++p) {
    for (ElementSet l : s.lines)
      if (l & (ElementSet{1} << p)) sig[p].push_back(set_size(l));
    std::sort(sig[p].begin(), sig[p].end());
  }
  std::sort(sig.begin(), sig.end());
  key.insert(key.end(), sig.begin(), sig.end());
  return key;
}

inline bool linear_spaces_isomorphic(const LinearSpace& a, const LinearSpace& b) {
  if (a.n != b.n || a.lines.size() != b.lines.size()) return false;
  const std::size_t n = a.n;
  auto table = [n](const LinearSpace& s) {
    std::vector<ElementSet> t(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) t[i * n + j] = s.line_through(i, j);
    return t;
  };
  const auto ta = table(a), tb = table(b);
  std::vector<std::size_t> map(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const ElementSet la = ta[i * n + j], lb = tb[c * n + map[j]];
        if (set_size(la) != set_size(lb)) ok = false;
        for (std::size_t k = 0; k < j && ok; ++k) {
          const bool ca = (la >> k) & 1U;
          const bool cb = (lb >> map[k]) & 1U;
          if (ca != cb) ok = false;
        }
      }
      if (!ok) continue;
      map[i] = c;
      used[c] = true;
      if (extend(i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return extend(0);
}

// Single-point extensions: the new point joins a family of pairwise disjoint
// lines (two-point lines included).
inline std::vector<LinearSpace> point_extensions(const LinearSpace& s) {
  const auto lines = s.all_lines();
  const std::size_t p = s.n;
  std::vector<LinearSpace> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, ElementSet)> rec = [&](std::size_t from, ElementSet covered) {
    LinearSpace e{s.n + 1, {}};
    std::vector<bool> picked(lines.size(), false);
    for (std::size_t c : chosen) picked[c] = true;
    for (std::size_t k = 0; k < lines.size(); ++k) {
      if (picked[k])
        e.lines.push_back(lines[k] | (ElementSet{1} << p));
      else if (set_size(lines[k]) >= 3)
        e.lines.push_back(lines[k]);
    }
    std::sort(e.lines.begin(), e.lines.end());
    out.push_back(std::move(e));
    for (std::size_t k = from; k < lines.size(); ++k) {
      if (lines[k] & covered) continue;
      chosen.push_back(k);
      rec(k + 1, covered | lines[k]);
      chosen.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace detail

/// Simple rank-3 matroids on exactly n points, up to isomorphism, for
/// 3 <= n <= max_points. Index i of the result holds those on i + 3 points.
inline std::vector<std::vector<LinearSpace>> simple_rank3_matroids(std::size_t max_points) {
  std::vector<std::vector<LinearSpace>> levels;
  if (max_points < 3) return levels;
  levels.push_back({LinearSpace{3, {}}});
  for (std::size_t n = 4; n <= max_points; ++n) {
    std::vector<LinearSpace> next;
    std::map<std::vector<std::vector<int>>, std::vector<std::size_t>> buckets;
    for (const auto& s : levels.back())
      for (auto& e : detail::point_extensions(s)) {
        auto key = detail::linear_space_key(e);
        auto& bucket = buckets[key];
        bool seen = false;
        for (std::size_t idx : bucket)
          if (detail::linear_spaces_isomorphic(next[idx], e)) {
            seen = true;
            break;
          }
        if (seen) continue;
        bucket.push_back(next.size());
        next.push_back(std::move(e));
      }
    levels.push_back(std::move(next));
  }
  return levels;
}

/// One catalog entry.
struct SearchRow {
  std::string name;
  Matroid matroid;
  int rank = 0;
  bool connected = false;
  bool modular = false;
  bool pinned = false;  ///< included by name rather than by enumeration
  LaurentPoly m_poly;
  Integer m_at_minus_one;
};

struct SearchCatalog {
  std::size_t max_ground = 0;
  int max_rank = 0;
  std::vector<SearchRow> rows;

  /// Modular rows with ℳ(M,-1) ≠ 0.
  std::vector<const SearchRow*> modular_violations() const {
    std::vector<const SearchRow*> out;
    for (const auto& r : rows)
      if (r.modular && r.m_at_minus_one != 0) out.push_back(&r);
    return out;
  }
};

inline constexpr std::size_t kSearchMaxGround = 8;
inline constexpr int kSearchMaxRank = 3;

inline SearchRow make_search_row(std::string name, const Matroid& m, bool pinned = false) {
  const Poset flats = flats_lattice(m);
  SearchRow row{std::move(name), m, m.rank(), is_connected(m), is_modular_lattice(flats), pinned, {}, {}};
  row.m_poly = j_mobius_poly(flats);
  row.m_at_minus_one = row.m_poly.eval_integer(-1);
  return row;
}

/// M*(K_{3,3}): dual of the cycle matroid of K_{3,3}.
inline Matroid dual_k33() {
  return dual(graphic(complete_bipartite_graph(3, 3), "graphic(K3,3)")).renamed("M*(K3,3)");
}

/// Simple matroids of rank 1..max_rank on at most max_ground elements, one per
/// isomorphism class, plus M*(K_{3,3}) as a pinned row. ℳ depends only on
/// the lattice of flats, so simple matroids cover every lattice in range.
inline SearchCatalog search_minus_one_roots(std::size_t max_ground = 7, int max_rank = 3, bool pin_known = true) {
  if (max_ground > kSearchMaxGround || max_rank > kSearchMaxRank)
    throw SizeBoundError("search bounds are ground <= " + std::to_string(kSearchMaxGround) + ", rank <= " +
                         std::to_string(kSearchMaxRank));
  if (max_ground < 1 || max_rank < 1) throw SizeBoundError("search bounds must be at least 1");
  SearchCatalog cat{max_ground, max_rank, {}};
  cat.rows.push_back(make_search_row("U1,1", uniform(1, 1)));
  if (max_rank >= 2)
    for (std::size_t n = 2; n <= max_ground; ++n) {
      const std::string name = "U2," + std::to_string(n);
      cat.rows.push_back(make_search_row(name, uniform(2, n).renamed(name)));
    }
  if (max_rank >= 3)
    for (const auto& level : simple_rank3_matroids(max_ground))
      for (const auto& s : level) cat.rows.push_back(make_search_row(s.name(), s.to_matroid(s.name())));
  if (pin_known) cat.rows.push_back(make_search_row("M*(K3,3)", dual_k33(), true));
  return cat;
}

}  // namespace jmobius
