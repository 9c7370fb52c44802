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

#include <cstddef>
#include <string>
#include <vector>

#include "jmobius/errors.hpp"
#include "jmobius/matroid.hpp"
#include "jmobius/poset.hpp"

namespace jmobius {

/// A subspace of GF(q)^n given by its reduced row-echelon basis.
struct Subspace {
  std::vector<std::vector<int>> rref;  ///< one row per basis vector
  std::vector<bool> members;           ///< membership by vector index (base-q digits)

  std::size_t dim() const { return rref.size(); }
};

namespace detail {

inline std::size_t vector_index(const std::vector<int>& v, int q) {
  std::size_t idx = 0;
  for (int c : v) idx = idx * static_cast<std::size_t>(q) + static_cast<std::size_t>(c);
  return idx;
}

// Marks every linear combination of `rows` in `members`.
inline void span_members(const std::vector<std::vector<int>>& rows, int q, std::size_t n, std::vector<bool>& members) {
  std::vector<int> coef(rows.size(), 0);
  while (true) {
    std::vector<int> v(n, 0);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < n; ++c) v[c] = (v[c] + coef[r] * rows[r][c]) % q;
    members[vector_index(v, q)] = true;
    std::size_t k = 0;
    while (k < coef.size() && ++coef[k] == q) coef[k++] = 0;
    if (k == coef.size()) break;
  }
}

inline std::string rref_label(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) return "<0>";
  std::string s = "<";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) s += ",";
    for (int c : rows[r]) s += std::to_string(c);
  }
  return s + ">";
}

}  // namespace detail

/// Every subspace of GF(q)^n, enumerated by reduced row-echelon form: for
/// each dimension k, each pivot set, each filling of the free entries.
inline std::vector<Subspace> subspaces(int q, std::size_t n, std::size_t max_vectors = 81) {
  if (!detail::is_small_prime(q)) throw ArityError("subspace lattices need a prime q");
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= static_cast<std::size_t>(q);
    if (total > max_vectors)
      throw SizeBoundError("q^n exceeds the enumeration bound of " + std::to_string(max_vectors));
  }
  std::vector<Subspace> out;
  for (std::size_t k = 0; k <= n; ++k) {
    detail::for_each_k_subset(n, static_cast<int>(k), [&](ElementSet pivot_mask) {
      const auto pivots = set_members(pivot_mask);
      // Free positions: (row r, column c) with c > pivot r and c not a pivot.
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = pivots[r] + 1; c < n; ++c)
          if (!(pivot_mask & (ElementSet{1} << c))) free.emplace_back(r, c);
      std::vector<int> fill(free.size(), 0);
      while (true) {
        std::vector<std::vector<int>> rows(k, std::vector<int>(n, 0));
        for (std::size_t r = 0; r < k; ++r) rows[r][pivots[r]] = 1;
        for (std::size_t f = 0; f < free.size(); ++f) rows[free[f].first][free[f].second] = fill[f];
        Subspace s{rows, std::vector<bool>(total, false)};
        detail::span_members(s.rref, q, n, s.members);
        out.push_back(std::move(s));
        std::size_t j = 0;
        while (j < fill.size() && ++fill[j] == q) fill[j++] = 0;
        if (j == fill.size()) break;
      }
    });
  }
  return out;
}

/// L_q^n: subspaces of GF(q)^n under inclusion, ranked by dimension.
/// SizeBoundError when q^n exceeds `max_vectors`.
inline Poset subspace_lattice(int q, std::size_t n, std::size_t max_vectors = 81) {
  const auto subs = subspaces(q, n, max_vectors);
  std::vector<int> ranks;
  std::vector<std::string> labels;
  for (const auto& s : subs) {
    ranks.push_back(static_cast<int>(s.dim()));
    labels.push_back(detail::rref_label(s.rref));
  }
  return Poset::from_relation(
      subs.size(),
      [&](Element a, Element b) {
        for (const auto& row : subs[a].rref)
          if (!subs[b].members[detail::vector_index(row, q)]) return false;
        return true;
      },
      std::move(labels), std::move(ranks));
}

}  // namespace jmobius
