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
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jmobius/errors.hpp"
#include "jmobius/invariants.hpp"
#include "jmobius/laurent.hpp"
#include "jmobius/matroid.hpp"

namespace jmobius {

/// A matroid polytope subdivision given as data: the parent, its maximal
/// pieces, and the matroid of every intersection of two or more pieces
/// (nullopt when the intersection is empty).
struct SubdivisionFixture {
  std::string name;
  Matroid parent;
  std::vector<Matroid> pieces;
  std::map<std::vector<std::size_t>, std::optional<Matroid>> intersections;

  /// FixtureError unless grounds agree, every piece's bases lie among the
  /// parent's, and each listed intersection has exactly the bases common to
  /// its pieces.
  void validate() const {
    if (pieces.empty()) throw FixtureError("fixture has no pieces");
    for (const auto& p : pieces) {
      if (p.ground_size() != parent.ground_size()) throw FixtureError("piece ground set differs from the parent");
      for (ElementSet b : p.bases())
        if (!parent.is_basis(b)) throw FixtureError("piece basis " + set_label(b) + " is not a parent basis");
    }
    const std::size_t k = pieces.size();
    if (k > 16) throw SizeBoundError("too many pieces");
    for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
      if (std::popcount(mask) < 2) continue;
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1U << i)) idx.push_back(i);
      auto it = intersections.find(idx);
      if (it == intersections.end()) throw FixtureError("missing intersection for " + subset_label(idx));
      std::vector<ElementSet> common = pieces[idx[0]].bases();
      for (std::size_t j = 1; j < idx.size(); ++j) {
        std::vector<ElementSet> next;
        const auto& other = pieces[idx[j]].bases();
        std::set_intersection(common.begin(), common.end(), other.begin(), other.end(), std::back_inserter(next));
        common = std::move(next);
      }
      if (!it->second) {
        if (!common.empty()) throw FixtureError("intersection " + subset_label(idx) + " marked empty but shares bases");
      } else {
        if (it->second->ground_size() != parent.ground_size())
          throw FixtureError("intersection ground set differs from the parent");
        if (it->second->bases() != common)
          throw FixtureError("intersection " + subset_label(idx) + " does not match the common bases");
      }
    }
    for (const auto& [idx, m] : intersections) {
      if (idx.size() < 2 || !std::is_sorted(idx.begin(), idx.end()) ||
          std::adjacent_find(idx.begin(), idx.end()) != idx.end() || idx.back() >= k)
        throw FixtureError("bad intersection key " + subset_label(idx));
    }
  }

  static std::string subset_label(const std::vector<std::size_t>& idx) {
    std::string s = "{";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s + "}";
  }
};

/// Both sides of the inclusion-exclusion identity for one invariant.
struct ValuationReport {
  struct Term {
    std::vector<std::size_t> pieces;
    int sign = 1;
    std::optional<LaurentPoly> value;  ///< nullopt for an empty intersection (f = 0)
  };
  LaurentPoly parent_value;
  LaurentPoly alternating_sum;
  LaurentPoly residual;  ///< parent_value - alternating_sum
  std::vector<Term> terms;

  bool holds() const { return residual.is_zero(); }
};

/// f(P(M)) against Σ_{∅≠S⊆pieces} (-1)^{|S|-1} f(∩_S P(M_j)), with f(∅) = 0.
inline ValuationReport valuation_check(const SubdivisionFixture& fix,
                                       const std::function<LaurentPoly(const Matroid&)>& f) {
  fix.validate();
  ValuationReport rep;
  rep.parent_value = f(fix.parent);
  const std::size_t k = fix.pieces.size();
  for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
    ValuationReport::Term term;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1U << i)) term.pieces.push_back(i);
    term.sign = term.pieces.size() % 2 == 1 ? 1 : -1;
    const Matroid* m = nullptr;
    if (term.pieces.size() == 1) {
      m = &fix.pieces[term.pieces[0]];
    } else {
      const auto& slot = fix.intersections.at(term.pieces);
      if (slot) m = &*slot;
    }
    if (m) {
      term.value = f(*m);
      if (term.sign > 0)
        rep.alternating_sum += *term.value;
      else
        rep.alternating_sum -= *term.value;
    }
    rep.terms.push_back(std::move(term));
  }
  rep.residual = rep.parent_value - rep.alternating_sum;
  return rep;
}

/// 𝒥 of the lattice of flats.
inline LaurentPoly matroid_j_char_poly(const Matroid& m) { return j_char_poly(flats_lattice(m)); }
/// ℳ of the lattice of flats.
inline LaurentPoly matroid_j_mobius_poly(const Matroid& m) { return j_mobius_poly(flats_lattice(m)); }
/// χ of the lattice of flats.
inline LaurentPoly matroid_char_poly(const Matroid& m) { return char_poly(flats_lattice(m)); }

namespace detail {

inline Matroid bases_where(const Matroid& parent, const std::function<bool(ElementSet)>& keep, std::string name) {
  std::vector<ElementSet> b;
  for (ElementSet s : parent.bases())
    if (keep(s)) b.push_back(s);
  return Matroid::from_bases(parent.ground_size(), std::move(b), std::move(name));
}

// Splits the hypersimplex of `parent` by the hyperplane Σ_{i∈S} x_i = cut.
inline SubdivisionFixture hyperplane_split(std::string name, const Matroid& parent, ElementSet s, int cut) {
  auto below = [=](ElementSet b) { return set_size(b & s) <= cut; };
  auto above = [=](ElementSet b) { return set_size(b & s) >= cut; };
  auto on = [=](ElementSet b) { return set_size(b & s) == cut; };
  SubdivisionFixture fix{std::move(name), parent, {}, {}};
  fix.pieces.push_back(bases_where(parent, below, "below"));
  fix.pieces.push_back(bases_where(parent, above, "above"));
  fix.intersections[{0, 1}] = bases_where(parent, on, "wall");
  return fix;
}

}  // namespace detail

/// U_{2,4} split by x_0 + x_1 = 1: pieces omit {0,1} and {2,3} respectively.
inline SubdivisionFixture fixture_u24_split() {
  return detail::hyperplane_split("u24-split", uniform(2, 4), make_set({0, 1}), 1);
}

/// U_{2,5} split by x_0 + x_1 = 1.
inline SubdivisionFixture fixture_u25_split() {
  return detail::hyperplane_split("u25-split", uniform(2, 5), make_set({0, 1}), 1);
}

/// U_{3,5} split by x_0 + x_1 = 1.
inline SubdivisionFixture fixture_u35_split() {
  return detail::hyperplane_split("u35-split", uniform(3, 5), make_set({0, 1}), 1);
}

/// U_{2,4} as its own single piece.
inline SubdivisionFixture fixture_trivial() {
  const Matroid u = uniform(2, 4);
  return SubdivisionFixture{"trivial", u, {u}, {}};
}

inline std::vector<std::string> fixture_names() { return {"u24-split", "u25-split", "u35-split", "trivial"}; }

/// FixtureError for unknown names.
inline SubdivisionFixture fixture_by_name(const std::string& name) {
  if (name == "u24-split") return fixture_u24_split();
  if (name == "u25-split") return fixture_u25_split();
  if (name == "u35-split") return fixture_u35_split();
  if (name == "trivial") return fixture_trivial();
  throw FixtureError("unknown fixture '" + name + "'");
}

}  // namespace jmobius
