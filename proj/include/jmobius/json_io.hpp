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

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "jmobius/errors.hpp"
#include "jmobius/integer.hpp"
#include "jmobius/laurent.hpp"
#include "jmobius/matroid.hpp"
#include "jmobius/poly.hpp"
#include "jmobius/poset.hpp"
#include "jmobius/valuation.hpp"

namespace jmobius {

using Json = nlohmann::ordered_json;

// Integers ----------------------------------------------------------------

/// A JSON number when it fits in 64 bits, otherwise a decimal string.
inline Json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("not an integer: " + j.dump());
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

namespace detail {

inline const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("bad value for ") + what + ": " + j.dump());
  }
}

}  // namespace detail

// Polynomials ---------------------------------------------------------------

/// {"min_exp": m, "coeffs": [c0, c1, ...]}.
inline Json poly_to_json(const LaurentPoly& p) {
  Json c = Json::array();
  for (const auto& v : p.coeffs()) c.push_back(integer_to_json(v));
  return Json{{"min_exp", p.min_exp()}, {"coeffs", c}};
}

inline LaurentPoly poly_from_json(const Json& j) {
  const int m = detail::get_as<int>(detail::require_field(j, "min_exp"), "min_exp");
  const Json& c = detail::require_field(j, "coeffs");
  if (!c.is_array()) throw ParseError("coeffs must be an array");
  std::vector<Integer> v;
  for (const auto& x : c) v.push_back(integer_from_json(x));
  return LaurentPoly(m, std::move(v));
}

inline Json qpoly_to_json(const QPoly& p) {
  Json c = Json::array();
  for (const auto& v : p.coeffs()) c.push_back(integer_to_json(v));
  return Json{{"coeffs", c}};
}

/// {"t_coeffs": [{"coeffs": [...]}, ...]}.
inline Json bipoly_to_json(const BiPoly& b) {
  Json t = Json::array();
  for (const auto& q : b.coeffs()) t.push_back(qpoly_to_json(q));
  return Json{{"t_coeffs", t}};
}

inline BiPoly bipoly_from_json(const Json& j) {
  const Json& t = detail::require_field(j, "t_coeffs");
  if (!t.is_array()) throw ParseError("t_coeffs must be an array");
  std::vector<QPoly> out;
  for (const auto& q : t) {
    std::vector<Integer> c;
    for (const auto& x : detail::require_field(q, "coeffs")) c.push_back(integer_from_json(x));
    out.emplace_back(std::move(c));
  }
  return BiPoly(std::move(out));
}

// Posets --------------------------------------------------------------------

/// {"size": n, "covers": [[i, j], ...], "labels": [...], "ranks": [...]}.
inline Json poset_to_json(const Poset& p) {
  Json covers = Json::array();
  for (auto [a, b] : p.covers()) covers.push_back({a, b});
  Json j{{"size", p.size()}, {"covers", covers}, {"labels", p.labels()}};
  if (p.ranked()) j["ranks"] = std::vector<int>(p.ranks().begin(), p.ranks().end());
  return j;
}

/// Reads the poset format. Without "ranks" the poset is graded from its
/// covers when possible and left unranked otherwise.
inline Poset poset_from_json(const Json& j) {
  const auto n = detail::get_as<std::size_t>(detail::require_field(j, "size"), "size");
  const Json& cj = detail::require_field(j, "covers");
  if (!cj.is_array()) throw ParseError("covers must be an array");
  std::vector<std::pair<Element, Element>> covers;
  for (const auto& c : cj) {
    if (!c.is_array() || c.size() != 2) throw ParseError("each cover must be a pair");
    covers.emplace_back(detail::get_as<Element>(c[0], "cover"), detail::get_as<Element>(c[1], "cover"));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = detail::get_as<std::vector<std::string>>(j.at("labels"), "labels");
  std::optional<std::vector<int>> ranks;
  if (j.contains("ranks")) ranks = detail::get_as<std::vector<int>>(j.at("ranks"), "ranks");
  Poset p = Poset::from_covers(n, covers, std::move(labels), std::move(ranks));
  if (!p.ranked()) {
    try {
      return p.graded();
    } catch (const RankError&) {
      return p;
    }
  }
  return p;
}

// Matroids ------------------------------------------------------------------

inline Json set_to_json(ElementSet s) {
  Json a = Json::array();
  for (std::size_t e : set_members(s)) a.push_back(e);
  return a;
}

/// {"type": "bases", "ground": n, "bases": [[...], ...]}, plus "name" if set.
inline Json matroid_to_json(const Matroid& m) {
  Json bases = Json::array();
  for (ElementSet b : m.bases()) bases.push_back(set_to_json(b));
  Json j{{"type", "bases"}, {"ground", m.ground_size()}, {"bases", bases}};
  if (!m.name().empty()) j["name"] = m.name();
  return j;
}

/// Matroid descriptors: uniform, boolean, graphic, bases, vector, dual,
/// direct_sum.
inline Matroid matroid_from_json(const Json& j) {
  const auto type = detail::get_as<std::string>(detail::require_field(j, "type"), "type");
  std::string name = j.contains("name") ? detail::get_as<std::string>(j.at("name"), "name") : std::string{};
  auto named = [&](Matroid m) { return name.empty() ? m : m.renamed(name); };
  if (type == "uniform") {
    return named(uniform(detail::get_as<int>(detail::require_field(j, "r"), "r"),
                         detail::get_as<std::size_t>(detail::require_field(j, "n"), "n")));
  }
  if (type == "boolean") return named(boolean_matroid(detail::get_as<std::size_t>(detail::require_field(j, "n"), "n")));
  if (type == "graphic") {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : detail::require_field(j, "edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair");
      edges.emplace_back(detail::get_as<std::size_t>(e[0], "edge"), detail::get_as<std::size_t>(e[1], "edge"));
    }
    return graphic(edges, name);
  }
  if (type == "bases") {
    const auto n = detail::get_as<std::size_t>(detail::require_field(j, "ground"), "ground");
    std::vector<ElementSet> bases;
    for (const auto& b : detail::require_field(j, "bases")) {
      ElementSet s = 0;
      for (const auto& e : b) {
        const auto k = detail::get_as<std::size_t>(e, "basis element");
        if (k >= n) throw IndexError("basis element " + std::to_string(k) + " outside the ground set");
        s |= ElementSet{1} << k;
      }
      bases.push_back(s);
    }
    return Matroid::from_bases(n, std::move(bases), name);
  }
  if (type == "vector") {
    const auto p = detail::get_as<long long>(detail::require_field(j, "p"), "p");
    const auto rows = detail::get_as<std::vector<std::vector<long long>>>(detail::require_field(j, "rows"), "rows");
    return vector_matroid(rows, p, name);
  }
  if (type == "dual") return named(dual(matroid_from_json(detail::require_field(j, "of"))));
  if (type == "direct_sum") {
    const Json& parts = detail::require_field(j, "parts");
    if (!parts.is_array() || parts.empty()) throw ParseError("direct_sum needs a nonempty parts array");
    Matroid m = matroid_from_json(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) m = direct_sum(m, matroid_from_json(parts[i]));
    return named(m);
  }
  throw ParseError("unknown matroid type '" + type + "'");
}

// Subdivision fixtures ------------------------------------------------------

inline Json fixture_to_json(const SubdivisionFixture& f) {
  Json pieces = Json::array();
  for (const auto& p : f.pieces) pieces.push_back(matroid_to_json(p));
  Json inter = Json::array();
  for (const auto& [idx, m] : f.intersections)
    inter.push_back({{"pieces", idx}, {"matroid", m ? matroid_to_json(*m) : Json(nullptr)}});
  return Json{{"name", f.name}, {"parent", matroid_to_json(f.parent)}, {"pieces", pieces}, {"intersections", inter}};
}

inline SubdivisionFixture fixture_from_json(const Json& j) {
  try {
    std::string name = j.contains("name") ? detail::get_as<std::string>(j.at("name"), "name") : "fixture";
    SubdivisionFixture f{std::move(name), matroid_from_json(detail::require_field(j, "parent")), {}, {}};
    for (const auto& p : detail::require_field(j, "pieces")) f.pieces.push_back(matroid_from_json(p));
    if (j.contains("intersections"))
      for (const auto& e : j.at("intersections")) {
        auto idx = detail::get_as<std::vector<std::size_t>>(detail::require_field(e, "pieces"), "pieces");
        const Json& m = detail::require_field(e, "matroid");
        f.intersections[idx] = m.is_null() ? std::nullopt : std::optional<Matroid>(matroid_from_json(m));
      }
    f.validate();
    return f;
  } catch (const ParseError& e) {
    throw FixtureError(e.what());
  } catch (const ExchangeAxiomError& e) {
    throw FixtureError(std::string("fixture matroid invalid: ") + e.what());
  }
}

/// Parses text as JSON; ParseError on malformed input.
inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace jmobius
