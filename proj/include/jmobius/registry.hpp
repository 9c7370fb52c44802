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

#include <charconv>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "jmobius/errors.hpp"
#include "jmobius/json_io.hpp"
#include "jmobius/matroid.hpp"
#include "jmobius/poset.hpp"
#include "jmobius/search.hpp"
#include "jmobius/subspace.hpp"

namespace jmobius {

/// A poset together with the matroid it came from, if any.
struct NamedObject {
  std::string name;
  Poset poset;
  std::optional<Matroid> matroid;
};

namespace detail {

inline std::size_t parse_size(const std::string& s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError("bad number '" + s + "'");
  return v;
}

inline constexpr std::size_t kMaxBooleanRank = 8;
inline constexpr std::size_t kMaxChainLength = 64;

inline NamedObject from_matroid(std::string name, const Matroid& m) {
  return {std::move(name), flats_lattice(m), m};
}

}  // namespace detail

/// Incomparable pair below and above a common element: not a lattice.
inline Poset bowtie() {
  const std::vector<std::pair<Element, Element>> covers{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  return Poset::from_covers(4, covers, {"a", "b", "c", "d"}).graded();
}

/// The pentagon lattice N5 (not graded).
inline Poset pentagon() {
  const std::vector<std::pair<Element, Element>> covers{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  return Poset::from_covers(5, covers, {"0", "a", "b", "c", "1"});
}

/// The diamond lattice M3: modular, not distributive.
inline Poset diamond_m3() {
  const std::vector<std::pair<Element, Element>> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  return Poset::from_covers(5, covers, {"0", "a", "b", "c", "1"}).graded();
}

/// Registry matroids: U<r>,<n>, graphic(K3), graphic(K4), graphic(K3,3),
/// dual(graphic(K3,3)) and its alias M*(K3,3).
inline std::optional<Matroid> named_matroid(const std::string& name) {
  static const std::regex uniform_re(R"(U(\d+),(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, uniform_re))
    return uniform(static_cast<int>(detail::parse_size(m[1])), detail::parse_size(m[2])).renamed(name);
  if (name == "graphic(K3)") return graphic(complete_graph(3), name);
  if (name == "graphic(K4)") return graphic(complete_graph(4), name);
  if (name == "graphic(K3,3)") return graphic(complete_bipartite_graph(3, 3), name);
  if (name == "dual(graphic(K3,3))") return dual_k33().renamed(name);
  if (name == "M*(K3,3)") return dual_k33();
  return std::nullopt;
}

/// Resolves a registry name: B<n>, C<n> (n-element chain), L<q>^<n>, M3,
/// N5, bowtie, or any name accepted by named_matroid (as its lattice of
/// flats). ParseError if the name is unknown.
inline NamedObject named_object(const std::string& name) {
  static const std::regex boolean_re(R"(B(\d+))");
  static const std::regex chain_re(R"(C(\d+))");
  static const std::regex subspace_re(R"(L(\d+)\^(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, boolean_re)) {
    const std::size_t n = detail::parse_size(m[1]);
    if (n > detail::kMaxBooleanRank) throw SizeBoundError("B<n> supports n <= 8");
    return {name, boolean_lattice(static_cast<unsigned>(n)), boolean_matroid(n).renamed(name)};
  }
  if (std::regex_match(name, m, chain_re)) {
    const std::size_t n = detail::parse_size(m[1]);
    if (n == 0 || n > detail::kMaxChainLength) throw SizeBoundError("C<n> supports 1 <= n <= 64");
    return {name, chain(n), std::nullopt};
  }
  if (std::regex_match(name, m, subspace_re))
    return {name, subspace_lattice(static_cast<int>(detail::parse_size(m[1])), detail::parse_size(m[2])),
            std::nullopt};
  if (name == "M3") return {name, diamond_m3(), std::nullopt};
  if (name == "N5") return {name, pentagon(), std::nullopt};
  if (name == "bowtie") return {name, bowtie(), std::nullopt};
  if (auto mat = named_matroid(name)) return detail::from_matroid(name, *mat);
  throw ParseError("unknown object name '" + name + "'");
}

/// Reads an object descriptor: a poset ({"size", "covers", ...}), a matroid
/// ({"type", ...}, taken as its lattice of flats) or {"name": ...}.
inline NamedObject object_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("object descriptor must be a JSON object");
  if (j.contains("type")) {
    Matroid m = matroid_from_json(j);
    std::string name = m.name().empty() ? std::string("matroid") : m.name();
    return detail::from_matroid(std::move(name), m);
  }
  if (j.contains("size")) return {j.value("name", std::string("poset")), poset_from_json(j), std::nullopt};
  if (j.contains("name")) return named_object(detail::get_as<std::string>(j.at("name"), "name"));
  throw ParseError("descriptor needs \"type\", \"size\" or \"name\"");
}

/// Reads a whole file; ParseError if it cannot be opened.
inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Resolves "--object" text: inline JSON, "@path" to a JSON file, or a
/// registry name.
inline NamedObject resolve_object(const std::string& text) {
  if (text.empty()) throw ParseError("empty object descriptor");
  if (text[0] == '@') return object_from_json(parse_json(read_file(text.substr(1))));
  if (text[0] == '{') return object_from_json(parse_json(text));
  return named_object(text);
}

/// Resolves "--fixture" text: a fixture name, inline JSON, or "@path".
inline SubdivisionFixture resolve_fixture(const std::string& text) {
  if (text.empty()) throw FixtureError("empty fixture descriptor");
  if (text[0] == '@') return fixture_from_json(parse_json(read_file(text.substr(1))));
  if (text[0] == '{') return fixture_from_json(parse_json(text));
  return fixture_by_name(text);
}

/// Lattices of the J-axiom criterion, in a fixed order.
inline std::vector<std::string> core_test_names() {
  return {"B1", "B2", "B3", "C4", "U2,3", "U2,4", "U3,4", "L2^2", "L2^3"};
}

/// Default objects of the verify suites: the core lattices plus M3, N5 and
/// a non-lattice.
inline std::vector<NamedObject> default_test_objects() {
  std::vector<NamedObject> out;
  for (const auto& n : core_test_names()) out.push_back(named_object(n));
  out.push_back({"M3", diamond_m3(), std::nullopt});
  out.push_back({"N5", pentagon(), std::nullopt});
  out.push_back({"bowtie", bowtie(), std::nullopt});
  return out;
}

}  // namespace jmobius
