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
#include <exception>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jmobius/errors.hpp"
#include "jmobius/invariants.hpp"
#include "jmobius/json_io.hpp"
#include "jmobius/qseries.hpp"
#include "jmobius/registry.hpp"
#include "jmobius/search.hpp"
#include "jmobius/valuation.hpp"
#include "jmobius/verify.hpp"

namespace jmobius {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitViolation = 2;

/// One CLI invocation.
struct JobSpec {
  std::string command;                ///< compute | verify | search | subdivision
  std::optional<std::string> object;  ///< name, inline JSON or @file
  std::optional<std::string> invariant;
  std::string format = "json";        ///< json | text
  std::string suite = "all";
  std::optional<std::size_t> max_ground;
  std::optional<int> max_rank;
  std::optional<unsigned> q;
  std::optional<unsigned> n;
  std::optional<std::string> fixture;
};

struct JobResult {
  int exit_code = kExitOk;
  std::string output;
};

namespace detail {

inline const std::vector<std::string>& invariant_names() {
  static const std::vector<std::string> names{"mu", "J", "chi", "jchar", "jmobius"};
  return names;
}

inline bool one_of(const std::string& s, const std::vector<std::string>& options) {
  return std::find(options.begin(), options.end(), s) != options.end();
}

inline std::string join_names(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

inline Json poly_payload(const LaurentPoly& p) {
  Json j{{"polynomial", poly_to_json(p)}, {"text", p.to_string()}};
  if (p.is_polynomial()) {
    j["at_one"] = integer_to_json(p.eval_integer(1));
    j["at_minus_one"] = integer_to_json(p.eval_integer(-1));
  }
  return j;
}

inline LaurentPoly poly_invariant(const std::string& inv, const Poset& p) {
  if (inv == "chi") return char_poly(p);
  if (inv == "jchar") return j_char_poly(p);
  return j_mobius_poly(p);
}

inline JobResult compute(const JobSpec& spec) {
  if (!spec.invariant) throw ParseError("compute needs --invariant");
  const std::string& inv = *spec.invariant;
  if (!one_of(inv, invariant_names())) throw ParseError("unknown invariant '" + inv + "'; expected " + join_names(invariant_names()));

  // ℳ(L_q^n, t) as a polynomial in q and t.
  if (!spec.object && spec.n && !spec.q) {
    if (inv != "jmobius") throw ParseError("--n without --q and --object computes only jmobius");
    const BiPoly b = m_subspace_formula(*spec.n);
    if (spec.format == "text") return {kExitOk, "jmobius(L_q^" + std::to_string(*spec.n) + ") = " + to_string(b) + "\n"};
    Json j{{"command", "compute"}, {"object", "L_q^" + std::to_string(*spec.n)}, {"invariant", inv},
           {"bivariate", bipoly_to_json(b)}, {"text", to_string(b)}};
    return {kExitOk, j.dump(2) + "\n"};
  }

  NamedObject obj;
  if (spec.object)
    obj = resolve_object(*spec.object);
  else if (spec.q && spec.n)
    obj = named_object("L" + std::to_string(*spec.q) + "^" + std::to_string(*spec.n));
  else
    throw ParseError("compute needs --object (or --q and --n)");
  const Poset& p = obj.poset;

  Json j{{"command", "compute"}, {"object", obj.name}, {"invariant", inv}};
  std::ostringstream text;
  if (inv == "mu") {
    const auto mu = mobius(p);
    Json values = Json::array();
    const auto& fl = p.flags2();
    for (std::size_t i = 0; i < fl.size(); ++i) {
      values.push_back({{"x", p.label(fl[i].x)}, {"y", p.label(fl[i].y)}, {"value", integer_to_json(mu.value(i))}});
      text << "mu(" << p.label(fl[i].x) << "," << p.label(fl[i].y) << ") = " << mu.value(i).str() << "\n";
    }
    j["values"] = values;
  } else if (inv == "J") {
    const auto J = j_fast(p);
    Json values = Json::array();
    p.for_each_flag3([&](std::size_t i, Element x, Element y, Element z) {
      values.push_back({{"x", p.label(x)}, {"y", p.label(y)}, {"z", p.label(z)}, {"value", integer_to_json(J.value(i))}});
      text << "J(" << p.label(x) << "," << p.label(y) << "," << p.label(z) << ") = " << J.value(i).str() << "\n";
    });
    j["values"] = values;
  } else {
    const LaurentPoly v = poly_invariant(inv, p);
    const Json payload = poly_payload(v);
    for (const auto& [k, val] : payload.items()) j[k] = val;
    text << inv << "(" << obj.name << ") = " << v.to_string() << "\n";
  }
  return {kExitOk, spec.format == "text" ? text.str() : j.dump(2) + "\n"};
}

inline JobResult verify(const JobSpec& spec) {
  if (spec.suite != "all" && !one_of(spec.suite, suite_names()))
    throw ParseError("unknown suite '" + spec.suite + "'; expected all, " + join_names(suite_names()));
  VerifyOptions opt;
  opt.q = spec.q;
  opt.n = spec.n;
  if (spec.max_ground) opt.max_ground = *spec.max_ground;
  if (spec.max_rank) opt.max_rank = *spec.max_rank;
  std::optional<std::vector<NamedObject>> objects;
  if (spec.object) objects = std::vector<NamedObject>{resolve_object(*spec.object)};
  std::optional<std::vector<SubdivisionFixture>> fixtures;
  if (spec.fixture) fixtures = std::vector<SubdivisionFixture>{resolve_fixture(*spec.fixture)};

  const VerifyReport rep = run_suite(spec.suite, objects, opt, fixtures);
  const int code = rep.any_violated() ? kExitViolation : kExitOk;
  if (spec.format == "text") {
    std::ostringstream out;
    for (const auto& c : rep.checks) {
      out << "[" << to_string(c.status) << "] " << c.suite << ": " << c.identity << " on " << c.object;
      if (c.cases) out << " (" << c.cases << " cases)";
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
    out << "holds " << rep.count(CheckStatus::holds) << ", violated " << rep.count(CheckStatus::violated)
        << ", skipped " << rep.count(CheckStatus::skipped) << ", reported " << rep.count(CheckStatus::reported) << "\n";
    return {code, out.str()};
  }
  Json checks = Json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"suite", c.suite},
                      {"identity", c.identity},
                      {"object", c.object},
                      {"status", to_string(c.status)},
                      {"cases", c.cases},
                      {"detail", c.detail}});
  Json j{{"command", "verify"},
         {"suite", spec.suite},
         {"checks", checks},
         {"summary",
          {{"holds", rep.count(CheckStatus::holds)},
           {"violated", rep.count(CheckStatus::violated)},
           {"skipped", rep.count(CheckStatus::skipped)},
           {"reported", rep.count(CheckStatus::reported)}}}};
  return {code, j.dump(2) + "\n"};
}

inline JobResult search(const JobSpec& spec) {
  const std::size_t max_ground = spec.max_ground.value_or(7);
  const int max_rank = spec.max_rank.value_or(3);
  const SearchCatalog cat = search_minus_one_roots(max_ground, max_rank);
  const auto violations = cat.modular_violations();
  const int code = violations.empty() ? kExitOk : kExitViolation;

  std::size_t modular = 0, roots = 0, open_roots = 0;
  for (const auto& r : cat.rows) {
    modular += r.modular;
    if (r.m_at_minus_one == 0) {
      ++roots;
      open_roots += !r.modular && r.connected;
    }
  }
  if (spec.format == "text") {
    std::ostringstream out;
    out << "name | rank | ground | connected | modular | M(-1)\n";
    for (const auto& r : cat.rows)
      out << r.name << (r.pinned ? " (pinned)" : "") << " | " << r.rank << " | " << r.matroid.ground_size() << " | "
          << (r.connected ? "yes" : "no") << " | " << (r.modular ? "yes" : "no") << " | " << r.m_at_minus_one.str()
          << "\n";
    out << cat.rows.size() << " rows, " << modular << " modular, " << roots << " with M(-1) = 0, " << open_roots
        << " non-modular connected with M(-1) = 0, " << violations.size() << " modular violations\n";
    return {code, out.str()};
  }
  Json rows = Json::array();
  for (const auto& r : cat.rows)
    rows.push_back({{"name", r.name},
                    {"descriptor", matroid_to_json(r.matroid)},
                    {"rank", r.rank},
                    {"ground", r.matroid.ground_size()},
                    {"connected", r.connected},
                    {"modular", r.modular},
                    {"pinned", r.pinned},
                    {"m_at_minus_one", integer_to_json(r.m_at_minus_one)},
                    {"m_poly", poly_to_json(r.m_poly)}});
  Json viol = Json::array();
  for (const auto* r : violations) viol.push_back(r->name);
  Json j{{"command", "search"},
         {"max_ground", max_ground},
         {"max_rank", max_rank},
         {"rows", rows},
         {"summary",
          {{"rows", cat.rows.size()},
           {"modular", modular},
           {"minus_one_roots", roots},
           {"nonmodular_connected_roots", open_roots},
           {"modular_violations", viol}}}};
  return {code, j.dump(2) + "\n"};
}

inline JobResult subdivision(const JobSpec& spec) {
  if (!spec.fixture && !spec.object) throw ParseError("subdivision needs --fixture");
  const std::string inv = spec.invariant.value_or("jchar");
  if (!one_of(inv, {"chi", "jchar", "jmobius"}))
    throw ParseError("subdivision supports the invariants chi, jchar and jmobius");
  const SubdivisionFixture fix = resolve_fixture(spec.fixture ? *spec.fixture : *spec.object);
  auto f = [&](const Matroid& m) { return poly_invariant(inv, flats_lattice(m)); };
  const ValuationReport rep = valuation_check(fix, f);
  // Only 𝒥 is asserted to be a valuation.
  const bool asserted = inv == "jchar";
  const int code = asserted && !rep.holds() ? kExitViolation : kExitOk;

  if (spec.format == "text") {
    std::ostringstream out;
    out << "fixture " << fix.name << ", invariant " << inv << "\n";
    out << "parent: " << rep.parent_value.to_string() << "\n";
    for (const auto& t : rep.terms)
      out << (t.sign > 0 ? "+ " : "- ") << SubdivisionFixture::subset_label(t.pieces) << ": "
          << (t.value ? t.value->to_string() : std::string("empty")) << "\n";
    out << "alternating sum: " << rep.alternating_sum.to_string() << "\n";
    out << "residual: " << rep.residual.to_string() << (asserted ? "" : " (reported)") << "\n";
    return {code, out.str()};
  }
  Json terms = Json::array();
  for (const auto& t : rep.terms)
    terms.push_back(
        {{"pieces", t.pieces}, {"sign", t.sign}, {"value", t.value ? poly_to_json(*t.value) : Json(nullptr)}});
  Json j{{"command", "subdivision"},
         {"fixture", fix.name},
         {"invariant", inv},
         {"asserted", asserted},
         {"parent_value", poly_to_json(rep.parent_value)},
         {"terms", terms},
         {"alternating_sum", poly_to_json(rep.alternating_sum)},
         {"residual", poly_to_json(rep.residual)},
         {"residual_text", rep.residual.to_string()},
         {"holds", rep.holds()}};
  return {code, j.dump(2) + "\n"};
}

inline JobResult error_result(const std::string& format, const std::string& code, const std::string& message) {
  if (format == "text") return {kExitInputError, "error [" + code + "]: " + message + "\n"};
  Json j{{"error", {{"code", code}, {"message", message}}}};
  return {kExitInputError, j.dump(2) + "\n"};
}

}  // namespace detail

/// Runs one job. Exit 0 on success, 2 when an asserted identity is violated,
/// 1 on input errors (with the error's machine-readable code).
inline JobResult run(const JobSpec& spec) {
  try {
    if (spec.format != "json" && spec.format != "text")
      throw ParseError("unknown format '" + spec.format + "'; expected json or text");
    if (spec.command == "compute") return detail::compute(spec);
    if (spec.command == "verify") return detail::verify(spec);
    if (spec.command == "search") return detail::search(spec);
    if (spec.command == "subdivision") return detail::subdivision(spec);
    throw ParseError("unknown command '" + spec.command + "'");
  } catch (const Error& e) {
    return detail::error_result(spec.format, e.code(), e.what());
  } catch (const std::exception& e) {
    return detail::error_result(spec.format, "InternalError", e.what());
  }
}

}  // namespace jmobius
