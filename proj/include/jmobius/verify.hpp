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

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "jmobius/deletion_contraction.hpp"
#include "jmobius/errors.hpp"
#include "jmobius/incidence.hpp"
#include "jmobius/invariants.hpp"
#include "jmobius/lattice.hpp"
#include "jmobius/qseries.hpp"
#include "jmobius/registry.hpp"
#include "jmobius/search.hpp"
#include "jmobius/subspace.hpp"
#include "jmobius/trincidence.hpp"
#include "jmobius/valuation.hpp"

namespace jmobius {

enum class CheckStatus { holds, violated, skipped, reported };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::violated: return "violated";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::reported: return "reported";
  }
  return "?";
}

/// Outcome of one identity on one object.
struct Check {
  std::string suite;
  std::string identity;
  std::string object;
  CheckStatus status = CheckStatus::holds;
  std::size_t cases = 0;  ///< instances evaluated
  std::string detail;     ///< first counterexample, skip reason, or reported value
};

struct VerifyReport {
  std::vector<Check> checks;

  bool any_violated() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::violated) return true;
    return false;
  }
  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == s;
    return n;
  }
};

struct VerifyOptions {
  std::optional<unsigned> q;
  std::optional<unsigned> n;
  std::size_t max_ground = 7;
  int max_rank = 3;
  std::uint64_t seed = 20260101;
  std::size_t random_trials = 1000;
};

inline std::vector<std::string> suite_names() {
  return {"j-axioms",      "classical",    "generalized",          "polynomial", "structure",
          "qseries",       "modular-root", "deletion-contraction", "valuation"};
}

namespace detail {

// Records checks for one suite. A probe returns the first counterexample, if
// any, and bumps the case counter.
class Recorder {
 public:
  Recorder(std::string suite, VerifyReport& report) : suite_(std::move(suite)), report_(report) {}

  void check(const std::string& identity, const std::string& object,
             const std::function<std::optional<std::string>(std::size_t&)>& probe) {
    Check c{suite_, identity, object, CheckStatus::holds, 0, {}};
    try {
      if (auto bad = probe(c.cases)) {
        c.status = CheckStatus::violated;
        c.detail = *bad;
      }
    } catch (const HypothesisError& e) {
      c.status = CheckStatus::skipped;
      c.detail = e.what();
    }
    report_.checks.push_back(std::move(c));
  }

  void skip(const std::string& identity, const std::string& object, const std::string& why) {
    report_.checks.push_back({suite_, identity, object, CheckStatus::skipped, 0, why});
  }

  void report(const std::string& identity, const std::string& object, std::size_t cases, const std::string& value) {
    report_.checks.push_back({suite_, identity, object, CheckStatus::reported, cases, value});
  }

 private:
  std::string suite_;
  VerifyReport& report_;
};

inline std::string flag_label(const Poset& p, Element x, Element y) {
  return "(" + p.label(x) + "," + p.label(y) + ")";
}
inline std::string flag_label(const Poset& p, Element x, Element y, Element z) {
  return "(" + p.label(x) + "," + p.label(y) + "," + p.label(z) + ")";
}

inline std::optional<std::string> first_diff(const IncFn2<Integer>& f, const IncFn2<Integer>& g, std::size_t& cases) {
  const Poset& p = f.poset();
  const auto& fl = p.flags2();
  for (std::size_t i = 0; i < fl.size(); ++i) {
    ++cases;
    if (f.value(i) != g.value(i))
      return "at " + flag_label(p, fl[i].x, fl[i].y) + ": " + f.value(i).str() + " vs " + g.value(i).str();
  }
  return std::nullopt;
}

inline std::optional<std::string> first_diff(const IncFn3<Integer>& f, const IncFn3<Integer>& g, std::size_t& cases) {
  const Poset& p = f.poset();
  std::optional<std::string> bad;
  p.for_each_flag3([&](std::size_t i, Element x, Element y, Element z) {
    if (bad) return;
    ++cases;
    if (f.value(i) != g.value(i))
      bad = "at " + flag_label(p, x, y, z) + ": " + f.value(i).str() + " vs " + g.value(i).str();
  });
  return bad;
}

inline std::optional<std::string> poly_diff(const LaurentPoly& a, const LaurentPoly& b, std::size_t& cases) {
  ++cases;
  if (a == b) return std::nullopt;
  return a.to_string() + " vs " + b.to_string();
}

inline bool has_bounds(const Poset& p) { return p.size() > 0 && p.bottom() && p.top(); }

inline bool ranked_lattice(const Poset& p) { return p.ranked() && has_bounds(p) && is_lattice(p); }

inline IncFn3<Integer> random_fn3(const Poset& p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  return tabulate3<Integer>(p, [&](Element, Element, Element) { return Integer(d(rng)); });
}

// ---------------------------------------------------------------------------

inline void suite_j_axioms(Recorder& rec, const NamedObject& o) {
  const Poset& p = o.poset;
  const auto J = j_fast(p);
  rec.check("zeta3 * J = delta3", o.name, [&](std::size_t& n) { return first_diff(tri_mul(zeta3(p), J), delta3(p), n); });
  rec.check("J * zeta3 = delta3", o.name, [&](std::size_t& n) { return first_diff(tri_mul(J, zeta3(p)), delta3(p), n); });
  rec.check("J from the recursion = mu <> mu", o.name,
            [&](std::size_t& n) { return first_diff(j_recursive(p), J, n); });
}

inline void suite_classical(Recorder& rec, const NamedObject& o) {
  const Poset& p = o.poset;
  const auto mu = mobius(p);
  const auto z = zeta2(p);
  const auto d = delta2(p);
  rec.check("zeta * mu = delta", o.name, [&](std::size_t& n) { return first_diff(convolve2(z, mu), d, n); });
  rec.check("mu * zeta = delta", o.name, [&](std::size_t& n) { return first_diff(convolve2(mu, z), d, n); });
  rec.check("Hall chain sum = mu", o.name, [&](std::size_t& n) {
    return first_diff(tabulate2<Integer>(p, [&](Element x, Element y) { return hall_sum(p, x, y); }), mu, n);
  });
  const Poset q = chain(3);
  rec.check("mu_P (x) mu_Q = mu_{P x Q} with Q = C3", o.name,
            [&](std::size_t& n) { return first_diff(tensor2(mu, mobius(q)), mobius(product(p, q)), n); });
  if (!has_bounds(p) || !is_lattice(p)) {
    for (const char* id : {"atom cross-cut sum = mu", "coatom cross-cut sum = mu", "Weisner sum = 0"})
      rec.skip(id, o.name, "not a lattice");
    return;
  }
  rec.check("atom cross-cut sum = mu", o.name, [&](std::size_t& n) {
    return first_diff(
        tabulate2<Integer>(p, [&](Element x, Element y) { return crosscut_sum(p, CrossCut::atoms_of(p, x, y)); }), mu,
        n);
  });
  rec.check("coatom cross-cut sum = mu", o.name, [&](std::size_t& n) {
    return first_diff(
        tabulate2<Integer>(p, [&](Element x, Element y) { return crosscut_sum(p, CrossCut::coatoms_of(p, x, y)); }),
        mu, n);
  });
  rec.check("Weisner sum = 0", o.name, [&](std::size_t& n) -> std::optional<std::string> {
    for (Element a = 0; a < p.size(); ++a) {
      if (a == *p.top()) continue;
      ++n;
      const Integer s = weisner_sum(p, a);
      if (s != 0) return "a = " + p.label(a) + ": " + s.str();
    }
    return std::nullopt;
  });
}

inline void suite_generalized(Recorder& rec, const NamedObject& o) {
  const Poset& p = o.poset;
  const auto J = j_fast(p);
  rec.check("Hall double chain sum = J", o.name, [&](std::size_t& n) {
    return first_diff(tabulate3<Integer>(p, [&](Element x, Element y, Element z) { return hall_gen_sum(p, x, y, z); }),
                      J, n);
  });
  rec.check("both otherside sums = delta3", o.name, [&](std::size_t& n) -> std::optional<std::string> {
    std::optional<std::string> bad;
    p.for_each_flag3([&](std::size_t, Element x, Element y, Element z) {
      if (bad) return;
      ++n;
      const auto s = otherside_sum(p, x, y, z);
      const Integer want = x == z ? 1 : 0;
      if (s.j_form != want || s.mu_form != want)
        bad = "at " + flag_label(p, x, y, z) + ": " + s.j_form.str() + ", " + s.mu_form.str();
    });
    return bad;
  });
  const Poset q = boolean_lattice(1);
  rec.check("J_P (x) J_Q = J_{P x Q} with Q = B1", o.name,
            [&](std::size_t& n) { return first_diff(tensor3(J, j_fast(q)), j_fast(product(p, q)), n); });
  if (!has_bounds(p) || !is_lattice(p)) {
    for (const char* id : {"double cross-cut sum = J", "generalized Weisner sum = 0", "dual generalized Weisner sum = 0"})
      rec.skip(id, o.name, "not a lattice");
    return;
  }
  rec.check("double cross-cut sum = J", o.name, [&](std::size_t& n) -> std::optional<std::string> {
    std::optional<std::string> bad;
    const CutKind kinds[] = {CutKind::lower, CutKind::upper};
    p.for_each_flag3([&](std::size_t i, Element x, Element y, Element z) {
      for (CutKind k1 : kinds)
        for (CutKind k2 : kinds) {
          if (bad) return;
          ++n;
          const Integer s = double_crosscut_sum(p, DoubleCrossCut::of_kinds(p, x, y, z, k1, k2));
          if (s != J.value(i)) bad = "at " + flag_label(p, x, y, z) + ": " + s.str() + " vs " + J.value(i).str();
        }
    });
    return bad;
  });
  const Element bot = *p.bottom(), top = *p.top();
  rec.check("generalized Weisner sum = 0", o.name, [&](std::size_t& n) -> std::optional<std::string> {
    if (p.size() < 3) throw HypothesisError("needs at least three elements");
    for (auto [a, b] : p.flags2()) {
      if (a == bot || a == b) continue;
      ++n;
      const Integer s = weisner_gen_sum(J, a, b);
      if (s != 0) return "(a,b) = " + flag_label(p, a, b) + ": " + s.str();
    }
    return std::nullopt;
  });
  rec.check("dual generalized Weisner sum = 0", o.name, [&](std::size_t& n) -> std::optional<std::string> {
    if (p.size() < 3) throw HypothesisError("needs at least three elements");
    for (auto [b, a] : p.flags2()) {
      if (a == top || a == b) continue;
      ++n;
      const Integer s = weisner_gen_sum_dual(J, a, b);
      if (s != 0) return "(a,b) = " + flag_label(p, a, b) + ": " + s.str();
    }
    return std::nullopt;
  });
}

inline void suite_polynomial(Recorder& rec, const NamedObject& o) {
  const Poset& p = o.poset;
  const char* ids[] = {"M(L,1) = 0", "J-characteristic coefficients positive", "M decomposition = M",
                       "J-characteristic multiplicative with B1", "M multiplicative with B1"};
  if (!ranked_lattice(p)) {
    for (const char* id : ids) rec.skip(id, o.name, "not a ranked lattice");
    return;
  }
  const LaurentPoly m = j_mobius_poly(p);
  rec.check(ids[0], o.name, [&](std::size_t& n) -> std::optional<std::string> {
    if (p.size() < 2) throw HypothesisError("needs at least two elements");
    ++n;
    const Integer v = m.eval_integer(1);
    return v == 0 ? std::nullopt : std::optional<std::string>("M(L,1) = " + v.str());
  });
  if (is_geometric(p))
    rec.check(ids[1], o.name, [&](std::size_t& n) -> std::optional<std::string> {
      ++n;
      return check_positive_coeffs(p) ? std::nullopt : std::optional<std::string>(j_char_poly(p).to_string());
    });
  else
    rec.skip(ids[1], o.name, "not a geometric lattice");
  rec.check(ids[2], o.name, [&](std::size_t& n) { return poly_diff(m_decomposition(p), m, n); });
  const Poset q = boolean_lattice(1);
  const Poset pq = product(p, q);
  rec.check(ids[3], o.name,
            [&](std::size_t& n) { return poly_diff(j_char_poly(pq), j_char_poly(p) * j_char_poly(q), n); });
  rec.check(ids[4], o.name, [&](std::size_t& n) { return poly_diff(j_mobius_poly(pq), m * j_mobius_poly(q), n); });
}

inline void suite_structure(Recorder& rec, const NamedObject& o, const VerifyOptions& opt) {
  const Poset& p = o.poset;
  std::vector<StructureWitness> ws;
  try {
    ws = structure_witnesses(p);
  } catch (const HypothesisError& e) {
    rec.skip("structure witnesses", o.name, e.what());
  }
  for (const auto& w : ws)
    rec.check(w.property + " fails", o.name, [&](std::size_t& n) -> std::optional<std::string> {
      ++n;
      if (w.violated()) return std::nullopt;
      return "no violation at " + flag_label(p, w.triple.x, w.triple.y, w.triple.z);
    });
  std::mt19937_64 rng(opt.seed);
  const auto d = delta3(p);
  rec.check("f * (g + h) = f * g + f * h on random functions", o.name,
            [&](std::size_t& n) -> std::optional<std::string> {
              for (std::size_t t = 0; t < opt.random_trials; ++t) {
                ++n;
                const auto f = random_fn3(p, rng), g = random_fn3(p, rng), h = random_fn3(p, rng);
                if (!left_distributivity_check(f, g, h)) return "trial " + std::to_string(t);
              }
              return std::nullopt;
            });
  rec.check("delta3 * f = f on random functions", o.name, [&](std::size_t& n) -> std::optional<std::string> {
    for (std::size_t t = 0; t < opt.random_trials; ++t) {
      ++n;
      const auto f = random_fn3(p, rng);
      if (!(tri_mul(d, f) == f)) return "trial " + std::to_string(t);
    }
    return std::nullopt;
  });
}

inline void suite_qseries(Recorder& rec, const VerifyOptions& opt) {
  std::vector<unsigned> john_ns, m_ns;
  if (opt.n) {
    john_ns = {*opt.n};
    m_ns = {*opt.n};
  } else {
    for (unsigned n = 1; n <= 12; ++n) john_ns.push_back(n);
    for (unsigned n = 1; n <= 5; ++n) m_ns.push_back(n);
  }
  for (unsigned n : john_ns)
    rec.check("q-binomial alternating identity = 0", "n=" + std::to_string(n),
              [&](std::size_t& c) -> std::optional<std::string> {
                ++c;
                const QPoly s = john_identity_sum(n);
                return s.is_zero() ? std::nullopt : std::optional<std::string>(to_string(s));
              });
  for (unsigned n : m_ns) {
    const BiPoly f = m_subspace_formula(n);
    rec.check("multinomial form = decomposed form", "n=" + std::to_string(n),
              [&](std::size_t& c) -> std::optional<std::string> {
                ++c;
                const BiPoly g = m_subspace_decomposed(n);
                return f == g ? std::nullopt : std::optional<std::string>(to_string(f) + " vs " + to_string(g));
              });
    rec.check("M(L_q^n,-1) = 0", "n=" + std::to_string(n), [&](std::size_t& c) -> std::optional<std::string> {
      ++c;
      const QPoly a = eval_t(f, -1), b = eval_t(m_subspace_decomposed(n), -1);
      if (a.is_zero() && b.is_zero()) return std::nullopt;
      return to_string(a) + ", " + to_string(b);
    });
  }
  std::vector<std::pair<unsigned, unsigned>> pairs;
  if (opt.q && opt.n)
    pairs = {{*opt.q, *opt.n}};
  else if (!opt.q && !opt.n)
    pairs = {{2, 2}, {2, 3}, {3, 2}, {2, 4}};
  for (auto [q, n] : pairs) {
    const std::string obj = "L" + std::to_string(q) + "^" + std::to_string(n);
    const Poset l = subspace_lattice(static_cast<int>(q), n);
    rec.check("specialized formula = M of the subspace lattice", obj,
              [&](std::size_t& c) { return poly_diff(specialize(m_subspace_formula(n), q), j_mobius_poly(l), c); });
    rec.check("mu(0,1) = (-1)^n q^C(n,2)", obj, [&](std::size_t& c) -> std::optional<std::string> {
      ++c;
      const Integer got = mobius(l)(*l.bottom(), *l.top());
      const Integer want = subspace_mobius_top(q, n);
      return got == want ? std::nullopt : std::optional<std::string>(got.str() + " vs " + want.str());
    });
    rec.check("chi = prod (t - q^i)", obj, [&](std::size_t& c) { return poly_diff(char_poly(l), subspace_char_poly(q, n), c); });
  }
}

inline void modular_root_check(Recorder& rec, const NamedObject& o) {
  const Poset& p = o.poset;
  if (!ranked_lattice(p) || !is_modular_lattice(p)) {
    rec.skip("M(L,-1) = 0 on modular lattices", o.name, "not a modular ranked lattice");
    return;
  }
  rec.check("M(L,-1) = 0 on modular lattices", o.name, [&](std::size_t& n) -> std::optional<std::string> {
    ++n;
    const Integer v = eval_at_minus_one(p);
    return v == 0 ? std::nullopt : std::optional<std::string>("M(L,-1) = " + v.str());
  });
}

inline std::vector<NamedObject> modular_root_objects() {
  std::vector<NamedObject> out;
  for (const char* n : {"B1", "B2", "B3", "B4", "L2^2", "L2^3", "L2^4", "L3^2"}) out.push_back(named_object(n));
  auto prod = [](const char* a, const char* b) {
    return NamedObject{std::string(a) + " x " + b, product(named_object(a).poset, named_object(b).poset), std::nullopt};
  };
  out.push_back(prod("B1", "L2^2"));
  out.push_back(prod("B1", "L3^2"));
  out.push_back(prod("L2^2", "L2^2"));
  out.push_back(prod("B2", "L2^3"));
  return out;
}

inline void suite_modular_root(Recorder& rec, const std::vector<NamedObject>& objects, const VerifyOptions& opt) {
  for (const auto& o : objects) modular_root_check(rec, o);
  const auto cat = search_minus_one_roots(opt.max_ground, opt.max_rank);
  const std::string obj = "catalog ground<=" + std::to_string(opt.max_ground) + " rank<=" + std::to_string(opt.max_rank);
  rec.check("M(M,-1) = 0 for every modular catalog entry", obj, [&](std::size_t& n) -> std::optional<std::string> {
    for (const auto& r : cat.rows) n += r.modular;
    const auto bad = cat.modular_violations();
    if (bad.empty()) return std::nullopt;
    return bad.front()->name + ": " + bad.front()->m_at_minus_one.str();
  });
}

inline void suite_deletion_contraction(Recorder& rec) {
  const Matroid u23 = uniform(2, 3), u24 = uniform(2, 4), u34 = uniform(3, 4);
  const auto jfit = tutte_grothendieck_fit({deletion_contraction_triple(u23, 0, matroid_j_char_poly)});
  rec.check("no deletion-contraction fit for the J-characteristic polynomial", "U2,3",
            [&](std::size_t& n) -> std::optional<std::string> {
              ++n;
              if (jfit.consistent) return "fit found: a = " + jfit.a.to_string() + ", b = " + jfit.b.to_string();
              const auto& rc = jfit.root_certificate;
              if (!rc || rc->root != -1 || rc->whole_value != 1) return std::string("expected root certificate at -1 with value 1");
              return std::nullopt;
            });
  const auto mfit = tutte_grothendieck_fit({deletion_contraction_triple(u23, 0, matroid_j_mobius_poly),
                                            deletion_contraction_triple(u24, 0, matroid_j_mobius_poly),
                                            deletion_contraction_triple(u34, 0, matroid_j_mobius_poly)});
  const LaurentPoly want_b = -(LaurentPoly::t() * t_plus(1));
  rec.check("M fit on U2,3 and U2,4 forced to a = 1, b = -t(t+1)", "U2,3, U2,4",
            [&](std::size_t& n) -> std::optional<std::string> {
              ++n;
              if (mfit.prefix_length != 2 || !mfit.prefix_unique || mfit.prefix_a != LaurentPoly(1) ||
                  mfit.prefix_b != want_b)
                return "prefix " + std::to_string(mfit.prefix_length) + ": a = " + mfit.prefix_a.to_string() +
                       ", b = " + mfit.prefix_b.to_string();
              return std::nullopt;
            });
  rec.check("forced M fit fails on U3,4 (residual not divisible by t+1)", "U3,4",
            [&](std::size_t& n) -> std::optional<std::string> {
              ++n;
              if (mfit.consistent) return std::string("a fit exists for all three triples");
              if (mfit.failing_triple != std::optional<std::size_t>(2)) return std::string("failure not at U3,4");
              if (mfit.residual.eval_integer(-1) == 0) return "residual " + mfit.residual.to_string() + " vanishes at -1";
              return std::nullopt;
            });
}

inline void suite_valuation(Recorder& rec, const std::vector<SubdivisionFixture>& fixtures) {
  for (const auto& f : fixtures) {
    const auto jr = valuation_check(f, matroid_j_char_poly);
    rec.check("J-characteristic valuation residual = 0", f.name, [&](std::size_t& n) -> std::optional<std::string> {
      n += jr.terms.size();
      return jr.holds() ? std::nullopt : std::optional<std::string>("residual " + jr.residual.to_string());
    });
    const auto mr = valuation_check(f, matroid_j_mobius_poly);
    rec.report("M valuation residual", f.name, mr.terms.size(), mr.residual.to_string());
  }
}

}  // namespace detail

/// Runs one suite ("all" for every suite). `objects` overrides the default
/// objects of the object-based suites; `fixtures` those of the valuation
/// suite. ParseError for an unknown suite name.
inline VerifyReport run_suite(const std::string& suite, const std::optional<std::vector<NamedObject>>& objects = {},
                              const VerifyOptions& opt = {},
                              const std::optional<std::vector<SubdivisionFixture>>& fixtures = {}) {
  VerifyReport report;
  auto run_one = [&](const std::string& s) {
    detail::Recorder rec(s, report);
    auto objs = [&](std::vector<NamedObject> fallback) { return objects ? *objects : std::move(fallback); };
    if (s == "j-axioms") {
      std::vector<NamedObject> def;
      for (const auto& n : core_test_names()) def.push_back(named_object(n));
      for (const auto& o : objs(std::move(def))) detail::suite_j_axioms(rec, o);
    } else if (s == "classical") {
      for (const auto& o : objs(default_test_objects())) detail::suite_classical(rec, o);
    } else if (s == "generalized") {
      for (const auto& o : objs(default_test_objects())) detail::suite_generalized(rec, o);
    } else if (s == "polynomial") {
      for (const auto& o : objs(default_test_objects())) detail::suite_polynomial(rec, o);
    } else if (s == "structure") {
      for (const auto& o : objs({named_object("B1"), named_object("C3")})) detail::suite_structure(rec, o, opt);
    } else if (s == "qseries") {
      detail::suite_qseries(rec, opt);
    } else if (s == "modular-root") {
      detail::suite_modular_root(rec, objs(detail::modular_root_objects()), opt);
    } else if (s == "deletion-contraction") {
      detail::suite_deletion_contraction(rec);
    } else if (s == "valuation") {
      std::vector<SubdivisionFixture> fx;
      if (fixtures)
        fx = *fixtures;
      else
        for (const auto& n : fixture_names()) fx.push_back(fixture_by_name(n));
      detail::suite_valuation(rec, fx);
    } else {
      throw ParseError("unknown suite '" + s + "'");
    }
  };
  if (suite == "all")
    for (const auto& s : suite_names()) run_one(s);
  else
    run_one(suite);
  return report;
}

}  // namespace jmobius
