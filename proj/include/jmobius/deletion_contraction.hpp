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
#include <optional>
#include <string>
#include <vector>

#include "jmobius/errors.hpp"
#include "jmobius/integer.hpp"
#include "jmobius/laurent.hpp"
#include "jmobius/matroid.hpp"

namespace jmobius {

/// Values f(M), f(M \ e), f(M / e) of one invariant.
struct PolyTriple {
  LaurentPoly whole;
  LaurentPoly deletion;
  LaurentPoly contraction;
  std::string label;
};

/// Builds the triple for `f` at element e of M; HypothesisError if e is a
/// loop or a coloop.
inline PolyTriple deletion_contraction_triple(const Matroid& m, std::size_t e,
                                              const std::function<LaurentPoly(const Matroid&)>& f) {
  if (e >= m.ground_size()) throw IndexError("element out of range");
  if (m.is_loop(e) || m.is_coloop(e)) throw HypothesisError("deletion-contraction needs e neither loop nor coloop");
  return {f(m), f(deletion(m, e)), f(contraction(m, e)),
          (m.name().empty() ? std::string("M") : m.name()) + ", e=" + std::to_string(e)};
}

/// Outcome of fitting f(M) = a·f(M\e) + b·f(M/e) with a, b ∈ ℤ[t].
struct GrothendieckFit {
  /// An integer r with f(M\e)(r) = f(M/e)(r) = 0 but f(M)(r) ≠ 0 on one
  /// triple, which rules out every a, b.
  struct RootCertificate {
    std::size_t triple = 0;
    Integer root;
    Integer whole_value;
  };

  bool consistent = false;  ///< a fit exists for all triples
  int degree = -1;          ///< degree bound at which it was found
  bool unique = false;      ///< the rational solution at that degree is unique
  LaurentPoly a;
  LaurentPoly b;

  std::optional<RootCertificate> root_certificate;

  /// Longest prefix of the triples that admits a fit, and that fit.
  std::size_t prefix_length = 0;
  int prefix_degree = -1;
  bool prefix_unique = false;
  LaurentPoly prefix_a;
  LaurentPoly prefix_b;
  /// First triple the prefix fit fails on, with f(M) - a f(M\e) - b f(M/e).
  std::optional<std::size_t> failing_triple;
  LaurentPoly residual;
};

namespace detail {

struct LinearFit {
  bool consistent = false;
  bool unique = false;
  bool integral = false;
  LaurentPoly a;
  LaurentPoly b;
};

// Solves Σ_i a_i t^i D + Σ_i b_i t^i C = W over ℚ for all triples, i <= degree.
inline LinearFit solve_fit(const std::vector<PolyTriple>& triples, std::size_t count, int degree) {
  const std::size_t unknowns = 2 * static_cast<std::size_t>(degree + 1);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t k = 0; k < count; ++k) {
    const auto& tr = triples[k];
    int lo = tr.whole.min_exp(), hi = tr.whole.max_exp();
    for (const LaurentPoly* p : {&tr.deletion, &tr.contraction}) {
      if (p->is_zero()) continue;
      lo = std::min(lo, p->min_exp());
      hi = std::max(hi, p->max_exp() + degree);
    }
    for (int e = lo; e <= hi; ++e) {
      std::vector<Rational> row(unknowns + 1, 0);
      for (int i = 0; i <= degree; ++i) {
        row[static_cast<std::size_t>(i)] = Rational(tr.deletion.coeff(e - i));
        row[static_cast<std::size_t>(degree + 1 + i)] = Rational(tr.contraction.coeff(e - i));
      }
      row[unknowns] = Rational(tr.whole.coeff(e));
      rows.push_back(std::move(row));
    }
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c] == 0) continue;
      const Rational f = rows[o][c];
      for (std::size_t k = c; k <= unknowns; ++k) rows[o][k] -= f * rows[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  LinearFit fit;
  for (std::size_t o = r; o < rows.size(); ++o)
    if (rows[o][unknowns] != 0) return fit;
  fit.consistent = true;
  fit.unique = pivot_col.size() == unknowns;
  std::vector<Rational> sol(unknowns, 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) sol[pivot_col[i]] = rows[i][unknowns];
  fit.integral = std::all_of(sol.begin(), sol.end(), [](const Rational& v) { return denominator(v) == 1; });
  if (fit.integral) {
    std::vector<Integer> a, b;
    for (int i = 0; i <= degree; ++i) {
      a.push_back(numerator(sol[static_cast<std::size_t>(i)]));
      b.push_back(numerator(sol[static_cast<std::size_t>(degree + 1 + i)]));
    }
    fit.a = LaurentPoly(0, std::move(a));
    fit.b = LaurentPoly(0, std::move(b));
  }
  return fit;
}

}  // namespace detail

inline constexpr int kMaxFitDegree = 2;
inline constexpr int kRootSearchRadius = 4;

/// Searches a, b as integer constants and then as integer polynomials of
/// degree at most 2. When no fit exists the result carries a root
/// certificate where one is found, and the fit of the longest prefix of
/// triples together with its residual on the next triple.
inline GrothendieckFit tutte_grothendieck_fit(const std::vector<PolyTriple>& triples) {
  if (triples.empty()) throw ArityError("need at least one triple");
  GrothendieckFit out;
  auto fit_prefix = [&](std::size_t count) -> std::optional<std::pair<int, detail::LinearFit>> {
    for (int d = 0; d <= kMaxFitDegree; ++d) {
      auto f = detail::solve_fit(triples, count, d);
      if (f.consistent && f.integral) return std::make_pair(d, std::move(f));
    }
    return std::nullopt;
  };

  if (auto full = fit_prefix(triples.size())) {
    out.consistent = true;
    out.degree = full->first;
    out.unique = full->second.unique;
    out.a = full->second.a;
    out.b = full->second.b;
    out.prefix_length = triples.size();
    out.prefix_degree = out.degree;
    out.prefix_unique = out.unique;
    out.prefix_a = out.a;
    out.prefix_b = out.b;
    return out;
  }

  for (std::size_t k = 0; k < triples.size() && !out.root_certificate; ++k)
    for (int r = -kRootSearchRadius; r <= kRootSearchRadius; ++r) {
      const auto& tr = triples[k];
      if (r == 0 && (tr.whole.min_exp() < 0 || tr.deletion.min_exp() < 0 || tr.contraction.min_exp() < 0)) continue;
      if (tr.deletion.eval(r) != 0 || tr.contraction.eval(r) != 0) continue;
      const Rational w = tr.whole.eval(r);
      if (w == 0 || denominator(w) != 1) continue;
      out.root_certificate = GrothendieckFit::RootCertificate{k, r, numerator(w)};
      break;
    }

  for (std::size_t len = triples.size() - 1; len >= 1; --len) {
    if (auto f = fit_prefix(len)) {
      out.prefix_length = len;
      out.prefix_degree = f->first;
      out.prefix_unique = f->second.unique;
      out.prefix_a = f->second.a;
      out.prefix_b = f->second.b;
      const auto& tr = triples[len];
      out.failing_triple = len;
      out.residual = tr.whole - out.prefix_a * tr.deletion - out.prefix_b * tr.contraction;
      break;
    }
  }
  return out;
}

}  // namespace jmobius
