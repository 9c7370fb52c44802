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

// Brute-force reference implementations used only by tests. They work from
// the definitions and share no code paths with the library beyond reading a
// poset's order relation.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "jmobius/laurent.hpp"
#include "jmobius/poset.hpp"

namespace oracle {

using jmobius::Element;

/// Dense order relation copied out of a poset.
struct Order {
  std::size_t n = 0;
  std::vector<std::vector<bool>> le;

  explicit Order(const jmobius::Poset& p) : n(p.size()), le(n, std::vector<bool>(n)) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) le[a][b] = p.leq(a, b);
  }
  bool lt(Element a, Element b) const { return a != b && le[a][b]; }
};

/// μ(x, y) by Hall's theorem: Σ over strict chains x = c0 < ... < ck = y of (-1)^k.
inline long long mobius_by_chains(const Order& o, Element x, Element y) {
  if (!o.le[x][y]) return 0;
  std::function<long long(Element)> from = [&](Element c) -> long long {
    if (c == y) return 1;
    long long s = 0;
    for (Element d = 0; d < o.n; ++d)
      if (o.lt(c, d) && o.le[d][y]) s -= from(d);
    return s;
  };
  return from(x);
}

/// J from the defining equation with ζ3: Σ_{x<=a<=y<=b<=z} J(a, y, b) = δ3(x, y, z),
/// solved by memoized recursion on (x, y, z).
class JSolver {
 public:
  explicit JSolver(const Order& o) : o_(o) {}

  long long operator()(Element x, Element y, Element z) {
    const auto key = std::make_tuple(x, y, z);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    long long v = (x == y && y == z) ? 1 : 0;
    for (Element a = 0; a < o_.n; ++a) {
      if (!o_.le[x][a] || !o_.le[a][y]) continue;
      for (Element b = 0; b < o_.n; ++b) {
        if (!o_.le[y][b] || !o_.le[b][z]) continue;
        if (a == x && b == z) continue;
        v -= (*this)(a, y, b);
      }
    }
    memo_[key] = v;
    return v;
  }

 private:
  const Order& o_;
  std::map<std::tuple<Element, Element, Element>, long long> memo_;
};

/// Sparse integer polynomial in t with integer exponents.
using SparsePoly = std::map<int, long long>;

inline SparsePoly normalize(SparsePoly p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
  return p;
}
inline SparsePoly mul(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r;
  for (auto [i, x] : a)
    for (auto [j, y] : b) r[i + j] += x * y;
  return normalize(r);
}
inline SparsePoly add(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r = a;
  for (auto [j, y] : b) r[j] += y;
  return normalize(r);
}
inline SparsePoly power(const SparsePoly& a, unsigned k) {
  SparsePoly r{{0, 1}};
  for (unsigned i = 0; i < k; ++i) r = mul(r, a);
  return r;
}
/// Ascending coefficients c0 + c1 t + ...
inline SparsePoly from_coeffs(const std::vector<long long>& c) {
  SparsePoly r;
  for (std::size_t i = 0; i < c.size(); ++i) r[static_cast<int>(i)] = c[i];
  return normalize(r);
}
inline jmobius::LaurentPoly to_laurent(const SparsePoly& p) {
  jmobius::LaurentPoly r;
  for (auto [e, c] : p) r += jmobius::LaurentPoly::monomial(c, e);
  return r;
}

/// Rank of S: the largest |B ∩ S| over the bases.
inline int matroid_rank(const std::vector<std::uint64_t>& bases, std::uint64_t s) {
  int r = 0;
  for (auto b : bases) r = std::max(r, std::popcount(b & s));
  return r;
}

/// Flats by brute force over all subsets: S is a flat when adding any
/// outside element raises the rank.
inline std::vector<std::uint64_t> flats(std::size_t n, const std::vector<std::uint64_t>& bases) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const int r = matroid_rank(bases, s);
    bool closed = true;
    for (std::size_t e = 0; e < n && closed; ++e)
      if (!(s >> e & 1U) && matroid_rank(bases, s | (std::uint64_t{1} << e)) == r) closed = false;
    if (closed) out.push_back(s);
  }
  return out;
}

/// Gaussian binomial [n k] at an integer q through the product formula.
inline long long gaussian_binomial(long long q, unsigned n, unsigned k) {
  if (k > n) return 0;
  long long num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    long long a = 1, b = 1;
    for (unsigned e = 0; e < n - i; ++e) a *= q;
    for (unsigned e = 0; e < i + 1; ++e) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

/// Number of k-dimensional subspaces of F_p^n counted by spanning sets:
/// ordered bases of k-subspaces divided by |GL_k(F_p)|.
inline long long count_subspaces(long long p, unsigned n, unsigned k) {
  long long ordered = 1, gl = 1, pn = 1, pk = 1;
  for (unsigned i = 0; i < n; ++i) pn *= p;
  for (unsigned i = 0; i < k; ++i) pk *= p;
  long long pi = 1;
  for (unsigned i = 0; i < k; ++i) {
    ordered *= pn - pi;
    gl *= pk - pi;
    pi *= p;
  }
  return ordered / gl;
}

/// Canonical form of a rank-3 simple matroid on n points given by its long
/// lines: lexicographically least sorted line list over all relabelings.
inline std::vector<std::uint64_t> canonical_lines(std::size_t n, const std::vector<std::uint64_t>& lines) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> best;
  bool first = true;
  do {
    std::vector<std::uint64_t> mapped;
    for (auto l : lines) {
      std::uint64_t m = 0;
      for (std::size_t e = 0; e < n; ++e)
        if (l >> e & 1U) m |= std::uint64_t{1} << perm[e];
      mapped.push_back(m);
    }
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) {
      best = mapped;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Simple rank-3 matroids on n points up to isomorphism, by brute force over
/// families of long lines meeting pairwise in at most one point.
inline std::size_t count_simple_rank3(std::size_t n) {
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if (std::popcount(s) >= 3) candidates.push_back(s);
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<std::uint64_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    // Rank 3 needs a basis: three points not all on one line.
    if (!(chosen.size() == 1 && std::popcount(chosen[0]) == static_cast<int>(n)))
      seen.insert(canonical_lines(n, chosen));
    for (std::size_t k = from; k < candidates.size(); ++k) {
      bool ok = true;
      for (auto l : chosen)
        if (std::popcount(l & candidates[k]) > 1) ok = false;
      if (!ok) continue;
      chosen.push_back(candidates[k]);
      rec(k + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return seen.size();
}

/// Brute-force poset isomorphism by trying every bijection.
inline bool posets_isomorphic(const jmobius::Poset& a, const jmobius::Poset& b) {
  if (a.size() != b.size()) return false;
  std::vector<Element> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Element x = 0; x < a.size() && ok; ++x)
      for (Element y = 0; y < a.size() && ok; ++y)
        if (a.leq(x, y) != b.leq(perm[x], perm[y])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
