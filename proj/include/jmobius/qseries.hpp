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

#include <numeric>
#include <vector>

#include "jmobius/errors.hpp"
#include "jmobius/integer.hpp"
#include "jmobius/poly.hpp"

namespace jmobius {

/// Gaussian binomial [n k]_q by the q-Pascal rule [n k] = q^k [n-1 k] + [n-1 k-1].
inline QPoly qbinom(unsigned n, unsigned k) {
  if (k > n) throw ArityError("q-binomial needs 0 <= k <= n");
  std::vector<QPoly> row{QPoly(1)};
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<QPoly> next(m + 1);
    next[0] = QPoly(1);
    next[m] = QPoly(1);
    for (unsigned j = 1; j < m; ++j) next[j] = row[j].shifted(j) + row[j - 1];
    row = std::move(next);
  }
  return row[k];
}

/// [n; k1, ..., km]_q = [n k1][n-k1 k2]...; the parts must sum to at most n.
inline QPoly qmultinom(unsigned n, const std::vector<unsigned>& ks) {
  const unsigned total = std::accumulate(ks.begin(), ks.end(), 0U);
  if (total > n) throw ArityError("q-multinomial parts exceed n");
  QPoly r(1);
  unsigned rest = n;
  for (unsigned k : ks) {
    r *= qbinom(rest, k);
    rest -= k;
  }
  return r;
}

/// (-1; q)_n = Π_{i<n} (1 + q^i).
inline QPoly qpoch_minus_one(unsigned n) {
  QPoly r(1);
  for (unsigned i = 0; i < n; ++i) r *= QPoly(1) + QPoly::monomial(1, i);
  return r;
}

/// Σ_{k=0}^{n} (-1)^k [n k] (-1;q)_{n-k} (-1;q)_k, which vanishes for n > 0.
inline QPoly john_identity_sum(unsigned n) {
  if (n == 0) throw ArityError("the identity needs n > 0");
  QPoly s;
  for (unsigned k = 0; k <= n; ++k) {
    QPoly term = qbinom(n, k) * qpoch_minus_one(n - k) * qpoch_minus_one(k);
    if (k % 2 == 0)
      s += term;
    else
      s -= term;
  }
  return s;
}

namespace detail {

inline unsigned choose2(unsigned m) { return m == 0 ? 0 : m * (m - 1) / 2; }

// t - q^i as a BiPoly.
inline BiPoly t_minus_q_power(unsigned i) { return BiPoly(std::vector<QPoly>{-QPoly::monomial(1, i), QPoly(1)}); }

// 1 - q^j t as a BiPoly.
inline BiPoly one_minus_q_power_t(unsigned j) {
  return BiPoly(std::vector<QPoly>{QPoly(1), -QPoly::monomial(1, j)});
}

}  // namespace detail

/// ℳ(L_q^n, t) as the signed quadruple q-multinomial sum
/// Σ_{i<=j<=k<=n} (-1)^{k-i} [n; i, j-i, k-j, n-k] q^{C(j-i,2)+C(k-j,2)} t^{3n-i-j-k}.
inline BiPoly m_subspace_formula(unsigned n) {
  std::vector<QPoly> by_t(3 * n + 1);
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = i; j <= n; ++j)
      for (unsigned k = j; k <= n; ++k) {
        QPoly term = qmultinom(n, {i, j - i, k - j, n - k}).shifted(detail::choose2(j - i) + detail::choose2(k - j));
        auto& slot = by_t[3 * n - i - j - k];
        if ((k - i) % 2 == 0)
          slot += term;
        else
          slot -= term;
      }
  return BiPoly(std::move(by_t));
}

/// ℳ(L_q^n, t) through the characteristic-polynomial decomposition:
/// t^n Σ_k t^{n-k} [n k] Π_{i<n-k}(t - q^i) Π_{j<k}(t^{-1} - q^j),
/// computed as Σ_k t^{2n-2k} [n k] Π_{i<n-k}(t - q^i) Π_{j<k}(1 - q^j t).
inline BiPoly m_subspace_decomposed(unsigned n) {
  BiPoly s;
  for (unsigned k = 0; k <= n; ++k) {
    BiPoly term(qbinom(n, k));
    for (unsigned i = 0; i < n - k; ++i) term *= detail::t_minus_q_power(i);
    for (unsigned j = 0; j < k; ++j) term *= detail::one_minus_q_power_t(j);
    s += term.shifted(2 * (n - k));
  }
  return s;
}

/// The variant with (t - q^j) in the second product:
/// t^n Σ_k t^{n-k} [n k] Π_{i<n-k}(t - q^i) Π_{j<k}(t - q^j).
/// Kept to document that it differs from ℳ(L_q^n, t).
inline BiPoly m_subspace_decomposed_literal(unsigned n) {
  BiPoly s;
  for (unsigned k = 0; k <= n; ++k) {
    BiPoly term(qbinom(n, k));
    for (unsigned i = 0; i < n - k; ++i) term *= detail::t_minus_q_power(i);
    for (unsigned j = 0; j < k; ++j) term *= detail::t_minus_q_power(j);
    s += term.shifted(2 * n - k);
  }
  return s;
}

/// μ(0̂,1̂) on L_q^n: (-1)^n q^{C(n,2)}.
inline Integer subspace_mobius_top(const Integer& q, unsigned n) {
  Integer p = 1;
  for (unsigned i = 0; i < detail::choose2(n); ++i) p *= q;
  return n % 2 == 0 ? p : Integer(-p);
}

/// χ(L_q^n, t) = Π_{i<n} (t - q^i).
inline LaurentPoly subspace_char_poly(const Integer& q, unsigned n) {
  LaurentPoly r(1);
  Integer qi = 1;
  for (unsigned i = 0; i < n; ++i) {
    r *= t_minus(qi);
    qi *= q;
  }
  return r;
}

}  // namespace jmobius
