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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jmobius/integer.hpp"
#include "jmobius/laurent.hpp"

namespace jmobius {

/// Dense univariate polynomial with coefficients in C, coefficient of x^i at
/// index i. Trailing zeros are stripped; the zero polynomial is empty.
template <Ring C>
class Poly {
 public:
  using coeff_type = C;

  Poly() = default;
  Poly(int c) : Poly(C(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(C c) {                  // NOLINT(google-explicit-constructor)
    if (!(c == C(0))) coeffs_.push_back(std::move(c));
  }
  explicit Poly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  /// c·x^k.
  static Poly monomial(C c, std::size_t k) {
    std::vector<C> v(k + 1, C(0));
    v[k] = std::move(c);
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(C(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const C> coeffs() const { return coeffs_; }
  C coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C(0); }

  /// Multiplies by x^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<C> v(k, C(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v));
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    normalize();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> v(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(v));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly pow(unsigned k) const {
    Poly r(C(1)), base = *this;
    while (k) {
      if (k & 1U) r *= base;
      k >>= 1U;
      if (k) base *= base;
    }
    return r;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == C(0)) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

/// Polynomial in q with integer coefficients.
using QPoly = Poly<Integer>;

/// Polynomial in t whose coefficients are polynomials in q.
using BiPoly = Poly<QPoly>;

inline Integer eval(const QPoly& p, const Integer& q) {
  Integer acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q + *it;
  return acc;
}

/// Ascending-order conversion into a Laurent polynomial in t.
inline LaurentPoly to_laurent(const QPoly& p) {
  return LaurentPoly(0, std::vector<Integer>(p.coeffs().begin(), p.coeffs().end()));
}

/// Substitutes q := q_value.
inline LaurentPoly specialize(const BiPoly& b, const Integer& q_value) {
  std::vector<Integer> c;
  c.reserve(b.coeffs().size());
  for (const QPoly& qc : b.coeffs()) c.push_back(eval(qc, q_value));
  return LaurentPoly(0, std::move(c));
}

/// Substitutes t := t_value, leaving a polynomial in q.
inline QPoly eval_t(const BiPoly& b, const Integer& t_value) {
  QPoly acc;
  for (auto it = b.coeffs().rbegin(); it != b.coeffs().rend(); ++it) acc = acc * QPoly(t_value) + *it;
  return acc;
}

/// Descending powers in `var`, e.g. "q^2 + 2q + 1".
inline std::string to_string(const QPoly& p, const std::string& var = "q") { return to_laurent(p).to_string(var); }

/// Descending powers of t; compound q-coefficients are parenthesized.
inline std::string to_string(const BiPoly& b) {
  if (b.is_zero()) return "0";
  std::string out;
  for (int i = b.degree(); i >= 0; --i) {
    const QPoly& c = b.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string mono = i == 0 ? "" : i == 1 ? "t" : "t^" + std::to_string(i);
    const auto terms = std::count_if(c.coeffs().begin(), c.coeffs().end(), [](const Integer& v) { return v != 0; });
    if (terms == 1) {
      const int k = c.degree();
      Integer v = c.coeff(static_cast<std::size_t>(k));
      const bool neg = v < 0;
      if (neg) v = -v;
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      const std::string qpart = k == 0 ? "" : k == 1 ? "q" : "q^" + std::to_string(k);
      if (v != 1 || (qpart.empty() && mono.empty())) out += v.str();
      out += qpart + mono;
    } else {
      out += (out.empty() ? "(" : " + (") + to_string(c) + ")" + mono;
    }
  }
  return out;
}

}  // namespace jmobius
