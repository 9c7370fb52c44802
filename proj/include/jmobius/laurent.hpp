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
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jmobius/errors.hpp"
#include "jmobius/integer.hpp"

namespace jmobius {

/// Integer Laurent polynomial Σ coeffs[i] t^(min_exp + i).
///
/// Always normalized: first and last stored coefficients are nonzero, and the
/// zero polynomial has no coefficients and min_exp 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(Integer c) {                         // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  LaurentPoly(int min_exp, std::vector<Integer> coeffs) : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
    normalize();
  }

  /// c·t^e.
  static LaurentPoly monomial(Integer c, int e) { return LaurentPoly(e, {std::move(c)}); }
  /// The variable t.
  static LaurentPoly t() { return monomial(1, 1); }
  /// From ascending coefficients c0 + c1 t + ...
  static LaurentPoly from_coeffs(std::vector<Integer> ascending) { return LaurentPoly(0, std::move(ascending)); }

  bool is_zero() const { return coeffs_.empty(); }
  int min_exp() const { return min_exp_; }
  /// Highest exponent; min_exp for the zero polynomial.
  int max_exp() const { return coeffs_.empty() ? min_exp_ : min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Integer> coeffs() const { return coeffs_; }

  Integer coeff(int e) const {
    if (coeffs_.empty() || e < min_exp_ || e > max_exp()) return 0;
    return coeffs_[static_cast<std::size_t>(e - min_exp_)];
  }

  /// No negative exponents.
  bool is_polynomial() const { return coeffs_.empty() || min_exp_ >= 0; }

  /// Multiplies by t^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.min_exp_ += k;
    return r;
  }

  /// t ↦ t^{-1}.
  LaurentPoly reciprocal() const {
    if (is_zero()) return {};
    std::vector<Integer> c(coeffs_.rbegin(), coeffs_.rend());
    return LaurentPoly(-max_exp(), std::move(c));
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = add(*this, o, false); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = add(*this, o, true); }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return add(a, b, false); }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return add(a, b, true); }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return LaurentPoly(a.min_exp_ + b.min_exp_, std::move(c));
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
  }

  LaurentPoly pow(unsigned k) const {
    LaurentPoly r(1), base = *this;
    while (k) {
      if (k & 1U) r *= base;
      k >>= 1U;
      if (k) base *= base;
    }
    return r;
  }

  /// Exact value at t = v; rational when negative exponents meet |v| > 1.
  Rational eval(const Integer& v) const {
    if (is_zero()) return 0;
    if (min_exp_ < 0 && v == 0) throw DomainError("Laurent polynomial with negative exponents evaluated at 0");
    Integer horner = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) horner = horner * v + *it;
    Rational r(horner);
    Integer p = 1;
    for (int i = 0; i < std::abs(min_exp_); ++i) p *= v;
    if (min_exp_ >= 0) return r * p;
    return r / p;
  }

  /// Value at t = v; DomainError if it is not an integer.
  Integer eval_integer(const Integer& v) const {
    Rational r = eval(v);
    if (denominator(r) != 1) throw DomainError("value is not an integer");
    return numerator(r);
  }

  /// Quotient by a nonzero divisor when it divides exactly over the
  /// integers (as Laurent polynomials), otherwise nullopt.
  std::optional<LaurentPoly> exact_div(const LaurentPoly& d) const {
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    if (is_zero()) return LaurentPoly{};
    std::vector<Integer> rem(coeffs_.begin(), coeffs_.end());
    const std::size_t dn = d.coeffs_.size();
    if (rem.size() < dn) return std::nullopt;
    std::vector<Integer> q(rem.size() - dn + 1, 0);
    const Integer& lead = d.coeffs_.back();
    for (std::size_t k = q.size(); k-- > 0;) {
      const Integer& top = rem[k + dn - 1];
      if (top % lead != 0) return std::nullopt;
      q[k] = top / lead;
      for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q[k] * d.coeffs_[j];
    }
    if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return c != 0; })) return std::nullopt;
    return LaurentPoly(min_exp_ - d.min_exp_, std::move(q));
  }

  /// Descending powers, e.g. "t^3 - t^2 - t + 1"; "0" for zero.
  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = max_exp(); e >= min_exp_; --e) {
      Integer c = coeff(e);
      if (c == 0) continue;
      const bool neg = c < 0;
      if (neg) c = -c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (c != 1 || e == 0) out += c.str();
      if (e != 0) {
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

 private:
  static LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    const int lo = std::min(a.min_exp_, b.min_exp_);
    const int hi = std::max(a.max_exp(), b.max_exp());
    std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[static_cast<std::size_t>(a.min_exp_ - lo) + i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
      auto& slot = c[static_cast<std::size_t>(b.min_exp_ - lo) + i];
      if (subtract)
        slot -= b.coeffs_[i];
      else
        slot += b.coeffs_[i];
    }
    return LaurentPoly(lo, std::move(c));
  }

  void normalize() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      min_exp_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0) --last;
    coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    min_exp_ += static_cast<int>(first);
  }

  int min_exp_ = 0;
  std::vector<Integer> coeffs_;
};

/// Σ c_k t^k ↦ Σ c_k t^{-k}.
inline LaurentPoly reciprocal(const LaurentPoly& p) { return p.reciprocal(); }

/// t - r.
inline LaurentPoly t_minus(const Integer& r) { return LaurentPoly(0, {-r, 1}); }

/// t + r.
inline LaurentPoly t_plus(const Integer& r) { return LaurentPoly(0, {r, 1}); }

}  // namespace jmobius
