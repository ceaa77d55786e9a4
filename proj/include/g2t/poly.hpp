/*
   Copyright 2026 The g2torsion Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef G2T_POLY_HPP
#define G2T_POLY_HPP

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <utility>
#include <vector>

#include "g2t/error.hpp"
#include "g2t/rational.hpp"

namespace g2t {

namespace detail {
template <class K>
bool scalar_is_zero(const K& x) {
  return is_zero(x);
}
}  // namespace detail

/// Dense univariate polynomial with coefficients ascending by degree. The
/// zero polynomial has no coefficients and degree -1.
///
/// K must provide field-like arithmetic plus the free functions
/// is_zero(const K&) and from_int(long, const K& like).
template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const K& c) { return Poly(std::vector<K>{c}); }
  /// c * x^n
  static Poly monomial(const K& c, int n) {
    std::vector<K> v(static_cast<std::size_t>(n) + 1, c - c);
    v.back() = c;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<K>& coeffs() const { return c_; }
  const K& operator[](std::size_t i) const { return c_[i]; }
  const K& lead() const {
    assert(!c_.empty());
    return c_.back();
  }
  /// Coefficient of x^i, or `zero` beyond the degree.
  K coeff(int i, const K& zero) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : zero;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), o.c_[0] - o.c_[0]);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += -o; }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }
  Poly& operator*=(const K& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    const K zero = a.c_[0] - a.c_[0];
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, zero);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (g2t_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(Poly a, const K& s) { return a *= s; }
  friend Poly operator*(const K& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Horner evaluation; the zero polynomial evaluates to x - x.
  K evaluate(const K& x) const {
    K acc = x - x;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<K> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      r.push_back(c_[i] * from_int(static_cast<long>(i), c_[i]));
    }
    return Poly(std::move(r));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    const K inv = (lead() / lead()) / lead();
    return *this * inv;
  }

  /// Coefficient-wise map into another ring.
  template <class F>
  auto map(F&& fn) const -> Poly<decltype(fn(std::declval<const K&>()))> {
    using R = decltype(fn(std::declval<const K&>()));
    std::vector<R> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(fn(c));
    return Poly<R>(std::move(r));
  }

 private:
  static bool g2t_is_zero(const K& x) { return detail::scalar_is_zero(x); }
  void trim() {
    while (!c_.empty() && g2t_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
};

/// Quotient and remainder; the divisor's leading coefficient must be
/// invertible.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<K>(), a};
  std::vector<K> rem = a.coeffs();
  const K zero = b.lead() - b.lead();
  std::vector<K> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), zero);
  const K inv_lead = (b.lead() / b.lead()) / b.lead();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const K& top = rem[static_cast<std::size_t>(i)];
    if (is_zero(top)) continue;
    const K q = top * inv_lead;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= q * b[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly<K>(std::move(quo)), Poly<K>(std::move(rem))};
}

template <class K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) {
  return divmod(a, b).first;
}
template <class K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) {
  return divmod(a, b).second;
}

/// Exact division; throws InvalidArgument when b does not divide a.
template <class K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(Errc::InvalidArgument, "polynomial division is not exact");
  return q;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class K>
struct XgcdResult {
  Poly<K> g, s, t;  // s*a + t*b = g, g monic (or zero)
};

template <class K>
XgcdResult<K> xgcd(const Poly<K>& a, const Poly<K>& b, const K& one) {
  Poly<K> r0 = a, r1 = b;
  Poly<K> s0 = Poly<K>::constant(one), s1;
  Poly<K> t0, t1 = Poly<K>::constant(one);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<K> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<K> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const K inv = one / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Resultant over a field by the Euclidean recurrence.
template <class K>
K resultant(const Poly<K>& a, const Poly<K>& b, const K& zero) {
  if (a.is_zero() || b.is_zero()) return zero;
  K acc = zero + from_int(1, zero);
  Poly<K> A = a, B = b;
  while (true) {
    const int m = A.degree(), n = B.degree();
    if (n == 0) {
      for (int i = 0; i < m; ++i) acc *= B.lead();
      return acc;
    }
    Poly<K> R = A % B;
    if (R.is_zero()) return zero;
    if ((m * n) % 2 == 1) acc = -acc;
    for (int i = 0; i < m - R.degree(); ++i) acc *= B.lead();
    A = std::move(B);
    B = std::move(R);
  }
}

/// (-1)^(n(n-1)/2) res(f, f') / lc(f); zero iff f has a repeated root.
template <class K>
K discriminant(const Poly<K>& f) {
  if (f.degree() < 1) throw Error(Errc::InvalidArgument, "discriminant of a constant");
  const K zero = f.lead() - f.lead();
  K r = resultant(f, f.derivative(), zero);
  const int n = f.degree();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r / f.lead();
}

template <class K>
Poly<K> power(const Poly<K>& a, unsigned e, const K& one) {
  Poly<K> acc = Poly<K>::constant(one);
  for (unsigned i = 0; i < e; ++i) acc *= a;
  return acc;
}

}  // namespace g2t

#endif
