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

#ifndef G2T_ELLIPTIC_HPP
#define G2T_ELLIPTIC_HPP

#include <cstdint>
#include <optional>

#include "g2t/error.hpp"
#include "g2t/prime_field.hpp"
#include "g2t/rational.hpp"

namespace g2t {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
template <class K>
struct EllCurve {
  K a1, a2, a3, a4, a6;

  K b2() const { return a1 * a1 + from_int(4, a1) * a2; }
  K b4() const { return from_int(2, a1) * a4 + a1 * a3; }
  K b6() const { return a3 * a3 + from_int(4, a1) * a6; }
  K b8() const {
    return a1 * a1 * a6 + from_int(4, a1) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  }
  K discriminant() const {
    const K c2 = b2(), c4 = b4(), c6 = b6(), c8 = b8();
    return -c2 * c2 * c8 - from_int(8, a1) * c4 * c4 * c4 - from_int(27, a1) * c6 * c6 +
           from_int(9, a1) * c2 * c4 * c6;
  }
  bool operator==(const EllCurve&) const = default;
};

template <class K>
struct EllPoint {
  bool infinity = true;
  K x{}, y{};

  static EllPoint at_infinity() { return EllPoint{}; }
  static EllPoint affine(K x, K y) { return EllPoint{false, std::move(x), std::move(y)}; }

  friend bool operator==(const EllPoint& a, const EllPoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

/// Builds a curve and rejects a zero discriminant with SingularCurve.
template <class K>
EllCurve<K> ell_make(K a1, K a2, K a3, K a4, K a6) {
  EllCurve<K> e{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)};
  if (is_zero(e.discriminant())) throw Error(Errc::SingularCurve, "elliptic curve discriminant is zero");
  return e;
}

template <class K>
bool on_curve(const EllCurve<K>& e, const EllPoint<K>& p) {
  if (p.infinity) return true;
  const K& x = p.x;
  const K& y = p.y;
  return y * y + e.a1 * x * y + e.a3 * y == x * x * x + e.a2 * x * x + e.a4 * x + e.a6;
}

template <class K>
void require_on_curve(const EllCurve<K>& e, const EllPoint<K>& p) {
  if (!on_curve(e, p)) throw Error(Errc::PointNotOnCurve, "point does not satisfy the curve equation");
}

template <class K>
EllPoint<K> ell_neg(const EllCurve<K>& e, const EllPoint<K>& p) {
  if (p.infinity) return p;
  return EllPoint<K>::affine(p.x, -p.y - e.a1 * p.x - e.a3);
}

/// Chord-and-tangent addition; inputs are assumed to lie on the curve.
template <class K>
EllPoint<K> ell_add_unchecked(const EllCurve<K>& e, const EllPoint<K>& p, const EllPoint<K>& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  K lambda, nu;
  if (p.x == q.x) {
    const K denom = from_int(2, p.y) * p.y + e.a1 * p.x + e.a3;
    if (!(p.y == q.y) || is_zero(denom)) return EllPoint<K>::at_infinity();
    const K three = from_int(3, p.x);
    const K two = from_int(2, p.x);
    lambda = (three * p.x * p.x + two * e.a2 * p.x + e.a4 - e.a1 * p.y) / denom;
    nu = (-p.x * p.x * p.x + e.a4 * p.x + two * e.a6 - e.a3 * p.y) / denom;
  } else {
    const K dx = q.x - p.x;
    lambda = (q.y - p.y) / dx;
    nu = (p.y * q.x - q.y * p.x) / dx;
  }
  K x3 = lambda * lambda + e.a1 * lambda - e.a2 - p.x - q.x;
  K y3 = -(lambda + e.a1) * x3 - nu - e.a3;
  return EllPoint<K>::affine(std::move(x3), std::move(y3));
}

template <class K>
EllPoint<K> ell_add(const EllCurve<K>& e, const EllPoint<K>& p, const EllPoint<K>& q) {
  require_on_curve(e, p);
  require_on_curve(e, q);
  return ell_add_unchecked(e, p, q);
}

template <class K>
EllPoint<K> ell_mul(const EllCurve<K>& e, long long n, const EllPoint<K>& p) {
  require_on_curve(e, p);
  EllPoint<K> base = n < 0 ? ell_neg(e, p) : p;
  unsigned long long k = n < 0 ? 0ULL - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
  EllPoint<K> acc = EllPoint<K>::at_infinity();
  while (k) {
    if (k & 1ULL) acc = ell_add_unchecked(e, acc, base);
    k >>= 1;
    if (k) base = ell_add_unchecked(e, base, base);
  }
  return acc;
}

/// Rational torsion orders are at most 12, so the search stops there.
inline constexpr int kMaxRationalTorsion = 12;

/// Smallest n <= 12 with nP = 0, or nullopt if there is none.
template <class K>
std::optional<int> ell_order(const EllCurve<K>& e, const EllPoint<K>& p) {
  require_on_curve(e, p);
  EllPoint<K> acc = p;
  for (int n = 1; n <= kMaxRationalTorsion; ++n) {
    if (acc.infinity) return n;
    acc = ell_add_unchecked(e, acc, p);
  }
  return std::nullopt;
}

bool mazur_admissible(long long n);

/// #E(F_p) by summing characters of 4x^3 + b2 x^2 + 2 b4 x + b6.
std::uint64_t ell_count(const EllCurve<Fp>& e);

/// a_p = p + 1 - #E(F_p)
long long ell_trace(const EllCurve<Fp>& e);

/// Coefficient-wise reduction; BadPrime if p divides a denominator or p = 2,
/// BadReduction if p divides the discriminant of this model.
EllCurve<Fp> ell_reduce(const EllCurve<Rat>& e, std::uint64_t p);
EllPoint<Fp> ell_reduce_point(const EllPoint<Rat>& pt, std::uint64_t p);

/// True when ell_reduce succeeds.
bool ell_good_prime(const EllCurve<Rat>& e, std::uint64_t p);

}  // namespace g2t

#endif
