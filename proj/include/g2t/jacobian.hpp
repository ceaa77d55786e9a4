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

#ifndef G2T_JACOBIAN_HPP
#define G2T_JACOBIAN_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "g2t/error.hpp"
#include "g2t/genus2.hpp"
#include "g2t/poly.hpp"

namespace g2t {

/// Divisor class div(u, v) + (n - 1) inf+ + (1 - deg u - n) inf- on a
/// degree-6 model, or div(u, v) - deg(u) inf on a degree-5 model (n = 0).
///
/// Canonical form: u monic of degree <= 2, deg v < deg u, u | v^2 + vh - f,
/// and 0 <= n <= 2 - deg u. On degree-6 models whose points at infinity are
/// not rational, n = 1 - deg(u)/2 and deg u is even.
template <class K>
struct MumfordDiv {
  Poly<K> u;
  Poly<K> v;
  int balance = 0;

  friend bool operator==(const MumfordDiv& a, const MumfordDiv& b) {
    return a.u == b.u && a.v == b.v && a.balance == b.balance;
  }
};

template <class K>
MumfordDiv<K> jac_identity(const G2Curve<K>& c) {
  return MumfordDiv<K>{Poly<K>::constant(c.one()), Poly<K>(), c.odd() ? 0 : 1};
}

template <class K>
bool jac_is_identity(const G2Curve<K>& c, const MumfordDiv<K>& d) {
  return d.u.degree() == 0 && d.balance == (c.odd() ? 0 : 1);
}

template <class K>
bool jac_is_valid(const G2Curve<K>& c, const MumfordDiv<K>& d) {
  const int du = d.u.degree();
  if (du < 0 || du > 2 || !(d.u.lead() == c.one())) return false;
  if (d.v.degree() >= du) return false;
  if (!((d.v * d.v + d.v * c.h() - c.f()) % d.u).is_zero()) return false;
  if (c.odd()) return d.balance == 0;
  if (c.split()) return d.balance >= 0 && d.balance <= 2 - du;
  return du % 2 == 0 && d.balance == 1 - du / 2;
}

template <class K>
void jac_require_valid(const G2Curve<K>& c, const MumfordDiv<K>& d) {
  if (!jac_is_valid(c, d)) throw Error(Errc::InvalidDivisor, "not a canonical Mumford divisor on this curve");
}

template <class K>
MumfordDiv<K> jac_negate(const G2Curve<K>& c, const MumfordDiv<K>& d) {
  const int du = d.u.degree();
  return MumfordDiv<K>{d.u, (-c.h() - d.v) % d.u, c.odd() ? 0 : 2 - du - d.balance};
}

namespace detail {

/// div(u, v) + a inf+ + b inf- with b = -deg u - a.
template <class K>
struct JacState {
  Poly<K> u;
  Poly<K> v;
  int a = 0;

  int b() const { return -u.degree() - a; }
};

/// Replaces div(u, v) by its linear equivalent through y - vrep, where vrep
/// is congruent to v mod u.
template <class K>
void jac_step(const G2Curve<K>& c, JacState<K>& st, const Poly<K>& vrep) {
  const Poly<K> n = vrep * vrep + vrep * c.h() - c.f();
  const int e = n.degree();
  const int du = st.u.degree();
  Poly<K> u2 = exact_div(n.monic(), st.u);
  const int d2 = e - du;
  int pole_plus = 3;
  if (!c.odd()) {
    if (vrep.degree() > 3) {
      pole_plus = vrep.degree();
    } else if (c.split()) {
      const K t = vrep.coeff(3, c.zero());
      if (t == c.c_plus()) pole_plus = e - 3;
    }
  }
  st.v = (-c.h() - vrep) % u2;
  st.u = std::move(u2);
  st.a = c.odd() ? 0 : st.a + pole_plus - d2;
}

template <class K>
Poly<K> nearest_rep(const Poly<K>& target, const Poly<K>& v, const Poly<K>& u) {
  return target + (v - target) % u;
}

template <class K>
void jac_reduce(const G2Curve<K>& c, JacState<K>& st) {
  if (c.odd()) {
    const Poly<K> base = -c.h() * (c.one() / from_int(2, c.zero()));
    while (st.u.degree() > 2) jac_step(c, st, nearest_rep(base, st.v, st.u));
    return;
  }
  for (int guard = 0; guard < 64; ++guard) {
    const int du = st.u.degree();
    if (du >= 4) {
      jac_step(c, st, st.v);
    } else if (du == 3) {
      const Poly<K>& target = st.a >= st.b() ? c.v_plus() : c.v_minus();
      jac_step(c, st, nearest_rep(target, st.v, st.u));
    } else if (st.a > 1 - du) {
      jac_step(c, st, nearest_rep(c.v_plus(), st.v, st.u));
    } else if (st.a < -1) {
      jac_step(c, st, nearest_rep(c.v_minus(), st.v, st.u));
    } else {
      return;
    }
  }
  throw Error(Errc::InvariantError, "divisor reduction did not terminate");
}

template <class K>
MumfordDiv<K> jac_add_unchecked(const G2Curve<K>& c, const MumfordDiv<K>& d1, const MumfordDiv<K>& d2) {
  const K one = c.one();
  const auto [d0, e1, e2] = xgcd(d1.u, d2.u, one);
  const auto [d, c1, c2] = xgcd(d0, d1.v + d2.v + c.h(), one);
  const Poly<K> s1 = c1 * e1;
  const Poly<K> s2 = c1 * e2;
  JacState<K> st;
  st.u = exact_div(d1.u * d2.u, d * d);
  const Poly<K> num = s1 * d1.u * d2.v + s2 * d2.u * d1.v + c2 * (d1.v * d2.v + c.f());
  st.v = exact_div(num, d) % st.u;
  st.a = c.odd() ? 0 : (d1.balance - 1) + (d2.balance - 1) + d.degree();
  jac_reduce(c, st);
  return MumfordDiv<K>{st.u, st.v, c.odd() ? 0 : st.a + 1};
}

}  // namespace detail

template <class K>
MumfordDiv<K> jac_add(const G2Curve<K>& c, const MumfordDiv<K>& d1, const MumfordDiv<K>& d2) {
  jac_require_valid(c, d1);
  jac_require_valid(c, d2);
  return detail::jac_add_unchecked(c, d1, d2);
}

template <class K>
MumfordDiv<K> jac_sub(const G2Curve<K>& c, const MumfordDiv<K>& d1, const MumfordDiv<K>& d2) {
  jac_require_valid(c, d2);
  return jac_add(c, d1, jac_negate(c, d2));
}

/// Double-and-add; negative n multiplies the negation.
template <class K>
MumfordDiv<K> jac_scalar_mul(const G2Curve<K>& c, long long n, const MumfordDiv<K>& d) {
  jac_require_valid(c, d);
  MumfordDiv<K> base = n < 0 ? jac_negate(c, d) : d;
  unsigned long long k = n < 0 ? 0ULL - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
  MumfordDiv<K> acc = jac_identity(c);
  while (k) {
    if (k & 1ULL) acc = detail::jac_add_unchecked(c, acc, base);
    k >>= 1;
    if (k) base = detail::jac_add_unchecked(c, base, base);
  }
  return acc;
}

/// Prime factorization by trial division.
std::vector<std::pair<std::uint64_t, int>> factor_small(std::uint64_t n);

/// Exact order of d given a multiple of it (normally #J(F_p)).
template <class K>
std::uint64_t jac_element_order(const G2Curve<K>& c, const MumfordDiv<K>& d, std::uint64_t group_order) {
  jac_require_valid(c, d);
  if (group_order == 0) throw Error(Errc::InvalidArgument, "group order must be positive");
  if (!jac_is_identity(c, jac_scalar_mul(c, static_cast<long long>(group_order), d)))
    throw Error(Errc::InvariantError, "divisor is not annihilated by the given group order");
  std::uint64_t ord = group_order;
  for (const auto& [q, e] : factor_small(group_order)) {
    for (int i = 0; i < e; ++i) {
      if (!jac_is_identity(c, jac_scalar_mul(c, static_cast<long long>(ord / q), d))) break;
      ord /= q;
    }
  }
  return ord;
}

/// Affine point (x, y).
template <class K>
using AffinePoint = std::pair<K, K>;

template <class K>
bool g2_on_curve(const G2Curve<K>& c, const AffinePoint<K>& pt) {
  const auto& [x, y] = pt;
  return y * y + c.h().evaluate(x) * y == c.f().evaluate(x);
}

/// Class of P1 + ... + Pk - k/2 (inf+ + inf-) for k = 2, P - inf+ for k = 1
/// on split degree-6 models, and P1 + ... + Pk - k inf on degree-5 models.
/// A point paired with its involute, or a Weierstrass point doubled, gives
/// the identity. A single point on a model whose points at infinity are not
/// rational is rejected with InvalidDivisor.
template <class K>
MumfordDiv<K> divisor_from_points(const G2Curve<K>& c, const std::vector<AffinePoint<K>>& pts) {
  if (pts.size() > 2) throw Error(Errc::InvalidArgument, "at most two points");
  for (const auto& pt : pts)
    if (!g2_on_curve(c, pt)) throw Error(Errc::PointNotOnCurve, "point is not on the curve");
  const K one = c.one();
  if (pts.empty()) return jac_identity(c);
  if (pts.size() == 1) {
    if (!c.odd() && !c.split())
      throw Error(Errc::InvalidDivisor, "single point class needs a rational point at infinity");
    const auto& [x0, y0] = pts[0];
    return MumfordDiv<K>{Poly<K>{-x0, one}, Poly<K>::constant(y0), 0};
  }
  const auto& [x0, y0] = pts[0];
  const auto& [x1, y1] = pts[1];
  Poly<K> u;
  Poly<K> v;
  if (!(x0 == x1)) {
    u = Poly<K>{-x0, one} * Poly<K>{-x1, one};
    const K slope = (y1 - y0) / (x1 - x0);
    v = Poly<K>{y0 - slope * x0, slope};
  } else {
    const K hx = c.h().evaluate(x0);
    const K denom = from_int(2, y0) * y0 + hx;
    if (!(y0 == y1) || is_zero(denom)) return jac_identity(c);
    // tangent: v'(x0) = (f'(x0) - y0 h'(x0)) / (2 y0 + h(x0))
    const K slope = (c.f().derivative().evaluate(x0) - y0 * c.h().derivative().evaluate(x0)) / denom;
    u = Poly<K>{-x0, one} * Poly<K>{-x0, one};
    v = Poly<K>{y0 - slope * x0, slope};
  }
  MumfordDiv<K> d{std::move(u), std::move(v), 0};
  jac_require_valid(c, d);
  return d;
}

/// Coefficient-wise reduction of a divisor over Q to the reduced curve.
MumfordDiv<Fp> jac_reduce_divisor(const G2CurveP& cp, const MumfordDiv<Rat>& d);

}  // namespace g2t

#endif
