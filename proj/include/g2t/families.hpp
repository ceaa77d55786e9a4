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

#ifndef G2T_FAMILIES_HPP
#define G2T_FAMILIES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g2t/elliptic.hpp"
#include "g2t/genus2.hpp"
#include "g2t/quad_algebra.hpp"
#include "g2t/ratfn.hpp"

namespace g2t {

struct C24Coefficients {
  Rat c4, c2, c0, d;
};

/// Coefficients of d y^2 = x^6 + c4 x^4 + c2 x^2 + c0 at parameter s.
C24Coefficients c24_coefficients(const Rat& s);

/// The curve C_24^s with the elliptic curves it is glued from:
/// E: y^2 = x(x^2 + ax + b) with P of order 6, F: y^2 = x^3 - 31x^2 + 256x
/// with Q = (32, 96) of order 8.
struct C24Instance {
  Rat s;
  C24Coefficients coeffs;
  G2CurveQ curve;
  EllCurve<Rat> aux_E;
  EllCurve<Rat> aux_F;
  EllPoint<Rat> P;
  EllPoint<Rat> Q;
  Rat a, b;
  /// Set when s comes from a point of D, so the Jacobian has a point of order 48.
  bool order48 = false;
  std::string source;
};

/// DegenerateParameter when c0 d = 0; InvariantError if a structural
/// property of the construction fails.
C24Instance c24_build(const Rat& s);

/// D: y^2 = x^3 + 14x^2 + 196x and its Mordell-Weil generators
/// (0,0), (7,-49), (16,-104).
EllCurve<Rat> d_curve();
EllPoint<Rat> d_generator(int index);

struct DPoint {
  EllPoint<Rat> point;
  std::optional<std::array<int, 3>> word;
};

/// a P1 + b P2 + c P3
DPoint d_point_from_word(int a, int b, int c);
/// PointNotOnCurve unless (z, w) lies on D.
DPoint d_point(const Rat& z, const Rat& w);

/// The parameter s attached to a nonzero point (z, w) of D.
/// IdentityPoint for the zero of D, PoleOfMap where the denominator vanishes.
Rat s_from_d_point(const DPoint& pt);

C24Instance c48_build(const DPoint& pt);

using LRat = QuadAlgebraElem<Rat>;
using LRatFn = QuadAlgebraElem<RatFn>;

/// a + b w in the function field of D over L(z), with w^2 = z^3 + 14z^2 + 196z.
class DFunction {
 public:
  DFunction() = default;
  DFunction(LRatFn a, LRatFn b = LRatFn()) : a_(std::move(a)), b_(std::move(b)) {}
  static DFunction z();
  static DFunction w();

  const LRatFn& a() const { return a_; }
  const LRatFn& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  DFunction operator-() const { return DFunction(-a_, -b_); }
  DFunction inverse() const;
  friend DFunction operator+(const DFunction& x, const DFunction& y) { return DFunction(x.a_ + y.a_, x.b_ + y.b_); }
  friend DFunction operator-(const DFunction& x, const DFunction& y) { return DFunction(x.a_ - y.a_, x.b_ - y.b_); }
  friend DFunction operator*(const DFunction& x, const DFunction& y);
  friend DFunction operator/(const DFunction& x, const DFunction& y) { return x * y.inverse(); }
  friend bool operator==(const DFunction& x, const DFunction& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  LRatFn a_, b_;
};

/// A(B - 32) = l^2 m at a rational s, with A, B, l, m as in the 48-torsion
/// argument. PoleEncountered at poles of the expressions.
bool verify_identity_ABlm(const Rat& s);
/// The same identity with s transcendental, in Q(s)[rho].
bool verify_identity_ABlm_symbolic();

/// m = n^2 at a point of D (m evaluated at s = s(pt)).
bool verify_identity_mn(const DPoint& pt);
/// m = n^2 in the function field of D over Q(rho).
bool verify_identity_mn_symbolic();

/// m(s) in L = Q[rho] at a rational s.
LRat identity_m(const Rat& s);
/// n(pt) in L.
LRat identity_n(const DPoint& pt);

/// s(pt) = s(pt + P1); PoleEncountered if either side is undefined.
bool verify_eqs_invariance(const DPoint& pt);

/// Instances for words a P1 + b P2 + c P3, a in {0,1}, |b|, |c| <= max_word,
/// sorted by word and deduplicated by s. Words hitting the identity, a pole,
/// or a degenerate s are skipped and described in *skipped.
std::vector<C24Instance> enumerate_48_family(int max_word, std::vector<std::string>* skipped = nullptr,
                                             unsigned jobs = 0);

/// Pole accounting for the map D -> s: pole orders of numerator and
/// denominator at the point at infinity of D, the number of their common
/// zeros, and the resulting degree of the map.
struct EqsDegree {
  int numerator_pole_order = 0;
  int denominator_pole_order = 0;
  int common_zeros = 0;
  int degree = 0;
};
EqsDegree eqs_map_degree();

}  // namespace g2t

#endif
