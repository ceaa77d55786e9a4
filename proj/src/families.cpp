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

#include "g2t/families.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>

#include "g2t/error.hpp"
#include "g2t/text.hpp"

namespace g2t {

C24Coefficients c24_coefficients(const Rat& s) {
  const Rat s2 = s * s;
  const Rat s3 = s2 * s, s4 = s2 * s2;
  const Rat s5 = s4 * s, s6 = s4 * s2, s8 = s4 * s4;
  C24Coefficients k;
  k.c4 = -31 * (s4 + 42 * s2 - Rat(32200, 93) * s - 147);
  k.c2 = 256 * (s8 + 84 * s6 - Rat(3472, 3) * s5 + 1470 * s4 - 48608 * s3 + 53508 * s2 + 170128 * s + 21609);
  const Rat t = s2 + 7;
  k.c0 = Rat(Integer(1) << 20) * Rat(7, 3) * s * t * t * t * (s2 + 63);
  k.d = s4 + 42 * s2 + Rat(1736, 3) * s - 147;
  return k;
}

C24Instance c24_build(const Rat& s) {
  const C24Coefficients k = c24_coefficients(s);
  if (sgn(k.c0) == 0 || sgn(k.d) == 0)
    throw Error(Errc::DegenerateParameter, "c0 d = 0 at s = " + to_string(s));
  const Poly<Rat> F{k.c0, Rat(0), k.c2, Rat(0), k.c4, Rat(0), Rat(1)};
  C24Instance inst{s, k, g2_from_weighted(k.d, F), {}, {}, {}, {}, {}, {}, false, "s=" + to_string(s)};

  const Rat q = s * s + 63;
  const Rat t = s * s + 7;
  inst.a = -8 * (s * s * s * s + 42 * s * s - 147) / (q * q);
  inst.b = 16 * t * t * t / (q * q * q);
  try {
    inst.aux_E = ell_make(Rat(0), inst.a, Rat(0), inst.b, Rat(0));
    inst.aux_F = ell_make(Rat(0), Rat(-31), Rat(0), Rat(256), Rat(0));
  } catch (const Error& e) {
    throw Error(Errc::InvariantError, std::string("auxiliary curve: ") + e.detail());
  }
  inst.P = EllPoint<Rat>::affine(4 * t / q, 224 * t / (q * q));
  inst.Q = EllPoint<Rat>::affine(Rat(32), Rat(96));
  if (!on_curve(inst.aux_E, inst.P) || !on_curve(inst.aux_F, inst.Q))
    throw Error(Errc::InvariantError, "auxiliary point off its curve");
  const auto origin = EllPoint<Rat>::affine(Rat(0), Rat(0));
  if (ell_order(inst.aux_E, inst.P) != std::optional<int>(6) || !(ell_mul(inst.aux_E, 3, inst.P) == origin))
    throw Error(Errc::InvariantError, "P does not have order 6 with 3P = (0,0)");
  if (ell_order(inst.aux_F, inst.Q) != std::optional<int>(8) || !(ell_mul(inst.aux_F, 4, inst.Q) == origin))
    throw Error(Errc::InvariantError, "Q does not have order 8 with 4Q = (0,0)");
  return inst;
}

EllCurve<Rat> d_curve() { return ell_make(Rat(0), Rat(14), Rat(0), Rat(196), Rat(0)); }

EllPoint<Rat> d_generator(int index) {
  switch (index) {
    case 1: return EllPoint<Rat>::affine(Rat(0), Rat(0));
    case 2: return EllPoint<Rat>::affine(Rat(7), Rat(-49));
    case 3: return EllPoint<Rat>::affine(Rat(16), Rat(-104));
    default: throw Error(Errc::InvalidArgument, "generator index must be 1, 2 or 3");
  }
}

DPoint d_point_from_word(int a, int b, int c) {
  const EllCurve<Rat> d = d_curve();
  EllPoint<Rat> pt = ell_mul(d, a, d_generator(1));
  pt = ell_add(d, pt, ell_mul(d, b, d_generator(2)));
  pt = ell_add(d, pt, ell_mul(d, c, d_generator(3)));
  return DPoint{pt, std::array<int, 3>{a, b, c}};
}

DPoint d_point(const Rat& z, const Rat& w) {
  DPoint pt{EllPoint<Rat>::affine(z, w), std::nullopt};
  require_on_curve(d_curve(), pt.point);
  return pt;
}

namespace {

// s = -21 (N(z) + M(z) w) / Den(z)
Poly<Rat> eqs_n() { return Poly<Rat>{Rat(196), Rat(0), Rat(1)} * Poly<Rat>{Rat(196), Rat(56), Rat(1)}; }
Poly<Rat> eqs_m() { return Poly<Rat>{Rat(-196 * 32), Rat(0), Rat(32)}; }
Poly<Rat> eqs_den() { return Poly<Rat>{Rat(38416), Rat(-175616), Rat(-24696), Rat(-896), Rat(1)}; }
Poly<Rat> d_rhs() { return Poly<Rat>{Rat(0), Rat(196), Rat(14), Rat(1)}; }

template <class K>
QuadAlgebraElem<K> checked_inverse(const QuadAlgebraElem<K>& x) {
  try {
    return x.inverse();
  } catch (const Error& e) {
    throw Error(Errc::PoleEncountered, e.detail());
  }
}

template <class K>
bool ablm_identity(const K& s) {
  using L = QuadAlgebraElem<K>;
  const L rho = L::rho();
  const L S(s);
  auto c = [](long n) { return L(K(Rat(n))); };
  const L q = S * S + c(63);
  const L qinv = checked_inverse(q);
  const L sp = S + rho;
  const L A = c(4) * sp * sp * sp * (S - c(3) * rho) * qinv * qinv;
  const L B = (c(31) - c(3) * rho) * checked_inverse(c(2));
  const L ell = (c(1) - rho) * sp * sp * qinv;
  const L m = c(3) * (c(5) - rho) * (S - c(3) * rho) * checked_inverse(c(2) * sp);
  return (A * (B - c(32)) - ell * ell * m).is_zero();
}

}  // namespace

Rat s_from_d_point(const DPoint& pt) {
  if (pt.point.infinity) throw Error(Errc::IdentityPoint, "the zero of D has no s-value");
  require_on_curve(d_curve(), pt.point);
  const Rat& z = pt.point.x;
  const Rat& w = pt.point.y;
  const Rat den = eqs_den().evaluate(z);
  if (sgn(den) == 0) throw Error(Errc::PoleOfMap, "denominator vanishes at z = " + to_string(z));
  return -21 * (eqs_n().evaluate(z) + eqs_m().evaluate(z) * w) / den;
}

C24Instance c48_build(const DPoint& pt) {
  C24Instance inst = c24_build(s_from_d_point(pt));
  inst.order48 = true;
  if (pt.word) {
    const auto& wd = *pt.word;
    inst.source = "word=" + std::to_string(wd[0]) + "," + std::to_string(wd[1]) + "," + std::to_string(wd[2]) +
                  " s=" + to_string(inst.s);
  } else {
    inst.source = "point=" + format_point(pt.point) + " s=" + to_string(inst.s);
  }
  return inst;
}

DFunction DFunction::z() { return DFunction(LRatFn(RatFn::variable())); }
DFunction DFunction::w() { return DFunction(LRatFn(), LRatFn(RatFn(Rat(1)))); }

DFunction operator*(const DFunction& x, const DFunction& y) {
  const LRatFn g{RatFn(d_rhs())};
  return DFunction(x.a_ * y.a_ + x.b_ * y.b_ * g, x.a_ * y.b_ + x.b_ * y.a_);
}

DFunction DFunction::inverse() const {
  const LRatFn g{RatFn(d_rhs())};
  const LRatFn norm = a_ * a_ - b_ * b_ * g;
  const LRatFn inv = checked_inverse(norm);
  return DFunction(a_ * inv, -b_ * inv);
}

bool verify_identity_ABlm(const Rat& s) { return ablm_identity(s); }

bool verify_identity_ABlm_symbolic() { return ablm_identity(RatFn::variable()); }

LRat identity_m(const Rat& s) {
  const LRat rho = LRat::rho();
  const LRat S(s);
  return LRat(Rat(3)) * (LRat(Rat(5)) - rho) * (S - LRat(Rat(3)) * rho) * checked_inverse(LRat(Rat(2)) * (S + rho));
}

LRat identity_n(const DPoint& pt) {
  if (pt.point.infinity) throw Error(Errc::IdentityPoint, "n is not evaluated at the zero of D");
  const LRat rho = LRat::rho();
  const LRat z(pt.point.x), w(pt.point.y);
  const LRat num = (LRat(Rat(7)) + LRat(Rat(11)) * rho) * w - LRat(Rat(4)) * z * z + LRat(Rat(784));
  const LRat den = LRat(Rat(8)) * z * z + LRat(Rat(7)) * (LRat(Rat(1)) - LRat(Rat(3)) * rho) * z + LRat(Rat(1568));
  return LRat(Rat(6)) * num * checked_inverse(den);
}

bool verify_identity_mn(const DPoint& pt) {
  Rat s;
  try {
    s = s_from_d_point(pt);
  } catch (const Error& e) {
    if (e.code() == Errc::PoleOfMap) throw Error(Errc::PoleEncountered, e.detail());
    throw;
  }
  const LRat n = identity_n(pt);
  return n * n == identity_m(s);
}

bool verify_identity_mn_symbolic() {
  auto c = [](long v) { return DFunction(LRatFn(RatFn(Rat(v)))); };
  const DFunction rho(LRatFn::rho());
  const DFunction z = DFunction::z(), w = DFunction::w();
  const DFunction s = c(-21) * (DFunction(LRatFn(RatFn(eqs_n()))) + DFunction(LRatFn(RatFn(eqs_m()))) * w) /
                      DFunction(LRatFn(RatFn(eqs_den())));
  const DFunction m = c(3) * (c(5) - rho) * (s - c(3) * rho) / (c(2) * (s + rho));
  const DFunction n = c(6) * ((c(7) + c(11) * rho) * w - c(4) * z * z + c(784)) /
                      (c(8) * z * z + c(7) * (c(1) - c(3) * rho) * z + c(1568));
  return (n * n - m).is_zero();
}

bool verify_eqs_invariance(const DPoint& pt) {
  const EllCurve<Rat> d = d_curve();
  const DPoint shifted{ell_add(d, pt.point, d_generator(1)), std::nullopt};
  try {
    return s_from_d_point(pt) == s_from_d_point(shifted);
  } catch (const Error& e) {
    if (e.code() == Errc::PoleOfMap || e.code() == Errc::IdentityPoint) throw Error(Errc::PoleEncountered, e.detail());
    throw;
  }
}

std::vector<C24Instance> enumerate_48_family(int max_word, std::vector<std::string>* skipped, unsigned jobs) {
  if (max_word < 0) throw Error(Errc::InvalidArgument, "max_word must be nonnegative");
  std::vector<std::array<int, 3>> words;
  for (int a = 0; a <= 1; ++a)
    for (int b = -max_word; b <= max_word; ++b)
      for (int c = -max_word; c <= max_word; ++c) words.push_back({a, b, c});

  struct Outcome {
    std::optional<C24Instance> inst;
    std::string note;
  };
  std::vector<Outcome> out(words.size());
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::future<void>> work;
  for (unsigned t = 0; t < jobs; ++t) {
    work.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < words.size(); i += jobs) {
        const auto& [a, b, c] = words[i];
        try {
          out[i].inst = c48_build(d_point_from_word(a, b, c));
        } catch (const Error& e) {
          out[i].note = "word " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                        " skipped: " + e.what();
        }
      }
    }));
  }
  for (auto& f : work) f.get();

  std::vector<C24Instance> result;
  std::vector<Rat> seen;
  for (auto& o : out) {
    if (!o.inst) {
      if (skipped) skipped->push_back(o.note);
      continue;
    }
    if (std::find(seen.begin(), seen.end(), o.inst->s) != seen.end()) continue;
    seen.push_back(o.inst->s);
    result.push_back(std::move(*o.inst));
  }
  return result;
}

EqsDegree eqs_map_degree() {
  const Poly<Rat> n = eqs_n(), m = eqs_m(), den = eqs_den(), g = d_rhs();
  if (gcd(den, den.derivative()).degree() != 0 || gcd(den, g).degree() != 0 ||
      gcd(gcd(n, m), den).degree() != 0)
    throw Error(Errc::InvariantError, "pole accounting assumptions fail");
  EqsDegree r;
  // z has a pole of order 2 and w of order 3 at the point at infinity of D
  r.numerator_pole_order = std::max(2 * n.degree(), 2 * m.degree() + 3);
  r.denominator_pole_order = 2 * den.degree();
  // N + M w vanishes at exactly one of (z0, w0), (z0, -w0) for each common
  // root z0 of its norm N^2 - M^2 g and Den.
  const Poly<Rat> norm = n * n - m * m * g;
  const Poly<Rat> common = gcd(norm, den);
  r.common_zeros = common.degree();
  // s is finite at infinity when the pole orders agree; its poles are then
  // the zeros of Den that N + M w does not cancel.
  r.degree = std::max(r.numerator_pole_order, r.denominator_pole_order) - r.common_zeros;
  return r;
}

}  // namespace g2t
