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

#ifndef G2T_GENUS2_HPP
#define G2T_GENUS2_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "g2t/error.hpp"
#include "g2t/poly.hpp"
#include "g2t/prime_field.hpp"
#include "g2t/rational.hpp"

namespace g2t {

inline std::optional<Rat> field_sqrt(const Rat& x) { return rat_sqrt(x); }
inline std::optional<Fp> field_sqrt(const Fp& x) { return sqrt(x); }

/// Genus-2 model y^2 + h(x) y = f(x) with F = h^2 + 4f of degree 5 or 6 and
/// nonzero discriminant.
///
/// For degree-6 models with lc(F) a square, s_inf is the chosen root and the
/// point at infinity on which (2y + h)/x^3 tends to s_inf is called inf+.
/// V+ and V- are the polynomial parts of y on the two branches at infinity.
template <class K>
class G2Curve {
 public:
  G2Curve(Poly<K> h, Poly<K> f, std::optional<K> s_inf_hint = std::nullopt)
      : h_(std::move(h)), f_(std::move(f)) {
    if (h_.degree() > 3 || f_.degree() > 6)
      throw Error(Errc::SingularOrWrongGenus, "need deg h <= 3 and deg f <= 6");
    if (h_.is_zero() && f_.is_zero()) throw Error(Errc::SingularOrWrongGenus, "h and f are both zero");
    F_ = h_ * h_ + f_ * from_int(4, f_.is_zero() ? h_.lead() : f_.lead());
    if (F_.degree() != 5 && F_.degree() != 6)
      throw Error(Errc::SingularOrWrongGenus, "h^2 + 4f must have degree 5 or 6");
    zero_ = F_.lead() - F_.lead();
    if (characteristic(zero_) == 2) throw Error(Errc::InvalidArgument, "characteristic 2 is not supported");
    disc_ = discriminant(F_);
    if (is_zero(disc_)) throw Error(Errc::SingularOrWrongGenus, "h^2 + 4f has a repeated root");
    if (F_.degree() == 6) init_branches(std::move(s_inf_hint));
  }

  const Poly<K>& h() const { return h_; }
  const Poly<K>& f() const { return f_; }
  /// h^2 + 4f
  const Poly<K>& F() const { return F_; }
  int deg_F() const { return F_.degree(); }
  bool odd() const { return F_.degree() == 5; }
  /// Degree-6 model whose two points at infinity are rational.
  bool split() const { return s_inf_.has_value(); }
  const std::optional<K>& s_inf() const { return s_inf_; }
  const K& disc() const { return disc_; }
  K zero() const { return zero_; }
  K one() const { return from_int(1, zero_); }

  const Poly<K>& v_plus() const { return v_plus_; }
  const Poly<K>& v_minus() const { return v_minus_; }
  /// x^3 coefficients of V+ and V-.
  K c_plus() const { return v_plus_.coeff(3, zero_); }
  K c_minus() const { return v_minus_.coeff(3, zero_); }

  friend bool operator==(const G2Curve& a, const G2Curve& b) {
    return a.h_ == b.h_ && a.f_ == b.f_ && a.s_inf_ == b.s_inf_;
  }

 private:
  void init_branches(std::optional<K> hint) {
    const K lc = F_.lead();
    if (hint) {
      if (!(*hint * *hint == lc)) throw Error(Errc::InvalidArgument, "s_inf hint is not a square root of lc(F)");
      s_inf_ = std::move(hint);
    } else {
      s_inf_ = field_sqrt(lc);
    }
    if (!s_inf_) return;
    // W = s x^3 + w2 x^2 + w1 x + w0 agrees with sqrt(F) down to x^3.
    const K& s = *s_inf_;
    const K two_s = from_int(2, s) * s;
    const K w2 = F_.coeff(5, zero_) / two_s;
    const K w1 = (F_.coeff(4, zero_) - w2 * w2) / two_s;
    const K w0 = (F_.coeff(3, zero_) - from_int(2, s) * w1 * w2) / two_s;
    const Poly<K> w{w0, w1, w2, s};
    const K half = from_int(1, s) / from_int(2, s);
    v_plus_ = (w - h_) * half;
    v_minus_ = (-w - h_) * half;
  }

  Poly<K> h_, f_, F_;
  K zero_;
  K disc_;
  std::optional<K> s_inf_;
  Poly<K> v_plus_, v_minus_;
};

using G2CurveQ = G2Curve<Rat>;
using G2CurveP = G2Curve<Fp>;

/// d y^2 = F(x) rewritten as y^2 = d F(x) via y -> y/d.
G2CurveQ g2_from_weighted(const Rat& d, const Poly<Rat>& F);

/// Reduction mod an odd prime; the reduced curve keeps the image of s_inf.
/// BadPrime if p = 2 or p divides a denominator, BadReduction if p divides
/// lc(F) or disc(F).
G2CurveP g2_reduce(const G2CurveQ& c, std::uint64_t p);
bool g2_good_prime(const G2CurveQ& c, std::uint64_t p);
std::vector<std::uint64_t> good_odd_primes(const G2CurveQ& c, std::uint64_t limit);
std::vector<std::uint64_t> first_good_odd_primes(const G2CurveQ& c, std::size_t count);

/// #C(F_q) for q = p^extension, extension in {1, 2}.
std::uint64_t g2_count_points(const G2CurveP& c, int extension);

struct JacOrderRecord {
  std::uint64_t p = 0;
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
  std::uint64_t jac_order = 0;
};

/// Combines the two counts; InvariantError on odd N1^2 + N2 or a value
/// outside the Weil interval.
JacOrderRecord jac_order_from_counts(std::uint64_t p, std::uint64_t n1, std::uint64_t n2);
JacOrderRecord g2_jacobian_order(const G2CurveP& c);
JacOrderRecord g2_jacobian_order(const G2CurveQ& c, std::uint64_t p);

/// (sqrt(q) - 1)^4 <= n <= (sqrt(q) + 1)^4, decided in integers.
bool within_weil_interval(std::uint64_t q, std::uint64_t n);

}  // namespace g2t

#endif
