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

#ifndef G2T_RATFN_HPP
#define G2T_RATFN_HPP

#include <string>

#include "g2t/poly.hpp"
#include "g2t/rational.hpp"

namespace g2t {

using RatPoly = Poly<Rat>;

/// Element of Q(t), kept in lowest terms with a monic denominator so that
/// equal functions compare equal.
class RatFn {
 public:
  RatFn() : den_(RatPoly::constant(Rat(1))) {}
  RatFn(const Rat& c) : num_(RatPoly::constant(c)), den_(RatPoly::constant(Rat(1))) {}
  explicit RatFn(RatPoly num) : num_(std::move(num)), den_(RatPoly::constant(Rat(1))) {}
  RatFn(RatPoly num, RatPoly den);

  /// The function t.
  static RatFn variable();

  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFn operator-() const;
  RatFn inverse() const;
  RatFn& operator+=(const RatFn& o);
  RatFn& operator-=(const RatFn& o);
  RatFn& operator*=(const RatFn& o);
  RatFn& operator/=(const RatFn& o);

  friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
  friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
  friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
  friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }
  friend bool operator==(const RatFn& a, const RatFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Value at t = x; throws PoleEncountered if the denominator vanishes.
  Rat evaluate(const Rat& x) const;

 private:
  void normalize();

  RatPoly num_;
  RatPoly den_;
};

inline bool is_zero(const RatFn& x) { return x.is_zero(); }
inline RatFn from_int(long n, const RatFn&) { return RatFn(Rat(n)); }

std::string to_string(const RatPoly& p);
std::string to_string(const RatFn& f);

}  // namespace g2t

#endif
