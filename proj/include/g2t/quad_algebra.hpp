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

#ifndef G2T_QUAD_ALGEBRA_HPP
#define G2T_QUAD_ALGEBRA_HPP

#include "g2t/error.hpp"
#include "g2t/rational.hpp"

namespace g2t {

/// c0 + c1*rho in L = K[T]/(T^2 + 7), rho the image of T.
///
/// K needs field arithmetic, equality, and a constructor from Rat.
template <class K>
class QuadAlgebraElem {
 public:
  QuadAlgebraElem() : c0_(Rat(0)), c1_(Rat(0)) {}
  QuadAlgebraElem(K c0) : c0_(std::move(c0)), c1_(Rat(0)) {}
  QuadAlgebraElem(K c0, K c1) : c0_(std::move(c0)), c1_(std::move(c1)) {}

  static QuadAlgebraElem rho() { return QuadAlgebraElem(K(Rat(0)), K(Rat(1))); }

  const K& c0() const { return c0_; }
  const K& c1() const { return c1_; }

  /// c0^2 + 7 c1^2
  K norm() const { return c0_ * c0_ + K(Rat(7)) * c1_ * c1_; }
  QuadAlgebraElem conjugate() const { return QuadAlgebraElem(c0_, -c1_); }
  bool is_zero() const { return c0_ == K(Rat(0)) && c1_ == K(Rat(0)); }

  QuadAlgebraElem inverse() const {
    const K n = norm();
    if (n == K(Rat(0))) throw Error(Errc::NonInvertible, "element of norm zero in K[T]/(T^2+7)");
    const K inv = K(Rat(1)) / n;
    return QuadAlgebraElem(c0_ * inv, -c1_ * inv);
  }

  QuadAlgebraElem operator-() const { return QuadAlgebraElem(-c0_, -c1_); }
  QuadAlgebraElem& operator+=(const QuadAlgebraElem& o) {
    c0_ += o.c0_;
    c1_ += o.c1_;
    return *this;
  }
  QuadAlgebraElem& operator-=(const QuadAlgebraElem& o) {
    c0_ -= o.c0_;
    c1_ -= o.c1_;
    return *this;
  }
  QuadAlgebraElem& operator*=(const QuadAlgebraElem& o) {
    K a = c0_ * o.c0_ - K(Rat(7)) * c1_ * o.c1_;
    K b = c0_ * o.c1_ + c1_ * o.c0_;
    c0_ = std::move(a);
    c1_ = std::move(b);
    return *this;
  }
  QuadAlgebraElem& operator/=(const QuadAlgebraElem& o) { return *this *= o.inverse(); }

  friend QuadAlgebraElem operator+(QuadAlgebraElem a, const QuadAlgebraElem& b) { return a += b; }
  friend QuadAlgebraElem operator-(QuadAlgebraElem a, const QuadAlgebraElem& b) { return a -= b; }
  friend QuadAlgebraElem operator*(QuadAlgebraElem a, const QuadAlgebraElem& b) { return a *= b; }
  friend QuadAlgebraElem operator/(QuadAlgebraElem a, const QuadAlgebraElem& b) { return a /= b; }
  friend bool operator==(const QuadAlgebraElem& a, const QuadAlgebraElem& b) {
    return a.c0_ == b.c0_ && a.c1_ == b.c1_;
  }

 private:
  K c0_;
  K c1_;
};

}  // namespace g2t

#endif
