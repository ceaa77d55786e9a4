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

#include "g2t/ratfn.hpp"

#include "g2t/error.hpp"

namespace g2t {

RatFn::RatFn(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
  normalize();
}

RatFn RatFn::variable() { return RatFn(RatPoly{Rat(0), Rat(1)}); }

void RatFn::normalize() {
  if (num_.is_zero()) {
    den_ = RatPoly::constant(Rat(1));
    return;
  }
  const RatPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  const Rat inv = 1 / den_.lead();
  num_ *= inv;
  den_ *= inv;
}

RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFn RatFn::inverse() const {
  if (num_.is_zero()) throw Error(Errc::DivisionByZero, "inverse of the zero rational function");
  return RatFn(den_, num_);
}

RatFn& RatFn::operator+=(const RatFn& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

RatFn& RatFn::operator*=(const RatFn& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFn& RatFn::operator/=(const RatFn& o) { return *this *= o.inverse(); }

Rat RatFn::evaluate(const Rat& x) const {
  const Rat d = den_.evaluate(x);
  if (sgn(d) == 0) throw Error(Errc::PoleEncountered, "pole at " + g2t::to_string(x));
  return num_.evaluate(x) / d;
}

std::string to_string(const RatPoly& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += to_string(p[i]);
  }
  return s + "]";
}

std::string to_string(const RatFn& f) { return to_string(f.num()) + "/" + to_string(f.den()); }

}  // namespace g2t
