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

#ifndef G2T_PRIME_FIELD_HPP
#define G2T_PRIME_FIELD_HPP

#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

#include "g2t/rational.hpp"

namespace g2t {

bool is_prime(std::uint64_t n);

/// Odd primes p with lo <= p <= hi, ascending.
std::vector<std::uint64_t> odd_primes(std::uint64_t lo, std::uint64_t hi);

/// Element of F_p. The modulus travels with the value; moduli are bounded
/// by 2^31 so products fit in 64 bits.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}
  static Fp from_signed(long long value, std::uint64_t modulus);

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  Fp& operator+=(const Fp& o) {
    assert(p_ == o.p_);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    assert(p_ == o.p_);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    assert(p_ == o.p_);
    v_ = v_ * o.v_ % p_;
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp inverse() const;

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend bool operator<(const Fp& a, const Fp& b) { return a.v_ < b.v_; }

 private:
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 1;
};

inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline Fp from_int(long n, const Fp& like) { return Fp::from_signed(n, like.modulus()); }
inline unsigned long characteristic(const Fp& x) { return x.modulus(); }

Fp pow(Fp base, std::uint64_t e);

/// Quadratic character: 0 for zero, +1 for nonzero squares, -1 otherwise.
int quad_char(const Fp& a);

/// A square root of a (Tonelli-Shanks), or nullopt for nonresidues. The
/// root returned is the smaller of {r, p - r}.
std::optional<Fp> sqrt(const Fp& a);

/// Reduces x modulo p; throws BadPrime when p divides the denominator.
Fp rat_mod_p(const Rat& x, std::uint64_t p);

/// Factory for elements of F_p; validates the modulus once.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  Fp operator()(long long v) const { return Fp::from_signed(v, p_); }
  Fp from_rat(const Rat& x) const { return rat_mod_p(x, p_); }
  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }

 private:
  std::uint64_t p_;
};

std::uint64_t least_nonresidue(std::uint64_t p);

/// Element c0 + c1*t of F_{p^2} = F_p[t]/(t^2 - nr), nr the least positive
/// nonresidue mod p.
class Fp2 {
 public:
  Fp2() = default;
  Fp2(std::uint64_t c0, std::uint64_t c1, std::uint64_t p, std::uint64_t nr)
      : c0_(c0 % p), c1_(c1 % p), p_(p), nr_(nr) {}

  std::uint64_t c0() const { return c0_; }
  std::uint64_t c1() const { return c1_; }
  std::uint64_t modulus() const { return p_; }
  std::uint64_t nonresidue() const { return nr_; }
  /// Position in the enumeration order c0 + p*c1.
  std::uint64_t index() const { return c0_ + p_ * c1_; }

  Fp2& operator+=(const Fp2& o) {
    c0_ = (c0_ + o.c0_) % p_;
    c1_ = (c1_ + o.c1_) % p_;
    return *this;
  }
  Fp2& operator-=(const Fp2& o) {
    c0_ = (c0_ + p_ - o.c0_) % p_;
    c1_ = (c1_ + p_ - o.c1_) % p_;
    return *this;
  }
  Fp2& operator*=(const Fp2& o) {
    const std::uint64_t a = (c0_ * o.c0_ + (c1_ * o.c1_ % p_) * nr_) % p_;
    const std::uint64_t b = (c0_ * o.c1_ + c1_ * o.c0_) % p_;
    c0_ = a;
    c1_ = b;
    return *this;
  }
  Fp2& operator/=(const Fp2& o) { return *this *= o.inverse(); }
  Fp2 operator-() const { return Fp2((p_ - c0_) % p_, (p_ - c1_) % p_, p_, nr_); }
  Fp2 inverse() const;

  friend Fp2 operator+(Fp2 a, const Fp2& b) { return a += b; }
  friend Fp2 operator-(Fp2 a, const Fp2& b) { return a -= b; }
  friend Fp2 operator*(Fp2 a, const Fp2& b) { return a *= b; }
  friend Fp2 operator/(Fp2 a, const Fp2& b) { return a /= b; }
  friend bool operator==(const Fp2& a, const Fp2& b) {
    return a.c0_ == b.c0_ && a.c1_ == b.c1_ && a.p_ == b.p_;
  }

 private:
  std::uint64_t c0_ = 0;
  std::uint64_t c1_ = 0;
  std::uint64_t p_ = 1;
  std::uint64_t nr_ = 0;
};

inline bool is_zero(const Fp2& x) { return x.c0() == 0 && x.c1() == 0; }
inline Fp2 from_int(long n, const Fp2& like) {
  return Fp2(Fp::from_signed(n, like.modulus()).value(), 0, like.modulus(), like.nonresidue());
}
inline unsigned long characteristic(const Fp2& x) { return x.modulus(); }

Fp2 pow(Fp2 base, std::uint64_t e);
int quad_char(const Fp2& a);

class Fp2Field {
 public:
  explicit Fp2Field(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  std::uint64_t nonresidue() const { return nr_; }
  std::uint64_t size() const { return p_ * p_; }
  Fp2 operator()(long long c0, long long c1 = 0) const;
  Fp2 embed(const Fp& x) const { return Fp2(x.value(), 0, p_, nr_); }
  /// The element with index i in the order c0 + p*c1.
  Fp2 element(std::uint64_t i) const { return Fp2(i % p_, i / p_, p_, nr_); }

 private:
  std::uint64_t p_;
  std::uint64_t nr_;
};

}  // namespace g2t

#endif
