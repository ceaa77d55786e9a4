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

#include "g2t/prime_field.hpp"

#include <limits>

#include "g2t/error.hpp"

namespace g2t {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> odd_primes(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 3); n <= hi; ++n) {
    if (n % 2 == 1 && is_prime(n)) out.push_back(n);
  }
  return out;
}

Fp Fp::from_signed(long long value, std::uint64_t modulus) {
  const long long m = static_cast<long long>(modulus);
  long long r = value % m;
  if (r < 0) r += m;
  return Fp(static_cast<std::uint64_t>(r), modulus);
}

Fp Fp::inverse() const {
  if (v_ == 0) throw Error(Errc::DivisionByZero, "inverse of 0 in F_" + std::to_string(p_));
  long long r0 = static_cast<long long>(p_), r1 = static_cast<long long>(v_);
  long long t0 = 0, t1 = 1;
  while (r1 != 0) {
    const long long q = r0 / r1;
    long long tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  return from_signed(t0, p_);
}

Fp pow(Fp base, std::uint64_t e) {
  Fp acc(1, base.modulus());
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

int quad_char(const Fp& a) {
  if (is_zero(a)) return 0;
  return pow(a, (a.modulus() - 1) / 2).value() == 1 ? 1 : -1;
}

std::optional<Fp> sqrt(const Fp& a) {
  const std::uint64_t p = a.modulus();
  if (is_zero(a)) return a;
  if (quad_char(a) != 1) return std::nullopt;
  // p - 1 = q * 2^s with q odd
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  const Fp z(least_nonresidue(p), p);
  Fp c = pow(z, q);
  Fp r = pow(a, (q + 1) / 2);
  Fp t = pow(a, q);
  unsigned m = s;
  while (t.value() != 1) {
    unsigned i = 0;
    Fp t2 = t;
    while (t2.value() != 1) {
      t2 *= t2;
      ++i;
    }
    Fp b = c;
    for (unsigned j = 0; j + 1 < m - i; ++j) b *= b;
    r *= b;
    c = b * b;
    t *= c;
    m = i;
  }
  if (r.value() > p - r.value()) r = -r;
  return r;
}

Fp rat_mod_p(const Rat& x, std::uint64_t p) {
  const unsigned long den = mpz_fdiv_ui(x.get_den_mpz_t(), p);
  if (den == 0) {
    throw Error(Errc::BadPrime, std::to_string(p) + " divides the denominator of " + to_string(x));
  }
  const unsigned long num = mpz_fdiv_ui(x.get_num_mpz_t(), p);
  return Fp(num, p) / Fp(den, p);
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw Error(Errc::InvalidArgument, "field modulus must be a prime below 2^31, got " + std::to_string(p));
  }
}

std::uint64_t least_nonresidue(std::uint64_t p) {
  for (std::uint64_t n = 2; n < p; ++n) {
    if (quad_char(Fp(n, p)) == -1) return n;
  }
  throw Error(Errc::InvalidArgument, "no quadratic nonresidue mod " + std::to_string(p));
}

Fp2 Fp2::inverse() const {
  // (c0 + c1 t)^-1 = (c0 - c1 t) / (c0^2 - nr c1^2)
  const Fp a(c0_, p_), b(c1_, p_), nr(nr_, p_);
  const Fp norm = a * a - nr * b * b;
  if (is_zero(norm)) throw Error(Errc::DivisionByZero, "inverse of 0 in F_p^2");
  const Fp inv = norm.inverse();
  return Fp2((a * inv).value(), (-b * inv).value(), p_, nr_);
}

Fp2 pow(Fp2 base, std::uint64_t e) {
  Fp2 acc(1, 0, base.modulus(), base.nonresidue());
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

int quad_char(const Fp2& a) {
  if (is_zero(a)) return 0;
  const std::uint64_t q = a.modulus() * a.modulus();
  const Fp2 r = pow(a, (q - 1) / 2);
  return (r.c0() == 1 && r.c1() == 0) ? 1 : -1;
}

Fp2Field::Fp2Field(std::uint64_t p) : p_(PrimeField(p).p()), nr_(0) {
  if (p == 2) throw Error(Errc::InvalidArgument, "F_4 is not supported");
  nr_ = least_nonresidue(p);
}

Fp2 Fp2Field::operator()(long long c0, long long c1) const {
  return Fp2(Fp::from_signed(c0, p_).value(), Fp::from_signed(c1, p_).value(), p_, nr_);
}

}  // namespace g2t
