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

#include "g2t/elliptic.hpp"

namespace g2t {

bool mazur_admissible(long long n) { return (n >= 1 && n <= 10) || n == 12; }

std::uint64_t ell_count(const EllCurve<Fp>& e) {
  if (is_zero(e.discriminant())) throw Error(Errc::SingularCurve, "reduced elliptic curve is singular");
  const std::uint64_t p = e.a1.modulus();
  // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
  const Fp c3(4, p), c2 = e.b2(), c1 = Fp(2, p) * e.b4(), c0 = e.b6();
  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < p; ++i) {
    const Fp x(i, p);
    count += static_cast<std::uint64_t>(1 + quad_char(((c3 * x + c2) * x + c1) * x + c0));
  }
  return count;
}

long long ell_trace(const EllCurve<Fp>& e) {
  const std::uint64_t p = e.a1.modulus();
  return static_cast<long long>(p + 1) - static_cast<long long>(ell_count(e));
}

EllCurve<Fp> ell_reduce(const EllCurve<Rat>& e, std::uint64_t p) {
  if (p == 2) throw Error(Errc::BadPrime, "reduction at 2 is not supported");
  const PrimeField k(p);
  EllCurve<Fp> r{k.from_rat(e.a1), k.from_rat(e.a2), k.from_rat(e.a3), k.from_rat(e.a4),
                 k.from_rat(e.a6)};
  if (is_zero(r.discriminant()))
    throw Error(Errc::BadReduction, "discriminant vanishes mod " + std::to_string(p));
  return r;
}

EllPoint<Fp> ell_reduce_point(const EllPoint<Rat>& pt, std::uint64_t p) {
  if (pt.infinity) return EllPoint<Fp>::at_infinity();
  // A point whose coordinates have p in the denominator reduces to infinity.
  if (mpz_divisible_ui_p(pt.x.get_den_mpz_t(), p) || mpz_divisible_ui_p(pt.y.get_den_mpz_t(), p))
    return EllPoint<Fp>::at_infinity();
  return EllPoint<Fp>::affine(rat_mod_p(pt.x, p), rat_mod_p(pt.y, p));
}

bool ell_good_prime(const EllCurve<Rat>& e, std::uint64_t p) {
  try {
    ell_reduce(e, p);
    return true;
  } catch (const Error& err) {
    if (err.code() == Errc::BadPrime || err.code() == Errc::BadReduction) return false;
    throw;
  }
}

}  // namespace g2t
