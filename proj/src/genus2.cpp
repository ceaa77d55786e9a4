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

#include "g2t/genus2.hpp"

#include <string>

namespace g2t {

G2CurveQ g2_from_weighted(const Rat& d, const Poly<Rat>& F) {
  if (sgn(d) == 0) throw Error(Errc::ZeroWeight, "weight d must be nonzero");
  return G2CurveQ(Poly<Rat>(), F * d);
}

namespace {

Poly<Fp> reduce_poly(const Poly<Rat>& a, const PrimeField& k) {
  std::vector<Fp> c;
  c.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c.push_back(k.from_rat(a[i]));
  return Poly<Fp>(std::move(c));
}

}  // namespace

G2CurveP g2_reduce(const G2CurveQ& c, std::uint64_t p) {
  if (p == 2) throw Error(Errc::BadPrime, "reduction at 2 is not supported");
  const PrimeField k(p);
  Poly<Fp> h = reduce_poly(c.h(), k);
  Poly<Fp> f = reduce_poly(c.f(), k);
  if (k.from_rat(c.F().lead()).value() == 0)
    throw Error(Errc::BadReduction, "p divides the leading coefficient of F at p = " + std::to_string(p));
  if (k.from_rat(c.disc()).value() == 0)
    throw Error(Errc::BadReduction, "p divides disc(F) at p = " + std::to_string(p));
  std::optional<Fp> hint;
  if (c.s_inf()) hint = k.from_rat(*c.s_inf());
  return G2CurveP(std::move(h), std::move(f), hint);
}

bool g2_good_prime(const G2CurveQ& c, std::uint64_t p) {
  if (p == 2 || !is_prime(p)) return false;
  auto divides_den = [p](const Poly<Rat>& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (mpz_divisible_ui_p(a[i].get_den_mpz_t(), p)) return true;
    return false;
  };
  if (divides_den(c.h()) || divides_den(c.f())) return false;
  const Rat& lc = c.F().lead();
  if (mpz_divisible_ui_p(lc.get_num_mpz_t(), p)) return false;
  if (mpz_divisible_ui_p(c.disc().get_num_mpz_t(), p)) return false;
  return true;
}

std::vector<std::uint64_t> good_odd_primes(const G2CurveQ& c, std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : odd_primes(3, limit))
    if (g2_good_prime(c, p)) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> first_good_odd_primes(const G2CurveQ& c, std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 3; out.size() < count; p += 2)
    if (is_prime(p) && g2_good_prime(c, p)) out.push_back(p);
  return out;
}

std::uint64_t g2_count_points(const G2CurveP& c, int extension) {
  if (extension != 1 && extension != 2) throw Error(Errc::InvalidArgument, "extension degree must be 1 or 2");
  const std::uint64_t p = c.zero().modulus();
  // chi_p as a table; chi over F_{p^2} is chi_p of the norm.
  std::vector<int> chi(p, -1);
  chi[0] = 0;
  for (std::uint64_t a = 1; a < p; ++a) chi[a * a % p] = 1;

  std::vector<std::uint64_t> F(7, 0);
  for (std::size_t i = 0; i < c.F().size(); ++i) F[i] = c.F()[i].value();
  const int deg = c.deg_F();

  std::int64_t affine = 0;
  if (extension == 1) {
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t acc = 0;
      for (int i = deg; i >= 0; --i) acc = (acc * x + F[static_cast<std::size_t>(i)]) % p;
      affine += 1 + chi[acc];
    }
    std::int64_t at_inf = deg == 5 ? 1 : 1 + chi[F[6]];
    return static_cast<std::uint64_t>(affine + at_inf);
  }
  const std::uint64_t nr = least_nonresidue(p);
  for (std::uint64_t x1 = 0; x1 < p; ++x1) {
    for (std::uint64_t x0 = 0; x0 < p; ++x0) {
      // Horner in F_p[t]/(t^2 - nr)
      std::uint64_t a = 0, b = 0;
      for (int i = deg; i >= 0; --i) {
        const std::uint64_t na = (a * x0 + (b * x1 % p) * nr + F[static_cast<std::size_t>(i)]) % p;
        const std::uint64_t nb = (a * x1 + b * x0) % p;
        a = na;
        b = nb;
      }
      const std::uint64_t norm = (a * a % p + p - (b * b % p) * nr % p) % p;
      affine += 1 + chi[norm];
    }
  }
  // lc(F) lies in F_p, hence is a square in F_{p^2}.
  return static_cast<std::uint64_t>(affine + (deg == 5 ? 1 : 2));
}

bool within_weil_interval(std::uint64_t q, std::uint64_t n) {
  // Let X = n - (q+1)^2 - 4q; the upper bound is X <= 4(q+1)sqrt(q).
  // Let Y = (q+1)^2 + 4q - n; the lower bound is Y <= 4(q+1)sqrt(q).
  const Integer qq(static_cast<unsigned long>(q));
  const Integer nn(static_cast<unsigned long>(n));
  const Integer mid = (qq + 1) * (qq + 1) + 4 * qq;
  const Integer bound2 = 16 * (qq + 1) * (qq + 1) * qq;
  const Integer x = nn - mid;
  const Integer y = mid - nn;
  const bool upper = sgn(x) <= 0 || Integer(x * x) <= bound2;
  const bool lower = sgn(y) <= 0 || Integer(y * y) <= bound2;
  return upper && lower;
}

JacOrderRecord jac_order_from_counts(std::uint64_t p, std::uint64_t n1, std::uint64_t n2) {
  const std::uint64_t twice = n1 * n1 + n2;
  if (twice % 2 != 0)
    throw Error(Errc::InvariantError, "N1^2 + N2 is odd at p = " + std::to_string(p));
  if (twice / 2 <= p) throw Error(Errc::InvariantError, "nonpositive Jacobian order at p = " + std::to_string(p));
  JacOrderRecord r{p, n1, n2, twice / 2 - p};
  if (!within_weil_interval(p, r.jac_order))
    throw Error(Errc::InvariantError, "Jacobian order outside the Weil interval at p = " + std::to_string(p));
  return r;
}

JacOrderRecord g2_jacobian_order(const G2CurveP& c) {
  const std::uint64_t p = c.zero().modulus();
  return jac_order_from_counts(p, g2_count_points(c, 1), g2_count_points(c, 2));
}

JacOrderRecord g2_jacobian_order(const G2CurveQ& c, std::uint64_t p) {
  return g2_jacobian_order(g2_reduce(c, p));
}

}  // namespace g2t
