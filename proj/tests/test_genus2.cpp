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

#include <doctest.h>

#include <cmath>
#include <random>

#include "g2t/catalog.hpp"
#include "g2t/error.hpp"
#include "g2t/families.hpp"
#include "g2t/genus2.hpp"
#include "g2t/text.hpp"

using namespace g2t;

namespace {

Poly<Rat> zpoly(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return Poly<Rat>(std::move(v));
}

Fp2 eval2(const Poly<Fp>& a, const Fp2& x, const Fp2Field& k) {
  Fp2 acc = k(0);
  for (int i = a.degree(); i >= 0; --i) acc = acc * x + k.embed(a[static_cast<std::size_t>(i)]);
  return acc;
}

/// Points on y^2 + h y = f over F_{p^e} by trying every (x, y); the points at
/// infinity are the solutions T of T^2 + h3 T = f6 when deg F = 6, else one.
std::uint64_t brute_count(const G2CurveP& c, int e) {
  const std::uint64_t p = c.zero().modulus();
  const Fp2Field k(p);
  std::vector<Fp2> field;
  if (e == 1)
    for (std::uint64_t i = 0; i < p; ++i) field.push_back(k(static_cast<long long>(i)));
  else
    for (std::uint64_t i = 0; i < k.size(); ++i) field.push_back(k.element(i));
  std::uint64_t n = 0;
  for (const Fp2& x : field) {
    const Fp2 hx = eval2(c.h(), x, k), fx = eval2(c.f(), x, k);
    for (const Fp2& y : field)
      if (y * y + hx * y == fx) ++n;
  }
  if (c.deg_F() == 5) return n + 1;
  const Fp2 h3 = k.embed(c.h().coeff(3, c.zero())), f6 = k.embed(c.f().coeff(6, c.zero()));
  for (const Fp2& t : field)
    if (t * t + h3 * t == f6) ++n;
  return n;
}

}  // namespace

TEST_CASE("curve construction") {
  const G2CurveQ c28(zpoly({0, 1, 1}), zpoly({4, -10, -4, 0, 5, 3, 1}));
  CHECK(c28.deg_F() == 6);
  CHECK_THROWS_AS(G2CurveQ(Poly<Rat>(), zpoly({0, 0, 0, 0, 0, 1})), Error);
  const G2CurveQ c70(zpoly({110, -41, -3, 2}), zpoly({179, 425, -51, 1}));
  CHECK(c70.deg_F() == 6);
  CHECK(c70.F() == c70.h() * c70.h() + Rat(4) * c70.f());
  CHECK_THROWS_AS(G2CurveQ(Poly<Rat>(), zpoly({1, 0, 1})), Error);
  try {
    G2CurveQ(Poly<Rat>(), zpoly({0, 0, 0, 0, 0, 1}));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SingularOrWrongGenus);
  }
  const PrimeField k2(2);
  CHECK_THROWS_AS(G2CurveP(Poly<Fp>{k2(1)}, Poly<Fp>{k2(1), k2(0), k2(0), k2(0), k2(0), k2(1)}), Error);
}

TEST_CASE("weighted models d y^2 = F") {
  const Poly<Rat> F = zpoly({1, 0, 0, 0, 0, 3, 1});
  CHECK(g2_from_weighted(Rat(1), F).f() == F);
  const C24Coefficients k = c24_coefficients(Rat(3));
  const Poly<Rat> sextic{k.c0, Rat(0), k.c2, Rat(0), k.c4, Rat(0), Rat(1)};
  CHECK(k.d == Rat(2048));
  const G2CurveQ c = g2_from_weighted(Rat(2048), sextic);
  CHECK(c.f() == Rat(2048) * sextic);
  CHECK(c.h().is_zero());
  CHECK_THROWS_AS(g2_from_weighted(Rat(0), F), Error);
}

TEST_CASE("point counts on a small example") {
  const PrimeField k(3);
  const G2CurveP c(Poly<Fp>(), Poly<Fp>{k(1), k(0), k(0), k(0), k(0), k(1)});
  CHECK(g2_count_points(c, 1) == 4);
  CHECK(brute_count(c, 1) == 4);
}

TEST_CASE("point counts agree with exhaustive enumeration over F_q, q in {3,5,7,9,25}") {
  std::mt19937 rng(5);
  for (std::uint64_t p : {3, 5, 7}) {
    const PrimeField k(p);
    std::uniform_int_distribution<long long> coeff(0, static_cast<long long>(p) - 1);
    int made = 0;
    while (made < 6) {
      std::vector<Fp> h, f;
      for (int i = 0; i < 4; ++i) h.push_back(k(coeff(rng)));
      for (int i = 0; i < 7; ++i) f.push_back(k(coeff(rng)));
      try {
        const G2CurveP c{Poly<Fp>(h), Poly<Fp>(f)};
        ++made;
        CHECK(g2_count_points(c, 1) == brute_count(c, 1));
        if (p <= 5) CHECK(g2_count_points(c, 2) == brute_count(c, 2));
      } catch (const Error& e) {
        REQUIRE(e.code() == Errc::SingularOrWrongGenus);
      }
    }
  }
}

TEST_CASE("fixture curves are valid and counts match brute force at a good prime") {
  const auto curves = load_named_curves(data_dir() / "curves.txt");
  CHECK(curves.size() == 9);
  const G2CurveQ& c70 = find_curve(curves, "C70");
  const std::uint64_t p = first_good_odd_primes(c70, 1).front();
  const G2CurveP cp = g2_reduce(c70, p);
  CHECK(g2_count_points(cp, 1) == brute_count(cp, 1));
  CHECK(g2_count_points(cp, 2) == brute_count(cp, 2));
  CHECK(g2_jacobian_order(c70, p).jac_order % 70 == 0);
  const auto table = load_small_table(data_dir() / "small_torsion.txt");
  CHECK(table.size() == 13);
}

TEST_CASE("Jacobian orders of the order-28 curves") {
  const auto curves = load_named_curves(data_dir() / "curves.txt");
  for (int i = 1; i <= 5; ++i) {
    const G2CurveQ& c = find_curve(curves, "C28_" + std::to_string(i));
    const auto primes = first_good_odd_primes(c, 10);
    REQUIRE(primes.size() == 10);
    for (std::uint64_t p : primes) {
      const JacOrderRecord r = g2_jacobian_order(c, p);
      CHECK(r.jac_order % 28 == 0);
      CHECK((r.n1 * r.n1 + r.n2) % 2 == 0);
      const double sq = std::sqrt(static_cast<double>(p));
      CHECK(static_cast<double>(r.jac_order) >= std::pow(sq - 1, 4) - 1e-9);
      CHECK(static_cast<double>(r.jac_order) <= std::pow(sq + 1, 4) + 1e-9);
      CHECK(within_weil_interval(p, r.jac_order));
    }
  }
}

TEST_CASE("bad reduction") {
  const auto curves = load_named_curves(data_dir() / "curves.txt");
  const G2CurveQ& c = find_curve(curves, "C28_4");
  CHECK_FALSE(g2_good_prime(c, 439));
  CHECK_THROWS_AS(g2_reduce(c, 439), Error);
  CHECK_THROWS_AS(g2_reduce(c, 2), Error);
  CHECK_THROWS_AS(g2_jacobian_order(c, 439), Error);
  for (std::uint64_t p : good_odd_primes(c, 200)) CHECK(p != 439);
}

TEST_CASE("order formula rejects inconsistent counts") {
  CHECK(jac_order_from_counts(5, 5, 41).jac_order == 28);
  CHECK_THROWS_AS(jac_order_from_counts(5, 5, 40), Error);
  CHECK_THROWS_AS(jac_order_from_counts(5, 30, 30), Error);
  CHECK_FALSE(within_weil_interval(5, 200));
}
