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

#include <random>

#include "g2t/catalog.hpp"
#include "g2t/classgroup.hpp"
#include "g2t/error.hpp"
#include "g2t/jacobian.hpp"
#include "g2t/torsion.hpp"

using namespace g2t;

namespace {

const G2CurveQ& fixture(const std::string& name) {
  static const auto curves = load_named_curves(data_dir() / "curves.txt");
  return find_curve(curves, name);
}

MumfordDiv<Rat> c70_divisor() { return load_divisor(data_dir() / "c70_divisor.txt"); }

Poly<Rat> zpoly(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return Poly<Rat>(std::move(v));
}

G2CurveP random_curve(std::mt19937& rng, std::uint64_t p, int deg_F) {
  const PrimeField k(p);
  std::uniform_int_distribution<long long> coeff(0, static_cast<long long>(p) - 1);
  while (true) {
    std::vector<Fp> h, f;
    for (int i = 0; i < 4; ++i) h.push_back(k(coeff(rng)));
    for (int i = 0; i < 7; ++i) f.push_back(k(coeff(rng)));
    try {
      G2CurveP c{Poly<Fp>(h), Poly<Fp>(f)};
      if (c.deg_F() == deg_F) return c;
    } catch (const Error& e) {
      REQUIRE(e.code() == Errc::SingularOrWrongGenus);
    }
  }
}

std::vector<AffinePoint<Fp>> affine_points(const G2CurveP& c) {
  const std::uint64_t p = c.zero().modulus();
  std::vector<AffinePoint<Fp>> pts;
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y)
      if (g2_on_curve(c, {Fp(x, p), Fp(y, p)})) pts.emplace_back(Fp(x, p), Fp(y, p));
  return pts;
}

}  // namespace

TEST_CASE("divisor from points") {
  const G2CurveQ& c70 = fixture("C70");
  const auto d = divisor_from_points(c70, {{Rat(2), Rat(17)}, {Rat(4), Rat(23)}});
  CHECK(d.u == zpoly({8, -6, 1}));
  CHECK(d.v == zpoly({11, 3}));
  CHECK(d == c70_divisor());
  CHECK(jac_is_identity(c70, divisor_from_points(c70, {})));
  const auto single = divisor_from_points(c70, {{Rat(2), Rat(17)}});
  CHECK(single.u == zpoly({-2, 1}));
  CHECK(single.v == zpoly({17}));
  CHECK(jac_is_valid(c70, single));
  CHECK_THROWS_AS(divisor_from_points(c70, {{Rat(2), Rat(18)}}), Error);
  // a point and its image under the involution cancel
  const Rat y2 = -Rat(17) - c70.h().evaluate(Rat(2));
  CHECK(jac_is_identity(c70, divisor_from_points(c70, {{Rat(2), Rat(17)}, {Rat(2), y2}})));
}

TEST_CASE("group laws over Q on C70") {
  const G2CurveQ& c = fixture("C70");
  const auto d = c70_divisor();
  const auto id = jac_identity(c);
  CHECK(jac_add(c, d, id) == d);
  CHECK(jac_add(c, id, d) == d);
  CHECK(jac_is_identity(c, jac_add(c, d, jac_negate(c, d))));
  CHECK(jac_is_identity(c, jac_scalar_mul(c, 0, d)));
  CHECK(jac_scalar_mul(c, 2, d) == jac_add(c, d, d));
  CHECK(jac_scalar_mul(c, -3, d) == jac_negate(c, jac_scalar_mul(c, 3, d)));
  CHECK(jac_is_identity(c, jac_scalar_mul(c, 70, d)));
  for (long long k : {35, 14, 10}) CHECK_FALSE(jac_is_identity(c, jac_scalar_mul(c, k, d)));
  auto acc = id;
  for (int i = 1; i <= 70; ++i) {
    acc = jac_add(c, acc, d);
    CHECK(jac_is_valid(c, acc));
    CHECK(jac_is_identity(c, acc) == (i == 70));
  }
}

TEST_CASE("negation and membership on an odd model") {
  // y^2 + y = x^5 - x has a single point at infinity
  const G2CurveQ c(zpoly({1}), zpoly({0, -1, 0, 0, 0, 1}));
  CHECK(c.odd());
  const auto pts = small_rational_points(c, 5);
  REQUIRE(pts.size() >= 2);
  const auto d = divisor_from_points(c, {pts[0]});
  const auto e = divisor_from_points(c, {pts[0], pts[1]});
  CHECK(jac_is_identity(c, jac_add(c, d, jac_negate(c, d))));
  CHECK(jac_add(c, d, e) == jac_add(c, e, d));
  CHECK(jac_is_valid(c, jac_add(c, d, e)));
  CHECK(jac_sub(c, jac_add(c, d, e), e) == d);
}

TEST_CASE("element orders over F_p") {
  const G2CurveQ& c70 = fixture("C70");
  for (std::uint64_t p : first_good_odd_primes(c70, 4)) {
    const G2CurveP cp = g2_reduce(c70, p);
    const auto rec = g2_jacobian_order(cp);
    const auto dp = jac_reduce_divisor(cp, c70_divisor());
    CHECK(jac_element_order(cp, dp, rec.jac_order) == 70);
    CHECK(jac_element_order(cp, jac_identity(cp), rec.jac_order) == 1);
  }
  std::mt19937 rng(13);
  for (std::uint64_t p : {11, 13}) {
    for (int deg : {5, 6}) {
      const G2CurveP c = random_curve(rng, p, deg);
      const auto n = g2_jacobian_order(c).jac_order;
      const auto pts = affine_points(c);
      REQUIRE_FALSE(pts.empty());
      std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
      for (int t = 0; t < 50; ++t) {
        const auto d = divisor_from_points(c, {pts[pick(rng)], pts[pick(rng)]});
        CHECK(jac_is_identity(c, jac_scalar_mul(c, static_cast<long long>(n), d)));
        CHECK(n % jac_element_order(c, d, n) == 0);
      }
    }
  }
}

TEST_CASE("reduction commutes with addition") {
  for (const char* name : {"C70", "C28_1", "C28_2"}) {
    const G2CurveQ& c = fixture(name);
    const auto pts = small_rational_points(c, 12, 8);
    REQUIRE(pts.size() >= 3);
    std::vector<MumfordDiv<Rat>> divs;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) divs.push_back(divisor_from_points(c, {pts[i], pts[i + 1]}));
    divs.push_back(divisor_from_points(c, {pts.front()}));
    for (std::uint64_t p : first_good_odd_primes(c, 3)) {
      const G2CurveP cp = g2_reduce(c, p);
      for (const auto& a : divs)
        for (const auto& b : divs) {
          const auto sum = jac_add(c, a, b);
          try {
            CHECK(jac_reduce_divisor(cp, sum) == jac_add(cp, jac_reduce_divisor(cp, a), jac_reduce_divisor(cp, b)));
          } catch (const Error& e) {
            // a denominator divisible by p: not comparable at this prime
            CHECK(e.code() == Errc::BadPrime);
          }
        }
    }
  }
}

TEST_CASE("class group oracle over F_3 and F_5") {
  std::mt19937 rng(17);
  for (std::uint64_t p : {3, 5}) {
    for (int i = 0; i < 5; ++i) {
      const G2CurveP c = random_curve(rng, p, i % 2 ? 6 : 5);
      const ClassGroupTable t = class_group_bruteforce(c);
      const auto rec = g2_jacobian_order(c);
      CHECK(t.size() == rec.jac_order);
      CHECK(t.size() == (rec.n1 * rec.n1 + rec.n2) / 2 - p);
      for (std::size_t a = 0; a < t.size(); ++a) {
        CHECK(t.sum[t.identity][a] == a);
        for (std::size_t b = 0; b < t.size(); ++b) {
          const auto s = jac_add(c, t.elements[a], t.elements[b]);
          CHECK(jac_is_valid(c, s));
          CHECK(s == t.elements[t.sum[a][b]]);
        }
      }
      if (p == 3) {
        for (std::size_t a = 0; a < t.size(); ++a)
          for (std::size_t b = 0; b < t.size(); ++b)
            for (std::size_t d = 0; d < t.size(); ++d) CHECK(t.sum[t.sum[a][b]][d] == t.sum[a][t.sum[b][d]]);
      }
    }
  }
}

TEST_CASE("sampled associativity over F_5 and F_7") {
  std::mt19937 rng(19);
  std::size_t triples = 0;
  for (std::uint64_t p : {5, 7}) {
    for (int deg : {5, 6}) {
      const G2CurveP c = random_curve(rng, p, deg);
      const auto elems = enumerate_canonical_divisors(c);
      CHECK(elems.size() == g2_jacobian_order(c).jac_order);
      std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
      for (int t = 0; t < 2500; ++t) {
        const auto& a = elems[pick(rng)];
        const auto& b = elems[pick(rng)];
        const auto& d = elems[pick(rng)];
        CHECK(jac_add(c, jac_add(c, a, b), d) == jac_add(c, a, jac_add(c, b, d)));
        ++triples;
      }
    }
  }
  CHECK(triples >= 10000);
}

TEST_CASE("invalid divisors are rejected") {
  const G2CurveQ& c = fixture("C70");
  CHECK_THROWS_AS(jac_add(c, MumfordDiv<Rat>{zpoly({8, -6, 1}), zpoly({11, 4}), 0}, jac_identity(c)), Error);
  CHECK_THROWS_AS(jac_element_order(c, c70_divisor(), 0), Error);
  CHECK_THROWS_AS(jac_element_order(c, c70_divisor(), 35), Error);
}
