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

#include <string>

#include "g2t/catalog.hpp"
#include "g2t/error.hpp"
#include "g2t/text.hpp"
#include "g2t/torsion.hpp"

using namespace g2t;

namespace {

const std::vector<NamedCurve>& fixtures() {
  static const auto curves = load_named_curves(data_dir() / "curves.txt");
  return curves;
}

}  // namespace

TEST_CASE("torsion bounds") {
  const G2CurveQ& c70 = find_curve(fixtures(), "C70");
  const TorsionBound b70 = torsion_bound(c70, 200);
  CHECK(b70.bound % 70 == 0);
  CHECK_FALSE(b70.records.empty());
  for (const auto& r : b70.records) CHECK(r.jac_order % b70.bound == 0);
  CHECK(torsion_bound(find_curve(fixtures(), "C28_1"), 200).bound % 28 == 0);
  CHECK(torsion_bound(c70, 200, 1).bound == torsion_bound(c70, 200, 4).bound);
  try {
    torsion_bound(c70, 3);
    FAIL("expected NoGoodPrimes");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoGoodPrimes);
  }
}

TEST_CASE("certifying the order-70 class") {
  const G2CurveQ& c = find_curve(fixtures(), "C70");
  const auto d = load_divisor(data_dir() / "c70_divisor.txt");
  const TorsionCertificate cert = certify_order(c, d, 70);
  CHECK(cert.order == 70);
  REQUIRE(cert.witnesses.size() == 2);
  for (const auto& w : cert.witnesses) {
    CHECK(w.order == 70);
    CHECK(w.jac_order % 70 == 0);
  }
  CHECK(torsion_bound(c, 200).bound % cert.order == 0);
  CHECK(certificate_line(cert) ==
        "cert g2 [110,-41,-3,2] [179,425,-51,1,0,0,0] | mumford [8,-6,1] [11,3] 0 | order 70 | witnesses 5:70,7:70");
  CHECK(certificate_block(cert).find("exact    35*D != 0") != std::string::npos);
}

TEST_CASE("wrong orders are rejected") {
  const G2CurveQ& c = find_curve(fixtures(), "C70");
  const auto d = load_divisor(data_dir() / "c70_divisor.txt");
  for (std::uint64_t n : {35, 14, 10, 140}) {
    try {
      certify_order(c, d, n);
      FAIL("expected OrderMismatch for n = " << n);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::OrderMismatch);
      if (n == 35) CHECK(std::string(e.what()).find("35*D = identity fails") != std::string::npos);
    }
  }
  const TorsionCertificate trivial = certify_order(c, jac_identity(c), 1);
  CHECK(trivial.order == 1);
}

TEST_CASE("small rational points") {
  const G2CurveQ& c = find_curve(fixtures(), "C70");
  const auto pts = small_rational_points(c, 10);
  bool has2 = false, has4 = false;
  for (const auto& [x, y] : pts) {
    CHECK(g2_on_curve(c, {x, y}));
    CHECK(height(x) <= 10);
    has2 = has2 || (x == 2 && y == 17);
    has4 = has4 || (x == 4 && y == 23);
  }
  CHECK(has2);
  CHECK(has4);
  CHECK(small_rational_points(c, 10) == pts);
}

TEST_CASE("divisor search") {
  const G2CurveQ& c70 = find_curve(fixtures(), "C70");
  const auto found = find_torsion_divisor(c70, 70, 10);
  REQUIRE(found.has_value());
  CHECK(certify_order(c70, *found, 70).order == 70);
  CHECK_FALSE(find_torsion_divisor(c70, 70, 0).has_value());
  // best effort: any divisor returned must carry the order
  const G2CurveQ& c28 = find_curve(fixtures(), "C28_2");
  const auto d28 = find_torsion_divisor(c28, 28, 20);
  MESSAGE("C28_2 order-28 divisor at height 20: " << (d28 ? format_divisor(*d28) : std::string("none")));
  if (d28) CHECK(certify_order(c28, *d28, 28).order == 28);
}

TEST_CASE("divisors found for the small-coefficient table are certified") {
  for (const auto& sc : load_small_table(data_dir() / "small_torsion.txt")) {
    const auto n = static_cast<std::uint64_t>(sc.order);
    const auto d = find_torsion_divisor(sc.curve, n, 20);
    if (!d) continue;
    CHECK(certify_order(sc.curve, *d, n).order == n);
    CHECK(torsion_bound(sc.curve, 100).bound % n == 0);
  }
}
