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

#include <set>

#include "g2t/catalog.hpp"
#include "g2t/error.hpp"
#include "g2t/screening.hpp"

using namespace g2t;

namespace {

const std::vector<EllRecord>& pool(int order) {
  static const auto p4 = load_pool(data_dir() / "pool_order4.txt");
  static const auto p7 = load_pool(data_dir() / "pool_order7.txt");
  static const auto p10 = load_pool(data_dir() / "pool_order10.txt");
  return order == 4 ? p4 : order == 7 ? p7 : p10;
}

const EllRecord& record(const std::string& label) {
  for (int n : {4, 7, 10})
    for (const auto& r : pool(n))
      if (r.label == label) return r;
  throw Error(Errc::InvalidArgument, label);
}

/// a_p by counting y^2 = x^3 + a4 x + a6 over F_p with an explicit loop.
long long trace_by_loop(const EllRecord& r, std::uint64_t p) {
  const Fp a4 = rat_mod_p(r.curve.a4, p), a6 = rat_mod_p(r.curve.a6, p);
  long long n = 1;
  for (std::uint64_t x = 0; x < p; ++x) {
    const Fp X(x, p);
    n += 1 + quad_char(X * X * X + a4 * X + a6);
  }
  return static_cast<long long>(p) + 1 - n;
}

}  // namespace

TEST_CASE("parsing records") {
  const auto recs = parse_cremona("26b1 [0,0,0,-3483,121014] 7 point (27,216)\n");
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].label == "26b1");
  CHECK(recs[0].torsion_order == 7);
  REQUIRE(recs[0].torsion_point.has_value());
  CHECK(parse_cremona("").empty());
  CHECK(parse_cremona("# only a comment\n\n").size() == 0);
  try {
    parse_cremona("x [0,0,0,1,1] 11");
    FAIL("expected InvariantError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvariantError);
  }
  try {
    parse_cremona("ok [0,0,0,-3483,121014] 7\nbad [0,0,0,-3483,121014] 5 point (27,216)\n");
    FAIL("expected InvariantError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvariantError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_cremona("26b1 [0,0,0,-3483] 7"), Error);
}

TEST_CASE("combined orders") {
  CHECK(combined_order(4, 7) == std::optional<long>(28));
  CHECK(combined_order(7, 10) == std::optional<long>(70));
  CHECK(combined_order(3, 6) == std::optional<long>(6));
  CHECK(combined_order(7, 4) == combined_order(4, 7));
  for (long n : {1, 2, 4, 5, 7, 8, 10}) CHECK(combined_order(n, 1) == std::optional<long>(n));
}

TEST_CASE("Frobenius traces agree with an explicit loop") {
  for (const char* label : {"26b1", "858k1", "66c2", "182a1"}) {
    const EllRecord& r = record(label);
    const auto traces = frobenius_traces(r.curve, 100);
    CHECK(traces.size() >= 10);
    for (const auto& [p, a] : traces) CHECK(a == trace_by_loop(r, p));
  }
}

TEST_CASE("glue screen") {
  CHECK(glue_screen(record("858k1"), record("66c2"), 200));
  CHECK(glue_screen(record("66c2"), record("858k1"), 200));
  CHECK(glue_screen(record("26b1"), record("26b1"), 200));
  // a pair whose traces differ mod 3 at p = 5 fails
  std::vector<EllRecord> cands = pool(4);
  for (const auto& r : pool(7)) cands.push_back(r);
  for (long a4 : {1, -1, 2, 3})
    cands.push_back({"aux" + std::to_string(a4), ell_make(Rat(0), Rat(0), Rat(0), Rat(a4), Rat(1)), 1, std::nullopt});
  bool tested = false;
  for (const auto& a : cands)
    for (const auto& b : cands) {
      if (tested || !ell_good_prime(a.curve, 5) || !ell_good_prime(b.curve, 5)) continue;
      if ((trace_by_loop(a, 5) - trace_by_loop(b, 5)) % 3 == 0) continue;
      CHECK_FALSE(glue_screen(a, b, 200));
      tested = true;
    }
  CHECK(tested);
  try {
    glue_screen(record("858k1"), record("66c2"), 5);
    FAIL("expected TooFewPrimes");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooFewPrimes);
  }
}

TEST_CASE("screening the fixture pools") {
  const auto found = screen_pools(pool(4), pool(7), {{4, 7}}, 200);
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& sp : found) {
    got.emplace(sp.label1, sp.label2);
    CHECK(sp.combined == 28);
  }
  const auto expected = load_label_pairs(data_dir() / "gluing_pairs.txt");
  CHECK(got == std::set<std::pair<std::string, std::string>>(expected.begin(), expected.end()));
  CHECK(found.size() == 5);

  const auto seventy = screen_pools(pool(7), pool(10), {{7, 10}}, 200);
  REQUIRE(seventy.size() == 1);
  CHECK(seventy[0].label1 == "858k1");
  CHECK(seventy[0].label2 == "66c2");
  CHECK(seventy[0].combined == 70);

  CHECK(screen_pools({}, pool(7), {{4, 7}}, 200).empty());
  CHECK(screen_pools(pool(4), pool(7), {{7, 10}}, 200).empty());
  const auto serial = screen_pools(pool(4), pool(7), {{4, 7}}, 200, 1);
  REQUIRE(serial.size() == found.size());
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].label1 == found[i].label1);
}
