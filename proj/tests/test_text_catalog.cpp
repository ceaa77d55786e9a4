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

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "g2t/catalog.hpp"
#include "g2t/error.hpp"
#include "g2t/text.hpp"

using namespace g2t;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("g2t_test_" + name);
  std::ofstream(path) << content;
  return path;
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("polynomial text form") {
  const Poly<Rat> g = parse_poly("[0,256,-31,1]");
  CHECK(g.degree() == 3);
  CHECK(g[2] == Rat(-31));
  CHECK(format_poly(g) == "[0,256,-31,1]");
  CHECK(format_poly(g, 7) == "[0,256,-31,1,0,0,0]");
  CHECK(format_poly(parse_poly("[ 1/2 , -3/4 ]")) == "[1/2,-3/4]");
  CHECK(format_poly(Poly<Rat>()) == "[]");
  CHECK(parse_poly("[]").is_zero());
  CHECK(parse_poly("[0,0]").is_zero());
  const PrimeField k(5);
  CHECK(format_poly(Poly<Fp>{k(1), k(-1)}) == "[1,4]");
  for (const char* bad : {"", "[1,2", "1,2]", "[1,,2]", "[a]", "[1/0]", "[1] x"})
    CHECK(code_of([&] { parse_poly(bad); }) == Errc::ParseError);
}

TEST_CASE("curve, point and divisor text forms round-trip") {
  const std::string line = "g2 [110,-41,-3,2] [179,425,-51,1,0,0,0]";
  CHECK(format_curve(parse_curve(line)) == line);
  CHECK(format_curve(parse_curve("g2 [0,1,1] [4,-10,-4,0,5,3,1]")) == "g2 [0,1,1,0] [4,-10,-4,0,5,3,1]");
  CHECK(code_of([] { parse_curve("g2 [0] [0,0,0,0,0,1]"); }) == Errc::SingularOrWrongGenus);
  CHECK(code_of([] { parse_curve("g3 [0] [1]"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_curve("g2 [0,0,0,0,1] [1]"); }) == Errc::ParseError);

  const std::string ell = "ell [0,14,0,196,0]";
  CHECK(format_ell(parse_ell(ell)) == ell);
  CHECK(code_of([] { parse_ell("[0,0,0,-3483,121014]"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_ell("ell [0,0,0]"); }) == Errc::ParseError);

  CHECK(format_point(parse_point("(7,-49)")) == "(7,-49)");
  CHECK(parse_point("inf").infinity);
  CHECK(format_point(EllPoint<Rat>::at_infinity()) == "inf");
  CHECK(format_point(parse_point("( 21/31 , 2 )")) == "(21/31,2)");
  CHECK(code_of([] { parse_point("(1,2"); }) == Errc::ParseError);

  const std::string div = "mumford [8,-6,1] [11,3] 0";
  CHECK(format_divisor(parse_divisor(div)) == div);
  CHECK(parse_divisor("mumford [1] [] 1").balance == 1);
  CHECK(code_of([] { parse_divisor("mumford [8,-6,1] [11,3]"); }) == Errc::ParseError);
}

TEST_CASE("list helpers") {
  CHECK(split_list("4:7, 7:10") == std::vector<std::string>{"4:7", "7:10"});
  CHECK(split_list("").empty());
  CHECK(trim("  a b ") == "a b");
  CHECK(parse_rat_list("1, -2/3") == std::vector<Rat>{Rat(1), Rat(-2, 3)});
}

TEST_CASE("fixture loading") {
  const auto dir = data_dir();
  CHECK(std::filesystem::exists(dir / "curves.txt"));
  const auto curves = load_named_curves(dir / "curves.txt");
  CHECK(curves.front().name == "C28_1");
  CHECK_THROWS_AS(find_curve(curves, "nope"), Error);
  CHECK(load_label_pairs(dir / "gluing_pairs.txt").size() == 5);
  CHECK(load_pool(dir / "pool_order4.txt").size() == 5);
  CHECK(load_divisor(dir / "c70_divisor.txt").u.degree() == 2);
  CHECK(code_of([&] { read_file(dir / "missing.txt"); }) == Errc::InvalidArgument);
}

TEST_CASE("malformed fixtures report the line") {
  const auto bad = temp_file("curves.txt", "# header\nA g2 [0,1,1] [4,-10,-4,0,5,3,1]\nB g2 [0 [1]\n");
  try {
    load_named_curves(bad);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  const auto badorder = temp_file("small.txt", "x27 g2 [1] [0,1,0,0,0,1]\n");
  CHECK(code_of([&] { load_small_table(badorder); }) == Errc::ParseError);
  const auto badpairs = temp_file("pairs.txt", "a b c\n");
  CHECK(code_of([&] { load_label_pairs(badpairs); }) == Errc::ParseError);
  std::filesystem::remove(bad);
  std::filesystem::remove(badorder);
  std::filesystem::remove(badpairs);
}

TEST_CASE("data directory override") {
  CHECK(data_dir(std::string("/somewhere")) == std::filesystem::path("/somewhere"));
  ::setenv("G2T_DATA_DIR", "/from/env", 1);
  CHECK(data_dir() == std::filesystem::path("/from/env"));
  CHECK(data_dir(std::string("/explicit")) == std::filesystem::path("/explicit"));
  ::unsetenv("G2T_DATA_DIR");
  CHECK(data_dir() != std::filesystem::path("/from/env"));
}
