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

#include "g2t/rational.hpp"

#include <cctype>

#include "g2t/error.hpp"

namespace g2t {

namespace {

bool valid_integer_text(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer integer_from(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!valid_integer_text(text, true)) {
    throw Error(Errc::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  return integer_from(text);
}

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text));
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!valid_integer_text(num, true) || !valid_integer_text(den, false)) {
    throw Error(Errc::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  Integer d = integer_from(den);
  if (d == 0) throw Error(Errc::ParseError, "zero denominator: '" + std::string(text) + "'");
  Rat r(integer_from(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Integer& x) { return x.get_str(10); }

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str(10);
  return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

Rat make_rat(const Integer& n, const Integer& d) {
  if (sgn(d) == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::optional<Rat> rat_sqrt(const Rat& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) {
    return std::nullopt;
  }
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  return Rat(n, d);
}

Integer height(const Rat& x) {
  Integer n = abs(x.get_num());
  return n > x.get_den() ? n : Integer(x.get_den());
}

}  // namespace g2t
