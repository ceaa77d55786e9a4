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

#include "g2t/text.hpp"

#include <cctype>

#include "g2t/error.hpp"
#include "g2t/ratfn.hpp"

namespace g2t {

namespace {

/// Cursor over a single-line text form.
class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end() {
    skip_space();
    return i_ == s_.size();
  }
  bool try_literal(std::string_view lit) {
    skip_space();
    if (s_.substr(i_, lit.size()) != lit) return false;
    i_ += lit.size();
    return true;
  }
  void expect(std::string_view lit) {
    if (!try_literal(lit)) fail("expected '" + std::string(lit) + "'");
  }
  /// Text up to, excluding, the closing character.
  std::string_view until(char close) {
    const std::size_t j = s_.find(close, i_);
    if (j == std::string_view::npos) fail(std::string("missing '") + close + "'");
    const std::string_view out = s_.substr(i_, j - i_);
    i_ = j + 1;
    return out;
  }
  std::string_view word() {
    skip_space();
    const std::size_t start = i_;
    while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    return s_.substr(start, i_ - start);
  }
  std::vector<Rat> bracket_list() {
    expect("[");
    return parse_rat_list(until(']'));
  }
  void finish() {
    if (!at_end()) fail("trailing text");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, what + " in \"" + std::string(s_) + "\"");
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t j = text.find(',', start);
    out.emplace_back(trim(text.substr(start, j == std::string_view::npos ? std::string_view::npos : j - start)));
    if (j == std::string_view::npos) break;
    start = j + 1;
  }
  return out;
}

std::vector<Rat> parse_rat_list(std::string_view text) {
  std::vector<Rat> out;
  for (const auto& item : split_list(text)) out.push_back(parse_rat(item));
  return out;
}

std::string format_poly(const Poly<Rat>& a, std::size_t min_len) {
  std::string s = "[";
  const std::size_t n = std::max(a.size(), min_len);
  for (std::size_t i = 0; i < n; ++i) {
    if (i) s += ",";
    s += i < a.size() ? to_string(a[i]) : "0";
  }
  return s + "]";
}

std::string format_poly(const Poly<Fp>& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i].value());
  }
  return s + "]";
}

Poly<Rat> parse_poly(std::string_view text) {
  Scanner sc(text);
  Poly<Rat> out(sc.bracket_list());
  sc.finish();
  return out;
}

std::string format_curve(const G2CurveQ& c) {
  return "g2 " + format_poly(c.h(), 4) + " " + format_poly(c.f(), 7);
}

G2CurveQ parse_curve(std::string_view text) {
  Scanner sc(text);
  sc.expect("g2");
  std::vector<Rat> h = sc.bracket_list();
  std::vector<Rat> f = sc.bracket_list();
  sc.finish();
  if (h.size() > 4 || f.size() > 7) sc.fail("too many coefficients");
  return G2CurveQ(Poly<Rat>(std::move(h)), Poly<Rat>(std::move(f)));
}

std::string format_ell(const EllCurve<Rat>& e) {
  return "ell [" + to_string(e.a1) + "," + to_string(e.a2) + "," + to_string(e.a3) + "," + to_string(e.a4) +
         "," + to_string(e.a6) + "]";
}

EllCurve<Rat> parse_ell(std::string_view text) {
  Scanner sc(text);
  sc.expect("ell");
  std::vector<Rat> a = sc.bracket_list();
  sc.finish();
  if (a.size() != 5) sc.fail("expected five coefficients");
  return ell_make(a[0], a[1], a[2], a[3], a[4]);
}

std::string format_point(const EllPoint<Rat>& p) {
  if (p.infinity) return "inf";
  return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

EllPoint<Rat> parse_point(std::string_view text) {
  Scanner sc(text);
  if (sc.try_literal("inf")) {
    sc.finish();
    return EllPoint<Rat>::at_infinity();
  }
  sc.expect("(");
  std::vector<Rat> xy = parse_rat_list(sc.until(')'));
  sc.finish();
  if (xy.size() != 2) sc.fail("expected two coordinates");
  return EllPoint<Rat>::affine(xy[0], xy[1]);
}

std::string format_divisor(const MumfordDiv<Rat>& d) {
  return "mumford " + format_poly(d.u) + " " + format_poly(d.v) + " " + std::to_string(d.balance);
}

std::string format_divisor(const MumfordDiv<Fp>& d) {
  return "mumford " + format_poly(d.u) + " " + format_poly(d.v) + " " + std::to_string(d.balance);
}

MumfordDiv<Rat> parse_divisor(std::string_view text) {
  Scanner sc(text);
  sc.expect("mumford");
  MumfordDiv<Rat> d;
  d.u = Poly<Rat>(sc.bracket_list());
  d.v = Poly<Rat>(sc.bracket_list());
  const std::string_view b = sc.word();
  if (b.empty()) sc.fail("missing balance");
  try {
    std::size_t used = 0;
    d.balance = std::stoi(std::string(b), &used);
    if (used != b.size()) sc.fail("bad balance");
  } catch (const std::logic_error&) {
    sc.fail("bad balance");
  }
  sc.finish();
  return d;
}

}  // namespace g2t
