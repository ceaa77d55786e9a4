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

#ifndef G2T_TEXT_HPP
#define G2T_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "g2t/elliptic.hpp"
#include "g2t/genus2.hpp"
#include "g2t/jacobian.hpp"
#include "g2t/poly.hpp"
#include "g2t/rational.hpp"

namespace g2t {

// Text forms:
//   polynomial  [c0,c1,...]            ascending, "[]" for zero
//   genus 2     g2 [h0,...,h3] [f0,...,f6]
//   elliptic    ell [a1,a2,a3,a4,a6]
//   point       (x,y) or inf
//   divisor     mumford [u] [v] balance
// Parsers throw ParseError on malformed input.

std::string format_poly(const Poly<Rat>& a, std::size_t min_len = 0);
std::string format_poly(const Poly<Fp>& a);
Poly<Rat> parse_poly(std::string_view text);
std::vector<Rat> parse_rat_list(std::string_view text);

std::string format_curve(const G2CurveQ& c);
G2CurveQ parse_curve(std::string_view text);

std::string format_ell(const EllCurve<Rat>& e);
EllCurve<Rat> parse_ell(std::string_view text);
std::string format_point(const EllPoint<Rat>& p);
EllPoint<Rat> parse_point(std::string_view text);

std::string format_divisor(const MumfordDiv<Rat>& d);
std::string format_divisor(const MumfordDiv<Fp>& d);
MumfordDiv<Rat> parse_divisor(std::string_view text);

/// Splits on commas, trimming blanks; empty input gives an empty list.
std::vector<std::string> split_list(std::string_view text);
std::string_view trim(std::string_view s);

}  // namespace g2t

#endif
