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

#ifndef G2T_RATIONAL_HPP
#define G2T_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace g2t {

using Integer = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline Rat from_int(long n, const Rat&) { return Rat(n); }
inline unsigned long characteristic(const Rat&) { return 0; }

/// n/d in lowest terms; d must be nonzero.
Rat make_rat(const Integer& n, const Integer& d);

/// Parses "a" or "a/b" (optional sign on a, b > 0) into lowest terms.
Rat parse_rat(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Rat& x);
std::string to_string(const Integer& x);

/// Exact square root in Q, if x is the square of a rational. Returns the
/// nonnegative root.
std::optional<Rat> rat_sqrt(const Rat& x);

/// max(|numerator|, denominator)
Integer height(const Rat& x);

}  // namespace g2t

#endif
