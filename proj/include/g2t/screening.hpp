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

#ifndef G2T_SCREENING_HPP
#define G2T_SCREENING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "g2t/elliptic.hpp"

namespace g2t {

struct EllRecord {
  std::string label;
  EllCurve<Rat> curve;
  long torsion_order = 1;
  std::optional<EllPoint<Rat>> torsion_point;
};

/// One record per line: "label [a1,a2,a3,a4,a6] N" optionally followed by
/// "point (x,y)". Blank lines and lines starting with '#' are ignored.
/// ParseError for malformed lines, InvariantError when N is not a possible
/// rational torsion order or the point does not have order N; both carry the
/// line number.
std::vector<EllRecord> parse_cremona(std::string_view text);

/// N1 N2 for coprime orders prime to 3; N1 N2 / 3 when both are divisible
/// by 3 and N1/3, N2/3 are coprime; nullopt otherwise.
std::optional<long> combined_order(long n1, long n2);

/// a_p at the odd primes up to the limit where the model has good reduction.
std::map<std::uint64_t, long long> frobenius_traces(const EllCurve<Rat>& e, std::uint64_t prime_limit);

/// True iff a_p(E1) = a_p(E2) mod 3 at every common odd good prime up to the
/// limit. TooFewPrimes if there are fewer than three such primes.
bool glue_screen(const EllRecord& e1, const EllRecord& e2, std::uint64_t prime_limit);

struct ScreenedPair {
  std::string label1;
  std::string label2;
  long combined = 0;
};

/// Cross pairs (e1 in pool1, e2 in pool2) whose torsion orders match one of
/// the requested (N1, N2) and that pass glue_screen, in pool order.
std::vector<ScreenedPair> screen_pools(const std::vector<EllRecord>& pool1, const std::vector<EllRecord>& pool2,
                                       const std::vector<std::pair<long, long>>& pairs,
                                       std::uint64_t prime_limit, unsigned jobs = 0);

}  // namespace g2t

#endif
