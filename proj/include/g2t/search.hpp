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

#ifndef G2T_SEARCH_HPP
#define G2T_SEARCH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2t/genus2.hpp"
#include "g2t/jacobian.hpp"

namespace g2t {

/// Inclusive integer range per coefficient of h (h0..h3) and f (f0..f6).
struct SearchBox {
  std::array<std::pair<long, long>, 4> h{};
  std::array<std::pair<long, long>, 7> f{};

  /// rhs_degree 2: 1 <= h3 <= a, 0 <= h2 <= a, |h1|, |h0| <= a, |f0..f2| <= b,
  /// f3..f6 = 0 (the sign changes x -> -x, y -> -y make h3 > 0, h2 >= 0
  /// general). rhs_degree 6: |hi| <= a, |fi| <= b without normalization.
  static SearchBox from_bounds(long a_bound, long b_bound, int rhs_degree);
  std::uint64_t size() const;
};

struct SearchConfig {
  long a_bound = 10;
  long b_bound = 10;
  int rhs_degree = 2;
  std::vector<long> interesting_orders{27, 28, 29, 31, 33, 34, 36, 39};
  std::vector<std::uint64_t> screen_primes{3, 5, 7, 11, 13, 17, 19, 23};
  /// Overrides the box built from the bounds.
  std::optional<SearchBox> box;
  /// Candidates need this many good screen primes.
  std::size_t min_good_primes = 3;
  /// Height bound for the divisor search on each candidate; 0 disables it.
  long divisor_height = 0;
  unsigned jobs = 0;
};

struct CandidateReport {
  G2CurveQ curve;
  std::vector<JacOrderRecord> records;
  std::vector<long> orders;
  std::optional<MumfordDiv<Rat>> divisor;
  long divisor_order = 0;
};

struct SearchSummary {
  std::uint64_t examined = 0;
  std::uint64_t singular = 0;
  std::uint64_t too_few_primes = 0;
  std::uint64_t emitted = 0;
};

struct SearchResult {
  std::vector<CandidateReport> reports;
  SearchSummary summary;
};

/// Emits the curves in the box for which some interesting order divides
/// #J(F_p) at every good screen prime. Reports are sorted by coefficients
/// (h3, h2, h1, h0, f6, ..., f0), independent of the worker count.
SearchResult small_search(const SearchConfig& cfg);

/// "g2 [...] [...] | primes p:N ... | orders n1,n2 | divisor <mumford ...|none>"
std::string format_report(const CandidateReport& r);
std::string format_summary(const SearchSummary& s);

}  // namespace g2t

#endif
