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

#ifndef G2T_TORSION_HPP
#define G2T_TORSION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g2t/genus2.hpp"
#include "g2t/jacobian.hpp"

namespace g2t {

/// gcd of #J(F_p) over the odd good primes used. Rational torsion injects
/// into J(F_p) at these primes, so every torsion order divides it.
struct TorsionBound {
  std::vector<JacOrderRecord> records;
  std::uint64_t bound = 0;
};

/// NoGoodPrimes when fewer than two odd good primes lie below the limit.
TorsionBound torsion_bound(const G2CurveQ& c, std::uint64_t prime_limit, unsigned jobs = 0);

struct WitnessOrder {
  std::uint64_t p = 0;
  std::uint64_t jac_order = 0;
  std::uint64_t order = 0;
};

struct ExactCheck {
  std::uint64_t k = 0;
  bool is_identity = false;
};

struct TorsionCertificate {
  G2CurveQ curve;
  MumfordDiv<Rat> divisor;
  std::uint64_t order = 0;
  std::vector<WitnessOrder> witnesses;
  std::vector<ExactCheck> exact_checks;
};

/// Proves n D = 0 and (n/l) D != 0 for each prime l | n in exact arithmetic,
/// then records the reduced order at the smallest odd good primes where D
/// reduces. OrderMismatch names the first failing check.
TorsionCertificate certify_order(const G2CurveQ& c, const MumfordDiv<Rat>& d, std::uint64_t n,
                                 std::size_t witness_count = 2);

/// Searches classes built from rational points with x = a/b,
/// max(|a|, b) <= height_bound, and their multiples, for one of exact
/// order n. nullopt is not a proof that none exists.
std::optional<MumfordDiv<Rat>> find_torsion_divisor(const G2CurveQ& c, std::uint64_t n, long height_bound);

/// Rational points (x, y) with x of height at most the bound, ordered by
/// height and then by value.
std::vector<AffinePoint<Rat>> small_rational_points(const G2CurveQ& c, long height_bound,
                                                    std::size_t max_points = 64);

std::string certificate_block(const TorsionCertificate& cert);
std::string certificate_line(const TorsionCertificate& cert);

}  // namespace g2t

#endif
