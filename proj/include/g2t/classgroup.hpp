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

#ifndef G2T_CLASSGROUP_HPP
#define G2T_CLASSGROUP_HPP

#include <cstdint>
#include <vector>

#include "g2t/genus2.hpp"
#include "g2t/jacobian.hpp"

namespace g2t {

/// The full Jacobian of a curve over a small prime field, with an addition
/// table computed from Riemann-Roch rather than from Cantor's algorithm:
/// D_i + D_j = D_k exactly when some function in L(3 D_inf) (L(6 inf) on
/// degree-5 models) vanishes on E_i + E_j + iota(E_k), where E is the
/// effective degree-2 divisor behind each class.
struct ClassGroupTable {
  std::uint64_t q = 0;
  std::vector<MumfordDiv<Fp>> elements;
  std::vector<std::vector<std::uint32_t>> sum;
  std::uint32_t identity = 0;

  std::size_t size() const { return elements.size(); }
  /// Position of d in elements; NotFound when absent.
  std::uint32_t index_of(const MumfordDiv<Fp>& d) const;
};

/// Every canonical Mumford divisor on the curve, in a fixed order.
std::vector<MumfordDiv<Fp>> enumerate_canonical_divisors(const G2CurveP& c);

/// Builds the table for p <= 7. OracleMismatch if the number of divisors
/// differs from #J(F_p) or a sum is not determined uniquely.
ClassGroupTable class_group_bruteforce(const G2CurveP& c);

}  // namespace g2t

#endif
