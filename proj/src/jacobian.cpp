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

#include "g2t/jacobian.hpp"

namespace g2t {

std::vector<std::pair<std::uint64_t, int>> factor_small(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e) out.emplace_back(q, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

MumfordDiv<Fp> jac_reduce_divisor(const G2CurveP& cp, const MumfordDiv<Rat>& d) {
  const std::uint64_t p = cp.zero().modulus();
  auto lift = [p](const Poly<Rat>& a) {
    std::vector<Fp> c;
    for (std::size_t i = 0; i < a.size(); ++i) c.push_back(rat_mod_p(a[i], p));
    return Poly<Fp>(std::move(c));
  };
  MumfordDiv<Fp> r{lift(d.u), lift(d.v), d.balance};
  jac_require_valid(cp, r);
  return r;
}

}  // namespace g2t
