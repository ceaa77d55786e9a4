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

#include "g2t/torsion.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <thread>

#include "g2t/text.hpp"

namespace g2t {

TorsionBound torsion_bound(const G2CurveQ& c, std::uint64_t prime_limit, unsigned jobs) {
  const std::vector<std::uint64_t> primes = good_odd_primes(c, prime_limit);
  if (primes.size() < 2)
    throw Error(Errc::NoGoodPrimes, "fewer than two odd good primes up to " + std::to_string(prime_limit));
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  TorsionBound tb;
  tb.records.resize(primes.size());
  std::vector<std::future<void>> work;
  for (unsigned w = 0; w < jobs; ++w) {
    work.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < primes.size(); i += jobs) tb.records[i] = g2_jacobian_order(c, primes[i]);
    }));
  }
  for (auto& f : work) f.get();
  tb.bound = 0;
  for (const auto& r : tb.records) tb.bound = std::gcd(tb.bound, r.jac_order);
  return tb;
}

namespace {

bool reduces_at(const MumfordDiv<Rat>& d, std::uint64_t p) {
  for (const Poly<Rat>* a : {&d.u, &d.v})
    for (std::size_t i = 0; i < a->size(); ++i)
      if (mpz_divisible_ui_p((*a)[i].get_den_mpz_t(), p)) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& [q, e] : factor_small(n)) out.push_back(q);
  return out;
}

}  // namespace

TorsionCertificate certify_order(const G2CurveQ& c, const MumfordDiv<Rat>& d, std::uint64_t n,
                                 std::size_t witness_count) {
  if (n == 0) throw Error(Errc::InvalidArgument, "order must be positive");
  jac_require_valid(c, d);
  TorsionCertificate cert{c, d, n, {}, {}};
  const bool full = jac_is_identity(c, jac_scalar_mul(c, static_cast<long long>(n), d));
  cert.exact_checks.push_back({n, full});
  if (!full) throw Error(Errc::OrderMismatch, std::to_string(n) + "*D = identity fails");
  for (std::uint64_t l : prime_divisors(n)) {
    const std::uint64_t k = n / l;
    const bool id = jac_is_identity(c, jac_scalar_mul(c, static_cast<long long>(k), d));
    cert.exact_checks.push_back({k, id});
    if (id) throw Error(Errc::OrderMismatch, std::to_string(k) + "*D = identity holds, so the order is smaller");
  }
  for (std::uint64_t p = 3; cert.witnesses.size() < witness_count && p < 100000; p += 2) {
    if (!is_prime(p) || !g2_good_prime(c, p) || !reduces_at(d, p)) continue;
    const G2CurveP cp = g2_reduce(c, p);
    const JacOrderRecord rec = g2_jacobian_order(cp);
    const std::uint64_t ord = jac_element_order(cp, jac_reduce_divisor(cp, d), rec.jac_order);
    cert.witnesses.push_back({p, rec.jac_order, ord});
    if (ord != n)
      throw Error(Errc::OrderMismatch, "reduced order " + std::to_string(ord) + " at p = " + std::to_string(p));
  }
  return cert;
}

std::vector<AffinePoint<Rat>> small_rational_points(const G2CurveQ& c, long height_bound, std::size_t max_points) {
  std::vector<AffinePoint<Rat>> out;
  for (long ht = 0; ht <= height_bound && out.size() < max_points; ++ht) {
    // fractions a/b in lowest terms with max(|a|, b) == ht, by value
    std::vector<Rat> xs;
    if (ht == 0) xs.emplace_back(0);
    for (long b = 1; b <= ht; ++b)
      for (long a = -ht; a <= ht; ++a)
        if (a != 0 && std::max(std::labs(a), b) == ht && std::gcd(a, b) == 1) xs.emplace_back(Integer(a), Integer(b));
    std::sort(xs.begin(), xs.end());
    for (const Rat& x : xs) {
      const std::optional<Rat> r = rat_sqrt(c.F().evaluate(x));
      if (!r) continue;
      const Rat hx = c.h().evaluate(x);
      const Rat y1 = (-hx - *r) / 2;
      const Rat y2 = (-hx + *r) / 2;
      out.emplace_back(x, y1);
      if (y2 != y1) out.emplace_back(x, y2);
      if (out.size() >= max_points) break;
    }
  }
  return out;
}

std::optional<MumfordDiv<Rat>> find_torsion_divisor(const G2CurveQ& c, std::uint64_t n, long height_bound) {
  if (n < 2) throw Error(Errc::InvalidArgument, "target order must be at least 2");
  if (height_bound <= 0) return std::nullopt;
  const std::vector<AffinePoint<Rat>> pts = small_rational_points(c, height_bound);

  std::vector<MumfordDiv<Rat>> candidates;
  if (c.split()) {
    candidates.push_back({Poly<Rat>::constant(Rat(1)), Poly<Rat>(), 0});
    candidates.push_back({Poly<Rat>::constant(Rat(1)), Poly<Rat>(), 2});
  }
  if (c.split() || c.odd()) {
    for (const auto& pt : pts) {
      MumfordDiv<Rat> d = divisor_from_points(c, {pt});
      candidates.push_back(d);
      if (c.split()) {
        d.balance = 1;
        candidates.push_back(d);
      }
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i; j < pts.size(); ++j) candidates.push_back(divisor_from_points(c, {pts[i], pts[j]}));

  // Two small primes where a rational torsion class must have the same order.
  std::vector<std::pair<G2CurveP, std::uint64_t>> screens;
  for (std::uint64_t p : first_good_odd_primes(c, 2)) {
    G2CurveP cp = g2_reduce(c, p);
    const std::uint64_t order = g2_jacobian_order(cp).jac_order;
    screens.emplace_back(std::move(cp), order);
  }
  for (const auto& d : candidates) {
    if (jac_is_identity(c, d)) continue;
    std::optional<std::uint64_t> common;
    bool usable = true;
    for (const auto& [cp, order] : screens) {
      const std::uint64_t p = cp.zero().modulus();
      if (!reduces_at(d, p)) {
        usable = false;
        break;
      }
      const std::uint64_t o = jac_element_order(cp, jac_reduce_divisor(cp, d), order);
      if (common && *common != o) usable = false;
      common = o;
    }
    if (!usable || !common || *common % n != 0) continue;
    const MumfordDiv<Rat> cand = jac_scalar_mul(c, static_cast<long long>(*common / n), d);
    try {
      certify_order(c, cand, n);
      return cand;
    } catch (const Error& e) {
      if (e.code() != Errc::OrderMismatch) throw;
    }
  }
  return std::nullopt;
}

std::string certificate_block(const TorsionCertificate& cert) {
  std::string s = "certificate\n";
  s += "  curve    " + format_curve(cert.curve) + "\n";
  s += "  divisor  " + format_divisor(cert.divisor) + "\n";
  s += "  order    " + std::to_string(cert.order) + "\n";
  for (const auto& ck : cert.exact_checks)
    s += "  exact    " + std::to_string(ck.k) + "*D " + (ck.is_identity ? "= 0" : "!= 0") + "\n";
  for (const auto& w : cert.witnesses)
    s += "  witness  p=" + std::to_string(w.p) + " #J=" + std::to_string(w.jac_order) +
         " order=" + std::to_string(w.order) + "\n";
  return s;
}

std::string certificate_line(const TorsionCertificate& cert) {
  std::string s = "cert " + format_curve(cert.curve) + " | " + format_divisor(cert.divisor) +
                  " | order " + std::to_string(cert.order) + " | witnesses ";
  for (std::size_t i = 0; i < cert.witnesses.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cert.witnesses[i].p) + ":" + std::to_string(cert.witnesses[i].order);
  }
  return s;
}

}  // namespace g2t
