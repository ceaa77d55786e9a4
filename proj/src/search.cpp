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

#include "g2t/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "g2t/error.hpp"
#include "g2t/text.hpp"
#include "g2t/torsion.hpp"

namespace g2t {

SearchBox SearchBox::from_bounds(long a_bound, long b_bound, int rhs_degree) {
  if (a_bound < 0 || b_bound < 0) throw Error(Errc::InvalidArgument, "bounds must be nonnegative");
  SearchBox box;
  if (rhs_degree == 2) {
    box.h = {{{-a_bound, a_bound}, {-a_bound, a_bound}, {0, a_bound}, {1, a_bound}}};
    for (std::size_t i = 0; i < 7; ++i) box.f[i] = i <= 2 ? std::pair{-b_bound, b_bound} : std::pair{0L, 0L};
  } else if (rhs_degree == 6) {
    for (auto& r : box.h) r = {-a_bound, a_bound};
    for (auto& r : box.f) r = {-b_bound, b_bound};
  } else {
    throw Error(Errc::InvalidArgument, "rhs_degree must be 2 or 6");
  }
  return box;
}

std::uint64_t SearchBox::size() const {
  std::uint64_t n = 1;
  for (const auto& [lo, hi] : h) n *= hi < lo ? 0 : static_cast<std::uint64_t>(hi - lo + 1);
  for (const auto& [lo, hi] : f) n *= hi < lo ? 0 : static_cast<std::uint64_t>(hi - lo + 1);
  return n;
}

namespace {

using Coeffs = std::array<long, 11>;  // h0..h3, f0..f6

/// Per-prime tables for counting points with machine integers.
struct PrimeTables {
  std::uint32_t p = 0;
  std::uint32_t nr = 0;
  std::vector<std::int8_t> chi;
  // z = a + b t with 1 <= b <= (p-1)/2, one from each conjugate pair:
  // powers z^0..z^6 as (re, im)
  std::vector<std::array<std::pair<std::uint32_t, std::uint32_t>, 7>> half_powers;

  explicit PrimeTables(std::uint32_t prime) : p(prime), nr(static_cast<std::uint32_t>(least_nonresidue(prime))) {
    chi.assign(p, -1);
    chi[0] = 0;
    for (std::uint64_t a = 1; a < p; ++a) chi[a * a % p] = 1;
    for (std::uint64_t b = 1; b <= (p - 1) / 2; ++b) {
      for (std::uint64_t a = 0; a < p; ++a) {
        std::array<std::pair<std::uint32_t, std::uint32_t>, 7> pw;
        std::uint64_t re = 1, im = 0;
        for (auto& e : pw) {
          e = {static_cast<std::uint32_t>(re), static_cast<std::uint32_t>(im)};
          const std::uint64_t nre = (re * a + im * b % p * nr) % p;
          const std::uint64_t nim = (re * b + im * a) % p;
          re = nre;
          im = nim;
        }
        half_powers.push_back(pw);
      }
    }
  }
};

std::uint32_t mod(long v, std::uint32_t p) {
  const long r = v % static_cast<long>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + static_cast<long>(p) : r);
}

/// Degree of a polynomial mod p given ascending residues.
int degree_mod(const std::array<std::uint32_t, 7>& a) {
  for (int i = 6; i >= 0; --i)
    if (a[static_cast<std::size_t>(i)]) return i;
  return -1;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

/// Squarefree test for F of known degree over F_p via gcd(F, F').
bool squarefree_mod(const std::array<std::uint32_t, 7>& F, int deg, std::uint32_t p) {
  std::vector<std::uint32_t> a(F.begin(), F.begin() + deg + 1), b;
  for (int i = 1; i <= deg; ++i) b.push_back(static_cast<std::uint32_t>(static_cast<std::uint64_t>(F[static_cast<std::size_t>(i)]) * static_cast<std::uint64_t>(i) % p));
  auto trim = [](std::vector<std::uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(b);
  if (b.empty()) return false;
  while (!b.empty()) {
    // a <- a mod b
    const std::uint32_t inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
      const std::uint64_t q = static_cast<std::uint64_t>(a.back()) * inv % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - q * b[i] % p) % p);
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.size() == 1;
}

/// Jacobian order at p, or 0 for bad reduction.
std::uint64_t fast_jac_order(const Coeffs& c, long deg_F, const PrimeTables& t) {
  const std::uint32_t p = t.p;
  std::array<std::uint32_t, 4> h{};
  std::array<std::uint32_t, 7> F{};
  for (std::size_t i = 0; i < 4; ++i) h[i] = mod(c[i], p);
  for (std::size_t i = 0; i < 7; ++i) F[i] = static_cast<std::uint32_t>(4ULL * mod(c[4 + i], p) % p);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) F[i + j] = static_cast<std::uint32_t>((F[i + j] + static_cast<std::uint64_t>(h[i]) * h[j]) % p);
  if (degree_mod(F) != deg_F) return 0;
  const int deg = static_cast<int>(deg_F);
  if (!squarefree_mod(F, deg, p)) return 0;

  std::int64_t n1 = 0, n2 = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (int i = deg; i >= 0; --i) acc = (acc * x + F[static_cast<std::size_t>(i)]) % p;
    n1 += 1 + t.chi[acc];
    n2 += acc ? 2 : 1;
  }
  for (const auto& pw : t.half_powers) {
    std::uint64_t re = 0, im = 0;
    for (int i = 0; i <= deg; ++i) {
      re += static_cast<std::uint64_t>(F[static_cast<std::size_t>(i)]) * pw[static_cast<std::size_t>(i)].first;
      im += static_cast<std::uint64_t>(F[static_cast<std::size_t>(i)]) * pw[static_cast<std::size_t>(i)].second;
    }
    re %= p;
    im %= p;
    const std::uint64_t norm = (re * re + (p - im * im % p) * t.nr) % p;
    n2 += 2 * (1 + t.chi[norm]);
  }
  if (deg == 5) {
    n1 += 1;
    n2 += 1;
  } else {
    n1 += 1 + t.chi[F[6]];
    n2 += 2;
  }
  const std::uint64_t twice = static_cast<std::uint64_t>(n1 * n1 + n2);
  return twice / 2 - p;
}

long integer_deg_F(const Coeffs& c) {
  std::array<long, 7> F{};
  for (std::size_t i = 0; i < 7; ++i) F[i] = 4 * c[4 + i];
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) F[i + j] += c[i] * c[j];
  for (int i = 6; i >= 0; --i)
    if (F[static_cast<std::size_t>(i)]) return i;
  return -1;
}

G2CurveQ to_curve(const Coeffs& c) {
  std::vector<Rat> h, f;
  for (std::size_t i = 0; i < 4; ++i) h.emplace_back(c[i]);
  for (std::size_t i = 0; i < 7; ++i) f.emplace_back(c[4 + i]);
  return G2CurveQ(Poly<Rat>(std::move(h)), Poly<Rat>(std::move(f)));
}

/// Sort key: h3, h2, h1, h0, f6, ..., f0.
std::array<long, 11> sort_key(const Coeffs& c) {
  std::array<long, 11> k{};
  for (std::size_t i = 0; i < 4; ++i) k[i] = c[3 - i];
  for (std::size_t i = 0; i < 7; ++i) k[4 + i] = c[10 - i];
  return k;
}

struct Hit {
  Coeffs coeffs;
  std::vector<long> orders;
};

}  // namespace

SearchResult small_search(const SearchConfig& cfg) {
  const SearchBox box = cfg.box ? *cfg.box : SearchBox::from_bounds(cfg.a_bound, cfg.b_bound, cfg.rhs_degree);
  if (cfg.screen_primes.empty()) throw Error(Errc::InvalidArgument, "no screen primes");
  std::vector<std::uint64_t> primes = cfg.screen_primes;
  std::sort(primes.begin(), primes.end());
  std::vector<PrimeTables> tables;
  for (std::uint64_t p : primes) {
    if (p == 2 || !is_prime(p) || p > 1000) throw Error(Errc::InvalidArgument, "screen primes must be odd primes below 1000");
    tables.emplace_back(static_cast<std::uint32_t>(p));
  }

  // Work items: one per (h3, h2) slice.
  std::vector<std::pair<long, long>> slices;
  for (long h3 = box.h[3].first; h3 <= box.h[3].second; ++h3)
    for (long h2 = box.h[2].first; h2 <= box.h[2].second; ++h2) slices.emplace_back(h3, h2);

  unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1U, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::mutex merge;
  std::vector<Hit> hits;
  SearchSummary summary;

  auto worker = [&] {
    std::vector<Hit> local;
    SearchSummary sum;
    Coeffs c{};
    for (std::size_t s = next++; s < slices.size(); s = next++) {
      c[3] = slices[s].first;
      c[2] = slices[s].second;
      // odometer over the remaining coefficients
      const std::array<std::size_t, 9> idx{0, 1, 4, 5, 6, 7, 8, 9, 10};
      auto range = [&](std::size_t k) { return k < 4 ? box.h[k] : box.f[k - 4]; };
      bool empty = false;
      for (std::size_t k : idx) {
        const auto [lo, hi] = range(k);
        if (hi < lo) empty = true;
        c[k] = lo;
      }
      if (empty) continue;
      while (true) {
        ++sum.examined;
        const long degF = integer_deg_F(c);
        if (degF != 5 && degF != 6) {
          ++sum.singular;
        } else {
          std::uint64_t g = 0;
          std::size_t good = 0;
          bool alive = true;
          for (const auto& t : tables) {
            const std::uint64_t n = fast_jac_order(c, degF, t);
            if (!n) continue;
            ++good;
            g = std::gcd(g, n);
            alive = std::any_of(cfg.interesting_orders.begin(), cfg.interesting_orders.end(),
                                [g](long o) { return g % static_cast<std::uint64_t>(o) == 0; });
            if (!alive) break;
          }
          if (alive) {
            if (good == 0) {
              // every screen prime is bad: decide nonsingularity exactly
              bool singular = false;
              try {
                to_curve(c);
              } catch (const Error&) {
                singular = true;
              }
              ++(singular ? sum.singular : sum.too_few_primes);
            } else if (good < cfg.min_good_primes) {
              ++sum.too_few_primes;
            } else {
              Hit hit{c, {}};
              for (long o : cfg.interesting_orders)
                if (g % static_cast<std::uint64_t>(o) == 0) hit.orders.push_back(o);
              local.push_back(std::move(hit));
            }
          }
        }
        // advance
        std::size_t pos = 0;
        for (; pos < idx.size(); ++pos) {
          const std::size_t k = idx[pos];
          if (c[k] < range(k).second) {
            ++c[k];
            break;
          }
          c[k] = range(k).first;
        }
        if (pos == idx.size()) break;
      }
    }
    std::lock_guard<std::mutex> lock(merge);
    hits.insert(hits.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
    summary.examined += sum.examined;
    summary.singular += sum.singular;
    summary.too_few_primes += sum.too_few_primes;
  };
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker);
  for (auto& th : threads) th.join();

  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return sort_key(a.coeffs) < sort_key(b.coeffs); });

  SearchResult result;
  result.summary = summary;
  for (const Hit& hit : hits) {
    CandidateReport rep{to_curve(hit.coeffs), {}, hit.orders, std::nullopt, 0};
    for (std::uint64_t p : primes) {
      if (!g2_good_prime(rep.curve, p)) continue;
      rep.records.push_back(g2_jacobian_order(rep.curve, p));
    }
    for (const auto& r : rep.records)
      for (long o : rep.orders)
        if (r.jac_order % static_cast<std::uint64_t>(o) != 0)
          throw Error(Errc::InvariantError, "fast and exact Jacobian orders disagree");
    if (cfg.divisor_height > 0) {
      for (auto it = rep.orders.rbegin(); it != rep.orders.rend() && !rep.divisor; ++it) {
        rep.divisor = find_torsion_divisor(rep.curve, static_cast<std::uint64_t>(*it), cfg.divisor_height);
        if (rep.divisor) rep.divisor_order = *it;
      }
    }
    result.reports.push_back(std::move(rep));
  }
  result.summary.emitted = result.reports.size();
  return result;
}

std::string format_report(const CandidateReport& r) {
  std::string s = format_curve(r.curve) + " | primes";
  for (const auto& rec : r.records) s += " " + std::to_string(rec.p) + ":" + std::to_string(rec.jac_order);
  s += " | orders ";
  for (std::size_t i = 0; i < r.orders.size(); ++i) s += (i ? "," : "") + std::to_string(r.orders[i]);
  s += " | divisor ";
  s += r.divisor ? format_divisor(*r.divisor) + " order " + std::to_string(r.divisor_order) : std::string("none");
  return s;
}

std::string format_summary(const SearchSummary& s) {
  return "summary examined " + std::to_string(s.examined) + " singular " + std::to_string(s.singular) +
         " too_few_primes " + std::to_string(s.too_few_primes) + " emitted " + std::to_string(s.emitted);
}

}  // namespace g2t
