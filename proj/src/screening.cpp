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

#include "g2t/screening.hpp"

#include <future>
#include <numeric>
#include <sstream>
#include <thread>

#include "g2t/error.hpp"
#include "g2t/text.hpp"

namespace g2t {

std::vector<EllRecord> parse_cremona(std::string_view text) {
  std::vector<EllRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    EllRecord rec;
    try {
      const std::size_t sp = body.find_first_of(" \t");
      const std::size_t open = body.find('[');
      const std::size_t close = body.find(']');
      if (sp == std::string_view::npos || open == std::string_view::npos || close == std::string_view::npos ||
          open < sp || close < open)
        throw Error(Errc::ParseError, "expected 'label [a1,a2,a3,a4,a6] N'");
      rec.label = std::string(body.substr(0, sp));
      const std::vector<Rat> a = parse_rat_list(body.substr(open + 1, close - open - 1));
      if (a.size() != 5) throw Error(Errc::ParseError, "expected five coefficients");
      std::istringstream rest{std::string(body.substr(close + 1))};
      std::string order_text, kw;
      if (!(rest >> order_text)) throw Error(Errc::ParseError, "missing torsion order");
      const Integer order = parse_integer(order_text);
      if (!order.fits_slong_p() || sgn(order) <= 0) throw Error(Errc::ParseError, "bad torsion order");
      rec.torsion_order = order.get_si();
      if (rest >> kw) {
        if (kw != "point") throw Error(Errc::ParseError, "expected 'point'");
        std::string pt_text, more;
        std::getline(rest, pt_text);
        rec.torsion_point = parse_point(pt_text);
      }
      try {
        rec.curve = ell_make(a[0], a[1], a[2], a[3], a[4]);
      } catch (const Error& e) {
        throw Error(Errc::InvariantError, e.detail());
      }
      if (!mazur_admissible(rec.torsion_order))
        throw Error(Errc::InvariantError, "torsion order " + std::to_string(rec.torsion_order) +
                                              " is not possible over Q");
      if (rec.torsion_point) {
        if (!on_curve(rec.curve, *rec.torsion_point))
          throw Error(Errc::InvariantError, "torsion point is not on the curve");
        const std::optional<int> ord = ell_order(rec.curve, *rec.torsion_point);
        if (!ord || *ord != rec.torsion_order)
          throw Error(Errc::InvariantError, "point order " + (ord ? std::to_string(*ord) : std::string(">12")) +
                                                " differs from " + std::to_string(rec.torsion_order));
      }
    } catch (const Error& e) {
      throw Error(e.code(), where + e.detail());
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::optional<long> combined_order(long n1, long n2) {
  if (n1 < 1 || n2 < 1) return std::nullopt;
  if (std::gcd(n1, n2) == 1 && (n1 * n2) % 3 != 0) return n1 * n2;
  if (n1 % 3 == 0 && n2 % 3 == 0 && std::gcd(n1 / 3, n2 / 3) == 1) return n1 * n2 / 3;
  return std::nullopt;
}

std::map<std::uint64_t, long long> frobenius_traces(const EllCurve<Rat>& e, std::uint64_t prime_limit) {
  std::map<std::uint64_t, long long> out;
  for (std::uint64_t p : odd_primes(3, prime_limit)) {
    try {
      out.emplace(p, ell_trace(ell_reduce(e, p)));
    } catch (const Error& err) {
      if (err.code() != Errc::BadPrime && err.code() != Errc::BadReduction) throw;
    }
  }
  return out;
}

namespace {

bool traces_agree_mod3(const std::map<std::uint64_t, long long>& t1, const std::map<std::uint64_t, long long>& t2) {
  std::size_t common = 0;
  bool agree = true;
  for (const auto& [p, a] : t1) {
    const auto it = t2.find(p);
    if (it == t2.end()) continue;
    ++common;
    if (((a - it->second) % 3 + 3) % 3 != 0) agree = false;
  }
  if (common < 3) throw Error(Errc::TooFewPrimes, "fewer than three common odd good primes");
  return agree;
}

}  // namespace

bool glue_screen(const EllRecord& e1, const EllRecord& e2, std::uint64_t prime_limit) {
  return traces_agree_mod3(frobenius_traces(e1.curve, prime_limit), frobenius_traces(e2.curve, prime_limit));
}

std::vector<ScreenedPair> screen_pools(const std::vector<EllRecord>& pool1, const std::vector<EllRecord>& pool2,
                                       const std::vector<std::pair<long, long>>& pairs,
                                       std::uint64_t prime_limit, unsigned jobs) {
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  auto all_traces = [&](const std::vector<EllRecord>& pool) {
    std::vector<std::map<std::uint64_t, long long>> t(pool.size());
    std::vector<std::future<void>> work;
    for (unsigned w = 0; w < jobs; ++w)
      work.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < pool.size(); i += jobs) t[i] = frobenius_traces(pool[i].curve, prime_limit);
      }));
    for (auto& f : work) f.get();
    return t;
  };
  const auto t1 = all_traces(pool1);
  const auto t2 = all_traces(pool2);
  std::vector<ScreenedPair> out;
  for (std::size_t i = 0; i < pool1.size(); ++i) {
    for (std::size_t j = 0; j < pool2.size(); ++j) {
      for (const auto& [n1, n2] : pairs) {
        if (pool1[i].torsion_order != n1 || pool2[j].torsion_order != n2) continue;
        const std::optional<long> combined = combined_order(n1, n2);
        if (!combined) continue;
        if (!traces_agree_mod3(t1[i], t2[j])) continue;
        out.push_back({pool1[i].label, pool2[j].label, *combined});
      }
    }
  }
  return out;
}

}  // namespace g2t
