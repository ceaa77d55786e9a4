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

#include "g2t/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "g2t/catalog.hpp"
#include "g2t/classgroup.hpp"
#include "g2t/error.hpp"
#include "g2t/families.hpp"
#include "g2t/screening.hpp"
#include "g2t/search.hpp"
#include "g2t/text.hpp"
#include "g2t/torsion.hpp"

namespace g2t {

const char* status_name(LedgerStatus s) noexcept {
  switch (s) {
    case LedgerStatus::Pass: return "pass";
    case LedgerStatus::Fail: return "fail";
    case LedgerStatus::ReportOnly: return "report-only";
  }
  return "?";
}

bool ledger_passed(const std::vector<LedgerEntry>& ledger) {
  return std::none_of(ledger.begin(), ledger.end(), [](const LedgerEntry& e) { return e.status == LedgerStatus::Fail; });
}

std::string format_entry(const LedgerEntry& e, bool with_time) {
  std::string s = e.id + ": " + status_name(e.status) + " (" + e.evidence + ")";
  if (with_time) {
    char buf[48];
    std::snprintf(buf, sizeof buf, " [%.2fs]", e.seconds);
    s += buf;
  }
  return s;
}

namespace {

struct Check {
  bool ok = true;
  std::string evidence;
};

/// Collects the first failure; evidence otherwise is the success summary.
class Verdict {
 public:
  void require(bool cond, const std::string& what) {
    if (!cond && ok_) {
      ok_ = false;
      failure_ = what;
    }
  }
  bool ok() const { return ok_; }
  Check done(const std::string& success) const { return {ok_, ok_ ? success : failure_}; }

 private:
  bool ok_ = true;
  std::string failure_;
};

struct Context {
  VerifyOptions opts;
  std::filesystem::path dir;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

// 1
Check c70_divisor(const Context& cx) {
  const auto curves = load_named_curves(cx.dir / "curves.txt");
  const G2CurveQ& c = find_curve(curves, "C70");
  const MumfordDiv<Rat> d = load_divisor(cx.dir / "c70_divisor.txt");
  Verdict v;
  v.require(d.u == Poly<Rat>{Rat(8), Rat(-6), Rat(1)} && d.v == Poly<Rat>{Rat(11), Rat(3)},
            "fixture divisor is not (x^2-6x+8, 3x+11)");
  const TorsionCertificate cert = certify_order(c, d, 70);
  std::vector<std::string> w;
  for (const auto& wo : cert.witnesses)
    w.push_back("p=" + std::to_string(wo.p) + " #J=" + std::to_string(wo.jac_order));
  for (std::uint64_t k : {35ULL, 14ULL, 10ULL})
    v.require(!jac_is_identity(c, jac_scalar_mul(c, static_cast<long long>(k), d)),
              std::to_string(k) + "*D is the identity");
  v.require(jac_is_identity(c, jac_scalar_mul(c, 70, d)), "70*D is not the identity");
  return v.done("order 70 certified; " + join(w, ", "));
}

// 2
Check t28_evidence(const Context& cx) {
  const auto curves = load_named_curves(cx.dir / "curves.txt");
  Verdict v;
  std::vector<std::string> bounds;
  for (int i = 1; i <= 5; ++i) {
    const std::string name = "C28_" + std::to_string(i);
    const G2CurveQ& c = find_curve(curves, name);
    for (std::uint64_t p : first_good_odd_primes(c, 10)) {
      const auto rec = g2_jacobian_order(c, p);
      v.require(rec.jac_order % 28 == 0, name + ": 28 does not divide #J at p=" + std::to_string(p));
    }
    const TorsionBound tb = torsion_bound(c, cx.opts.prime_limit, cx.opts.jobs);
    v.require(tb.bound % 28 == 0, name + ": bound " + std::to_string(tb.bound) + " not divisible by 28");
    bounds.push_back(name + " bound " + std::to_string(tb.bound));
  }
  return v.done("28 | #J at 10 good primes; " + join(bounds, ", "));
}

// 3
Check pair_points(const Context& cx) {
  const auto pool4 = load_pool(cx.dir / "pool_order4.txt");
  const auto pool7 = load_pool(cx.dir / "pool_order7.txt");
  const auto pool10 = load_pool(cx.dir / "pool_order10.txt");
  const auto pairs = load_label_pairs(cx.dir / "gluing_pairs.txt");
  auto lookup = [](const std::vector<EllRecord>& pool, const std::string& label) -> const EllRecord& {
    for (const auto& r : pool)
      if (r.label == label) return r;
    throw Error(Errc::InvalidArgument, "no record " + label);
  };
  Verdict v;
  int checked = 0;
  auto check = [&](const EllRecord& r, int order) {
    v.require(r.torsion_point.has_value(), r.label + " has no point");
    if (!r.torsion_point) return;
    v.require(on_curve(r.curve, *r.torsion_point), r.label + ": point not on curve");
    v.require(ell_order(r.curve, *r.torsion_point) == std::optional<int>(order),
              r.label + ": point order is not " + std::to_string(order));
    ++checked;
  };
  v.require(pairs.size() == 5, "expected five pairs");
  for (const auto& [a, b] : pairs) {
    check(lookup(pool4, a), 4);
    check(lookup(pool7, b), 7);
  }
  check(lookup(pool7, "858k1"), 7);
  check(lookup(pool10, "66c2"), 10);
  return v.done(std::to_string(checked) + " points with exact orders 4, 7, 10");
}

// 4
Check generator_s_values(const Context&) {
  const Rat expected[3] = {Rat(-21), Rat(3), Rat(21, 31)};
  Verdict v;
  std::vector<std::string> got;
  for (int i = 0; i < 3; ++i) {
    const DPoint pt = d_point_from_word(i == 0, i == 1, i == 2);
    const Rat s = s_from_d_point(pt);
    got.push_back(to_string(s));
    v.require(s == expected[i], "P" + std::to_string(i + 1) + " maps to " + to_string(s));
  }
  return v.done(join(got, ", "));
}

// 5
Check t48_identities(const Context&) {
  Verdict v;
  v.require(verify_identity_ABlm_symbolic(), "A(B-32) = l^2 m fails symbolically");
  v.require(verify_identity_ABlm(Rat(3)), "A(B-32) = l^2 m fails at s = 3");
  v.require(verify_identity_mn_symbolic(), "m = n^2 fails symbolically");
  v.require(verify_identity_mn(d_point_from_word(0, 1, 0)), "m = n^2 fails at P2");
  v.require(verify_identity_mn(d_point_from_word(0, 0, 1)), "m = n^2 fails at P3");
  return v.done("A(B-32) = l^2 m and m = n^2 symbolic; m = n^2 at P2, P3");
}

// 6
Check t24_evidence(const Context&) {
  std::vector<Rat> svals;
  std::mt19937 rng(24);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
  std::set<Rat> seen;
  while (svals.size() < 25) {
    const Rat s = make_rat(num(rng), den(rng));
    if (!seen.insert(s).second) continue;
    if (sgn(c24_coefficients(s).c0) == 0 || sgn(c24_coefficients(s).d) == 0) continue;
    svals.push_back(s);
  }
  const std::vector<Rat> generator_values = {Rat(-21), Rat(3), Rat(21, 31)};
  svals.insert(svals.end(), generator_values.begin(), generator_values.end());
  Verdict v;
  const auto origin = EllPoint<Rat>::affine(Rat(0), Rat(0));
  for (std::size_t i = 0; i < svals.size(); ++i) {
    const Rat& s = svals[i];
    const C24Instance inst = c24_build(s);
    const std::string tag = "s=" + to_string(s);
    v.require(inst.curve.disc() != 0, tag + ": singular");
    v.require(ell_order(inst.aux_E, inst.P) == std::optional<int>(6) && ell_mul(inst.aux_E, 3, inst.P) == origin,
              tag + ": P is not of order 6 with 3P = (0,0)");
    v.require(ell_order(inst.aux_F, inst.Q) == std::optional<int>(8) && ell_mul(inst.aux_F, 4, inst.Q) == origin,
              tag + ": Q is not of order 8 with 4Q = (0,0)");
    const std::uint64_t need = i >= 25 ? 48 : 24;
    for (std::uint64_t p : first_good_odd_primes(inst.curve, 5))
      v.require(g2_jacobian_order(inst.curve, p).jac_order % need == 0,
                tag + ": " + std::to_string(need) + " does not divide #J at p=" + std::to_string(p));
  }
  return v.done("25 random s plus -21, 3, 21/31: 24 | #J at 5 good primes, 48 for the three");
}

// 7
Check eqs_invariance(const Context&) {
  Verdict v;
  int checked = 0, poles = 0;
  for (int a = 0; a <= 2 && checked < 20; ++a)
    for (int b = -2; b <= 2 && checked < 20; ++b)
      for (int c = -2; c <= 2 && checked < 20; ++c) {
        const DPoint r = d_point_from_word(a, b, c);
        try {
          v.require(verify_eqs_invariance(r), "s(R) != s(R + P1) for word " + std::to_string(a) + "," +
                                                  std::to_string(b) + "," + std::to_string(c));
          ++checked;
        } catch (const Error& e) {
          if (e.code() != Errc::PoleEncountered) throw;
          ++poles;
        }
      }
  v.require(checked == 20, "only " + std::to_string(checked) + " points checked");
  return v.done(std::to_string(checked) + " points, " + std::to_string(poles) + " poles skipped");
}

// 8
Check jacobian_oracle(const Context&) {
  std::mt19937 rng(8);
  Verdict v;
  std::vector<std::string> summary;
  std::uint64_t sampled = 0;
  auto random_curve = [&](std::uint64_t p, int deg_F) {
    PrimeField k(p);
    std::uniform_int_distribution<long long> coeff(0, static_cast<long long>(p) - 1);
    while (true) {
      std::vector<Fp> h, f;
      for (int i = 0; i <= 3; ++i) h.push_back(k(coeff(rng)));
      for (int i = 0; i <= 6; ++i) f.push_back(k(coeff(rng)));
      try {
        G2CurveP c{Poly<Fp>(h), Poly<Fp>(f)};
        if (c.deg_F() == deg_F) return c;
      } catch (const Error& e) {
        if (e.code() != Errc::SingularOrWrongGenus) throw;
      }
    }
  };
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
    const int count = p == 7 ? 2 : 5;
    for (int i = 0; i < count; ++i) {
      const G2CurveP c = random_curve(p, i % 2 ? 6 : 5);
      const std::string tag = "p=" + std::to_string(p) + " curve " + std::to_string(i);
      const JacOrderRecord rec = g2_jacobian_order(c);
      if (p == 7) {
        // sampled associativity only
        const auto elems = enumerate_canonical_divisors(c);
        v.require(elems.size() == rec.jac_order, tag + ": divisor count differs from #J");
        std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
        for (int t = 0; t < 5000; ++t) {
          const auto& a = elems[pick(rng)];
          const auto& b = elems[pick(rng)];
          const auto& d = elems[pick(rng)];
          v.require(jac_add(c, jac_add(c, a, b), d) == jac_add(c, a, jac_add(c, b, d)), tag + ": not associative");
          ++sampled;
        }
        continue;
      }
      const ClassGroupTable t = class_group_bruteforce(c);
      v.require(t.size() == rec.jac_order, tag + ": table size differs from #J");
      for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = 0; b < t.size(); ++b)
          v.require(jac_add(c, t.elements[a], t.elements[b]) == t.elements[t.sum[a][b]], tag + ": sum differs from table");
      if (p == 3) {
        for (std::size_t a = 0; a < t.size(); ++a)
          for (std::size_t b = 0; b < t.size(); ++b)
            for (std::size_t d = 0; d < t.size(); ++d)
              v.require(t.sum[t.sum[a][b]][d] == t.sum[a][t.sum[b][d]], tag + ": table not associative");
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, t.size() - 1);
        for (int s = 0; s < 2000; ++s) {
          const auto& a = t.elements[pick(rng)];
          const auto& b = t.elements[pick(rng)];
          const auto& d = t.elements[pick(rng)];
          v.require(jac_add(c, jac_add(c, a, b), d) == jac_add(c, a, jac_add(c, b, d)), tag + ": not associative");
          ++sampled;
        }
      }
      summary.push_back(std::to_string(t.size()));
    }
  }
  return v.done("10 tables over F_3, F_5 match (sizes " + join(summary, ",") + "); F_3 exhaustive; " +
                std::to_string(sampled) + " sampled triples over F_5, F_7");
}

// 9
Check screening(const Context& cx) {
  const auto pool4 = load_pool(cx.dir / "pool_order4.txt");
  const auto pool7 = load_pool(cx.dir / "pool_order7.txt");
  const auto pool10 = load_pool(cx.dir / "pool_order10.txt");
  const auto expected = load_label_pairs(cx.dir / "gluing_pairs.txt");
  Verdict v;
  const auto got47 = screen_pools(pool4, pool7, {{4, 7}}, cx.opts.prime_limit, cx.opts.jobs);
  std::set<std::pair<std::string, std::string>> s47, e47(expected.begin(), expected.end());
  for (const auto& sp : got47) {
    s47.emplace(sp.label1, sp.label2);
    v.require(sp.combined == 28, sp.label1 + "/" + sp.label2 + " combined order " + std::to_string(sp.combined));
  }
  v.require(s47 == e47, "(4,7) screen gives " + std::to_string(s47.size()) + " pairs, not the table");
  const auto got710 = screen_pools(pool7, pool10, {{7, 10}}, cx.opts.prime_limit, cx.opts.jobs);
  v.require(got710.size() == 1 && got710[0].label1 == "858k1" && got710[0].label2 == "66c2" && got710[0].combined == 70,
            "(7,10) screen does not give exactly 858k1/66c2 with order 70");
  return v.done("(4,7): " + std::to_string(s47.size()) + " table pairs; (7,10): 858k1/66c2 order 70");
}

// 10
Check search(const Context& cx) {
  Verdict v;
  SearchConfig cfg;
  cfg.interesting_orders = {27};
  SearchBox box;
  box.h = {{{-3, 3}, {-6, 6}, {0, 9}, {1, 6}}};
  for (std::size_t i = 0; i < 7; ++i) box.f[i] = i <= 2 ? std::pair{-3L, 3L} : std::pair{0L, 0L};
  cfg.box = box;
  cfg.jobs = cx.opts.jobs;
  const SearchResult res = small_search(cfg);
  const std::string target = "g2 [-1,6,9,6] [0,0,-3,0,0,0,0]";
  const bool found = std::any_of(res.reports.begin(), res.reports.end(),
                                 [&](const CandidateReport& r) { return format_curve(r.curve) == target; });
  v.require(found, "order-27 curve not emitted");

  const auto table = load_small_table(cx.dir / "small_torsion.txt");
  for (const auto& sc : table) {
    const TorsionBound tb = torsion_bound(sc.curve, 100, cx.opts.jobs);
    v.require(tb.bound % static_cast<std::uint64_t>(sc.order) == 0,
              format_curve(sc.curve) + " fails divisibility by " + std::to_string(sc.order));
  }

  SearchConfig small;
  small.a_bound = 3;
  small.b_bound = 3;
  std::vector<std::string> runs[2];
  const unsigned jobs[2] = {1, 4};
  std::uint64_t emitted = 0;
  for (int k = 0; k < 2; ++k) {
    small.jobs = jobs[k];
    const SearchResult r = small_search(small);
    for (const auto& rep : r.reports) runs[k].push_back(format_report(rep));
    runs[k].push_back(format_summary(r.summary));
    emitted = r.summary.emitted;
  }
  v.require(runs[0] == runs[1], "bounds-3 reports differ between 1 and 4 jobs");
  return v.done("order-27 curve emitted among " + std::to_string(res.reports.size()) + " candidates; " +
                std::to_string(table.size()) + " table curves pass at p <= 100; bounds-3 box: " +
                std::to_string(emitted) + " candidates, identical for 1 and 4 jobs");
}

// 11
Check bad_439(const Context& cx) {
  const auto curves = load_named_curves(cx.dir / "curves.txt");
  const G2CurveQ& c = find_curve(curves, "C28_4");
  Verdict v;
  v.require(!g2_good_prime(c, 439), "439 is a good prime");
  v.require(c.disc().get_num() % 439 == 0, "439 does not divide the discriminant");
  return v.done("439 divides the discriminant");
}

Check report_eqs_degree(const Context&) {
  const EqsDegree d = eqs_map_degree();
  return {true, "computed degree " + std::to_string(d.degree) + " (pole orders " +
                    std::to_string(d.numerator_pole_order) + "/" + std::to_string(d.denominator_pole_order) + ", " +
                    std::to_string(d.common_zeros) + " common zeros)"};
}

Check report_bounds(const Context& cx) {
  const auto curves = load_named_curves(cx.dir / "curves.txt");
  std::vector<std::string> parts;
  for (const auto& nc : curves) {
    const TorsionBound tb = torsion_bound(nc.curve, cx.opts.prime_limit, cx.opts.jobs);
    parts.push_back(nc.name + " " + std::to_string(tb.bound));
  }
  return {true, "gcd of #J over good primes: " + join(parts, ", ")};
}

Check report_c48_models(const Context& cx) {
  const auto curves = load_named_curves(cx.dir / "curves.txt");
  std::vector<std::string> parts;
  for (int i = 1; i <= 3; ++i) {
    const C24Instance inst = c48_build(d_point_from_word(i == 1, i == 2, i == 3));
    const G2CurveQ& fixture = find_curve(curves, "C48_" + std::to_string(i));
    int agree = 0, total = 0;
    for (std::uint64_t p : first_good_odd_primes(fixture, 10)) {
      if (!g2_good_prime(inst.curve, p)) continue;
      ++total;
      agree += g2_jacobian_order(fixture, p).jac_order == g2_jacobian_order(inst.curve, p).jac_order;
    }
    parts.push_back("C48_" + std::to_string(i) + " " + std::to_string(agree) + "/" + std::to_string(total));
  }
  return {true, "#J of listed model vs family model agree at: " + join(parts, ", ")};
}

Check report_divisors(const Context& cx) {
  const auto table = load_small_table(cx.dir / "small_torsion.txt");
  int found = 0;
  for (const auto& sc : table)
    found += find_torsion_divisor(sc.curve, static_cast<std::uint64_t>(sc.order), 20).has_value();
  return {true, "height-20 divisor search certified " + std::to_string(found) + " of " + std::to_string(table.size()) +
                    " table curves"};
}

struct CheckDef {
  const char* id;
  int criterion;
  double limit;
  Check (*run)(const Context&);
};

}  // namespace

std::vector<LedgerEntry> run_verification(const VerifyOptions& opts) {
  const Context cx{opts, opts.data_dir.empty() ? data_dir() : opts.data_dir};
  const std::vector<CheckDef> checks = {
      {"C70.divisor", 1, 10, c70_divisor},
      {"T28.evidence", 2, 60, t28_evidence},
      {"T28.pairs.points", 3, 5, pair_points},
      {"Corollary.s-values", 4, 1, generator_s_values},
      {"T48.identities", 5, 5, t48_identities},
      {"T24.evidence", 6, 300, t24_evidence},
      {"EQs.invariance", 7, 5, eqs_invariance},
      {"Jacobian.oracle", 8, 600, jacobian_oracle},
      {"Screening.pairs", 9, 120, screening},
      {"Search.small", 10, 600, search},
      {"C28_4.bad-439", 11, 1, bad_439},
      {"EQs.degree", 0, 0, report_eqs_degree},
      {"TorsionBound.values", 0, 0, report_bounds},
      {"C48.models", 0, 0, report_c48_models},
      {"Search.divisors", 0, 0, report_divisors},
  };
  std::vector<LedgerEntry> out;
  for (const CheckDef& s : checks) {
    if (s.criterion == 0 && !opts.reports) continue;
    LedgerEntry e{s.id, LedgerStatus::Fail, "", s.criterion, 0, s.limit};
    const auto start = std::chrono::steady_clock::now();
    try {
      const Check c = s.run(cx);
      e.status = s.criterion == 0 ? LedgerStatus::ReportOnly : c.ok ? LedgerStatus::Pass : LedgerStatus::Fail;
      e.evidence = c.evidence;
    } catch (const Error& err) {
      e.status = LedgerStatus::Fail;
      e.evidence = err.what();
    } catch (const std::exception& err) {
      e.status = LedgerStatus::Fail;
      e.evidence = err.what();
    }
    e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace g2t
