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

// g2t: command-line front end for the torsion library.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "g2t/catalog.hpp"
#include "g2t/error.hpp"
#include "g2t/families.hpp"
#include "g2t/screening.hpp"
#include "g2t/search.hpp"
#include "g2t/text.hpp"
#include "g2t/torsion.hpp"
#include "g2t/verify.hpp"

using namespace g2t;

namespace {

enum class Format { Text, Lines };

struct Common {
  std::string data_dir;
  unsigned jobs = 0;
  std::string format = "text";
  Format fmt() const { return format == "lines" ? Format::Lines : Format::Text; }
};

/// "g2 [...] [...]" or the name of a curve in curves.txt.
G2CurveQ resolve_curve(const std::string& arg, const Common& common) {
  if (trim(arg).substr(0, 2) == "g2") return parse_curve(arg);
  return find_curve(load_named_curves(data_dir(common.data_dir) / "curves.txt"), arg);
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  for (const std::string& item : split_list(text)) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad integer '" + item + "'");
    }
  }
  return out;
}

std::vector<std::pair<long, long>> parse_pairs(const std::string& text) {
  std::vector<std::pair<long, long>> out;
  for (const std::string& item : split_list(text)) {
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos) throw Error(Errc::ParseError, "pair '" + item + "' is not of the form n1:n2");
    const auto a = parse_long_list(item.substr(0, colon));
    const auto b = parse_long_list(item.substr(colon + 1));
    if (a.size() != 1 || b.size() != 1) throw Error(Errc::ParseError, "bad pair '" + item + "'");
    out.emplace_back(a[0], b[0]);
  }
  return out;
}

void print_instance(const C24Instance& inst, Format fmt) {
  if (fmt == Format::Lines) {
    std::cout << format_curve(inst.curve) << " | " << inst.source << " | d=" << to_string(inst.coeffs.d) << "\n";
    return;
  }
  std::cout << "# " << (inst.order48 ? "c48 " : "c24 ") << inst.source << " d=" << to_string(inst.coeffs.d) << "\n"
            << format_curve(inst.curve) << "\n";
}

int cmd_verify(std::uint64_t prime_limit, bool timings, bool no_reports, const Common& common) {
  VerifyOptions opts;
  opts.prime_limit = prime_limit;
  opts.data_dir = data_dir(common.data_dir);
  opts.jobs = common.jobs;
  opts.reports = !no_reports;
  const auto ledger = run_verification(opts);
  for (const auto& e : ledger) std::cout << format_entry(e, timings) << "\n";
  const bool ok = ledger_passed(ledger);
  if (common.fmt() == Format::Text) std::cout << (ok ? "all checks passed" : "some checks failed") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational torsion on Jacobians of genus-2 curves: verification, families, screening, search"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--data-dir", common.data_dir, "Fixture directory (default: $G2T_DATA_DIR or the build-time data dir)");
  app.add_option("--jobs", common.jobs, "Worker threads, 0 = hardware concurrency")->capture_default_str();
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "lines"}))
      ->capture_default_str();

  std::uint64_t prime_limit = 200;
  auto add_prime_limit = [&](CLI::App* sub) {
    sub->add_option("--prime-limit", prime_limit, "Largest prime used")->capture_default_str();
  };

  // verify-paper
  bool timings = false, no_reports = false;
  CLI::App* verify = app.add_subcommand("verify-paper", "Run every acceptance check and print the ledger");
  add_prime_limit(verify);
  verify->add_flag("--timings", timings, "Append elapsed seconds to each entry");
  verify->add_flag("--no-reports", no_reports, "Skip report-only entries");

  // family
  std::string kind, s_arg, word_arg;
  int max_word = -1;
  CLI::App* family = app.add_subcommand("family", "Emit a curve of the 24- or 48-torsion family");
  family->add_option("kind", kind, "c24 or c48")->required()->check(CLI::IsMember({"c24", "c48"}));
  family->add_option("--s", s_arg, "Parameter s for c24 (rational)");
  family->add_option("--word", word_arg, "Coefficients a,b,c of a P1 + b P2 + c P3 for c48");
  family->add_option("--max-word", max_word, "Enumerate c48 over words with |a|,|b|,|c| <= this bound");

  // jacobian-order
  std::string curve_arg;
  std::uint64_t prime = 0;
  CLI::App* jorder = app.add_subcommand("jacobian-order", "Point counts and #J(F_p) at a good prime");
  jorder->add_option("--curve", curve_arg, "Curve line \"g2 [h] [f]\" or fixture name")->required();
  jorder->add_option("--prime", prime, "Odd prime of good reduction")->required();

  // divisor-order
  std::string divisor_arg;
  CLI::App* dorder = app.add_subcommand("divisor-order", "Exact order of a rational divisor class");
  dorder->add_option("--curve", curve_arg, "Curve line or fixture name")->required();
  dorder->add_option("--divisor", divisor_arg, "Divisor \"mumford [u] [v] n\"")->required();
  add_prime_limit(dorder);

  // certify
  std::uint64_t order = 0;
  CLI::App* certify = app.add_subcommand("certify", "Certify that a divisor class has a given order");
  certify->add_option("--curve", curve_arg, "Curve line or fixture name")->required();
  certify->add_option("--divisor", divisor_arg, "Divisor \"mumford [u] [v] n\"")->required();
  certify->add_option("--order", order, "Claimed order")->required();

  // torsion-bound
  CLI::App* tbound = app.add_subcommand("torsion-bound", "gcd of #J(F_p) over odd good primes");
  tbound->add_option("--curve", curve_arg, "Curve line or fixture name")->required();
  add_prime_limit(tbound);

  // screen
  std::string pool1, pool2, pairs_arg = "4:7";
  CLI::App* screen = app.add_subcommand("screen", "Trace-mod-3 screening of elliptic curve pools");
  screen->add_option("--pool1", pool1, "First pool file")->required();
  screen->add_option("--pool2", pool2, "Second pool file")->required();
  screen->add_option("--pairs", pairs_arg, "Torsion order pairs n1:n2, comma separated")->capture_default_str();
  add_prime_limit(screen);

  // search
  long a_bound = 10, b_bound = 10, height_bound = 20;
  int rhs_degree = 2;
  std::string orders_arg = "27,28,29,31,33,34,36,39", primes_arg = "3,5,7,11,13,17,19,23";
  CLI::App* search = app.add_subcommand("search", "Small-coefficient search for large torsion");
  search->add_option("--a-bound", a_bound, "Bound on the coefficients of h")->capture_default_str();
  search->add_option("--b-bound", b_bound, "Bound on the coefficients of f")->capture_default_str();
  search->add_option("--orders", orders_arg, "Interesting orders")->capture_default_str();
  search->add_option("--primes", primes_arg, "Screen primes")->capture_default_str();
  search->add_option("--rhs-degree", rhs_degree, "2: quadratic f with cubic h; 6: all h, f up to degree 3, 6")
      ->check(CLI::IsMember({2, 6}))
      ->capture_default_str();
  search->add_option("--height-bound", height_bound, "Point height for the divisor search, 0 disables")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const Format fmt = common.fmt();
  try {
    if (*verify) return cmd_verify(prime_limit, timings, no_reports, common);

    if (*family) {
      if (kind == "c24") {
        if (s_arg.empty()) throw Error(Errc::InvalidArgument, "c24 needs --s");
        print_instance(c24_build(parse_rat(s_arg)), fmt);
      } else if (max_word >= 0) {
        std::vector<std::string> skipped;
        for (const auto& inst : enumerate_48_family(max_word, &skipped, common.jobs)) print_instance(inst, fmt);
        for (const auto& s : skipped) std::cout << "# " << s << "\n";
      } else {
        const auto w = parse_long_list(word_arg);
        if (w.size() != 3) throw Error(Errc::ParseError, "--word needs three integers a,b,c");
        print_instance(c48_build(d_point_from_word(static_cast<int>(w[0]), static_cast<int>(w[1]), static_cast<int>(w[2]))),
                       fmt);
      }
      return 0;
    }

    if (*jorder) {
      const JacOrderRecord r = g2_jacobian_order(resolve_curve(curve_arg, common), prime);
      if (fmt == Format::Lines)
        std::cout << r.p << " " << r.n1 << " " << r.n2 << " " << r.jac_order << "\n";
      else
        std::cout << "p=" << r.p << " N1=" << r.n1 << " N2=" << r.n2 << " #J=" << r.jac_order << "\n";
      return 0;
    }

    if (*dorder) {
      const G2CurveQ c = resolve_curve(curve_arg, common);
      const MumfordDiv<Rat> d = parse_divisor(divisor_arg);
      jac_require_valid(c, d);
      const TorsionBound tb = torsion_bound(c, prime_limit, common.jobs);
      if (!jac_is_identity(c, jac_scalar_mul(c, static_cast<long long>(tb.bound), d))) {
        std::cout << (fmt == Format::Lines ? "infinite" : "order infinite (bound " + std::to_string(tb.bound) + " does not kill D)")
                  << "\n";
        return 0;
      }
      const std::uint64_t n = jac_element_order(c, d, tb.bound);
      std::cout << (fmt == Format::Lines ? "" : "order ") << n << "\n";
      return 0;
    }

    if (*certify) {
      const TorsionCertificate cert =
          certify_order(resolve_curve(curve_arg, common), parse_divisor(divisor_arg), order);
      std::cout << (fmt == Format::Lines ? certificate_line(cert) + "\n" : certificate_block(cert));
      return 0;
    }

    if (*tbound) {
      const TorsionBound tb = torsion_bound(resolve_curve(curve_arg, common), prime_limit, common.jobs);
      if (fmt == Format::Text)
        for (const auto& r : tb.records) std::cout << "p=" << r.p << " #J=" << r.jac_order << "\n";
      std::cout << (fmt == Format::Lines ? "" : "bound ") << tb.bound << "\n";
      return 0;
    }

    if (*screen) {
      std::vector<EllRecord> p1, p2;
      try {
        p1 = load_pool(pool1);
        p2 = load_pool(pool2);
      } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::InvariantError || e.code() == Errc::ParseError ? 2 : 1;
      }
      const auto found = screen_pools(p1, p2, parse_pairs(pairs_arg), prime_limit, common.jobs);
      for (const auto& sp : found)
        std::cout << sp.label1 << " " << sp.label2 << " " << (fmt == Format::Lines ? "" : "combined ") << sp.combined
                  << "\n";
      if (fmt == Format::Text) std::cout << found.size() << " pairs\n";
      return 0;
    }

    if (*search) {
      SearchConfig cfg;
      cfg.a_bound = a_bound;
      cfg.b_bound = b_bound;
      cfg.rhs_degree = rhs_degree;
      cfg.interesting_orders = parse_long_list(orders_arg);
      cfg.screen_primes.clear();
      for (long p : parse_long_list(primes_arg)) {
        if (p <= 0) throw Error(Errc::ParseError, "screen primes must be positive");
        cfg.screen_primes.push_back(static_cast<std::uint64_t>(p));
      }
      cfg.divisor_height = height_bound;
      cfg.jobs = common.jobs;
      const SearchResult res = small_search(cfg);
      for (const auto& r : res.reports) std::cout << format_report(r) << "\n";
      std::cout << (fmt == Format::Lines ? "# " : "") << format_summary(res.summary) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::ParseError ? 2 : 1;
  }
  return 0;
}
