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

#include <doctest.h>

#include <set>

#include "g2t/catalog.hpp"
#include "g2t/verify.hpp"

using namespace g2t;

TEST_CASE("ledger covers every criterion once and passes") {
  VerifyOptions opts;
  opts.data_dir = data_dir();
  opts.reports = true;
  const auto ledger = run_verification(opts);
  std::set<int> criteria;
  std::set<std::string> ids;
  for (const auto& e : ledger) {
    CHECK(ids.insert(e.id).second);
    if (e.criterion == 0) {
      CHECK(e.status == LedgerStatus::ReportOnly);
      continue;
    }
    CHECK(criteria.insert(e.criterion).second);
    CHECK_MESSAGE(e.status == LedgerStatus::Pass, format_entry(e));
  }
  CHECK(criteria.size() == 11);
  CHECK(ledger_passed(ledger));
  for (const auto& e : ledger) {
    if (e.id == "C70.divisor") CHECK(format_entry(e).rfind("C70.divisor: pass (order 70 certified", 0) == 0);
    if (e.id == "Corollary.s-values") CHECK(format_entry(e) == "Corollary.s-values: pass (-21, 3, 21/31)");
  }
}

TEST_CASE("a tiny prime limit surfaces as failures") {
  VerifyOptions opts;
  opts.prime_limit = 3;
  opts.data_dir = data_dir();
  opts.reports = false;
  const auto ledger = run_verification(opts);
  CHECK_FALSE(ledger_passed(ledger));
  bool no_good = false;
  for (const auto& e : ledger)
    if (e.status == LedgerStatus::Fail && e.evidence.find("NoGoodPrimes") != std::string::npos) no_good = true;
  CHECK(no_good);
}

TEST_CASE("missing fixtures fail the entries that need them") {
  VerifyOptions opts;
  opts.data_dir = "/nonexistent";
  opts.reports = false;
  const auto ledger = run_verification(opts);
  for (const auto& e : ledger)
    if (e.id == "C70.divisor" || e.id == "Screening.pairs") CHECK(e.status == LedgerStatus::Fail);
  CHECK_FALSE(ledger_passed(ledger));
}

TEST_CASE("entry formatting") {
  LedgerEntry e{"X.y", LedgerStatus::ReportOnly, "note", 0, 1.5, 0};
  CHECK(format_entry(e) == "X.y: report-only (note)");
  CHECK(format_entry(e, true) == "X.y: report-only (note) [1.50s]");
}
