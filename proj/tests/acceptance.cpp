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

// Acceptance run: one PASS/FAIL line per acceptance criterion, judged on the
// ledger status and on the criterion's time limit.

#include <cstdio>
#include <map>

#include "g2t/catalog.hpp"
#include "g2t/verify.hpp"

int main() {
  g2t::VerifyOptions opts;
  opts.data_dir = g2t::data_dir();
  opts.reports = true;
  const auto ledger = g2t::run_verification(opts);
  std::map<int, const g2t::LedgerEntry*> by_criterion;
  for (const auto& e : ledger)
    if (e.criterion > 0) by_criterion[e.criterion] = &e;
  int failures = 0;
  for (int k = 1; k <= 11; ++k) {
    const auto it = by_criterion.find(k);
    if (it == by_criterion.end()) {
      std::printf("FAIL criterion %d: no ledger entry\n", k);
      ++failures;
      continue;
    }
    const g2t::LedgerEntry& e = *it->second;
    const bool in_time = e.seconds <= e.time_limit;
    const bool ok = e.status == g2t::LedgerStatus::Pass && in_time;
    failures += !ok;
    std::printf("%s criterion %d %s: %s [%.2fs of %.0fs%s]\n", ok ? "PASS" : "FAIL", k, e.id.c_str(),
                e.evidence.c_str(), e.seconds, e.time_limit, in_time ? "" : ", over time");
  }
  for (const auto& e : ledger)
    if (e.criterion == 0) std::printf("NOTE %s\n", g2t::format_entry(e, true).c_str());
  std::printf("%d of 11 criteria passed\n", 11 - failures);
  return failures ? 1 : 0;
}
