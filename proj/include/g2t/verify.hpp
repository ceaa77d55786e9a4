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

#ifndef G2T_VERIFY_HPP
#define G2T_VERIFY_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace g2t {

enum class LedgerStatus { Pass, Fail, ReportOnly };

const char* status_name(LedgerStatus s) noexcept;

struct LedgerEntry {
  std::string id;
  LedgerStatus status = LedgerStatus::Fail;
  std::string evidence;
  /// Acceptance criterion number, 0 for report-only entries.
  int criterion = 0;
  double seconds = 0;
  double time_limit = 0;
};

struct VerifyOptions {
  std::uint64_t prime_limit = 200;
  std::filesystem::path data_dir;
  unsigned jobs = 0;
  bool reports = true;
};

/// Runs every acceptance check against the fixtures in opts.data_dir. Library
/// errors inside a check turn that entry into a failure.
std::vector<LedgerEntry> run_verification(const VerifyOptions& opts);

/// True iff no entry failed.
bool ledger_passed(const std::vector<LedgerEntry>& ledger);

/// "id: status (evidence)", optionally followed by the elapsed time.
std::string format_entry(const LedgerEntry& e, bool with_time = false);

}  // namespace g2t

#endif
