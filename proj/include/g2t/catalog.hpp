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

#ifndef G2T_CATALOG_HPP
#define G2T_CATALOG_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2t/genus2.hpp"
#include "g2t/jacobian.hpp"
#include "g2t/screening.hpp"

namespace g2t {

/// Fixture directory: the explicit override, else $G2T_DATA_DIR, else the
/// directory configured at build time.
std::filesystem::path data_dir(const std::optional<std::string>& override_dir = std::nullopt);

/// Whole file as a string; InvalidArgument if it cannot be read.
std::string read_file(const std::filesystem::path& path);

struct NamedCurve {
  std::string name;
  G2CurveQ curve;
};

/// Lines "name g2 [h] [f"]; blank lines and '#' comments are skipped.
std::vector<NamedCurve> load_named_curves(const std::filesystem::path& path);
const G2CurveQ& find_curve(const std::vector<NamedCurve>& curves, const std::string& name);

struct SmallCurve {
  long order = 0;
  G2CurveQ curve;
};

/// Lines "order g2 [h] [f]".
std::vector<SmallCurve> load_small_table(const std::filesystem::path& path);

/// Lines "label1 label2".
std::vector<std::pair<std::string, std::string>> load_label_pairs(const std::filesystem::path& path);

std::vector<EllRecord> load_pool(const std::filesystem::path& path);

/// First non-comment line parsed as a divisor.
MumfordDiv<Rat> load_divisor(const std::filesystem::path& path);

}  // namespace g2t

#endif
