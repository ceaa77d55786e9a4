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

#include "g2t/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "g2t/error.hpp"
#include "g2t/text.hpp"

#ifndef G2T_DATA_DIR
#define G2T_DATA_DIR "data"
#endif

namespace g2t {

namespace {

/// Content lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.emplace_back(n, std::string(t));
  }
  return out;
}

template <class Fn>
auto with_line(const std::filesystem::path& path, std::size_t n, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.code(), path.filename().string() + " line " + std::to_string(n) + ": " + e.detail());
  }
}

std::pair<std::string, std::string> head_word(const std::string& line) {
  const std::size_t sp = line.find(' ');
  if (sp == std::string::npos) throw Error(Errc::ParseError, "expected a leading field");
  return {line.substr(0, sp), std::string(trim(std::string_view(line).substr(sp + 1)))};
}

}  // namespace

std::filesystem::path data_dir(const std::optional<std::string>& override_dir) {
  if (override_dir && !override_dir->empty()) return *override_dir;
  if (const char* env = std::getenv("G2T_DATA_DIR"); env && *env) return env;
  return G2T_DATA_DIR;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<NamedCurve> load_named_curves(const std::filesystem::path& path) {
  std::vector<NamedCurve> out;
  for (const auto& [n, line] : content_lines(read_file(path))) {
    out.push_back(with_line(path, n, [&] {
      auto [name, rest] = head_word(line);
      return NamedCurve{name, parse_curve(rest)};
    }));
  }
  return out;
}

const G2CurveQ& find_curve(const std::vector<NamedCurve>& curves, const std::string& name) {
  for (const auto& nc : curves)
    if (nc.name == name) return nc.curve;
  throw Error(Errc::InvalidArgument, "no curve named " + name);
}

std::vector<SmallCurve> load_small_table(const std::filesystem::path& path) {
  std::vector<SmallCurve> out;
  for (const auto& [n, line] : content_lines(read_file(path))) {
    out.push_back(with_line(path, n, [&] {
      auto [order, rest] = head_word(line);
      long v = 0;
      try {
        std::size_t used = 0;
        v = std::stol(order, &used);
        if (used != order.size() || v <= 0) throw std::invalid_argument(order);
      } catch (const std::exception&) {
        throw Error(Errc::ParseError, "bad order '" + order + "'");
      }
      return SmallCurve{v, parse_curve(rest)};
    }));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> load_label_pairs(const std::filesystem::path& path) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [n, line] : content_lines(read_file(path))) {
    out.push_back(with_line(path, n, [&] {
      auto [a, b] = head_word(line);
      if (b.empty() || b.find(' ') != std::string::npos) throw Error(Errc::ParseError, "expected two labels");
      return std::pair{a, b};
    }));
  }
  return out;
}

std::vector<EllRecord> load_pool(const std::filesystem::path& path) {
  try {
    return parse_cremona(read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.filename().string() + ": " + e.detail());
  }
}

MumfordDiv<Rat> load_divisor(const std::filesystem::path& path) {
  const auto lines = content_lines(read_file(path));
  if (lines.empty()) throw Error(Errc::ParseError, path.filename().string() + ": no divisor");
  return with_line(path, lines.front().first, [&] { return parse_divisor(lines.front().second); });
}

}  // namespace g2t
