// Copyright 2026 The Railtriage Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RAILTRIAGE_UTIL_HPP_
#define RAILTRIAGE_UTIL_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace railtriage {

// One non-comment line of a tab-separated table.
struct TsvRow {
  std::size_t line = 0;  // 1-based
  std::vector<std::string> cols;
};

// Reads a whole file. Throws IoError("FileUnreadable").
std::string read_file(const std::filesystem::path& path);

// Parses TSV text: blank lines and lines starting with '#' are skipped,
// trailing '\r' is dropped, columns are trimmed.
std::vector<TsvRow> parse_tsv(std::string_view text);

std::string_view trim(std::string_view s);
std::string to_lower_ascii(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Collapses runs of ASCII whitespace to one space and trims both ends.
std::string collapse_spaces(std::string_view s);

bool is_all_digits(std::string_view s);
bool is_valid_utf8(std::string_view s);
// Number of Unicode scalar values; assumes valid UTF-8.
std::size_t utf8_length(std::string_view s);

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 14695981039346656037ULL);
std::string to_hex(std::uint64_t v);
inline std::string content_hash(std::string_view data) { return to_hex(fnv1a64(data)); }

// Calendar validation shared by timestamp and date parsing.
bool is_leap_year(int year);
int days_in_month(int year, int month);

// Current wall-clock time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_now_iso8601();

}  // namespace railtriage

#endif  // RAILTRIAGE_UTIL_HPP_
