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

#include "railtriage/ingest.hpp"

#include <fstream>
#include <unordered_set>

#include "railtriage/util.hpp"

namespace railtriage {

std::string_view to_string(IngestErrorKind k) {
  switch (k) {
    case IngestErrorKind::MissingField: return "MissingField";
    case IngestErrorKind::EmptyText: return "EmptyText";
    case IngestErrorKind::BadTimestamp: return "BadTimestamp";
    case IngestErrorKind::MalformedLine: return "MalformedLine";
    case IngestErrorKind::DuplicateId: return "DuplicateId";
  }
  return "?";
}

namespace {

std::string quote_line(std::string_view line) {
  constexpr std::size_t kMax = 160;
  if (line.size() <= kMax) return std::string(line);
  return std::string(line.substr(0, kMax)) + "...";
}

bool read_int(std::string_view s, std::size_t pos, std::size_t len, int& out) {
  if (pos + len > s.size()) return false;
  out = 0;
  for (std::size_t i = pos; i < pos + len; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    out = out * 10 + (s[i] - '0');
  }
  return true;
}

const std::string& require_string(const nlohmann::json& obj, const char* key,
                                  std::string_view context) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) {
    throw IngestError(IngestErrorKind::MissingField, std::string(key) + " in " + quote_line(context));
  }
  if (!it->is_string()) {
    throw IngestError(IngestErrorKind::MalformedLine,
                      std::string(key) + " is not a string in " + quote_line(context));
  }
  return it->get_ref<const std::string&>();
}

}  // namespace

bool is_iso8601_instant(std::string_view s) {
  int year, month, day, hour, minute, second;
  if (s.size() < 20) return false;
  if (!read_int(s, 0, 4, year) || s[4] != '-' || !read_int(s, 5, 2, month) || s[7] != '-' ||
      !read_int(s, 8, 2, day) || s[10] != 'T' || !read_int(s, 11, 2, hour) || s[13] != ':' ||
      !read_int(s, 14, 2, minute) || s[16] != ':' || !read_int(s, 17, 2, second)) {
    return false;
  }
  if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month)) return false;
  if (hour > 23 || minute > 59 || second > 59) return false;

  std::size_t pos = 19;
  if (s[pos] == '.') {
    const auto start = ++pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start || pos - start > 9) return false;
  }
  if (pos >= s.size()) return false;
  if (s[pos] == 'Z') return pos + 1 == s.size();
  if (s[pos] != '+' && s[pos] != '-') return false;
  int off_h, off_m;
  if (pos + 6 != s.size() || !read_int(s, pos + 1, 2, off_h) || s[pos + 3] != ':' ||
      !read_int(s, pos + 4, 2, off_m)) {
    return false;
  }
  return off_h <= 23 && off_m <= 59;
}

TweetRecord record_from_json(const nlohmann::json& obj, std::string_view context) {
  if (!obj.is_object()) {
    throw IngestError(IngestErrorKind::MalformedLine, "not a JSON object: " + quote_line(context));
  }
  TweetRecord r;
  r.id = require_string(obj, "id", context);
  r.author_handle = require_string(obj, "author_handle", context);
  r.created_at = require_string(obj, "created_at", context);
  r.text = require_string(obj, "text", context);
  r.target_handle = require_string(obj, "target_handle", context);

  if (trim(r.id).empty()) {
    throw IngestError(IngestErrorKind::MissingField, "id in " + quote_line(context));
  }
  if (trim(r.text).empty()) {
    throw IngestError(IngestErrorKind::EmptyText, quote_line(context));
  }
  if (utf8_length(r.text) > kMaxTextLength) {
    throw IngestError(IngestErrorKind::MalformedLine,
                      "text exceeds 4096 characters in " + quote_line(context));
  }
  if (!is_iso8601_instant(r.created_at)) {
    throw IngestError(IngestErrorKind::BadTimestamp, r.created_at + " in " + quote_line(context));
  }
  return r;
}

TweetRecord parse_record(std::string_view line) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception&) {
    throw IngestError(IngestErrorKind::MalformedLine, quote_line(line));
  }
  return record_from_json(obj, line);
}

nlohmann::ordered_json to_json(const TweetRecord& r) {
  return {{"id", r.id},
          {"author_handle", r.author_handle},
          {"created_at", r.created_at},
          {"text", r.text},
          {"target_handle", r.target_handle}};
}

CorpusBatch parse_corpus(std::istream& in, std::string source_path) {
  CorpusBatch batch;
  batch.source_path = std::move(source_path);
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    try {
      auto record = parse_record(line);
      if (!seen.insert(record.id).second) {
        throw IngestError(IngestErrorKind::DuplicateId, record.id);
      }
      batch.records.push_back(std::move(record));
    } catch (const IngestError& e) {
      batch.rejected.push_back({line_no, e.kind(), e.detail()});
    }
  }
  return batch;
}

CorpusBatch read_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("FileUnreadable", path.string());
  auto batch = parse_corpus(in, path.string());
  if (in.bad()) throw IoError("FileUnreadable", path.string());
  return batch;
}

}  // namespace railtriage
