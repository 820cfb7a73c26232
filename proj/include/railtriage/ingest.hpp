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

#ifndef RAILTRIAGE_INGEST_HPP_
#define RAILTRIAGE_INGEST_HPP_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "railtriage/error.hpp"

namespace railtriage {

inline constexpr std::size_t kMaxTextLength = 4096;  // Unicode scalar values

// One inbound post addressed to a railway account.
struct TweetRecord {
  std::string id;
  std::string author_handle;
  std::string created_at;  // ISO-8601 instant, as received
  std::string text;
  std::string target_handle;

  friend bool operator==(const TweetRecord&, const TweetRecord&) = default;
};

enum class IngestErrorKind { MissingField, EmptyText, BadTimestamp, MalformedLine, DuplicateId };
std::string_view to_string(IngestErrorKind k);

class IngestError : public Error {
 public:
  IngestError(IngestErrorKind kind, std::string detail)
      : Error(std::string(to_string(kind)), std::move(detail)), kind_(kind) {}
  IngestErrorKind kind() const noexcept { return kind_; }

 private:
  IngestErrorKind kind_;
};

struct Rejection {
  std::size_t line_number = 0;  // 1-based physical line
  IngestErrorKind kind = IngestErrorKind::MalformedLine;
  std::string reason;
};

struct CorpusBatch {
  std::vector<TweetRecord> records;  // file order
  std::string source_path;
  std::vector<Rejection> rejected;
};

// True for "YYYY-MM-DDTHH:MM:SS[.fraction](Z|+HH:MM|-HH:MM)" with valid
// calendar and clock ranges.
bool is_iso8601_instant(std::string_view s);

// Parses one JSON Lines record. Unknown keys are ignored. Throws IngestError.
TweetRecord parse_record(std::string_view line);

// Same validation over an already-parsed object; `context` is quoted in errors.
TweetRecord record_from_json(const nlohmann::json& obj, std::string_view context);

nlohmann::ordered_json to_json(const TweetRecord& r);

// Blank lines are skipped; every other line ends up in exactly one of
// records or rejected. Duplicate ids after the first are rejected.
CorpusBatch parse_corpus(std::istream& in, std::string source_path);

// Throws IoError("FileUnreadable") only.
CorpusBatch read_corpus(const std::filesystem::path& path);

}  // namespace railtriage

#endif  // RAILTRIAGE_INGEST_HPP_
