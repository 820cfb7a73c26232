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

#include <sstream>

#include <gtest/gtest.h>

#include "railtriage/ingest.hpp"
#include "support.hpp"

namespace railtriage {
namespace {

constexpr const char* kLine =
    R"({"id":"t1","author_handle":"@user","created_at":"2022-01-05T10:00:00Z",)"
    R"("text":"water leakage at bhandup railway station platform no 2/3","target_handle":"@RailwaySeva"})";

IngestErrorKind kind_of(std::string_view line) {
  try {
    parse_record(line);
  } catch (const IngestError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted: " << line;
  return IngestErrorKind::MalformedLine;
}

std::string with(std::string_view key, std::string_view json_value) {
  auto j = nlohmann::json::parse(kLine);
  j[std::string(key)] = nlohmann::json::parse(json_value);
  return j.dump();
}

std::string without(std::string_view key) {
  auto j = nlohmann::json::parse(kLine);
  j.erase(std::string(key));
  return j.dump();
}

TEST(ParseRecord, ReadsAllFields) {
  const auto r = parse_record(kLine);
  EXPECT_EQ(r.id, "t1");
  EXPECT_EQ(r.author_handle, "@user");
  EXPECT_EQ(r.created_at, "2022-01-05T10:00:00Z");
  EXPECT_EQ(r.text, "water leakage at bhandup railway station platform no 2/3");
  EXPECT_EQ(r.target_handle, "@RailwaySeva");
}

TEST(ParseRecord, IgnoresUnknownKeys) {
  EXPECT_EQ(parse_record(with("label", R"("Complaint")")), parse_record(kLine));
}

TEST(ParseRecord, EmptyText) {
  EXPECT_EQ(kind_of(with("text", R"("")")), IngestErrorKind::EmptyText);
  EXPECT_EQ(kind_of(with("text", R"("  \t\n ")")), IngestErrorKind::EmptyText);
}

TEST(ParseRecord, MissingField) {
  for (const char* key : {"id", "author_handle", "created_at", "text", "target_handle"}) {
    try {
      parse_record(without(key));
      ADD_FAILURE() << key;
    } catch (const IngestError& e) {
      EXPECT_EQ(e.kind(), IngestErrorKind::MissingField) << key;
      EXPECT_NE(std::string(e.what()).find(key), std::string::npos) << e.what();
    }
  }
}

TEST(ParseRecord, EmptyIdIsMissing) {
  EXPECT_EQ(kind_of(with("id", R"("")")), IngestErrorKind::MissingField);
}

TEST(ParseRecord, BadTimestamp) {
  for (const char* ts : {R"("yesterday")", R"("2022-13-01T00:00:00Z")", R"("2022-02-30T00:00:00Z")",
                         R"("2021-02-29T10:00:00Z")", R"("2022-01-05T24:00:00Z")", R"("2022-01-05")",
                         R"("2022-01-05T10:00:00")", R"("2022-01-05T10:61:00Z")"}) {
    EXPECT_EQ(kind_of(with("created_at", ts)), IngestErrorKind::BadTimestamp) << ts;
  }
}

TEST(ParseRecord, AcceptsInstantForms) {
  for (const char* ts : {"2022-01-05T10:00:00Z", "2020-02-29T23:59:59Z", "2022-01-05T10:00:00.123Z",
                         "2022-01-05T10:00:00+05:30", "2022-01-05T10:00:00-01:00"}) {
    EXPECT_TRUE(is_iso8601_instant(ts)) << ts;
  }
}

TEST(ParseRecord, MalformedLine) {
  EXPECT_EQ(kind_of("{not json"), IngestErrorKind::MalformedLine);
  EXPECT_EQ(kind_of("[1,2,3]"), IngestErrorKind::MalformedLine);
  EXPECT_EQ(kind_of(with("text", "42")), IngestErrorKind::MalformedLine);
  EXPECT_EQ(kind_of(with("text", '"' + std::string(4097, 'a') + '"')), IngestErrorKind::MalformedLine);
}

TEST(ParseRecord, LengthCountsScalarValues) {
  std::string text;
  for (int i = 0; i < 4096; ++i) text += "é";  // two bytes each
  EXPECT_NO_THROW(parse_record(with("text", nlohmann::json(text).dump())));
}

TEST(ParseRecord, ErrorNamesOffendingLine) {
  try {
    parse_record(with("text", R"("")"));
    FAIL();
  } catch (const IngestError& e) {
    EXPECT_NE(std::string(e.what()).find("\"id\":\"t1\""), std::string::npos) << e.what();
  }
}

TEST(ParseRecord, Deterministic) {
  EXPECT_EQ(parse_record(kLine), parse_record(kLine));
}

TEST(ParseCorpus, ThreeValidLines) {
  std::istringstream in(with("id", R"("a")") + "\n" + with("id", R"("b")") + "\n" + with("id", R"("c")") + "\n");
  const auto batch = parse_corpus(in, "mem");
  ASSERT_EQ(batch.records.size(), 3u);
  EXPECT_TRUE(batch.rejected.empty());
  EXPECT_EQ(batch.records[0].id, "a");
  EXPECT_EQ(batch.records[2].id, "c");
}

TEST(ParseCorpus, BadLineIsRejectedWithLineNumber) {
  std::istringstream in(with("id", R"("a")") + "\n" + with("id", R"("b")") + "\n{broken\n");
  const auto batch = parse_corpus(in, "mem");
  ASSERT_EQ(batch.records.size(), 2u);
  ASSERT_EQ(batch.rejected.size(), 1u);
  EXPECT_EQ(batch.rejected[0].line_number, 3u);
  EXPECT_EQ(batch.rejected[0].kind, IngestErrorKind::MalformedLine);
}

TEST(ParseCorpus, DuplicateIdRejected) {
  std::istringstream in(std::string(kLine) + "\n" + kLine + "\n");
  const auto batch = parse_corpus(in, "mem");
  EXPECT_EQ(batch.records.size(), 1u);
  ASSERT_EQ(batch.rejected.size(), 1u);
  EXPECT_EQ(batch.rejected[0].kind, IngestErrorKind::DuplicateId);
}

TEST(ParseCorpus, EveryNonBlankLineAccountedFor) {
  std::mt19937 rng(7);
  const std::vector<std::string> lines = {kLine, "", "   ", "{oops", with("text", R"("")"), without("id"),
                                          with("created_at", R"("bad")")};
  for (int trial = 0; trial < 200; ++trial) {
    std::string text;
    std::size_t non_blank = 0;
    const int n = static_cast<int>(rng() % 12);
    for (int i = 0; i < n; ++i) {
      auto line = lines[rng() % lines.size()];
      if (line == kLine) line = with("id", '"' + std::to_string(trial) + "-" + std::to_string(i) + '"');
      if (!trim(line).empty()) ++non_blank;
      text += line + "\n";
    }
    std::istringstream in(text);
    const auto batch = parse_corpus(in, "mem");
    EXPECT_EQ(batch.records.size() + batch.rejected.size(), non_blank) << text;
  }
}

TEST(ReadCorpus, WorkedExamplesInOrder) {
  const auto batch = read_corpus(testing::fixtures_dir() / "worked_examples.jsonl");
  EXPECT_TRUE(batch.rejected.empty());
  ASSERT_EQ(batch.records.size(), 5u);
  EXPECT_EQ(batch.records[0].id, "water-leakage");
  EXPECT_EQ(batch.records[4].id, "prompt-response");
}

TEST(ReadCorpus, UnreadableFile) {
  try {
    read_corpus("/nonexistent/corpus.jsonl");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_EQ(e.code(), "FileUnreadable");
  }
}

TEST(ReadCorpus, EmptyFile) {
  testing::TempDir dir;
  testing::write_text(dir / "empty.jsonl", "");
  const auto batch = read_corpus(dir / "empty.jsonl");
  EXPECT_TRUE(batch.records.empty());
  EXPECT_TRUE(batch.rejected.empty());
}

TEST(TweetRecordJson, RoundTrip) {
  const auto r = parse_record(kLine);
  EXPECT_EQ(parse_record(to_json(r).dump()), r);
}

}  // namespace
}  // namespace railtriage
