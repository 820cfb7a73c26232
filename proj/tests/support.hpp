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

#ifndef RAILTRIAGE_TESTS_SUPPORT_HPP_
#define RAILTRIAGE_TESTS_SUPPORT_HPP_

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "railtriage/ingest.hpp"
#include "railtriage/pipeline.hpp"
#include "railtriage/util.hpp"

namespace railtriage::testing {

inline std::filesystem::path data_dir() { return RAILTRIAGE_DATA_DIR; }
inline std::filesystem::path fixtures_dir() { return RAILTRIAGE_FIXTURES_DIR; }

inline const PipelineConfig& shipped_config() {
  static const PipelineConfig config = PipelineConfig::load(ConfigPaths::defaults(data_dir()));
  return config;
}

inline const PipelineConfig& strict_config() {
  static const PipelineConfig config = [] {
    auto paths = ConfigPaths::defaults(data_dir());
    paths.schema_bindings.emplace_back(ComplaintCategory::TicketingRefund, "failed_transaction_strict");
    return PipelineConfig::load(paths);
  }();
  return config;
}

inline TweetRecord make_tweet(std::string id, std::string text) {
  return {std::move(id), "@passenger", "2022-01-05T10:00:00Z", std::move(text), "@RailwaySeva"};
}

inline std::string record_line(const TweetRecord& r) { return to_json(r).dump(); }

class TempDir {
 public:
  TempDir() {
    std::string tmpl = (std::filesystem::temp_directory_path() / "railtriage-XXXXXX").string();
    if (!::mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
    path_ = tmpl;
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

// Deterministic pseudo-tweets mixing complaint, suggestion and praise vocabulary,
// entity-shaped numbers and shipped station names.
inline std::vector<TweetRecord> synthetic_tweets(std::size_t n, unsigned seed) {
  static const std::vector<std::string> pieces = {
      "water",        "leakage",    "at",          "bhandup",    "railway",     "station",
      "platform",     "no",         "2/3",         "train",      "12555",       "late",
      "pnr",          "8461234567", "refund",      "not",        "received",    "txn",
      "id",           "TX99812",    "mobile",      "9876543210", "please add",  "more",
      "coaches",      "thanks",     "for",         "the",        "prompt",      "response",
      "dirty",        "toilet",     "in",          "coach",      "S4",          "food",
      "stale",        "#dirty",     "@RailMinIndia", "https://t.co/x", "good",  "great",
      "journey",      "gorakhpur",  "GKP",         "on",         "12/03/2022",  "ac not working",
      "blanket",      "wheelchair", "theft",       "kurla",      "!",           ",",
      "request you to", "run",      "scenic",      "beauty",     "user id",     "ravi88"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> len(3, 18);
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  std::vector<TweetRecord> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string text;
    const auto words = len(rng);
    for (std::size_t w = 0; w < words; ++w) {
      if (!text.empty()) text += ' ';
      text += pieces[pick(rng)];
    }
    out.push_back(make_tweet("syn-" + std::to_string(i), text));
  }
  return out;
}

inline std::string corpus_text(const std::vector<TweetRecord>& records) {
  std::string out;
  for (const auto& r : records) out += record_line(r) + "\n";
  return out;
}

}  // namespace railtriage::testing

#endif  // RAILTRIAGE_TESTS_SUPPORT_HPP_
