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

#ifndef RAILTRIAGE_PIPELINE_HPP_
#define RAILTRIAGE_PIPELINE_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "railtriage/categorize.hpp"
#include "railtriage/classify.hpp"
#include "railtriage/complete.hpp"
#include "railtriage/extract.hpp"
#include "railtriage/ingest.hpp"
#include "railtriage/lexicon.hpp"
#include "railtriage/route.hpp"

namespace railtriage {

inline constexpr std::string_view kCodeVersion = "railtriage-0.1.0";

// Where each table comes from. `schemas` may name a directory holding
// schemas.tsv and prompts.tsv, or a schemas file with prompts.tsv beside it.
struct ConfigPaths {
  std::filesystem::path lexicon_dir;
  std::filesystem::path stations;
  std::filesystem::path schemas;
  std::filesystem::path categories;
  std::filesystem::path routes_dir;
  // Applied after loading, e.g. {TicketingRefund, "failed_transaction_strict"}.
  std::vector<std::pair<ComplaintCategory, std::string>> schema_bindings;

  static ConfigPaths defaults(const std::filesystem::path& data_dir = RAILTRIAGE_DATA_DIR);
};

// Everything triage_one needs, loaded and cross-validated once. Immutable
// after load and safe to share between threads.
struct PipelineConfig {
  Lexicon lexicon;
  Gazetteer gazetteer;
  SchemaSet schemas;
  PromptTemplates prompts;
  std::vector<CategoryRule> categories;
  RouteTables routes;
  std::string pipeline_version;

  // Throws ConfigError subclasses; a missing or invalid table fails here,
  // never mid-batch.
  static PipelineConfig load(const ConfigPaths& paths);
};

struct TriageResult {
  TweetRecord tweet;
  TypeDecision decision;
  EntitySet entities;
  std::optional<CategoryResult> category;  // complaints only
  CompletenessReport completeness;
  std::optional<RoutingAssignment> routing;  // complaints only
  std::string pipeline_version;
  std::string processed_at;

  friend bool operator==(const TriageResult&, const TriageResult&) = default;
};

// A record the pipeline could not classify (no word tokens).
struct TriageFailure {
  TweetRecord tweet;
  std::string error_code;
  std::string error_detail;
  std::string pipeline_version;
  std::string processed_at;

  friend bool operator==(const TriageFailure&, const TriageFailure&) = default;
};

using TriageOutcome = std::variant<TriageResult, TriageFailure>;

// normalize -> tokenize -> annotate -> classify -> extract, then for
// complaints categorize -> validate -> route. Pure for a fixed config and
// timestamp.
TriageOutcome triage_one(const TweetRecord& tweet, const PipelineConfig& config,
                         const std::string& processed_at);

}  // namespace railtriage

#endif  // RAILTRIAGE_PIPELINE_HPP_
