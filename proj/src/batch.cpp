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

#include "railtriage/batch.hpp"

#include <cstdio>
#include <fstream>

namespace railtriage {

void BatchSummary::add(const TriageOutcome& outcome) {
  ++records;
  const auto* r = std::get_if<TriageResult>(&outcome);
  if (!r) {
    ++failed;
    return;
  }
  ++per_type[index_of(r->decision.tweet_type)];
  if (r->category) ++per_category[r->category->category];
  if (r->completeness.status == CompletenessStatus::Incomplete) ++incomplete;
  if (r->routing && r->routing->confidence == RouteConfidence::Fallback) ++fallback_routed;
}

Json BatchSummary::to_json() const {
  Json types = Json::object();
  for (auto t : kAllTweetTypes) types[std::string(to_string(t))] = per_type[index_of(t)];
  Json categories = Json::object();
  for (auto c : kAllCategories) {
    const auto it = per_category.find(c);
    categories[std::string(to_string(c))] = it == per_category.end() ? 0 : it->second;
  }
  return {{"records", records},     {"rejected", rejected},
          {"failed", failed},       {"per_type", std::move(types)},
          {"per_category", std::move(categories)},
          {"incomplete", incomplete}, {"fallback_routed", fallback_routed}};
}

std::string BatchSummary::to_table() const {
  std::string out;
  char line[96];
  auto row = [&](std::string_view name, std::size_t v) {
    std::snprintf(line, sizeof(line), "  %-22.*s %8zu\n", static_cast<int>(name.size()), name.data(), v);
    out += line;
  };
  out += "records\n";
  row("triaged", records);
  row("rejected", rejected);
  row("failed", failed);
  out += "types\n";
  for (auto t : kAllTweetTypes) row(to_string(t), per_type[index_of(t)]);
  out += "categories\n";
  for (const auto& [c, n] : per_category) row(to_string(c), n);
  out += "completeness\n";
  row("incomplete", incomplete);
  out += "routing\n";
  row("fallback", fallback_routed);
  return out;
}

BatchSummary triage_records(const CorpusBatch& batch, const PipelineConfig& config,
                            std::ostream& out, const BatchOptions& options) {
  BatchSummary summary;
  summary.rejected = batch.rejected.size();
  for (const auto& record : batch.records) {
    auto outcome = triage_one(record, config, options.processed_at);
    out << to_json_line(outcome) << '\n';
    summary.add(outcome);
    if (options.store) {
      if (auto* r = std::get_if<TriageResult>(&outcome); r && r->decision.tweet_type == TweetType::Complaint) {
        options.store->append(std::move(*r), options.processed_at);
      }
    }
  }
  return summary;
}

BatchSummary triage_batch(const std::filesystem::path& input, const std::filesystem::path& output,
                          const PipelineConfig& config, const BatchOptions& options) {
  const auto batch = read_corpus(input);
  std::ofstream out(output, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("OutputUnwritable", output.string());
  auto summary = triage_records(batch, config, out, options);
  out.flush();
  if (!out) throw IoError("OutputUnwritable", output.string());
  return summary;
}

}  // namespace railtriage
