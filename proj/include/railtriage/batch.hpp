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

#ifndef RAILTRIAGE_BATCH_HPP_
#define RAILTRIAGE_BATCH_HPP_

#include <array>
#include <filesystem>
#include <map>
#include <ostream>
#include <string>

#include "railtriage/ingest.hpp"
#include "railtriage/pipeline.hpp"
#include "railtriage/serialize.hpp"
#include "railtriage/store.hpp"

namespace railtriage {

struct BatchSummary {
  std::size_t records = 0;  // triaged, including failures
  std::size_t rejected = 0;
  std::size_t failed = 0;  // no word tokens
  std::size_t incomplete = 0;
  std::size_t fallback_routed = 0;
  std::array<std::size_t, 3> per_type{};
  std::map<ComplaintCategory, std::size_t> per_category;

  void add(const TriageOutcome& outcome);
  Json to_json() const;
  std::string to_table() const;
};

struct BatchOptions {
  // Stamped on every result; one value per batch keeps output reproducible.
  std::string processed_at;
  // When set, every complaint becomes a task.
  TaskStore* store = nullptr;
};

// Writes one JSON line per record, in input order.
BatchSummary triage_records(const CorpusBatch& batch, const PipelineConfig& config,
                            std::ostream& out, const BatchOptions& options);

// Throws IoError("FileUnreadable") or IoError("OutputUnwritable").
BatchSummary triage_batch(const std::filesystem::path& input, const std::filesystem::path& output,
                          const PipelineConfig& config, const BatchOptions& options);

}  // namespace railtriage

#endif  // RAILTRIAGE_BATCH_HPP_
