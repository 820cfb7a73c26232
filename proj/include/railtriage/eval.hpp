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

#ifndef RAILTRIAGE_EVAL_HPP_
#define RAILTRIAGE_EVAL_HPP_

#include <array>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <span>

#include "railtriage/error.hpp"
#include "railtriage/pipeline.hpp"
#include "railtriage/serialize.hpp"

namespace railtriage {

// Codes: MissingLabel, BadLabel.
class EvalError : public Error {
 public:
  using Error::Error;
};

struct LabeledPrediction {
  TweetType gold = TweetType::Complaint;
  TweetType predicted = TweetType::Complaint;
  std::optional<ComplaintCategory> gold_category;
  std::optional<ComplaintCategory> predicted_category;
};

struct ClassScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;  // gold count
};

struct CategoryAccuracy {
  std::size_t correct = 0;
  std::size_t total = 0;
  double accuracy = 0.0;
};

struct EvalReport {
  // Rows are gold, columns predicted, both in TweetType order.
  std::array<std::array<std::size_t, 3>, 3> confusion{};
  std::array<ClassScores, 3> per_class{};
  std::map<ComplaintCategory, CategoryAccuracy> per_category;  // keyed by gold category
  std::size_t scored = 0;
  std::size_t rejected = 0;  // unparseable lines
  std::size_t failed = 0;    // records the pipeline could not classify

  Json to_json() const;
  std::string to_table() const;
};

// One-vs-rest precision, recall and F1; a zero denominator scores 0.
EvalReport score_predictions(std::span<const LabeledPrediction> predictions);

// Lines are TweetRecords plus "label" and optional "category" keys.
// Throws EvalError("MissingLabel") naming the line.
EvalReport evaluate(std::istream& in, const PipelineConfig& config);
EvalReport evaluate(const std::filesystem::path& path, const PipelineConfig& config);

}  // namespace railtriage

#endif  // RAILTRIAGE_EVAL_HPP_
