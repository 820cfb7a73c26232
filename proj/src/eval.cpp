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

#include "railtriage/eval.hpp"

#include <cstdio>
#include <fstream>

#include "railtriage/util.hpp"

namespace railtriage {

EvalReport score_predictions(std::span<const LabeledPrediction> predictions) {
  EvalReport report;
  for (const auto& p : predictions) {
    ++report.confusion[index_of(p.gold)][index_of(p.predicted)];
    ++report.scored;
    if (p.gold_category) {
      auto& acc = report.per_category[*p.gold_category];
      ++acc.total;
      if (p.predicted_category == p.gold_category) ++acc.correct;
    }
  }
  for (std::size_t k = 0; k < 3; ++k) {
    std::size_t tp = report.confusion[k][k];
    std::size_t gold = 0;
    std::size_t predicted = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      gold += report.confusion[k][j];
      predicted += report.confusion[j][k];
    }
    auto& s = report.per_class[k];
    s.support = gold;
    s.precision = predicted ? static_cast<double>(tp) / static_cast<double>(predicted) : 0.0;
    s.recall = gold ? static_cast<double>(tp) / static_cast<double>(gold) : 0.0;
    s.f1 = (s.precision + s.recall) > 0 ? 2 * s.precision * s.recall / (s.precision + s.recall) : 0.0;
  }
  for (auto& [c, acc] : report.per_category) {
    acc.accuracy = acc.total ? static_cast<double>(acc.correct) / static_cast<double>(acc.total) : 0.0;
  }
  return report;
}

EvalReport evaluate(std::istream& in, const PipelineConfig& config) {
  std::vector<LabeledPrediction> predictions;
  std::size_t rejected = 0;
  std::size_t failed = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    nlohmann::json obj;
    TweetRecord record;
    try {
      obj = nlohmann::json::parse(line);
      record = record_from_json(obj, line);
    } catch (const std::exception&) {
      ++rejected;
      continue;
    }
    const auto where = "line " + std::to_string(line_no);
    const auto label_it = obj.find("label");
    if (label_it == obj.end() || !label_it->is_string()) throw EvalError("MissingLabel", where);
    LabeledPrediction p;
    const auto gold = parse_tweet_type(label_it->get<std::string>());
    if (!gold) throw EvalError("BadLabel", where);
    p.gold = *gold;
    if (const auto cat_it = obj.find("category"); cat_it != obj.end() && !cat_it->is_null()) {
      p.gold_category = cat_it->is_string() ? parse_category(cat_it->get<std::string>()) : std::nullopt;
      if (!p.gold_category) throw EvalError("BadLabel", where + " category");
    }
    const auto outcome = triage_one(record, config, "");
    const auto* r = std::get_if<TriageResult>(&outcome);
    if (!r) {
      ++failed;
      continue;
    }
    p.predicted = r->decision.tweet_type;
    if (r->category) p.predicted_category = r->category->category;
    predictions.push_back(p);
  }
  auto report = score_predictions(predictions);
  report.rejected = rejected;
  report.failed = failed;
  return report;
}

EvalReport evaluate(const std::filesystem::path& path, const PipelineConfig& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("FileUnreadable", path.string());
  return evaluate(in, config);
}

Json EvalReport::to_json() const {
  Json classes = Json::object();
  for (auto t : kAllTweetTypes) {
    const auto& s = per_class[index_of(t)];
    classes[std::string(to_string(t))] = {
        {"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}, {"support", s.support}};
  }
  Json matrix = Json::array();
  for (const auto& row : confusion) matrix.push_back(row);
  Json cats = Json::object();
  for (const auto& [c, a] : per_category) {
    cats[std::string(to_string(c))] = {{"correct", a.correct}, {"total", a.total}, {"accuracy", a.accuracy}};
  }
  Json labels = Json::array();
  for (auto t : kAllTweetTypes) labels.push_back(to_string(t));
  return {{"scored", scored},
          {"rejected", rejected},
          {"failed", failed},
          {"labels", std::move(labels)},
          {"confusion", std::move(matrix)},
          {"per_class", std::move(classes)},
          {"per_category", std::move(cats)}};
}

std::string EvalReport::to_table() const {
  std::string out;
  char line[128];
  std::snprintf(line, sizeof(line), "%-14s %9s %9s %9s %8s\n", "class", "precision", "recall", "f1", "support");
  out += line;
  for (auto t : kAllTweetTypes) {
    const auto& s = per_class[index_of(t)];
    const auto name = to_string(t);
    std::snprintf(line, sizeof(line), "%-14.*s %9.4f %9.4f %9.4f %8zu\n", static_cast<int>(name.size()),
                  name.data(), s.precision, s.recall, s.f1, s.support);
    out += line;
  }
  out += "\nconfusion (rows gold, columns predicted: C S A)\n";
  for (const auto& row : confusion) {
    std::snprintf(line, sizeof(line), "  %6zu %6zu %6zu\n", row[0], row[1], row[2]);
    out += line;
  }
  if (!per_category.empty()) {
    out += "\ncategory accuracy\n";
    for (const auto& [c, a] : per_category) {
      const auto name = to_string(c);
      std::snprintf(line, sizeof(line), "  %-22.*s %4zu/%-4zu %.4f\n", static_cast<int>(name.size()),
                    name.data(), a.correct, a.total, a.accuracy);
      out += line;
    }
  }
  std::snprintf(line, sizeof(line), "\nscored %zu, rejected %zu, failed %zu\n", scored, rejected, failed);
  out += line;
  return out;
}

}  // namespace railtriage
