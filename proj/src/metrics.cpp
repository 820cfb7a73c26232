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

#include "railtriage/metrics.hpp"

namespace railtriage {

void Metrics::record(const TriageOutcome& outcome, std::chrono::nanoseconds latency) {
  const auto us = std::chrono::duration_cast<std::chrono::microseconds>(latency).count();
  std::lock_guard lock(mutex_);
  ++processed_;
  std::size_t bucket = 0;
  while (bucket < kLatencyBucketsUs.size() && us > kLatencyBucketsUs[bucket]) ++bucket;
  ++latency_[bucket];
  latency_sum_us_ += us;

  const auto* r = std::get_if<TriageResult>(&outcome);
  if (!r) {
    ++failed_;
    return;
  }
  ++per_type_[index_of(r->decision.tweet_type)];
  if (r->category) ++per_category_[index_of(r->category->category)];
  if (r->completeness.status == CompletenessStatus::Incomplete) ++incomplete_;
  if (r->routing && r->routing->confidence == RouteConfidence::Fallback) ++fallback_routed_;
}

Json Metrics::snapshot() const {
  std::lock_guard lock(mutex_);
  Json types = Json::object();
  for (auto t : kAllTweetTypes) types[std::string(to_string(t))] = per_type_[index_of(t)];
  Json categories = Json::object();
  for (auto c : kAllCategories) categories[std::string(to_string(c))] = per_category_[index_of(c)];
  Json buckets = Json::array();
  for (std::size_t i = 0; i < latency_.size(); ++i) {
    buckets.push_back({{"le_us", i < kLatencyBucketsUs.size() ? Json(kLatencyBucketsUs[i]) : Json("+Inf")},
                       {"count", latency_[i]}});
  }
  return {{"processed", processed_},
          {"failed", failed_},
          {"per_type", std::move(types)},
          {"per_category", std::move(categories)},
          {"incomplete", incomplete_},
          {"fallback_routed", fallback_routed_},
          {"latency", {{"buckets", std::move(buckets)}, {"sum_us", latency_sum_us_}, {"count", processed_}}}};
}

}  // namespace railtriage
