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

#ifndef RAILTRIAGE_METRICS_HPP_
#define RAILTRIAGE_METRICS_HPP_

#include <array>
#include <chrono>
#include <cstdint>
#include <mutex>

#include "railtriage/pipeline.hpp"
#include "railtriage/serialize.hpp"

namespace railtriage {

// Service counters and a triage latency histogram. Thread-safe.
class Metrics {
 public:
  // Upper bucket bounds in microseconds; a final overflow bucket follows.
  static constexpr std::array<std::int64_t, 8> kLatencyBucketsUs = {50,   100,   250,   500,
                                                                    1000, 5000, 25000, 100000};

  void record(const TriageOutcome& outcome, std::chrono::nanoseconds latency);
  Json snapshot() const;

 private:
  mutable std::mutex mutex_;
  std::uint64_t processed_ = 0;
  std::uint64_t failed_ = 0;
  std::uint64_t incomplete_ = 0;
  std::uint64_t fallback_routed_ = 0;
  std::array<std::uint64_t, 3> per_type_{};
  std::array<std::uint64_t, kAllCategories.size()> per_category_{};
  std::array<std::uint64_t, kLatencyBucketsUs.size() + 1> latency_{};
  std::int64_t latency_sum_us_ = 0;
};

}  // namespace railtriage

#endif  // RAILTRIAGE_METRICS_HPP_
