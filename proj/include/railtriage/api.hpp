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

#ifndef RAILTRIAGE_API_HPP_
#define RAILTRIAGE_API_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "railtriage/metrics.hpp"
#include "railtriage/pipeline.hpp"
#include "railtriage/store.hpp"
#include "railtriage/util.hpp"

namespace httplib {
class Server;
}

namespace railtriage {

inline constexpr std::size_t kMaxBatchRecords = 1000;

struct ApiResponse {
  int status = 200;
  std::string body;  // JSON
  std::map<std::string, std::string> headers;
};

// Transport-independent handlers behind the HTTP API:
//   POST /v1/triage              one TweetRecord -> TriageResult
//   POST /v1/triage/batch        array (<= 1000) -> array
//   GET  /v1/tasks               ?state=&category= filters
//   POST /v1/tasks/{id}/state    {"state": ...}; 409 on a non-monotone move
//   GET  /v1/metrics, GET /v1/health
// Complaints become tasks; the task id is returned in X-Task-Id.
class ApiService {
 public:
  using Clock = std::function<std::string()>;

  ApiService(const PipelineConfig& config, TaskStore& store, Clock clock = utc_now_iso8601);

  ApiResponse triage(std::string_view body);
  ApiResponse triage_batch(std::string_view body);
  ApiResponse list_tasks(const std::optional<std::string>& state,
                         const std::optional<std::string>& category) const;
  ApiResponse set_task_state(const std::string& task_id, std::string_view body);
  ApiResponse metrics() const;
  ApiResponse health() const;

 private:
  struct Handled {
    int status = 200;
    Json body;
    std::optional<std::string> task_id;
  };
  Handled handle_record(const nlohmann::json& obj, std::string_view context);

  const PipelineConfig& config_;
  TaskStore& store_;
  Clock clock_;
  Metrics metrics_;
};

// Registers the routes on `server`.
void mount_routes(httplib::Server& server, ApiService& service);

// Binds and blocks until the server stops. Returns false if the address
// cannot be bound.
bool serve(ApiService& service, const std::string& host, int port);

}  // namespace railtriage

#endif  // RAILTRIAGE_API_HPP_
