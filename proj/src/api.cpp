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

#include "railtriage/api.hpp"

#include <chrono>

#include <httplib.h>

namespace railtriage {

namespace {

Json error_body(std::string_view code, std::string_view detail) {
  return {{"error", {{"code", code}, {"detail", detail}}}};
}

ApiResponse respond(int status, const Json& body) { return {status, body.dump(), {}}; }

}  // namespace

ApiService::ApiService(const PipelineConfig& config, TaskStore& store, Clock clock)
    : config_(config), store_(store), clock_(std::move(clock)) {}

ApiService::Handled ApiService::handle_record(const nlohmann::json& obj, std::string_view context) {
  TweetRecord record;
  try {
    record = record_from_json(obj, context);
  } catch (const IngestError& e) {
    const int status = e.kind() == IngestErrorKind::EmptyText ? 422 : 400;
    return {status, error_body(e.code(), e.detail()), std::nullopt};
  }
  const auto start = std::chrono::steady_clock::now();
  auto outcome = triage_one(record, config_, clock_());
  metrics_.record(outcome, std::chrono::steady_clock::now() - start);

  if (const auto* failure = std::get_if<TriageFailure>(&outcome)) {
    Json body = to_json(*failure);
    return {422, std::move(body), std::nullopt};
  }
  auto& result = std::get<TriageResult>(outcome);
  Handled h{200, to_json(result), std::nullopt};
  if (result.decision.tweet_type == TweetType::Complaint) {
    h.task_id = store_.append(result, result.processed_at).task_id;
  }
  return h;
}

ApiResponse ApiService::triage(std::string_view body) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    return respond(400, error_body("MalformedLine", e.what()));
  }
  auto h = handle_record(obj, body);
  ApiResponse r = respond(h.status, h.body);
  if (h.task_id) r.headers["X-Task-Id"] = *h.task_id;
  return r;
}

ApiResponse ApiService::triage_batch(std::string_view body) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    return respond(400, error_body("MalformedLine", e.what()));
  }
  if (!arr.is_array()) return respond(400, error_body("MalformedLine", "expected a JSON array"));
  if (arr.size() > kMaxBatchRecords) {
    return respond(400, error_body("BatchTooLarge", std::to_string(arr.size()) + " > 1000 records"));
  }
  Json out = Json::array();
  for (const auto& obj : arr) {
    auto h = handle_record(obj, obj.dump());
    if (h.task_id) h.body["task_id"] = *h.task_id;
    out.push_back(std::move(h.body));
  }
  return respond(200, out);
}

ApiResponse ApiService::list_tasks(const std::optional<std::string>& state,
                                   const std::optional<std::string>& category) const {
  std::optional<TaskState> state_filter;
  std::optional<ComplaintCategory> category_filter;
  if (state && !state->empty()) {
    state_filter = parse_task_state(*state);
    if (!state_filter) return respond(400, error_body("BadQuery", "state=" + *state));
  }
  if (category && !category->empty()) {
    category_filter = parse_category(*category);
    if (!category_filter) return respond(400, error_body("BadQuery", "category=" + *category));
  }
  Json out = Json::array();
  for (const auto& t : store_.list(state_filter, category_filter)) out.push_back(to_json(t));
  return respond(200, out);
}

ApiResponse ApiService::set_task_state(const std::string& task_id, std::string_view body) {
  std::optional<TaskState> to;
  try {
    const auto j = nlohmann::json::parse(body);
    to = parse_task_state(j.at("state").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    return respond(400, error_body("MalformedLine", e.what()));
  }
  if (!to) return respond(400, error_body("MalformedLine", "unknown state"));
  try {
    return respond(200, to_json(store_.transition(task_id, *to, clock_())));
  } catch (const StoreError& e) {
    if (e.code() == "NotFound") return respond(404, error_body(e.code(), e.detail()));
    if (e.code() == "IllegalTransition") return respond(409, error_body(e.code(), e.detail()));
    return respond(500, error_body(e.code(), e.detail()));
  }
}

ApiResponse ApiService::metrics() const { return respond(200, metrics_.snapshot()); }

ApiResponse ApiService::health() const {
  return respond(200, Json{{"status", "ok"},
                           {"pipeline_version", config_.pipeline_version},
                           {"tasks", store_.size()}});
}

void mount_routes(httplib::Server& server, ApiService& service) {
  auto send = [](httplib::Response& res, const ApiResponse& r) {
    res.status = r.status;
    for (const auto& [k, v] : r.headers) res.set_header(k, v);
    res.set_content(r.body, "application/json");
  };
  auto param = [](const httplib::Request& req, const char* name) -> std::optional<std::string> {
    if (!req.has_param(name)) return std::nullopt;
    return req.get_param_value(name);
  };

  server.Post("/v1/triage", [&service, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service.triage(req.body));
  });
  server.Post("/v1/triage/batch", [&service, send](const httplib::Request& req, httplib::Response& res) {
    send(res, service.triage_batch(req.body));
  });
  server.Get("/v1/tasks", [&service, send, param](const httplib::Request& req, httplib::Response& res) {
    send(res, service.list_tasks(param(req, "state"), param(req, "category")));
  });
  server.Post(R"(/v1/tasks/([^/]+)/state)",
              [&service, send](const httplib::Request& req, httplib::Response& res) {
                send(res, service.set_task_state(req.matches[1].str(), req.body));
              });
  server.Get("/v1/metrics", [&service, send](const httplib::Request&, httplib::Response& res) {
    send(res, service.metrics());
  });
  server.Get("/v1/health", [&service, send](const httplib::Request&, httplib::Response& res) {
    send(res, service.health());
  });
}

bool serve(ApiService& service, const std::string& host, int port) {
  httplib::Server server;
  mount_routes(server, service);
  return server.listen(host, port);
}

}  // namespace railtriage
