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

#include "railtriage/store.hpp"

#include <cstdio>
#include <mutex>

#include "railtriage/util.hpp"

namespace railtriage {

std::string_view to_string(TaskState s) {
  switch (s) {
    case TaskState::NeedsInfo: return "NeedsInfo";
    case TaskState::Ready: return "Ready";
    case TaskState::Dispatched: return "Dispatched";
  }
  return "?";
}

std::optional<TaskState> parse_task_state(std::string_view s) {
  for (auto v : {TaskState::NeedsInfo, TaskState::Ready, TaskState::Dispatched}) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

bool is_legal_transition(TaskState from, TaskState to) {
  return (from == TaskState::NeedsInfo && to == TaskState::Ready) ||
         (from == TaskState::Ready && to == TaskState::Dispatched);
}

Json to_json(const TaskRecord& t) {
  return {{"task_id", t.task_id},
          {"state", to_string(t.state)},
          {"created_at", t.created_at},
          {"result", to_json(t.result)}};
}

TaskRecord task_from_json(const Json& j) {
  TaskRecord t;
  try {
    t.task_id = j.at("task_id").get<std::string>();
    const auto state = parse_task_state(j.at("state").get<std::string>());
    if (!state) throw Error("BadRecord", "state");
    t.state = *state;
    t.created_at = j.at("created_at").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error("BadRecord", e.what());
  }
  t.result = triage_result_from_json(j.at("result"));
  return t;
}

namespace {

// Applies one event to the index. Throws before mutating anything when the
// event is inconsistent.
void apply_event(const Json& event, std::vector<TaskRecord>& tasks,
                 std::unordered_map<std::string, std::size_t>& index) {
  const auto kind = event.at("event").get<std::string>();
  if (kind == "create") {
    auto task = task_from_json(event.at("task"));
    if (index.count(task.task_id)) throw Error("BadRecord", "duplicate task " + task.task_id);
    index.emplace(task.task_id, tasks.size());
    tasks.push_back(std::move(task));
  } else if (kind == "state") {
    const auto id = event.at("task_id").get<std::string>();
    const auto it = index.find(id);
    if (it == index.end()) throw Error("BadRecord", "unknown task " + id);
    const auto to = parse_task_state(event.at("state").get<std::string>());
    if (!to || !is_legal_transition(tasks[it->second].state, *to)) {
      throw Error("BadRecord", "illegal transition for " + id);
    }
    tasks[it->second].state = *to;
  } else {
    throw Error("BadRecord", "unknown event " + kind);
  }
}

StoreScan replay(const std::filesystem::path& path,
                 std::unordered_map<std::string, std::size_t>& index) {
  StoreScan scan;
  if (!std::filesystem::exists(path)) return scan;
  const std::string text = read_file(path);
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    const auto end = nl == std::string::npos ? text.size() : nl;
    const bool last = end + 1 >= text.size();
    const std::string_view line(text.data() + pos, end - pos);
    ++line_no;
    if (!trim(line).empty()) {
      try {
        apply_event(Json::parse(line), scan.tasks, index);
        ++scan.events;
      } catch (const std::exception& e) {
        if (!last) throw StoreError("StoreCorrupt", "line " + std::to_string(line_no) + ": " + e.what());
        scan.warnings.push_back("truncated corrupt trailing line " + std::to_string(line_no) + ": " +
                                e.what());
        return scan;
      }
    }
    scan.valid_bytes = end;
    if (nl != std::string::npos) scan.valid_bytes = end + 1;
    pos = end + 1;
  }
  return scan;
}

}  // namespace

StoreScan scan_store(const std::filesystem::path& path) {
  std::unordered_map<std::string, std::size_t> index;
  return replay(path, index);
}

TaskStore::TaskStore(const std::filesystem::path& path) : path_(path) {
  auto scan = replay(path, index_);
  tasks_ = std::move(scan.tasks);
  warnings_ = std::move(scan.warnings);
  if (std::filesystem::exists(path) && std::filesystem::file_size(path) != scan.valid_bytes) {
    std::filesystem::resize_file(path, scan.valid_bytes);
  }
  for (const auto& w : warnings_) std::fprintf(stderr, "task store %s: %s\n", path.c_str(), w.c_str());
  log_.open(path, std::ios::binary | std::ios::app);
  if (!log_) throw StoreError("OutputUnwritable", path.string());
  // A complete final event that lost only its newline is kept; terminate it.
  char tail = '\n';
  if (scan.valid_bytes > 0) {
    std::ifstream in(path, std::ios::binary);
    in.seekg(static_cast<std::streamoff>(scan.valid_bytes) - 1);
    in.get(tail);
  }
  if (tail != '\n') {
    log_ << '\n';
    log_.flush();
  }
}

void TaskStore::write_event(const Json& event) {
  if (!path_) return;
  log_ << event.dump() << '\n';
  log_.flush();
  if (!log_) throw StoreError("OutputUnwritable", path_->string());
}

TaskRecord TaskStore::append(TriageResult result, const std::string& created_at) {
  std::unique_lock lock(mutex_);
  char id[32];
  std::snprintf(id, sizeof(id), "task-%06zu", tasks_.size() + 1);
  TaskRecord task;
  task.task_id = id;
  task.state = result.completeness.status == CompletenessStatus::Incomplete ? TaskState::NeedsInfo
                                                                            : TaskState::Ready;
  task.created_at = created_at;
  task.result = std::move(result);
  write_event({{"event", "create"}, {"task", to_json(task)}});
  index_.emplace(task.task_id, tasks_.size());
  tasks_.push_back(task);
  return task;
}

TaskRecord TaskStore::transition(const std::string& task_id, TaskState to, const std::string& at) {
  std::unique_lock lock(mutex_);
  const auto it = index_.find(task_id);
  if (it == index_.end()) throw StoreError("NotFound", task_id);
  auto& task = tasks_[it->second];
  if (!is_legal_transition(task.state, to)) {
    throw StoreError("IllegalTransition", std::string(to_string(task.state)) + " -> " +
                                              std::string(to_string(to)));
  }
  write_event({{"event", "state"}, {"task_id", task_id}, {"state", to_string(to)}, {"at", at}});
  task.state = to;
  return task;
}

std::optional<TaskRecord> TaskStore::get(const std::string& task_id) const {
  std::shared_lock lock(mutex_);
  const auto it = index_.find(task_id);
  if (it == index_.end()) return std::nullopt;
  return tasks_[it->second];
}

std::vector<TaskRecord> TaskStore::list(std::optional<TaskState> state,
                                        std::optional<ComplaintCategory> category) const {
  std::shared_lock lock(mutex_);
  std::vector<TaskRecord> out;
  for (const auto& t : tasks_) {
    if (state && t.state != *state) continue;
    if (category && (!t.result.category || t.result.category->category != *category)) continue;
    out.push_back(t);
  }
  return out;
}

std::size_t TaskStore::size() const {
  std::shared_lock lock(mutex_);
  return tasks_.size();
}

std::vector<std::string> TaskStore::warnings() const {
  std::shared_lock lock(mutex_);
  return warnings_;
}

}  // namespace railtriage
