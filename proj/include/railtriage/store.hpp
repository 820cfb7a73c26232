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

#ifndef RAILTRIAGE_STORE_HPP_
#define RAILTRIAGE_STORE_HPP_

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "railtriage/error.hpp"
#include "railtriage/pipeline.hpp"
#include "railtriage/serialize.hpp"

namespace railtriage {

enum class TaskState { NeedsInfo, Ready, Dispatched };
std::string_view to_string(TaskState s);
std::optional<TaskState> parse_task_state(std::string_view s);
// NeedsInfo -> Ready -> Dispatched, or Ready -> Dispatched.
bool is_legal_transition(TaskState from, TaskState to);

struct TaskRecord {
  std::string task_id;
  TriageResult result;
  TaskState state = TaskState::Ready;
  std::string created_at;

  friend bool operator==(const TaskRecord&, const TaskRecord&) = default;
};

Json to_json(const TaskRecord& t);
TaskRecord task_from_json(const Json& j);

// Codes: StoreCorrupt, NotFound, IllegalTransition, OutputUnwritable.
class StoreError : public Error {
 public:
  using Error::Error;
};

// Result of replaying an event log.
struct StoreScan {
  std::vector<TaskRecord> tasks;  // creation order
  std::vector<std::string> warnings;
  std::size_t events = 0;
  std::uintmax_t valid_bytes = 0;  // length of the intact prefix
};

// Replays every event of the log at `path` (missing file = empty). A bad
// final line is reported in warnings and excluded from valid_bytes; a bad
// line anywhere else throws StoreError("StoreCorrupt").
StoreScan scan_store(const std::filesystem::path& path);

// Append-only JSONL event log ("create" and "state" events, latest event
// wins) with an in-memory index rebuilt by full scan on open. Appends are
// serialized under one writer lock; reads share a lock.
class TaskStore {
 public:
  // In-memory only.
  TaskStore() = default;
  // Opens or creates the log; truncates a corrupted trailing line.
  explicit TaskStore(const std::filesystem::path& path);

  TaskStore(const TaskStore&) = delete;
  TaskStore& operator=(const TaskStore&) = delete;

  // Creates a task: NeedsInfo when completeness is Incomplete, else Ready.
  TaskRecord append(TriageResult result, const std::string& created_at);
  // Throws StoreError("NotFound") or StoreError("IllegalTransition").
  TaskRecord transition(const std::string& task_id, TaskState to, const std::string& at);

  std::optional<TaskRecord> get(const std::string& task_id) const;
  std::vector<TaskRecord> list(std::optional<TaskState> state = std::nullopt,
                               std::optional<ComplaintCategory> category = std::nullopt) const;
  std::size_t size() const;
  std::vector<std::string> warnings() const;

 private:
  void write_event(const Json& event);

  mutable std::shared_mutex mutex_;
  std::optional<std::filesystem::path> path_;
  std::ofstream log_;
  std::vector<TaskRecord> tasks_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::string> warnings_;
};

}  // namespace railtriage

#endif  // RAILTRIAGE_STORE_HPP_
