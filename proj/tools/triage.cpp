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

// triage: batch, service and evaluation front end.
//
//   triage run   --input F --output F [--summary-json] [--processed-at TS]
//   triage serve [--bind HOST:PORT]
//   triage eval  --input F [--json]
//
// Shared flags: --data-dir --lexicon-dir --stations --schemas --categories
// --routes --store --use-schema CATEGORY=SCHEMA_ID.
// Exit codes: 0 success, 1 configuration error, 2 I/O error.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "railtriage/api.hpp"
#include "railtriage/batch.hpp"
#include "railtriage/eval.hpp"
#include "railtriage/pipeline.hpp"
#include "railtriage/store.hpp"
#include "railtriage/util.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;

struct SharedFlags {
  std::string data_dir = RAILTRIAGE_DATA_DIR;
  std::string lexicon_dir;
  std::string stations;
  std::string schemas;
  std::string categories;
  std::string routes;
  std::string store;
  std::vector<std::string> use_schema;

  void attach(CLI::App* app) {
    app->add_option("--data-dir", data_dir, "Base directory for every table not given explicitly");
    app->add_option("--lexicon-dir", lexicon_dir, "Directory with polarity/cues/negators/prefix_labels.tsv");
    app->add_option("--stations", stations, "Station gazetteer TSV");
    app->add_option("--schemas", schemas, "Schema directory or schemas.tsv (prompts.tsv beside it)");
    app->add_option("--categories", categories, "Category keyword rules TSV");
    app->add_option("--routes", routes, "Directory with departments/trains/default_route.tsv");
    app->add_option("--store", store, "Task store event log (JSONL)");
    app->add_option("--use-schema", use_schema, "Bind a category to a schema: CATEGORY=SCHEMA_ID");
  }

  railtriage::ConfigPaths paths() const {
    auto p = railtriage::ConfigPaths::defaults(data_dir);
    if (!lexicon_dir.empty()) p.lexicon_dir = lexicon_dir;
    if (!stations.empty()) p.stations = stations;
    if (!schemas.empty()) p.schemas = schemas;
    if (!categories.empty()) p.categories = categories;
    if (!routes.empty()) p.routes_dir = routes;
    for (const auto& binding : use_schema) {
      const auto eq = binding.find('=');
      const auto category =
          eq == std::string::npos ? std::nullopt : railtriage::parse_category(binding.substr(0, eq));
      if (!category) throw railtriage::ConfigError("BadBinding", binding);
      p.schema_bindings.emplace_back(*category, binding.substr(eq + 1));
    }
    return p;
  }
};

std::unique_ptr<railtriage::TaskStore> open_store(const std::string& path) {
  if (path.empty()) return std::make_unique<railtriage::TaskStore>();
  return std::make_unique<railtriage::TaskStore>(path);
}

int run_batch(const SharedFlags& flags, const std::string& input, const std::string& output,
              bool summary_json, std::string processed_at) {
  const auto config = railtriage::PipelineConfig::load(flags.paths());
  auto store = flags.store.empty() ? nullptr : open_store(flags.store);
  if (processed_at.empty()) processed_at = railtriage::utc_now_iso8601();
  const auto summary = railtriage::triage_batch(input, output, config, {processed_at, store.get()});
  if (summary_json) {
    std::cerr << summary.to_table();
    std::cout << summary.to_json().dump(2) << '\n';
  } else {
    std::cout << summary.to_table();
  }
  return 0;
}

int run_serve(const SharedFlags& flags, const std::string& bind) {
  const auto colon = bind.rfind(':');
  if (colon == std::string::npos) throw railtriage::ConfigError("BadBind", bind);
  const auto host = bind.substr(0, colon);
  const int port = std::stoi(bind.substr(colon + 1));
  const auto config = railtriage::PipelineConfig::load(flags.paths());
  auto store = open_store(flags.store);
  railtriage::ApiService service(config, *store);
  std::cerr << "triage: serving on " << host << ":" << port << " (pipeline " << config.pipeline_version
            << ")\n";
  if (!railtriage::serve(service, host, port)) {
    std::cerr << "triage: cannot bind " << bind << "\n";
    return kExitIo;
  }
  return 0;
}

int run_eval(const SharedFlags& flags, const std::string& input, bool json) {
  const auto config = railtriage::PipelineConfig::load(flags.paths());
  const auto report = railtriage::evaluate(std::filesystem::path(input), config);
  if (json) {
    std::cout << report.to_json().dump(2) << '\n';
  } else {
    std::cout << report.to_table();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rule-based triage of railway grievance posts"};
  app.require_subcommand(1);

  SharedFlags flags;

  auto* run = app.add_subcommand("run", "Triage a JSONL corpus into JSONL results");
  std::string input, output, processed_at;
  bool summary_json = false;
  run->add_option("--input", input, "Input JSONL corpus")->required();
  run->add_option("--output", output, "Output JSONL results")->required();
  run->add_flag("--summary-json", summary_json, "Print the summary as JSON on stdout");
  run->add_option("--processed-at", processed_at, "Timestamp stamped on every result");
  flags.attach(run);

  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  std::string bind = "127.0.0.1:8080";
  serve->add_option("--bind", bind, "HOST:PORT");
  flags.attach(serve);

  auto* eval = app.add_subcommand("eval", "Score the classifier on a labeled corpus");
  std::string eval_input;
  bool eval_json = false;
  eval->add_option("--input", eval_input, "Labeled JSONL corpus")->required();
  eval->add_flag("--json", eval_json, "Print the report as JSON");
  flags.attach(eval);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return run_batch(flags, input, output, summary_json, processed_at);
    if (*serve) return run_serve(flags, bind);
    if (*eval) return run_eval(flags, eval_input, eval_json);
  } catch (const railtriage::ConfigError& e) {
    std::cerr << "triage: configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const railtriage::Error& e) {
    std::cerr << "triage: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "triage: " << e.what() << "\n";
    return kExitIo;
  }
  return 0;
}
