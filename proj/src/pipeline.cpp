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

#include "railtriage/pipeline.hpp"

#include "railtriage/util.hpp"

namespace railtriage {

ConfigPaths ConfigPaths::defaults(const std::filesystem::path& data_dir) {
  ConfigPaths p;
  p.lexicon_dir = data_dir / "lexicon";
  p.stations = data_dir / "stations.tsv";
  p.schemas = data_dir / "schemas";
  p.categories = data_dir / "categories.tsv";
  p.routes_dir = data_dir / "routes";
  return p;
}

namespace {

// Longest prompt any missing set can produce is the full branch under the
// category's template, so checking those bounds every reachable prompt.
void check_prompts(const SchemaSet& schemas, const PromptTemplates& prompts) {
  for (auto c : kAllCategories) {
    const auto& schema = schemas.schema_for(c);
    for (const auto& branch : schema.required.branches()) render_prompt(c, branch, prompts);
  }
}

}  // namespace

PipelineConfig PipelineConfig::load(const ConfigPaths& paths) {
  PipelineConfig cfg;
  cfg.lexicon = load_lexicon(paths.lexicon_dir);
  cfg.gazetteer = Gazetteer::load(paths.stations);

  std::filesystem::path schemas_file = paths.schemas;
  std::filesystem::path prompts_file;
  if (std::filesystem::is_directory(paths.schemas)) {
    schemas_file = paths.schemas / "schemas.tsv";
    prompts_file = paths.schemas / "prompts.tsv";
  } else {
    prompts_file = paths.schemas.parent_path() / "prompts.tsv";
  }
  cfg.schemas = SchemaSet::load(schemas_file);
  for (const auto& [category, schema_id] : paths.schema_bindings) cfg.schemas.bind(category, schema_id);
  for (auto c : kAllCategories) cfg.schemas.schema_for(c);
  cfg.prompts = PromptTemplates::load(prompts_file);
  check_prompts(cfg.schemas, cfg.prompts);

  cfg.categories = load_category_rules(paths.categories);
  cfg.routes = RouteTables::load(paths.routes_dir, cfg.gazetteer);

  std::string fingerprint(kCodeVersion);
  for (const auto& v : {cfg.lexicon.version(), cfg.gazetteer.version(), cfg.schemas.version(),
                        cfg.prompts.version(), category_rules_version(cfg.categories),
                        cfg.routes.version()}) {
    fingerprint += '|' + v;
  }
  cfg.pipeline_version = content_hash(fingerprint);
  return cfg;
}

TriageOutcome triage_one(const TweetRecord& tweet, const PipelineConfig& config,
                         const std::string& processed_at) {
  const auto tokens = tokenize(normalize(tweet.text));
  const auto annotated = annotate(tokens, config.lexicon);

  TriageResult r;
  try {
    r.decision = classify_type(annotated, config.lexicon);
  } catch (const ClassifyError& e) {
    return TriageFailure{tweet, e.code(), e.detail(), config.pipeline_version, processed_at};
  }
  r.tweet = tweet;
  r.entities = extract_entities(tokens, config.gazetteer);
  if (r.decision.tweet_type == TweetType::Complaint) {
    r.category = categorize(tokens, r.entities, config.categories);
    r.completeness = validate_completeness(r.decision.tweet_type, r.category->category, r.entities,
                                           config.schemas, config.prompts);
    r.routing = route(r.category->category, r.entities, config.routes);
  }
  r.pipeline_version = config.pipeline_version;
  r.processed_at = processed_at;
  return r;
}

}  // namespace railtriage
