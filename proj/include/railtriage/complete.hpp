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

#ifndef RAILTRIAGE_COMPLETE_HPP_
#define RAILTRIAGE_COMPLETE_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "railtriage/error.hpp"
#include "railtriage/extract.hpp"
#include "railtriage/types.hpp"

namespace railtriage {

inline constexpr std::size_t kMaxPromptLength = 280;

// Codes: FileUnreadable, MalformedEntry, BadExpression, UnknownField,
// UnknownCategory, UnknownSchema, DuplicateSchemaId, DuplicateBinding.
class SchemaError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// Codes: FileUnreadable, MalformedEntry, TemplateMissing, PromptTooLong.
class TemplateError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// Boolean expression over EntitySet field names with AND, OR and
// parentheses; AND binds tighter. Example: "pnr OR (train_no AND booking_date)".
class RequirementExpression {
 public:
  static RequirementExpression parse(std::string_view text);

  const std::string& text() const { return text_; }
  bool evaluate(const std::set<EntityField>& present) const;
  // Disjunctive normal form in expression order. Each branch lists its fields
  // in order of first appearance, without repeats.
  const std::vector<std::vector<EntityField>>& branches() const { return branches_; }
  // Every field the expression mentions, in order of first appearance.
  const std::vector<EntityField>& fields() const { return fields_; }

  struct Node {
    enum class Op { Field, And, Or } op = Op::Field;
    EntityField field = EntityField::Pnr;
    std::vector<Node> children;
  };

 private:
  std::string text_;
  Node root_;
  std::vector<std::vector<EntityField>> branches_;
  std::vector<EntityField> fields_;
};

struct RequirementSchema {
  std::string schema_id;
  std::vector<ComplaintCategory> applies_to;
  bool is_default = false;
  RequirementExpression required;
};

// Rows of schema_id<TAB>categories<TAB>expression. The categories column is
// a comma-separated list, "*" for the default schema, or "-" for a schema that
// is shipped unbound and selected with bind().
class SchemaSet {
 public:
  SchemaSet() = default;
  explicit SchemaSet(std::vector<RequirementSchema> schemas);
  static SchemaSet load(const std::filesystem::path& path);

  const RequirementSchema* find(std::string_view schema_id) const;
  // Bound schema, else the default. Throws SchemaError("UnknownCategory")
  // when neither exists.
  const RequirementSchema& schema_for(ComplaintCategory category) const;
  // Points `category` at another schema. Throws SchemaError("UnknownSchema").
  void bind(ComplaintCategory category, std::string_view schema_id);
  bool has_default() const { return default_.has_value(); }

  const std::vector<RequirementSchema>& schemas() const { return schemas_; }
  std::string version() const;

 private:
  std::vector<RequirementSchema> schemas_;
  std::map<ComplaintCategory, std::size_t> binding_;
  std::optional<std::size_t> default_;
};

// Display names (field<TAB>display name, in file order) and reply templates
// ("template:<Category>" or "template:*" rows holding a {fields} placeholder).
class PromptTemplates {
 public:
  static PromptTemplates load(const std::filesystem::path& path);

  std::optional<std::string_view> display_name(EntityField field) const;
  // Category template, else the "*" template.
  const std::string& template_for(ComplaintCategory category) const;
  // Fields with display names, in file order.
  const std::vector<EntityField>& field_order() const { return order_; }
  const std::map<std::string, std::string>& templates() const { return templates_; }
  const std::string& version() const { return version_; }

 private:
  std::map<EntityField, std::string> names_;
  std::vector<EntityField> order_;
  std::map<std::string, std::string> templates_;  // category name or "*"
  std::string version_;
};

enum class CompletenessStatus { Complete, Incomplete, NotApplicable };
std::string_view to_string(CompletenessStatus s);
std::optional<CompletenessStatus> parse_completeness_status(std::string_view s);

struct CompletenessReport {
  CompletenessStatus status = CompletenessStatus::NotApplicable;
  std::vector<EntityField> missing;  // fields of the cheapest unsatisfied branch
  std::optional<std::string> prompt;
  std::optional<std::string> schema_id;

  friend bool operator==(const CompletenessReport&, const CompletenessReport&) = default;
};

// Fields of the branch needing the fewest additions (first branch on ties);
// empty when the expression already holds.
std::vector<EntityField> cheapest_missing(const RequirementExpression& expr,
                                          const std::set<EntityField>& present);

// Non-complaints are NotApplicable. A complaint needs its category.
CompletenessReport validate_completeness(TweetType tweet_type,
                                         std::optional<ComplaintCategory> category,
                                         const EntitySet& entities, const SchemaSet& schemas,
                                         const PromptTemplates& templates);

// Fills the category template with display names in prompts-file order.
// `missing` must be non-empty (std::invalid_argument otherwise). Throws
// TemplateError("TemplateMissing") for a field without a display name and
// TemplateError("PromptTooLong") past 280 characters.
std::string render_prompt(ComplaintCategory category, std::span<const EntityField> missing,
                          const PromptTemplates& templates);

}  // namespace railtriage

#endif  // RAILTRIAGE_COMPLETE_HPP_
