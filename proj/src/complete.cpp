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

#include "railtriage/complete.hpp"

#include <algorithm>
#include <cctype>

#include "railtriage/util.hpp"

namespace railtriage {

// --- RequirementExpression -----------------------------------------------------

namespace {

using Node = RequirementExpression::Node;

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) { lex(); }

  Node parse() {
    if (tokens_.empty()) fail("empty expression");
    Node n = parse_or();
    if (pos_ != tokens_.size()) fail("unexpected '" + tokens_[pos_] + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw SchemaError("BadExpression", std::string(text_) + " (" + why + ")");
  }

  void lex() {
    std::size_t i = 0;
    while (i < text_.size()) {
      const char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '(' || c == ')') {
        tokens_.emplace_back(1, c);
        ++i;
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        const auto start = i;
        while (i < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[i])) || text_[i] == '_')) {
          ++i;
        }
        tokens_.emplace_back(text_.substr(start, i - start));
      } else {
        fail(std::string("bad character '") + c + "'");
      }
    }
  }

  bool accept(std::string_view keyword) {
    if (pos_ < tokens_.size() && to_lower_ascii(tokens_[pos_]) == keyword) {
      ++pos_;
      return true;
    }
    return false;
  }

  Node parse_or() {
    Node first = parse_and();
    if (!(pos_ < tokens_.size() && to_lower_ascii(tokens_[pos_]) == "or")) return first;
    Node n{Node::Op::Or, {}, {std::move(first)}};
    while (accept("or")) n.children.push_back(parse_and());
    return n;
  }

  Node parse_and() {
    Node first = parse_atom();
    if (!(pos_ < tokens_.size() && to_lower_ascii(tokens_[pos_]) == "and")) return first;
    Node n{Node::Op::And, {}, {std::move(first)}};
    while (accept("and")) n.children.push_back(parse_atom());
    return n;
  }

  Node parse_atom() {
    if (pos_ >= tokens_.size()) fail("unexpected end");
    if (accept("(")) {
      Node n = parse_or();
      if (!accept(")")) fail("missing ')'");
      return n;
    }
    const auto& tok = tokens_[pos_];
    const auto lower = to_lower_ascii(tok);
    if (lower == "and" || lower == "or" || tok == ")") fail("unexpected '" + tok + "'");
    const auto field = parse_entity_field(tok);
    if (!field) {
      throw SchemaError("UnknownField", tok + " in " + std::string(text_));
    }
    ++pos_;
    return Node{Node::Op::Field, *field, {}};
  }

  std::string_view text_;
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

bool eval_node(const Node& n, const std::set<EntityField>& present) {
  switch (n.op) {
    case Node::Op::Field: return present.count(n.field) > 0;
    case Node::Op::And:
      return std::all_of(n.children.begin(), n.children.end(),
                         [&](const Node& c) { return eval_node(c, present); });
    case Node::Op::Or:
      return std::any_of(n.children.begin(), n.children.end(),
                         [&](const Node& c) { return eval_node(c, present); });
  }
  return false;
}

using Branch = std::vector<EntityField>;

void append_unique(Branch& into, const Branch& from) {
  for (auto f : from) {
    if (std::find(into.begin(), into.end(), f) == into.end()) into.push_back(f);
  }
}

std::vector<Branch> to_dnf(const Node& n) {
  switch (n.op) {
    case Node::Op::Field: return {{n.field}};
    case Node::Op::Or: {
      std::vector<Branch> out;
      for (const auto& c : n.children) {
        auto sub = to_dnf(c);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      return out;
    }
    case Node::Op::And: {
      std::vector<Branch> acc{{}};
      for (const auto& c : n.children) {
        const auto sub = to_dnf(c);
        std::vector<Branch> next;
        for (const auto& left : acc) {
          for (const auto& right : sub) {
            Branch b = left;
            append_unique(b, right);
            next.push_back(std::move(b));
          }
        }
        acc = std::move(next);
      }
      return acc;
    }
  }
  return {};
}

}  // namespace

RequirementExpression RequirementExpression::parse(std::string_view text) {
  RequirementExpression e;
  e.text_ = collapse_spaces(text);
  e.root_ = ExpressionParser(e.text_).parse();
  e.branches_ = to_dnf(e.root_);
  for (const auto& b : e.branches_) append_unique(e.fields_, b);
  return e;
}

bool RequirementExpression::evaluate(const std::set<EntityField>& present) const {
  return eval_node(root_, present);
}

std::vector<EntityField> cheapest_missing(const RequirementExpression& expr,
                                          const std::set<EntityField>& present) {
  std::optional<Branch> best;
  for (const auto& branch : expr.branches()) {
    Branch missing;
    for (auto f : branch) {
      if (!present.count(f)) missing.push_back(f);
    }
    if (missing.empty()) return {};
    if (!best || missing.size() < best->size()) best = std::move(missing);
  }
  return best.value_or(Branch{});
}

// --- SchemaSet -------------------------------------------------------------------

SchemaSet::SchemaSet(std::vector<RequirementSchema> schemas) : schemas_(std::move(schemas)) {
  std::set<std::string> ids;
  for (std::size_t i = 0; i < schemas_.size(); ++i) {
    const auto& s = schemas_[i];
    if (!ids.insert(s.schema_id).second) throw SchemaError("DuplicateSchemaId", s.schema_id);
    if (s.is_default) {
      if (default_) throw SchemaError("DuplicateBinding", "default schema " + s.schema_id);
      default_ = i;
    }
    for (auto c : s.applies_to) {
      if (!binding_.emplace(c, i).second) {
        throw SchemaError("DuplicateBinding", std::string(to_string(c)));
      }
    }
  }
}

SchemaSet SchemaSet::load(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const IoError&) {
    throw SchemaError("FileUnreadable", path.string());
  }
  std::vector<RequirementSchema> schemas;
  for (const auto& row : parse_tsv(text)) {
    const auto where = path.filename().string() + ":" + std::to_string(row.line);
    if (row.cols.size() != 3 || row.cols[0].empty()) throw SchemaError("MalformedEntry", where);
    RequirementSchema s;
    s.schema_id = row.cols[0];
    const auto& cats = row.cols[1];
    if (cats == "*") {
      s.is_default = true;
    } else if (cats != "-") {
      for (const auto& name : split(cats, ',')) {
        const auto c = parse_category(trim(name));
        if (!c) throw SchemaError("UnknownCategory", std::string(trim(name)) + " at " + where);
        s.applies_to.push_back(*c);
      }
    }
    s.required = RequirementExpression::parse(row.cols[2]);
    schemas.push_back(std::move(s));
  }
  return SchemaSet(std::move(schemas));
}

const RequirementSchema* SchemaSet::find(std::string_view schema_id) const {
  for (const auto& s : schemas_) {
    if (s.schema_id == schema_id) return &s;
  }
  return nullptr;
}

const RequirementSchema& SchemaSet::schema_for(ComplaintCategory category) const {
  if (const auto it = binding_.find(category); it != binding_.end()) return schemas_[it->second];
  if (default_) return schemas_[*default_];
  throw SchemaError("UnknownCategory", std::string(to_string(category)));
}

void SchemaSet::bind(ComplaintCategory category, std::string_view schema_id) {
  for (std::size_t i = 0; i < schemas_.size(); ++i) {
    if (schemas_[i].schema_id == schema_id) {
      binding_[category] = i;
      return;
    }
  }
  throw SchemaError("UnknownSchema", std::string(schema_id));
}

std::string SchemaSet::version() const {
  std::string fingerprint;
  for (const auto& s : schemas_) {
    fingerprint += s.schema_id + '\t' + s.required.text() + (s.is_default ? "\t*" : "") + '\n';
  }
  for (const auto& [cat, idx] : binding_) {
    fingerprint += std::string(to_string(cat)) + '=' + schemas_[idx].schema_id + '\n';
  }
  return content_hash(fingerprint);
}

// --- PromptTemplates ---------------------------------------------------------------

PromptTemplates PromptTemplates::load(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const IoError&) {
    throw TemplateError("FileUnreadable", path.string());
  }
  PromptTemplates t;
  constexpr std::string_view kTemplatePrefix = "template:";
  for (const auto& row : parse_tsv(text)) {
    const auto where = path.filename().string() + ":" + std::to_string(row.line);
    if (row.cols.size() != 2 || row.cols[0].empty() || row.cols[1].empty()) {
      throw TemplateError("MalformedEntry", where);
    }
    const auto& key = row.cols[0];
    if (key.rfind(kTemplatePrefix, 0) == 0) {
      const auto target = key.substr(kTemplatePrefix.size());
      if (target != "*" && !parse_category(target)) throw TemplateError("MalformedEntry", where);
      if (row.cols[1].find("{fields}") == std::string::npos) {
        throw TemplateError("MalformedEntry", where + " (no {fields} placeholder)");
      }
      const auto name = target == "*" ? std::string("*") : std::string(to_string(*parse_category(target)));
      t.templates_[name] = row.cols[1];
      continue;
    }
    const auto field = parse_entity_field(key);
    if (!field) throw TemplateError("MalformedEntry", where + " (unknown field " + key + ")");
    if (t.names_.emplace(*field, row.cols[1]).second) t.order_.push_back(*field);
  }
  if (!t.templates_.count("*")) throw TemplateError("TemplateMissing", "template:*");
  std::string fingerprint;
  for (auto f : t.order_) fingerprint += std::string(to_string(f)) + '\t' + t.names_[f] + '\n';
  for (const auto& [k, v] : t.templates_) fingerprint += k + '\t' + v + '\n';
  t.version_ = content_hash(fingerprint);
  return t;
}

std::optional<std::string_view> PromptTemplates::display_name(EntityField field) const {
  const auto it = names_.find(field);
  if (it == names_.end()) return std::nullopt;
  return it->second;
}

const std::string& PromptTemplates::template_for(ComplaintCategory category) const {
  if (const auto it = templates_.find(std::string(to_string(category))); it != templates_.end()) {
    return it->second;
  }
  return templates_.at("*");
}

std::string render_prompt(ComplaintCategory category, std::span<const EntityField> missing,
                          const PromptTemplates& templates) {
  if (missing.empty()) throw std::invalid_argument("render_prompt: missing is empty");
  for (auto f : missing) {
    if (!templates.display_name(f)) throw TemplateError("TemplateMissing", std::string(to_string(f)));
  }
  std::vector<std::string> names;
  for (auto f : templates.field_order()) {
    if (std::find(missing.begin(), missing.end(), f) != missing.end()) {
      names.emplace_back(*templates.display_name(f));
    }
  }
  std::string text = templates.template_for(category);
  const auto at = text.find("{fields}");
  text.replace(at, std::string_view("{fields}").size(), join(names, ", "));
  if (utf8_length(text) > kMaxPromptLength) throw TemplateError("PromptTooLong", text);
  return text;
}

// --- Validation ----------------------------------------------------------------------

std::string_view to_string(CompletenessStatus s) {
  switch (s) {
    case CompletenessStatus::Complete: return "Complete";
    case CompletenessStatus::Incomplete: return "Incomplete";
    case CompletenessStatus::NotApplicable: return "NotApplicable";
  }
  return "?";
}

std::optional<CompletenessStatus> parse_completeness_status(std::string_view s) {
  for (auto v : {CompletenessStatus::Complete, CompletenessStatus::Incomplete,
                 CompletenessStatus::NotApplicable}) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

CompletenessReport validate_completeness(TweetType tweet_type,
                                         std::optional<ComplaintCategory> category,
                                         const EntitySet& entities, const SchemaSet& schemas,
                                         const PromptTemplates& templates) {
  CompletenessReport report;
  if (tweet_type != TweetType::Complaint) return report;
  if (!category) throw std::invalid_argument("validate_completeness: complaint without category");
  const auto& schema = schemas.schema_for(*category);
  report.schema_id = schema.schema_id;
  report.missing = cheapest_missing(schema.required, entities.populated());
  if (report.missing.empty()) {
    report.status = CompletenessStatus::Complete;
    return report;
  }
  report.status = CompletenessStatus::Incomplete;
  report.prompt = render_prompt(*category, report.missing, templates);
  return report;
}

}  // namespace railtriage
