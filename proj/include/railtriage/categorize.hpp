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

#ifndef RAILTRIAGE_CATEGORIZE_HPP_
#define RAILTRIAGE_CATEGORIZE_HPP_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "railtriage/error.hpp"
#include "railtriage/extract.hpp"
#include "railtriage/textproc.hpp"
#include "railtriage/types.hpp"

namespace railtriage {

// Codes: EmptyRuleSet, FileUnreadable, MalformedEntry, UnknownCategory,
// DuplicateRule.
class CategorizeError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// A weighted keyword. A phrase written "{field}" (e.g. "{transaction_id}") is
// an entity nudge: it scores once when that EntitySet field is populated.
struct Keyword {
  std::string phrase;
  std::vector<std::string> words;  // empty for entity nudges
  std::optional<EntityField> entity;
  long weight = 1;

  friend bool operator==(const Keyword&, const Keyword&) = default;
};

struct CategoryRule {
  ComplaintCategory category = ComplaintCategory::Miscellaneous;
  std::vector<Keyword> keywords;
};

// Builds a keyword from a rules-file phrase. Throws CategorizeError.
Keyword make_keyword(std::string_view phrase, long weight);

// Rows of category<TAB>phrase<TAB>weight. Rule order (the tie-break order)
// is first appearance in the file.
std::vector<CategoryRule> load_category_rules(const std::filesystem::path& path);
std::string category_rules_version(std::span<const CategoryRule> rules);

struct CategoryResult {
  ComplaintCategory category = ComplaintCategory::Miscellaneous;
  long score = 0;
  std::vector<std::string> matched;  // phrases of the winner, in match order

  friend bool operator==(const CategoryResult&, const CategoryResult&) = default;
};

// Per-category score is the summed weight of matched phrases; longer phrases
// match first and each token is used once per category. Highest score wins,
// ties go to the earlier rule, and no match at all gives Miscellaneous.
// Throws CategorizeError("EmptyRuleSet").
CategoryResult categorize(std::span<const Token> tokens, const EntitySet& entities,
                          std::span<const CategoryRule> rules);

}  // namespace railtriage

#endif  // RAILTRIAGE_CATEGORIZE_HPP_
