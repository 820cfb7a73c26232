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

#include "railtriage/categorize.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "railtriage/util.hpp"

namespace railtriage {

Keyword make_keyword(std::string_view phrase, long weight) {
  if (weight < 1) throw CategorizeError("MalformedEntry", "weight < 1 for " + std::string(phrase));
  Keyword k;
  k.weight = weight;
  k.phrase = collapse_spaces(to_lower_ascii(phrase));
  if (k.phrase.empty()) throw CategorizeError("MalformedEntry", "empty phrase");
  if (k.phrase.size() > 2 && k.phrase.front() == '{' && k.phrase.back() == '}') {
    const auto field = parse_entity_field(std::string_view(k.phrase).substr(1, k.phrase.size() - 2));
    if (!field) throw CategorizeError("MalformedEntry", "unknown entity nudge " + k.phrase);
    k.entity = field;
    return k;
  }
  for (const auto& t : tokenize(normalize(k.phrase))) {
    if (t.kind == TokenKind::Punct) continue;
    k.words.emplace_back(t.kind == TokenKind::Hashtag ? std::string(lexical_form(t)) : t.norm);
  }
  if (k.words.empty()) throw CategorizeError("MalformedEntry", "phrase has no words: " + k.phrase);
  return k;
}

std::vector<CategoryRule> load_category_rules(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const IoError&) {
    throw CategorizeError("FileUnreadable", path.string());
  }
  std::vector<CategoryRule> rules;
  std::map<ComplaintCategory, std::size_t> index;
  std::set<std::pair<ComplaintCategory, std::string>> seen;
  for (const auto& row : parse_tsv(text)) {
    const auto where = path.filename().string() + ":" + std::to_string(row.line);
    if (row.cols.size() != 3) throw CategorizeError("MalformedEntry", where);
    const auto category = parse_category(row.cols[0]);
    if (!category) throw CategorizeError("UnknownCategory", row.cols[0] + " at " + where);
    long weight = 0;
    try {
      std::size_t used = 0;
      weight = std::stol(row.cols[2], &used);
      if (used != row.cols[2].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw CategorizeError("MalformedEntry", "weight at " + where);
    }
    auto keyword = make_keyword(row.cols[1], weight);
    if (!seen.emplace(*category, keyword.phrase).second) {
      throw CategorizeError("DuplicateRule", keyword.phrase + " at " + where);
    }
    auto [it, added] = index.emplace(*category, rules.size());
    if (added) rules.push_back({*category, {}});
    rules[it->second].keywords.push_back(std::move(keyword));
  }
  if (rules.empty()) throw CategorizeError("EmptyRuleSet", path.string());
  return rules;
}

std::string category_rules_version(std::span<const CategoryRule> rules) {
  std::string fingerprint;
  for (const auto& r : rules) {
    // Keyword order inside a category does not affect scoring.
    std::vector<std::string> lines;
    for (const auto& k : r.keywords) lines.push_back(k.phrase + '\t' + std::to_string(k.weight));
    std::sort(lines.begin(), lines.end());
    fingerprint += std::string(to_string(r.category)) + '\n' + join(lines, "\n") + '\n';
  }
  return content_hash(fingerprint);
}

namespace {

struct Scored {
  long score = 0;
  std::vector<std::string> matched;
};

Scored score_category(std::span<const Token> tokens, const EntitySet& entities,
                      const CategoryRule& rule) {
  // Longest phrase first; equal lengths in phrase order so file order within
  // a category never matters.
  std::vector<const Keyword*> order;
  for (const auto& k : rule.keywords) order.push_back(&k);
  std::sort(order.begin(), order.end(), [](const Keyword* a, const Keyword* b) {
    if (a->words.size() != b->words.size()) return a->words.size() > b->words.size();
    return a->phrase < b->phrase;
  });

  Scored s;
  std::vector<bool> used(tokens.size(), false);
  for (const Keyword* k : order) {
    if (k->entity) {
      if (entities.has(*k->entity)) {
        s.score += k->weight;
        s.matched.push_back(k->phrase);
      }
      continue;
    }
    const auto n = k->words.size();
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) {
        const auto& t = tokens[i + j];
        ok = !used[i + j] && (is_lexical(t.kind) || t.kind == TokenKind::Number) &&
             lexical_form(t) == k->words[j];
      }
      if (!ok) continue;
      for (std::size_t j = 0; j < n; ++j) used[i + j] = true;
      s.score += k->weight;
      s.matched.push_back(k->phrase);
      i += n - 1;
    }
  }
  return s;
}

}  // namespace

CategoryResult categorize(std::span<const Token> tokens, const EntitySet& entities,
                          std::span<const CategoryRule> rules) {
  if (rules.empty()) throw CategorizeError("EmptyRuleSet", "no category rules");
  CategoryResult best;
  bool found = false;
  for (const auto& rule : rules) {
    auto s = score_category(tokens, entities, rule);
    if (s.score > 0 && (!found || s.score > best.score)) {
      best = {rule.category, s.score, std::move(s.matched)};
      found = true;
    }
  }
  return best;  // Miscellaneous with score 0 when nothing matched
}

}  // namespace railtriage
