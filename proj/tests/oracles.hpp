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

#ifndef RAILTRIAGE_TESTS_ORACLES_HPP_
#define RAILTRIAGE_TESTS_ORACLES_HPP_

// Deliberately naive reference implementations. None of them calls into the
// library code they check.

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace railtriage::oracle {

enum class Kind { Word, Hashtag, Number, Mention, Url, Punct };
enum class Pol { Pos, Neg, Neu };

struct Tok {
  Kind kind = Kind::Word;
  std::string text;  // lexical form (no '#') for words and hashtags
  Pol pol = Pol::Neu;
  bool negated = false;
};

inline bool lexical(Kind k) { return k == Kind::Word || k == Kind::Hashtag; }

// For every token, scan backwards to the nearest negator. The token is negated
// when that negator sits in the same clause with at most two lexical tokens
// between them.
inline std::vector<std::pair<Pol, bool>> negation(const std::vector<Tok>& toks,
                                                  const std::map<std::string, Pol>& lexicon,
                                                  const std::set<std::string>& negators) {
  std::vector<std::pair<Pol, bool>> out;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (!lexical(toks[i].kind)) {
      out.emplace_back(Pol::Neu, false);
      continue;
    }
    const bool self_negator = toks[i].kind == Kind::Word && negators.count(toks[i].text);
    Pol base = Pol::Neu;
    if (!self_negator) {
      auto it = lexicon.find(toks[i].text);
      if (it != lexicon.end()) base = it->second;
    }
    bool negated = false;
    int between = 0;
    for (std::size_t j = i; j-- > 0;) {
      if (toks[j].kind == Kind::Punct) break;
      if (!lexical(toks[j].kind)) continue;
      if (toks[j].kind == Kind::Word && negators.count(toks[j].text)) {
        negated = between <= 2;
        break;
      }
      ++between;
    }
    Pol p = base;
    if (negated) p = base == Pol::Pos ? Pol::Neg : Pol::Neu;
    out.emplace_back(p, negated);
  }
  return out;
}

enum class Type { Complaint, Suggestion, Appreciation };
enum class Rule { Prefix, Cue, Polarity };

struct Verdict {
  Type type;
  Rule rule;
  int pos = 0;
  int neg = 0;
};

// The five-rule cascade, straight from its description.
inline std::optional<Verdict> classify(const std::vector<Tok>& toks,
                                       const std::map<std::string, Type>& prefixes,
                                       const std::vector<std::vector<std::string>>& cues) {
  std::vector<std::string> words;
  int pos = 0, neg = 0;
  for (const auto& t : toks) {
    if (!lexical(t.kind)) continue;
    words.push_back(t.text);
    if (t.pol == Pol::Pos) ++pos;
    if (t.pol == Pol::Neg) ++neg;
  }
  if (words.empty()) return std::nullopt;
  if (auto it = prefixes.find(words[0]); it != prefixes.end()) return Verdict{it->second, Rule::Prefix, pos, neg};
  if (neg >= 1) return Verdict{Type::Complaint, Rule::Polarity, pos, neg};
  // A cue is a run of consecutive lexical tokens with nothing else between.
  for (std::size_t i = 0; i < toks.size(); ++i) {
    for (const auto& cue : cues) {
      bool ok = i + cue.size() <= toks.size();
      for (std::size_t k = 0; ok && k < cue.size(); ++k) {
        ok = lexical(toks[i + k].kind) && toks[i + k].text == cue[k];
      }
      if (ok) return Verdict{Type::Suggestion, Rule::Cue, pos, neg};
    }
  }
  if (pos >= 1) return Verdict{Type::Appreciation, Rule::Polarity, pos, neg};
  return Verdict{Type::Suggestion, Rule::Polarity, pos, neg};
}

// Evaluates a requirement expression by textual substitution and local
// rewriting. `present` holds the field names that are populated.
inline bool evaluate_expression(const std::string& expr, const std::set<std::string>& present) {
  std::string s;
  std::size_t i = 0;
  while (i < expr.size()) {
    const char c = expr[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(' || c == ')') {
      s += c;
      ++i;
    } else {
      std::size_t j = i;
      while (j < expr.size() && (std::isalnum(static_cast<unsigned char>(expr[j])) || expr[j] == '_')) ++j;
      std::string word = expr.substr(i, j - i);
      for (auto& ch : word) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      if (word == "and") {
        s += '&';
      } else if (word == "or") {
        s += '|';
      } else {
        s += present.count(word) ? '1' : '0';
      }
      i = j;
    }
  }
  auto literal = [](char c) { return c == '0' || c == '1'; };
  while (s.size() > 1) {
    bool changed = false;
    for (std::size_t k = 0; k + 2 < s.size() && !changed; ++k) {
      if (s[k] == '(' && literal(s[k + 1]) && s[k + 2] == ')') {
        s.replace(k, 3, 1, s[k + 1]);
        changed = true;
      }
    }
    for (std::size_t k = 0; k + 2 < s.size() && !changed; ++k) {
      if (literal(s[k]) && s[k + 1] == '&' && literal(s[k + 2])) {
        s.replace(k, 3, 1, (s[k] == '1' && s[k + 2] == '1') ? '1' : '0');
        changed = true;
      }
    }
    for (std::size_t k = 0; k + 2 < s.size() && !changed; ++k) {
      const bool left_free = k == 0 || s[k - 1] != '&';
      const bool right_free = k + 3 >= s.size() || s[k + 3] != '&';
      if (literal(s[k]) && s[k + 1] == '|' && literal(s[k + 2]) && left_free && right_free) {
        s.replace(k, 3, 1, (s[k] == '1' || s[k + 2] == '1') ? '1' : '0');
        changed = true;
      }
    }
    if (!changed) throw std::runtime_error("oracle cannot reduce " + s);
  }
  return s == "1";
}

// Replaces every run of three or more identical letters with two.
inline std::string squeeze(const std::string& s) {
  std::string out;
  for (char c : s) {
    const std::size_t n = out.size();
    if (std::isalpha(static_cast<unsigned char>(c)) && n >= 2 && out[n - 1] == c && out[n - 2] == c) continue;
    out += c;
  }
  return out;
}


// Replays a task log line by line, stopping at the first line that is not a
// complete JSON event. Returns (task_id, state) in creation order.
inline std::vector<std::pair<std::string, std::string>> replay_log(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::vector<std::pair<std::string, std::string>> tasks;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("event")) break;
    if (j["event"] == "create") {
      tasks.emplace_back(j["task"]["task_id"].get<std::string>(), j["task"]["state"].get<std::string>());
    } else if (j["event"] == "state") {
      for (auto& t : tasks) {
        if (t.first == j["task_id"]) t.second = j["state"].get<std::string>();
      }
    }
  }
  return tasks;
}

}  // namespace railtriage::oracle

#endif  // RAILTRIAGE_TESTS_ORACLES_HPP_
