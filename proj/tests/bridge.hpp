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

#ifndef RAILTRIAGE_TESTS_BRIDGE_HPP_
#define RAILTRIAGE_TESTS_BRIDGE_HPP_

// Conversions between library types and the oracle's plain types, plus the
// random stream generators shared by unit and acceptance tests.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "railtriage/categorize.hpp"
#include "railtriage/classify.hpp"
#include "railtriage/lexicon.hpp"
#include "railtriage/textproc.hpp"

namespace railtriage::testing {

inline oracle::Kind to_oracle(TokenKind k) {
  switch (k) {
    case TokenKind::Word: return oracle::Kind::Word;
    case TokenKind::Hashtag: return oracle::Kind::Hashtag;
    case TokenKind::Number: return oracle::Kind::Number;
    case TokenKind::Mention: return oracle::Kind::Mention;
    case TokenKind::Url: return oracle::Kind::Url;
    case TokenKind::Punct: return oracle::Kind::Punct;
  }
  return oracle::Kind::Punct;
}

inline oracle::Pol to_oracle(Polarity p) {
  switch (p) {
    case Polarity::Positive: return oracle::Pol::Pos;
    case Polarity::Negative: return oracle::Pol::Neg;
    case Polarity::Neutral: return oracle::Pol::Neu;
  }
  return oracle::Pol::Neu;
}

inline Polarity from_oracle(oracle::Pol p) {
  switch (p) {
    case oracle::Pol::Pos: return Polarity::Positive;
    case oracle::Pol::Neg: return Polarity::Negative;
    case oracle::Pol::Neu: return Polarity::Neutral;
  }
  return Polarity::Neutral;
}

inline oracle::Type to_oracle(TweetType t) {
  switch (t) {
    case TweetType::Complaint: return oracle::Type::Complaint;
    case TweetType::Suggestion: return oracle::Type::Suggestion;
    case TweetType::Appreciation: return oracle::Type::Appreciation;
  }
  return oracle::Type::Suggestion;
}

inline oracle::Rule to_oracle(Trigger t) {
  switch (t) {
    case Trigger::PrefixLabel: return oracle::Rule::Prefix;
    case Trigger::SuggestionCue: return oracle::Rule::Cue;
    case Trigger::PolarityRule: return oracle::Rule::Polarity;
  }
  return oracle::Rule::Polarity;
}

inline Token make_token(TokenKind kind, const std::string& norm, std::size_t position) {
  Token t;
  t.kind = kind;
  t.norm = kind == TokenKind::Hashtag ? "#" + norm : norm;
  t.surface = t.norm;
  t.position = position;
  return t;
}

inline std::vector<oracle::Tok> to_oracle(const std::vector<Token>& tokens) {
  std::vector<oracle::Tok> out;
  for (const auto& t : tokens) out.push_back({to_oracle(t.kind), std::string(lexical_form(t))});
  return out;
}

inline std::vector<oracle::Tok> to_oracle(const std::vector<AnnotatedToken>& tokens) {
  std::vector<oracle::Tok> out;
  for (const auto& t : tokens) {
    out.push_back({to_oracle(t.token.kind), std::string(lexical_form(t.token)), to_oracle(t.polarity), t.negated});
  }
  return out;
}

inline std::map<std::string, oracle::Pol> oracle_polarity(const Lexicon& lex) {
  std::map<std::string, oracle::Pol> out;
  for (const auto& [w, p] : lex.polarity()) out[w] = to_oracle(p);
  return out;
}

inline std::set<std::string> oracle_negators(const Lexicon& lex) {
  return {lex.negators().begin(), lex.negators().end()};
}

inline std::map<std::string, oracle::Type> oracle_prefixes(const Lexicon& lex) {
  std::map<std::string, oracle::Type> out;
  for (const auto& [w, t] : lex.prefix_labels()) out[w] = to_oracle(t);
  return out;
}

inline std::vector<std::vector<std::string>> oracle_cues(const Lexicon& lex) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : lex.cues()) {
    std::vector<std::string> words;
    std::string cur;
    for (char ch : c) {
      if (ch == ' ') {
        if (!cur.empty()) words.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) words.push_back(cur);
    out.push_back(words);
  }
  return out;
}

// A small lexicon with every interesting class of word.
inline Lexicon toy_lexicon() {
  return Lexicon::build({{"good", Polarity::Positive}, {"great", Polarity::Positive},
                         {"dirty", Polarity::Negative}, {"leakage", Polarity::Negative},
                         {"late", Polarity::Negative}},
                        {"please add", "request you to", "should run"},
                        {"not", "no", "never", "without", "don't", "didn't", "isn't"},
                        {{"complaint", TweetType::Complaint},
                         {"suggestion", TweetType::Suggestion},
                         {"appreciation", TweetType::Appreciation}});
}

// Random annotated stream: random kinds and words, random polarity and
// negation flags. Classification only reads kinds, forms and polarities.
inline std::vector<AnnotatedToken> random_annotated(std::mt19937& rng, const Lexicon& lex) {
  static const std::vector<std::string> words = {"water", "train",  "please", "add",  "request",
                                                 "you",   "to",     "should", "run",  "complaint",
                                                 "suggestion", "appreciation", "good", "dirty", "the"};
  static const std::vector<TokenKind> kinds = {TokenKind::Word,    TokenKind::Word,  TokenKind::Word,
                                               TokenKind::Word,    TokenKind::Hashtag, TokenKind::Number,
                                               TokenKind::Mention, TokenKind::Url,   TokenKind::Punct};
  (void)lex;
  std::vector<AnnotatedToken> out;
  const std::size_t n = rng() % 10;
  for (std::size_t i = 0; i < n; ++i) {
    const auto kind = kinds[rng() % kinds.size()];
    std::string norm;
    switch (kind) {
      case TokenKind::Number: norm = "12555"; break;
      case TokenKind::Mention: norm = "@railwayseva"; break;
      case TokenKind::Url: norm = std::string(kUrlSentinel); break;
      case TokenKind::Punct: norm = ","; break;
      default: norm = words[rng() % words.size()];
    }
    AnnotatedToken at{make_token(kind, norm, i), Polarity::Neutral, false};
    if (is_lexical(kind)) {
      const auto r = rng() % 4;
      at.polarity = r == 0 ? Polarity::Positive : r == 1 ? Polarity::Negative : Polarity::Neutral;
      at.negated = rng() % 5 == 0;
    }
    out.push_back(std::move(at));
  }
  return out;
}

inline bool agrees_with_oracle(const std::vector<AnnotatedToken>& stream, const Lexicon& lex,
                               std::string* why = nullptr) {
  const auto expected = oracle::classify(to_oracle(stream), oracle_prefixes(lex), oracle_cues(lex));
  try {
    const auto d = classify_type(stream, lex);
    const bool ok = expected && to_oracle(d.tweet_type) == expected->type &&
                    to_oracle(d.trigger) == expected->rule &&
                    static_cast<int>(d.positive_count) == expected->pos &&
                    static_cast<int>(d.negative_count) == expected->neg;
    if (!ok && why) *why = "library " + std::string(to_string(d.tweet_type));
    return ok;
  } catch (const ClassifyError&) {
    if (expected && why) *why = "library threw";
    return !expected;
  }
}

// All streams of length `n` over a fixed alphabet of six token shapes.
inline std::vector<std::vector<Token>> negation_streams(std::size_t n) {
  static const std::vector<std::pair<TokenKind, std::string>> alphabet = {
      {TokenKind::Word, "not"},   {TokenKind::Word, "good"},    {TokenKind::Word, "dirty"},
      {TokenKind::Word, "seat"},  {TokenKind::Punct, ","},      {TokenKind::Number, "2/3"},
      {TokenKind::Hashtag, "good"}, {TokenKind::Word, "never"}};
  std::vector<std::vector<Token>> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<Token> s;
    for (std::size_t i = 0; i < n; ++i) s.push_back(make_token(alphabet[idx[i]].first, alphabet[idx[i]].second, i));
    out.push_back(std::move(s));
    std::size_t k = 0;
    while (k < n && ++idx[k] == alphabet.size()) idx[k++] = 0;
    if (k == n) break;
  }
  return out;
}

inline bool negation_agrees(const std::vector<Token>& stream, const Lexicon& lex) {
  const auto got = annotate(stream, lex);
  const auto expected = oracle::negation(to_oracle(stream), oracle_polarity(lex), oracle_negators(lex));
  if (got.size() != expected.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (got[i].polarity != from_oracle(expected[i].first) || got[i].negated != expected[i].second) return false;
  }
  return true;
}

// Random category rules over `vocab`: a few categories in shuffled order, each
// with up to five distinct one- or two-word phrases.
inline std::vector<CategoryRule> random_rules(std::mt19937& rng, const std::vector<std::string>& vocab) {
  std::vector<ComplaintCategory> cats(kAllCategories.begin(), kAllCategories.end());
  std::shuffle(cats.begin(), cats.end(), rng);
  cats.resize(2 + rng() % 5);
  std::vector<CategoryRule> out;
  for (auto c : cats) {
    CategoryRule rule{c, {}};
    std::set<std::string> used;
    const auto n = 1 + rng() % 5;
    for (std::size_t i = 0; i < n; ++i) {
      std::string phrase = vocab[rng() % vocab.size()];
      if (rng() % 3 == 0) phrase += " " + vocab[rng() % vocab.size()];
      if (!used.insert(phrase).second) continue;
      rule.keywords.push_back(make_keyword(phrase, 1 + static_cast<long>(rng() % 5)));
    }
    out.push_back(std::move(rule));
  }
  return out;
}

inline std::vector<Token> random_tokens(std::mt19937& rng, const std::vector<std::string>& vocab) {
  std::string text;
  const auto n = rng() % 12;
  for (std::size_t i = 0; i < n; ++i) text += vocab[rng() % vocab.size()] + " ";
  return tokenize(normalize(text));
}

}  // namespace railtriage::testing

#endif  // RAILTRIAGE_TESTS_BRIDGE_HPP_
