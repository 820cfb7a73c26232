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

#ifndef RAILTRIAGE_TEXTPROC_HPP_
#define RAILTRIAGE_TEXTPROC_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "railtriage/lexicon.hpp"
#include "railtriage/types.hpp"

namespace railtriage {

inline constexpr std::string_view kUrlSentinel = "<url>";
// Word tokens after a negator that fall in its scope.
inline constexpr std::size_t kNegationWindow = 3;

enum class TokenKind { Word, Number, Hashtag, Mention, Url, Punct };
std::string_view to_string(TokenKind k);

struct Token {
  std::string surface;  // substring of the normalized text
  std::string norm;
  TokenKind kind = TokenKind::Word;
  std::size_t position = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

struct AnnotatedToken {
  Token token;
  Polarity polarity = Polarity::Neutral;
  bool negated = false;
};

// Words and hashtags carry polarity and count toward the negation window.
constexpr bool is_lexical(TokenKind k) { return k == TokenKind::Word || k == TokenKind::Hashtag; }

// The lookup form of a lexical token: its norm, without the leading '#'
// for hashtags.
std::string_view lexical_form(const Token& t);

// Case folding, NFKD diacritic stripping, URL collapsing to "<url>",
// whitespace collapsing and squeezing of letter runs longer than two.
// Idempotent.
std::string normalize(std::string_view text);

// Splits normalized text into words, numbers (digit runs and digit groups
// joined by '/' or '-'), hashtags, mentions, URL sentinels and punctuation
// runs. Positions are 0..n-1.
std::vector<Token> tokenize(std::string_view normalized);

// Assigns lexicon polarity with negation scoping: a negator flips the next
// kNegationWindow word tokens (positive -> negative, negative -> neutral);
// punctuation closes the window.
std::vector<AnnotatedToken> annotate(std::span<const Token> tokens, const Lexicon& lexicon);

// Convenience: annotate(tokenize(normalize(text))).
std::vector<AnnotatedToken> analyze(std::string_view text, const Lexicon& lexicon);

}  // namespace railtriage

#endif  // RAILTRIAGE_TEXTPROC_HPP_
