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

#include "railtriage/textproc.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "railtriage/util.hpp"

namespace railtriage {

std::string_view to_string(TokenKind k) {
  switch (k) {
    case TokenKind::Word: return "word";
    case TokenKind::Number: return "number";
    case TokenKind::Hashtag: return "hashtag";
    case TokenKind::Mention: return "mention";
    case TokenKind::Url: return "url";
    case TokenKind::Punct: return "punct";
  }
  return "?";
}

std::string_view lexical_form(const Token& t) {
  std::string_view norm = t.norm;
  if (t.kind == TokenKind::Hashtag && !norm.empty() && norm.front() == '#') norm.remove_prefix(1);
  return norm;
}

namespace {

// Lower-case, decompose, drop nonspacing marks, lower-case again (some
// compatibility decompositions produce capitals). Apostrophe look-alikes
// become '\''; other whitespace and controls become ' '.
std::string fold(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfkd = icu::Normalizer2::getNFKDInstance(status);
  auto ustr = icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  ustr.toLower(icu::Locale::getRoot());
  icu::UnicodeString decomposed = U_SUCCESS(status) ? nfkd->normalize(ustr, status) : ustr;
  if (U_FAILURE(status)) decomposed = ustr;

  icu::UnicodeString kept;
  for (int32_t i = 0; i < decomposed.length();) {
    const UChar32 cp = decomposed.char32At(i);
    i += U16_LENGTH(cp);
    if (u_charType(cp) == U_NON_SPACING_MARK) continue;
    if (cp == 0x2018 || cp == 0x2019 || cp == 0x02BC || cp == 0x2032) {
      kept.append(static_cast<UChar>('\''));
    } else if (u_isUWhiteSpace(cp) || u_iscntrl(cp)) {
      kept.append(static_cast<UChar>(' '));
    } else {
      kept.append(cp);
    }
  }
  kept.toLower(icu::Locale::getRoot());
  std::string out;
  kept.toUTF8String(out);
  return out;
}

UChar32 next_code_point(std::string_view s, std::size_t& i) {
  UChar32 cp;
  int32_t idx = static_cast<int32_t>(i);
  U8_NEXT(reinterpret_cast<const uint8_t*>(s.data()), idx, static_cast<int32_t>(s.size()), cp);
  i = static_cast<std::size_t>(idx);
  return cp;
}

// Caps runs of the same letter at two.
std::string squeeze(std::string_view chunk) {
  std::string out;
  UChar32 prev = -1;
  int run = 0;
  for (std::size_t i = 0; i < chunk.size();) {
    const std::size_t start = i;
    const UChar32 cp = next_code_point(chunk, i);
    run = (cp == prev) ? run + 1 : 1;
    prev = cp;
    if (run > 2 && u_isalpha(cp)) continue;
    out.append(chunk.substr(start, i - start));
  }
  return out;
}

// Earliest URL start in a squeezed chunk. Squeezing turns "www." into
// "ww.", so that form is matched at a letter boundary.
std::size_t find_url(std::string_view chunk) {
  std::size_t best = std::min(chunk.find("http://"), chunk.find("https://"));
  for (auto at = chunk.find("ww."); at != std::string_view::npos; at = chunk.find("ww.", at + 1)) {
    if (at == 0 || !u_isalpha(static_cast<unsigned char>(chunk[at - 1]))) {
      best = std::min(best, at);
      break;
    }
  }
  return best;
}

bool is_word_cp(UChar32 cp) { return cp == '_' || u_isalnum(cp); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::string normalize(std::string_view text) {
  const std::string folded = fold(text);
  std::vector<std::string> chunks;
  for (const auto& raw : split(folded, ' ')) {
    if (raw.empty()) continue;
    const auto chunk = squeeze(raw);
    const auto url_at = find_url(chunk);
    if (url_at == std::string_view::npos) {
      chunks.push_back(chunk);
      continue;
    }
    if (url_at > 0) chunks.push_back(chunk.substr(0, url_at));
    chunks.emplace_back(kUrlSentinel);
  }
  return join(chunks, " ");
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  auto push = [&](std::size_t begin, std::size_t end, TokenKind kind) {
    Token t;
    t.surface = std::string(text.substr(begin, end - begin));
    t.norm = to_lower_ascii(t.surface);
    t.kind = kind;
    t.position = tokens.size();
    tokens.push_back(std::move(t));
  };
  // End of a run of word code points starting at `i`.
  auto word_run_end = [&](std::size_t i) {
    while (i < text.size()) {
      std::size_t next = i;
      const UChar32 cp = next_code_point(text, next);
      if (is_word_cp(cp)) {
        i = next;
        continue;
      }
      // Internal apostrophe: "don't".
      if (cp == '\'' && next < text.size() && i > 0) {
        std::size_t after = next;
        if (u_isalpha(next_code_point(text, after))) {
          i = next;
          continue;
        }
      }
      break;
    }
    return i;
  };
  auto starts_word = [&](std::size_t i) {
    if (i >= text.size()) return false;
    return is_word_cp(next_code_point(text, i));
  };

  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t next = i;
    const UChar32 cp = next_code_point(text, next);
    if (cp == ' ' || u_isUWhiteSpace(cp)) {
      i = next;
      continue;
    }
    if (text.substr(i, kUrlSentinel.size()) == kUrlSentinel) {
      push(i, i + kUrlSentinel.size(), TokenKind::Url);
      i += kUrlSentinel.size();
      continue;
    }
    if ((cp == '#' || cp == '@') && starts_word(next)) {
      std::size_t end = next;
      while (end < text.size()) {
        std::size_t step = end;
        if (!is_word_cp(next_code_point(text, step))) break;
        end = step;
      }
      push(i, end, cp == '#' ? TokenKind::Hashtag : TokenKind::Mention);
      i = end;
      continue;
    }
    if (is_word_cp(cp)) {
      std::size_t end = word_run_end(i);
      const auto run = text.substr(i, end - i);
      if (is_all_digits(run)) {
        // Digit groups: "2/3", "05-01-2022".
        while (end + 1 < text.size() && (text[end] == '/' || text[end] == '-') &&
               is_digit(text[end + 1])) {
          std::size_t g = end + 1;
          while (g < text.size() && is_digit(text[g])) ++g;
          if (g < text.size() && starts_word(g)) break;  // "2-3rd" stays split
          end = g;
        }
        if (end < text.size() && starts_word(end)) {
          end = word_run_end(end);
          push(i, end, TokenKind::Word);
        } else {
          push(i, end, TokenKind::Number);
        }
      } else {
        push(i, end, TokenKind::Word);
      }
      i = end;
      continue;
    }
    // Punctuation run; stops before anything that starts another token.
    std::size_t end = next;
    while (end < text.size()) {
      std::size_t step = end;
      const UChar32 c = next_code_point(text, step);
      if (c == ' ' || u_isUWhiteSpace(c) || is_word_cp(c)) break;
      if ((c == '#' || c == '@') && starts_word(step)) break;
      if (text.substr(end, kUrlSentinel.size()) == kUrlSentinel) break;
      end = step;
    }
    push(i, end, TokenKind::Punct);
    i = end;
  }
  return tokens;
}

namespace {

Polarity flip(Polarity p) {
  switch (p) {
    case Polarity::Positive: return Polarity::Negative;
    case Polarity::Negative: return Polarity::Neutral;
    case Polarity::Neutral: return Polarity::Neutral;
  }
  return Polarity::Neutral;
}

}  // namespace

std::vector<AnnotatedToken> annotate(std::span<const Token> tokens, const Lexicon& lexicon) {
  std::vector<AnnotatedToken> out;
  out.reserve(tokens.size());
  std::size_t window = 0;
  for (const auto& tok : tokens) {
    AnnotatedToken at{tok, Polarity::Neutral, false};
    if (tok.kind == TokenKind::Punct) {
      window = 0;
    } else if (is_lexical(tok.kind)) {
      const auto form = lexical_form(tok);
      const bool negator = tok.kind == TokenKind::Word && lexicon.is_negator(form);
      at.negated = window > 0;
      if (window > 0) --window;
      at.polarity = negator ? Polarity::Neutral : lexicon.polarity_of(form);
      if (at.negated) at.polarity = flip(at.polarity);
      if (negator) window = kNegationWindow;
    }
    out.push_back(std::move(at));
  }
  return out;
}

std::vector<AnnotatedToken> analyze(std::string_view text, const Lexicon& lexicon) {
  const auto tokens = tokenize(normalize(text));
  return annotate(tokens, lexicon);
}

}  // namespace railtriage
