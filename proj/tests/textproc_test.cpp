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

#include <random>

#include <gtest/gtest.h>

#include "bridge.hpp"
#include "oracles.hpp"
#include "railtriage/textproc.hpp"
#include "support.hpp"

namespace railtriage {
namespace {

using testing::make_token;

struct Expect {
  TokenKind kind;
  std::string norm;
};

void expect_tokens(std::string_view text, const std::vector<Expect>& want) {
  const auto got = tokenize(normalize(text));
  ASSERT_EQ(got.size(), want.size()) << text;
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(got[i].kind, want[i].kind) << text << " @" << i;
    EXPECT_EQ(got[i].norm, want[i].norm) << text << " @" << i;
    EXPECT_EQ(got[i].position, i);
  }
}

TEST(Normalize, CaseFolding) { EXPECT_EQ(normalize("Water LEAKAGE at Bhandup"), "water leakage at bhandup"); }

TEST(Normalize, ElongationSqueeze) {
  EXPECT_EQ(normalize("goooood service"), "good service");
  EXPECT_EQ(normalize("sooo baaad!!!"), "soo baad!!!");
}

TEST(Normalize, SqueezeMatchesOracle) {
  std::mt19937 rng(11);
  const std::string letters = "abgo";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string s;
    const int runs = 1 + static_cast<int>(rng() % 5);
    for (int r = 0; r < runs; ++r) {
      s.append(1 + rng() % 6, letters[rng() % letters.size()]);
      if (rng() % 3 == 0) s += ' ';
    }
    EXPECT_EQ(normalize(s), collapse_spaces(oracle::squeeze(s))) << s;
  }
}

TEST(Normalize, UrlSentinel) {
  EXPECT_EQ(normalize("refund https://t.co/abc"), "refund <url>");
  EXPECT_EQ(normalize("see http://x.y/z, now"), "see <url> now");
  EXPECT_EQ(normalize("www.irctc.co.in please"), "<url> please");
}

TEST(Normalize, CollapsesWhitespace) { EXPECT_EQ(normalize("  a \t\n b  "), "a b"); }

TEST(Normalize, StripsDiacritics) { EXPECT_EQ(normalize("Café NAÏVE"), "cafe naive"); }

TEST(Normalize, EmptyAndBlank) {
  EXPECT_EQ(normalize(""), "");
  EXPECT_EQ(normalize("   "), "");
}

TEST(Normalize, Idempotent) {
  for (const auto& r : testing::synthetic_tweets(500, 3)) {
    const auto once = normalize(r.text);
    EXPECT_EQ(normalize(once), once) << r.text;
  }
  for (const char* s : {"httttp://x.y", "wwww.abc", "Ｆｕｌｌｗｉｄｔｈ", "don’t", "ﬁne", "aaa bbb"}) {
    const auto once = normalize(s);
    EXPECT_EQ(normalize(once), once) << s;
  }
}

TEST(Normalize, TotalOnArbitraryBytes) {
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    std::string s;
    for (int k = 0; k < 40; ++k) s += static_cast<char>(rng() % 256);
    const auto n = normalize(s);
    EXPECT_TRUE(is_valid_utf8(n));
    EXPECT_EQ(normalize(n), n);
  }
}

TEST(Tokenize, PlatformGroup) {
  expect_tokens("platform no 2/3", {{TokenKind::Word, "platform"}, {TokenKind::Word, "no"}, {TokenKind::Number, "2/3"}});
}

TEST(Tokenize, Empty) { EXPECT_TRUE(tokenize("").empty()); }

TEST(Tokenize, Kinds) {
  expect_tokens("@RailMinIndia refund!!",
                {{TokenKind::Mention, "@railminindia"}, {TokenKind::Word, "refund"}, {TokenKind::Punct, "!!"}});
  expect_tokens("#dirty coach s4 https://t.co/x",
                {{TokenKind::Hashtag, "#dirty"},
                 {TokenKind::Word, "coach"},
                 {TokenKind::Word, "s4"},
                 {TokenKind::Url, "<url>"}});
  expect_tokens("pnr 8461234567 on 12/03/2022 or 12-03-2022",
                {{TokenKind::Word, "pnr"},
                 {TokenKind::Number, "8461234567"},
                 {TokenKind::Word, "on"},
                 {TokenKind::Number, "12/03/2022"},
                 {TokenKind::Word, "or"},
                 {TokenKind::Number, "12-03-2022"}});
  expect_tokens("don't go", {{TokenKind::Word, "don't"}, {TokenKind::Word, "go"}});
  expect_tokens("Suggestion: add", {{TokenKind::Word, "suggestion"}, {TokenKind::Punct, ":"}, {TokenKind::Word, "add"}});
}

TEST(Tokenize, PositionsContiguousAndNormsNonEmpty) {
  for (const auto& r : testing::synthetic_tweets(500, 9)) {
    const auto toks = tokenize(normalize(r.text));
    for (std::size_t i = 0; i < toks.size(); ++i) {
      EXPECT_EQ(toks[i].position, i);
      EXPECT_FALSE(toks[i].norm.empty());
    }
  }
}

TEST(Annotate, NotGood) {
  const auto lex = testing::toy_lexicon();
  const auto a = annotate(tokenize("not good"), lex);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0].polarity, Polarity::Neutral);
  EXPECT_FALSE(a[0].negated);
  EXPECT_EQ(a[1].polarity, Polarity::Negative);
  EXPECT_TRUE(a[1].negated);
}

TEST(Annotate, Good) {
  const auto a = annotate(tokenize("good"), testing::toy_lexicon());
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].polarity, Polarity::Positive);
  EXPECT_FALSE(a[0].negated);
}

TEST(Annotate, NegatedNegativeIsNeutral) {
  const auto a = annotate(tokenize("not dirty seat"), testing::toy_lexicon());
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a[1].polarity, Polarity::Neutral);
  EXPECT_TRUE(a[1].negated);
  EXPECT_EQ(a[2].polarity, Polarity::Neutral);
}

TEST(Annotate, WindowIsThreeWords) {
  const auto lex = testing::toy_lexicon();
  EXPECT_EQ(annotate(tokenize("not a b good"), lex)[3].polarity, Polarity::Negative);
  EXPECT_EQ(annotate(tokenize("not a b c good"), lex)[4].polarity, Polarity::Positive);
}

TEST(Annotate, PunctuationClosesWindow) {
  const auto a = annotate(tokenize("not , good"), testing::toy_lexicon());
  EXPECT_EQ(a[2].polarity, Polarity::Positive);
  EXPECT_FALSE(a[2].negated);
}

TEST(Annotate, NumbersAndMentionsDoNotConsumeWindow) {
  const auto a = annotate(tokenize("not 12555 @x <url> a b good"), testing::toy_lexicon());
  EXPECT_EQ(a.back().polarity, Polarity::Negative);
}

TEST(Annotate, DoubleNegatorFlipsOnce) {
  const auto a = annotate(tokenize("not not good"), testing::toy_lexicon());
  EXPECT_EQ(a[1].polarity, Polarity::Neutral);
  EXPECT_TRUE(a[1].negated);
  EXPECT_EQ(a[2].polarity, Polarity::Negative);
}

TEST(Annotate, HashtagCarriesPolarity) {
  const auto a = annotate(tokenize("#dirty @good <url>"), testing::toy_lexicon());
  EXPECT_EQ(a[0].polarity, Polarity::Negative);
  EXPECT_EQ(a[1].polarity, Polarity::Neutral);
  EXPECT_EQ(a[2].polarity, Polarity::Neutral);
}

TEST(Annotate, CountPreserved) {
  const auto& lex = testing::shipped_config().lexicon;
  for (const auto& r : testing::synthetic_tweets(300, 4)) {
    const auto toks = tokenize(normalize(r.text));
    EXPECT_EQ(annotate(toks, lex).size(), toks.size());
  }
}

TEST(Annotate, WindowOracleExhaustiveUpToFour) {
  const auto lex = testing::toy_lexicon();
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& s : testing::negation_streams(n)) {
      ASSERT_TRUE(testing::negation_agrees(s, lex));
    }
  }
}

TEST(Annotate, WindowOracleOnSyntheticText) {
  const auto& lex = testing::shipped_config().lexicon;
  for (const auto& r : testing::synthetic_tweets(2000, 21)) {
    ASSERT_TRUE(testing::negation_agrees(tokenize(normalize(r.text)), lex)) << r.text;
  }
}

}  // namespace
}  // namespace railtriage
