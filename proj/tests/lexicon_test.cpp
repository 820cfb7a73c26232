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

#include <gtest/gtest.h>

#include "railtriage/lexicon.hpp"
#include "support.hpp"

namespace railtriage {
namespace {

void write_lexicon(const testing::TempDir& dir, const std::string& polarity,
                   const std::string& prefixes = "complaint\tComplaint\nsuggestion\tSuggestion\nappreciation\tAppreciation\n") {
  testing::write_text(dir / "polarity.tsv", polarity);
  testing::write_text(dir / "cues.tsv", "please add\n");
  testing::write_text(dir / "negators.tsv", "not\n");
  testing::write_text(dir / "prefix_labels.tsv", prefixes);
}

std::string error_code(const testing::TempDir& dir) {
  try {
    load_lexicon(dir.path());
  } catch (const LexiconError& e) {
    return e.code();
  }
  return "";
}

TEST(Lexicon, ShippedEntries) {
  const auto& lex = testing::shipped_config().lexicon;
  EXPECT_EQ(lex.polarity_of("leakage"), Polarity::Negative);
  EXPECT_EQ(lex.polarity_of("scenic"), Polarity::Positive);
  EXPECT_EQ(lex.polarity_of("xyzzy"), Polarity::Neutral);
  EXPECT_EQ(lex.polarity_of("complaint"), Polarity::Neutral);
  EXPECT_GE(lex.polarity().size(), 200u);
  for (const char* n : {"not", "no", "never", "without", "don't", "didn't", "isn't"}) EXPECT_TRUE(lex.is_negator(n)) << n;
  EXPECT_EQ(lex.prefix_label("suggestion"), TweetType::Suggestion);
  EXPECT_EQ(lex.prefix_label("complaint"), TweetType::Complaint);
  EXPECT_EQ(lex.prefix_label("appreciation"), TweetType::Appreciation);
}

TEST(Lexicon, LoadsFile) {
  testing::TempDir dir;
  write_lexicon(dir, "# comment\nleakage\tnegative\nleakage\tnegative\nGood \tpositive\n");
  const auto lex = load_lexicon(dir.path());
  EXPECT_EQ(lex.polarity_of("leakage"), Polarity::Negative);
  EXPECT_EQ(lex.polarity_of("good"), Polarity::Positive);
  EXPECT_EQ(lex.polarity().size(), 2u);
}

TEST(Lexicon, ConflictingPolarity) {
  testing::TempDir dir;
  write_lexicon(dir, "good\tpositive\ngood\tnegative\n");
  EXPECT_EQ(error_code(dir), "ConflictingPolarity");
}

TEST(Lexicon, EmptyLexicon) {
  testing::TempDir dir;
  write_lexicon(dir, "# nothing\n\n");
  EXPECT_EQ(error_code(dir), "EmptyLexicon");
}

TEST(Lexicon, MissingPrefixLabel) {
  testing::TempDir dir;
  write_lexicon(dir, "good\tpositive\n", "complaint\tComplaint\n");
  EXPECT_EQ(error_code(dir), "MissingPrefixLabel");
}

TEST(Lexicon, MalformedEntry) {
  testing::TempDir dir;
  write_lexicon(dir, "good\tsplendid\n");
  EXPECT_EQ(error_code(dir), "MalformedEntry");
}

TEST(Lexicon, FileUnreadable) {
  testing::TempDir dir;
  EXPECT_EQ(error_code(dir), "FileUnreadable");
}

TEST(Lexicon, RoundTripIsFixedPoint) {
  testing::TempDir dir;
  const auto& lex = testing::shipped_config().lexicon;
  save_lexicon(lex, dir.path());
  const auto again = load_lexicon(dir.path());
  EXPECT_EQ(again.polarity(), lex.polarity());
  EXPECT_EQ(again.cues(), lex.cues());
  EXPECT_EQ(again.negators(), lex.negators());
  EXPECT_EQ(again.prefix_labels(), lex.prefix_labels());
  EXPECT_EQ(again.version(), lex.version());
  testing::TempDir dir2;
  save_lexicon(again, dir2.path());
  EXPECT_EQ(read_file(dir2 / "polarity.tsv"), read_file(dir / "polarity.tsv"));
}

TEST(Lexicon, VersionTracksContent) {
  testing::TempDir a, b;
  write_lexicon(a, "good\tpositive\n");
  write_lexicon(b, "good\tpositive\nbad\tnegative\n");
  EXPECT_NE(load_lexicon(a.path()).version(), load_lexicon(b.path()).version());
  EXPECT_EQ(load_lexicon(a.path()).version(), load_lexicon(a.path()).version());
}

TEST(Lexicon, CuePhrasesLongestFirst) {
  const auto& cues = testing::shipped_config().lexicon.cue_phrases();
  for (std::size_t i = 1; i < cues.size(); ++i) EXPECT_GE(cues[i - 1].size(), cues[i].size());
}

}  // namespace
}  // namespace railtriage
