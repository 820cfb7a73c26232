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

#ifndef RAILTRIAGE_LEXICON_HPP_
#define RAILTRIAGE_LEXICON_HPP_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "railtriage/error.hpp"
#include "railtriage/types.hpp"

namespace railtriage {

// Codes: ConflictingPolarity, EmptyLexicon, FileUnreadable, MalformedEntry,
// MissingPrefixLabel.
class LexiconError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

struct LexiconPaths {
  std::filesystem::path polarity;
  std::filesystem::path cues;
  std::filesystem::path negators;
  std::filesystem::path prefix_labels;

  // polarity.tsv, cues.tsv, negators.tsv and prefix_labels.tsv under `dir`.
  static LexiconPaths in_directory(const std::filesystem::path& dir);
};

// Polarity lexicon plus suggestion cues, negators and prefix labels.
// Neutral words are absent from `polarity`. Immutable once built; all entries
// are lower-case, trimmed and non-empty.
class Lexicon {
 public:
  // Validates and canonicalizes (lower-cases, trims, collapses inner spaces).
  // Throws LexiconError.
  static Lexicon build(const std::vector<std::pair<std::string, Polarity>>& polarity,
                       const std::vector<std::string>& cues,
                       const std::vector<std::string>& negators,
                       const std::vector<std::pair<std::string, TweetType>>& prefix_labels);

  Polarity polarity_of(std::string_view norm_word) const;
  bool is_negator(std::string_view norm_word) const;
  std::optional<TweetType> prefix_label(std::string_view norm_word) const;

  const std::map<std::string, Polarity, std::less<>>& polarity() const { return polarity_; }
  // Cue phrases split into words; longest first, then lexicographic.
  const std::vector<std::vector<std::string>>& cue_phrases() const { return cue_phrases_; }
  const std::set<std::string, std::less<>>& cues() const { return cues_; }
  const std::set<std::string, std::less<>>& negators() const { return negators_; }
  const std::map<std::string, TweetType, std::less<>>& prefix_labels() const {
    return prefix_labels_;
  }
  // Hash of the canonical serialization; equal content gives equal version.
  const std::string& version() const { return version_; }

 private:
  std::map<std::string, Polarity, std::less<>> polarity_;
  std::set<std::string, std::less<>> cues_;
  std::vector<std::vector<std::string>> cue_phrases_;
  std::set<std::string, std::less<>> negators_;
  std::map<std::string, TweetType, std::less<>> prefix_labels_;
  std::string version_;
};

Lexicon load_lexicon(const LexiconPaths& paths);
inline Lexicon load_lexicon(const std::filesystem::path& dir) {
  return load_lexicon(LexiconPaths::in_directory(dir));
}

// Writes the four files in canonical order. Throws IoError.
void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& dir);

}  // namespace railtriage

#endif  // RAILTRIAGE_LEXICON_HPP_
