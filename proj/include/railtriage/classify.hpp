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

#ifndef RAILTRIAGE_CLASSIFY_HPP_
#define RAILTRIAGE_CLASSIFY_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "railtriage/error.hpp"
#include "railtriage/lexicon.hpp"
#include "railtriage/textproc.hpp"
#include "railtriage/types.hpp"

namespace railtriage {

enum class Trigger { PrefixLabel, SuggestionCue, PolarityRule };
std::string_view to_string(Trigger t);
std::optional<Trigger> parse_trigger(std::string_view s);

struct Evidence {
  std::size_t position = 0;
  std::string reason;  // "prefix_label:suggestion", "negative:leakage", "cue:please add", ...

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct TypeDecision {
  TweetType tweet_type = TweetType::Suggestion;
  std::size_t positive_count = 0;
  std::size_t negative_count = 0;
  std::size_t content_tokens = 0;  // words and hashtags
  Trigger trigger = Trigger::PolarityRule;
  std::vector<Evidence> matched_evidence;

  friend bool operator==(const TypeDecision&, const TypeDecision&) = default;
};

// Code: EmptyTokenStream.
class ClassifyError : public Error {
 public:
  using Error::Error;
};

// Priority cascade:
//   1. first word token is a prefix label      -> that type
//   2. any negative word                       -> Complaint
//   3. any suggestion cue                      -> Suggestion
//   4. any positive word                       -> Appreciation
//   5. otherwise (all neutral)                 -> Suggestion
// Throws ClassifyError("EmptyTokenStream") when there are no word tokens.
TypeDecision classify_type(std::span<const AnnotatedToken> annotated, const Lexicon& lexicon);

}  // namespace railtriage

#endif  // RAILTRIAGE_CLASSIFY_HPP_
