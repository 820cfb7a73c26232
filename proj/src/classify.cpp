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

#include "railtriage/classify.hpp"

#include "railtriage/util.hpp"

namespace railtriage {

std::string_view to_string(Trigger t) {
  switch (t) {
    case Trigger::PrefixLabel: return "prefix_label";
    case Trigger::SuggestionCue: return "suggestion_cue";
    case Trigger::PolarityRule: return "polarity_rule";
  }
  return "?";
}

std::optional<Trigger> parse_trigger(std::string_view s) {
  for (auto t : {Trigger::PrefixLabel, Trigger::SuggestionCue, Trigger::PolarityRule}) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

namespace {

// Greedy left-to-right cue matching over consecutive lexical tokens; at each
// position the longest cue wins.
std::vector<Evidence> match_cues(std::span<const AnnotatedToken> annotated, const Lexicon& lexicon) {
  std::vector<Evidence> found;
  std::size_t i = 0;
  while (i < annotated.size()) {
    bool matched = false;
    for (const auto& phrase : lexicon.cue_phrases()) {
      if (i + phrase.size() > annotated.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < phrase.size() && ok; ++k) {
        const auto& tok = annotated[i + k].token;
        ok = is_lexical(tok.kind) && lexical_form(tok) == phrase[k];
      }
      if (ok) {
        found.push_back({annotated[i].token.position, "cue:" + join(phrase, " ")});
        i += phrase.size();
        matched = true;
        break;
      }
    }
    if (!matched) ++i;
  }
  return found;
}

}  // namespace

TypeDecision classify_type(std::span<const AnnotatedToken> annotated, const Lexicon& lexicon) {
  TypeDecision d;
  const AnnotatedToken* first_word = nullptr;
  std::vector<Evidence> polarity_evidence;
  for (const auto& at : annotated) {
    if (!is_lexical(at.token.kind)) continue;
    if (!first_word) first_word = &at;
    ++d.content_tokens;
    if (at.polarity == Polarity::Neutral) continue;
    std::string reason(to_string(at.polarity));
    reason += ':';
    reason += lexical_form(at.token);
    if (at.negated) reason += "(negated)";
    polarity_evidence.push_back({at.token.position, std::move(reason)});
    if (at.polarity == Polarity::Positive) {
      ++d.positive_count;
    } else {
      ++d.negative_count;
    }
  }
  if (!first_word) throw ClassifyError("EmptyTokenStream", "no word tokens");

  if (const auto label = lexicon.prefix_label(lexical_form(first_word->token))) {
    d.tweet_type = *label;
    d.trigger = Trigger::PrefixLabel;
    d.matched_evidence.push_back(
        {first_word->token.position, "prefix_label:" + std::string(lexical_form(first_word->token))});
    d.matched_evidence.insert(d.matched_evidence.end(), polarity_evidence.begin(),
                              polarity_evidence.end());
    return d;
  }

  d.matched_evidence = std::move(polarity_evidence);
  if (d.negative_count >= 1) {
    d.tweet_type = TweetType::Complaint;
    d.trigger = Trigger::PolarityRule;
    return d;
  }
  auto cues = match_cues(annotated, lexicon);
  if (!cues.empty()) {
    d.tweet_type = TweetType::Suggestion;
    d.trigger = Trigger::SuggestionCue;
    d.matched_evidence.insert(d.matched_evidence.end(), cues.begin(), cues.end());
    return d;
  }
  d.tweet_type = d.positive_count >= 1 ? TweetType::Appreciation : TweetType::Suggestion;
  d.trigger = Trigger::PolarityRule;
  return d;
}

}  // namespace railtriage
