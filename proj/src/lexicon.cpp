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

#include "railtriage/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "railtriage/util.hpp"

namespace railtriage {

LexiconPaths LexiconPaths::in_directory(const std::filesystem::path& dir) {
  return {dir / "polarity.tsv", dir / "cues.tsv", dir / "negators.tsv", dir / "prefix_labels.tsv"};
}

namespace {

std::string canonical(std::string_view s) { return collapse_spaces(to_lower_ascii(s)); }

std::string serialize_polarity(const Lexicon& lex) {
  std::string out;
  for (const auto& [word, pol] : lex.polarity()) {
    out += word;
    out += '\t';
    out += to_string(pol);
    out += '\n';
  }
  return out;
}

std::string serialize_set(const std::set<std::string, std::less<>>& entries) {
  std::string out;
  for (const auto& e : entries) out += e + '\n';
  return out;
}

std::string serialize_prefixes(const Lexicon& lex) {
  std::string out;
  for (const auto& [label, type] : lex.prefix_labels()) {
    out += label;
    out += '\t';
    out += to_lower_ascii(to_string(type));
    out += '\n';
  }
  return out;
}

std::string read_lexicon_file(const std::filesystem::path& path) {
  try {
    return read_file(path);
  } catch (const IoError&) {
    throw LexiconError("FileUnreadable", path.string());
  }
}

std::string where(const std::filesystem::path& path, std::size_t line) {
  return path.filename().string() + ":" + std::to_string(line);
}

}  // namespace

Lexicon Lexicon::build(const std::vector<std::pair<std::string, Polarity>>& polarity,
                       const std::vector<std::string>& cues,
                       const std::vector<std::string>& negators,
                       const std::vector<std::pair<std::string, TweetType>>& prefix_labels) {
  Lexicon lex;
  for (const auto& [raw, pol] : polarity) {
    auto word = canonical(raw);
    if (word.empty()) throw LexiconError("MalformedEntry", "empty polarity word");
    if (pol == Polarity::Neutral) continue;  // neutral is absence
    auto [it, inserted] = lex.polarity_.emplace(word, pol);
    if (!inserted && it->second != pol) throw LexiconError("ConflictingPolarity", word);
  }
  if (lex.polarity_.empty()) throw LexiconError("EmptyLexicon", "no polarity entries");

  for (const auto& raw : cues) {
    auto cue = canonical(raw);
    if (cue.empty()) throw LexiconError("MalformedEntry", "empty cue");
    lex.cues_.insert(std::move(cue));
  }
  for (const auto& cue : lex.cues_) lex.cue_phrases_.push_back(split(cue, ' '));
  std::stable_sort(lex.cue_phrases_.begin(), lex.cue_phrases_.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });

  for (const auto& raw : negators) {
    auto neg = canonical(raw);
    if (neg.empty()) throw LexiconError("MalformedEntry", "empty negator");
    lex.negators_.insert(std::move(neg));
  }

  for (const auto& [raw, type] : prefix_labels) {
    auto label = canonical(raw);
    if (label.empty()) throw LexiconError("MalformedEntry", "empty prefix label");
    auto [it, inserted] = lex.prefix_labels_.emplace(label, type);
    if (!inserted && it->second != type) throw LexiconError("MalformedEntry", "prefix " + label);
  }
  for (auto [label, type] : {std::pair{"complaint", TweetType::Complaint},
                             std::pair{"suggestion", TweetType::Suggestion},
                             std::pair{"appreciation", TweetType::Appreciation}}) {
    const auto it = lex.prefix_labels_.find(std::string_view(label));
    if (it == lex.prefix_labels_.end() || it->second != type) {
      throw LexiconError("MissingPrefixLabel", label);
    }
  }

  std::string fingerprint = serialize_polarity(lex);
  fingerprint += '\x1f' + serialize_set(lex.cues_);
  fingerprint += '\x1f' + serialize_set(lex.negators_);
  fingerprint += '\x1f' + serialize_prefixes(lex);
  lex.version_ = content_hash(fingerprint);
  return lex;
}

Polarity Lexicon::polarity_of(std::string_view norm_word) const {
  const auto it = polarity_.find(norm_word);
  return it == polarity_.end() ? Polarity::Neutral : it->second;
}

bool Lexicon::is_negator(std::string_view norm_word) const {
  return negators_.find(norm_word) != negators_.end();
}

std::optional<TweetType> Lexicon::prefix_label(std::string_view norm_word) const {
  const auto it = prefix_labels_.find(norm_word);
  if (it == prefix_labels_.end()) return std::nullopt;
  return it->second;
}

Lexicon load_lexicon(const LexiconPaths& paths) {
  std::vector<std::pair<std::string, Polarity>> polarity;
  for (const auto& row : parse_tsv(read_lexicon_file(paths.polarity))) {
    const auto pol = row.cols.size() == 2 ? parse_polarity(row.cols[1]) : std::nullopt;
    if (!pol || *pol == Polarity::Neutral || row.cols[0].empty()) {
      throw LexiconError("MalformedEntry", where(paths.polarity, row.line));
    }
    polarity.emplace_back(row.cols[0], *pol);
  }

  auto single_column = [](const std::filesystem::path& path) {
    std::vector<std::string> entries;
    for (const auto& row : parse_tsv(read_lexicon_file(path))) {
      if (row.cols.size() != 1 || row.cols[0].empty()) {
        throw LexiconError("MalformedEntry", where(path, row.line));
      }
      entries.push_back(row.cols[0]);
    }
    return entries;
  };
  const auto cues = single_column(paths.cues);
  const auto negators = single_column(paths.negators);

  std::vector<std::pair<std::string, TweetType>> prefixes;
  for (const auto& row : parse_tsv(read_lexicon_file(paths.prefix_labels))) {
    const auto type = row.cols.size() == 2 ? parse_tweet_type(row.cols[1]) : std::nullopt;
    if (!type || row.cols[0].empty()) {
      throw LexiconError("MalformedEntry", where(paths.prefix_labels, row.line));
    }
    prefixes.emplace_back(row.cols[0], *type);
  }
  return Lexicon::build(polarity, cues, negators, prefixes);
}

void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& dir) {
  const auto paths = LexiconPaths::in_directory(dir);
  auto write = [](const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("OutputUnwritable", path.string());
    out << body;
    if (!out) throw IoError("OutputUnwritable", path.string());
  };
  write(paths.polarity, serialize_polarity(lexicon));
  write(paths.cues, serialize_set(lexicon.cues()));
  write(paths.negators, serialize_set(lexicon.negators()));
  write(paths.prefix_labels, serialize_prefixes(lexicon));
}

}  // namespace railtriage
