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

#include "railtriage/extract.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_set>

#include "railtriage/util.hpp"

namespace railtriage {

// --- Gazetteer --------------------------------------------------------------

namespace {

// Codes shorter than this are too likely to collide with ordinary words.
constexpr std::size_t kMinCodeAliasLength = 3;

std::vector<std::string> name_tokens(std::string_view name) {
  std::vector<std::string> out;
  for (const auto& t : tokenize(normalize(name))) {
    if (t.kind == TokenKind::Punct) continue;
    out.emplace_back(t.kind == TokenKind::Hashtag ? std::string(lexical_form(t)) : t.norm);
  }
  return out;
}

std::string to_upper_ascii(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

}  // namespace

Gazetteer::Gazetteer(std::vector<Station> stations) : stations_(std::move(stations)) {
  std::string fingerprint;
  std::unordered_set<std::string> codes;
  for (auto& s : stations_) {
    s.code = to_upper_ascii(trim(s.code));
    s.name = normalize(s.name);
    if (s.code.empty() || s.name.empty() || s.division.empty() || s.zone.empty()) {
      throw GazetteerError("MalformedEntry", s.code + " " + s.name);
    }
    if (!codes.insert(s.code).second) throw GazetteerError("DuplicateStation", s.code);
    std::vector<std::vector<std::string>> forms{name_tokens(s.name)};
    if (s.code.size() >= kMinCodeAliasLength) forms.push_back({to_lower_ascii(s.code)});
    forms_.push_back(std::move(forms));
    pairs_.emplace(s.zone, s.division);
    fingerprint += s.code + '\t' + s.name + '\t' + s.division + '\t' + s.zone + '\n';
  }
  version_ = content_hash(fingerprint);
}

Gazetteer Gazetteer::load(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const IoError&) {
    throw GazetteerError("FileUnreadable", path.string());
  }
  std::vector<Station> stations;
  for (const auto& row : parse_tsv(text)) {
    if (row.cols.size() != 4) {
      throw GazetteerError("MalformedEntry", path.filename().string() + ":" + std::to_string(row.line));
    }
    stations.push_back({row.cols[0], row.cols[1], row.cols[2], row.cols[3]});
  }
  if (stations.empty()) throw GazetteerError("EmptyGazetteer", path.string());
  return Gazetteer(std::move(stations));
}

const Station* Gazetteer::find_by_name(std::string_view name) const {
  for (const auto& s : stations_) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

// --- CalendarDate -------------------------------------------------------------

std::string CalendarDate::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

std::optional<CalendarDate> CalendarDate::parse_iso(std::string_view s) {
  const auto parts = split(s, '-');
  if (parts.size() != 3 || parts[0].size() != 4 || parts[1].size() != 2 || parts[2].size() != 2) {
    return std::nullopt;
  }
  for (const auto& p : parts) {
    if (!is_all_digits(p)) return std::nullopt;
  }
  CalendarDate d{std::stoi(parts[0]), std::stoi(parts[1]), std::stoi(parts[2])};
  if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > days_in_month(d.year, d.month)) {
    return std::nullopt;
  }
  return d;
}

// --- EntitySet ----------------------------------------------------------------

bool EntitySet::has(EntityField f) const {
  switch (f) {
    case EntityField::Pnr: return pnr.has_value();
    case EntityField::TrainNo: return train_no.has_value();
    case EntityField::Mobile: return mobile.has_value();
    case EntityField::TransactionId: return transaction_id.has_value();
    case EntityField::UserId: return user_id.has_value();
    case EntityField::BookingDate: return booking_date.has_value();
    case EntityField::Station: return station.has_value();
    case EntityField::Platform: return platform.has_value();
    case EntityField::Coach: return coach.has_value();
  }
  return false;
}

std::set<EntityField> EntitySet::populated() const {
  std::set<EntityField> out;
  for (auto f : kAllEntityFields) {
    if (has(f)) out.insert(f);
  }
  return out;
}

std::optional<std::string> EntitySet::value_of(EntityField f) const {
  switch (f) {
    case EntityField::Pnr: return pnr;
    case EntityField::TrainNo: return train_no;
    case EntityField::Mobile: return mobile;
    case EntityField::TransactionId: return transaction_id;
    case EntityField::UserId: return user_id;
    case EntityField::BookingDate:
      if (booking_date) return booking_date->to_string();
      return std::nullopt;
    case EntityField::Station:
      if (station) return station->name;
      return std::nullopt;
    case EntityField::Platform: return platform;
    case EntityField::Coach: return coach;
  }
  return std::nullopt;
}

// --- Extraction ---------------------------------------------------------------

namespace {

constexpr std::size_t kKeywordWindow = 3;

bool is_word(const Token& t, std::string_view w) { return t.kind == TokenKind::Word && t.norm == w; }

bool is_digits(const Token& t, std::size_t len) {
  return t.kind == TokenKind::Number && t.norm.size() == len && is_all_digits(t.norm);
}

bool is_separator_punct(const Token& t) {
  return t.kind == TokenKind::Punct && t.norm.find_first_not_of(":#.-") == std::string::npos;
}

bool has_digit(std::string_view s) { return s.find_first_of("0123456789") != std::string_view::npos; }

bool is_alnum_ascii(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  });
}

bool is_mobile_shape(std::string_view digits) {
  return digits.size() == 10 && digits.front() >= '6' && digits.front() <= '9';
}

// dd/mm/yyyy or dd-mm-yyyy (one- or two-digit day and month, one separator kind).
std::optional<CalendarDate> parse_dmy(std::string_view s) {
  const char sep = s.find('/') != std::string_view::npos ? '/' : '-';
  const auto parts = split(s, sep);
  if (parts.size() != 3) return std::nullopt;
  if (parts[0].empty() || parts[0].size() > 2 || parts[1].empty() || parts[1].size() > 2 ||
      parts[2].size() != 4) {
    return std::nullopt;
  }
  for (const auto& p : parts) {
    if (!is_all_digits(p)) return std::nullopt;
  }
  CalendarDate d{std::stoi(parts[2]), std::stoi(parts[1]), std::stoi(parts[0])};
  if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > days_in_month(d.year, d.month)) {
    return std::nullopt;
  }
  return d;
}

bool is_platform_number(std::string_view s) {
  std::size_t run = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      if (++run > 2) return false;
      continue;
    }
    if (run == 0) return false;
    if (i < s.size() && s[i] != '/' && s[i] != '-') return false;
    run = 0;
  }
  return true;
}

// One or two letters then one or two digits: "s4", "b2", "a1", "ge12".
bool is_coach_shape(std::string_view s) {
  std::size_t letters = 0;
  while (letters < s.size() && s[letters] >= 'a' && s[letters] <= 'z') ++letters;
  const std::size_t digits = s.size() - letters;
  if (letters < 1 || letters > 2 || digits < 1 || digits > 2) return false;
  const auto prefix = s.substr(0, letters);
  if (prefix == "pf" || prefix == "no") return false;
  return is_all_digits(s.substr(letters));
}

const std::unordered_set<std::string_view>& user_id_stopwords() {
  static const std::unordered_set<std::string_view> kWords = {
      "is",  "not", "no",   "and",  "or",     "the", "was", "has", "have", "of", "for", "my",
      "a",   "an",  "to",   "in",   "on",     "at",  "but", "with", "also", "please", "pls",
      "it",  "i",   "me",   "are",  "be",     "been"};
  return kWords;
}

class Extractor {
 public:
  Extractor(std::span<const Token> tokens, const Gazetteer& gazetteer)
      : tokens_(tokens), gazetteer_(gazetteer), consumed_(tokens.size(), false) {}

  EntitySet run() {
    pnr_context();
    mobile_context();
    transaction_context();
    user_id_context();
    shape_rules();
    gazetteer_scan();
    return std::move(out_);
  }

 private:
  bool free(std::size_t i) const { return i < tokens_.size() && !consumed_[i]; }

  // Records the first occurrence; later ones become diagnostics. Either way
  // the tokens are consumed so they cannot feed another field.
  template <typename T>
  void assign(EntityField field, std::optional<T>& slot, T value, Span span) {
    for (auto k = span.begin; k < span.end; ++k) consumed_[k] = true;
    if (slot) {
      out_.duplicates.emplace_back(field, span);
      return;
    }
    slot = std::move(value);
    out_.spans[field] = span;
  }

  template <typename Pred>
  std::optional<std::size_t> within_window(std::size_t keyword, Pred pred) const {
    for (std::size_t j = keyword + 1; j <= keyword + kKeywordWindow && j < tokens_.size(); ++j) {
      if (free(j) && pred(tokens_[j])) return j;
    }
    return std::nullopt;
  }

  // Advances past optional filler words and separator punctuation.
  std::size_t skip_filler(std::size_t j, std::initializer_list<std::string_view> words) const {
    bool word_used = false;
    while (j < tokens_.size()) {
      const auto& t = tokens_[j];
      if (is_separator_punct(t)) {
        ++j;
        continue;
      }
      if (!word_used && t.kind == TokenKind::Word &&
          std::find(words.begin(), words.end(), t.norm) != words.end()) {
        word_used = true;
        ++j;
        continue;
      }
      break;
    }
    return j;
  }

  void pnr_context() {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      if (!is_word(tokens_[i], "pnr")) continue;
      if (auto j = within_window(i, [](const Token& t) { return is_digits(t, 10); })) {
        assign(EntityField::Pnr, out_.pnr, tokens_[*j].norm, {*j, *j + 1});
      }
    }
  }

  void mobile_context() {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      const auto& t = tokens_[i];
      if (!(is_word(t, "mobile") || is_word(t, "phone") || is_word(t, "mob"))) continue;
      auto j = within_window(i, [](const Token& c) { return is_digits(c, 10); });
      if (!j) continue;
      if (is_mobile_shape(tokens_[*j].norm)) {
        assign(EntityField::Mobile, out_.mobile, tokens_[*j].norm, {*j, *j + 1});
      } else {
        consumed_[*j] = true;  // announced as a phone number but not a valid one
      }
    }
  }

  void transaction_context() {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      if (!(is_word(tokens_[i], "txn") || is_word(tokens_[i], "transaction"))) continue;
      const auto j = skip_filler(i + 1, {"id", "no", "number"});
      if (!free(j)) continue;
      const auto& c = tokens_[j];
      const bool digits = c.kind == TokenKind::Number && is_all_digits(c.norm);
      const bool alnum = c.kind == TokenKind::Word && is_alnum_ascii(c.norm) && has_digit(c.norm);
      if ((digits || alnum) && c.norm.size() >= 4) {
        assign(EntityField::TransactionId, out_.transaction_id, c.norm, {j, j + 1});
      }
    }
  }

  void user_id_context() {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      std::size_t after = 0;
      if (is_word(tokens_[i], "userid")) {
        after = i + 1;
      } else if (is_word(tokens_[i], "user") && i + 1 < tokens_.size() && is_word(tokens_[i + 1], "id")) {
        after = i + 2;
      } else {
        continue;
      }
      const auto j = skip_filler(after, {"is"});
      if (!free(j)) continue;
      const auto& c = tokens_[j];
      if (c.kind != TokenKind::Word && c.kind != TokenKind::Number) continue;
      if (user_id_stopwords().count(c.norm)) continue;
      assign(EntityField::UserId, out_.user_id, c.norm, {j, j + 1});
    }
  }

  void shape_rules() {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      if (!free(i)) continue;
      const auto& t = tokens_[i];
      if (t.kind == TokenKind::Number && is_all_digits(t.norm)) {
        if (t.norm.size() == 5) {
          assign(EntityField::TrainNo, out_.train_no, t.norm, {i, i + 1});
        } else if (t.norm.size() == 10) {
          if (is_mobile_shape(t.norm)) {
            assign(EntityField::Mobile, out_.mobile, t.norm, {i, i + 1});
          } else {
            assign(EntityField::Pnr, out_.pnr, t.norm, {i, i + 1});
          }
        }
      } else if (t.kind == TokenKind::Number) {
        if (auto date = parse_dmy(t.norm)) {
          assign(EntityField::BookingDate, out_.booking_date, *date, {i, i + 1});
        }
      } else if (is_word(t, "platform") || is_word(t, "pf")) {
        const auto j = skip_filler(i + 1, {"no", "number"});
        if (free(j) && tokens_[j].kind == TokenKind::Number && is_platform_number(tokens_[j].norm)) {
          assign(EntityField::Platform, out_.platform, tokens_[j].norm, {j, j + 1});
        }
      } else if (t.kind == TokenKind::Word && is_coach_shape(t.norm)) {
        assign(EntityField::Coach, out_.coach, to_upper_ascii(t.norm), {i, i + 1});
      }
    }
  }

  bool matches_form(std::size_t start, const std::vector<std::string>& form) const {
    if (form.empty() || start + form.size() > tokens_.size()) return false;
    for (std::size_t k = 0; k < form.size(); ++k) {
      const auto& t = tokens_[start + k];
      if (!free(start + k)) return false;
      const bool comparable = is_lexical(t.kind) || t.kind == TokenKind::Number;
      if (!comparable || lexical_form(t) != form[k]) return false;
    }
    return true;
  }

  // "at <name>" and "<name> [railway] station" frames each add one.
  int frame_boost(std::size_t start, std::size_t len) const {
    int boost = 0;
    if (start > 0 && is_word(tokens_[start - 1], "at")) ++boost;
    const auto end = start + len;
    if (end < tokens_.size() &&
        (is_word(tokens_[end], "station") || is_word(tokens_[end], "junction") ||
         is_word(tokens_[end], "jn") ||
         (is_word(tokens_[end], "railway") && end + 1 < tokens_.size() &&
          is_word(tokens_[end + 1], "station")))) {
      ++boost;
    }
    return boost;
  }

  void gazetteer_scan() {
    struct Candidate {
      int boost;
      std::size_t length;
      std::size_t start;
      std::size_t station;
    };
    std::vector<Candidate> candidates;
    const auto& forms = gazetteer_.forms();
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      for (std::size_t s = 0; s < forms.size(); ++s) {
        for (const auto& form : forms[s]) {
          if (matches_form(i, form)) {
            candidates.push_back({frame_boost(i, form.size()), form.size(), i, s});
          }
        }
      }
    }
    // Framed first, then longest, then earliest; later picks may not overlap.
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      if (a.boost != b.boost) return a.boost > b.boost;
      if (a.length != b.length) return a.length > b.length;
      if (a.start != b.start) return a.start < b.start;
      return a.station < b.station;
    });
    for (const auto& c : candidates) {
      bool clear = true;
      for (auto k = c.start; k < c.start + c.length; ++k) clear = clear && !consumed_[k];
      if (!clear) continue;
      assign(EntityField::Station, out_.station, gazetteer_.stations()[c.station],
             {c.start, c.start + c.length});
    }
  }

  std::span<const Token> tokens_;
  const Gazetteer& gazetteer_;
  std::vector<bool> consumed_;
  EntitySet out_;
};

}  // namespace

EntitySet extract_entities(std::span<const Token> tokens, const Gazetteer& gazetteer) {
  return Extractor(tokens, gazetteer).run();
}

}  // namespace railtriage
