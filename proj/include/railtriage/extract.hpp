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

#ifndef RAILTRIAGE_EXTRACT_HPP_
#define RAILTRIAGE_EXTRACT_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "railtriage/error.hpp"
#include "railtriage/textproc.hpp"
#include "railtriage/types.hpp"

namespace railtriage {

struct Station {
  std::string code;  // upper-case, e.g. "GKP"
  std::string name;  // normalized, e.g. "gorakhpur"
  std::string division;
  std::string zone;

  friend bool operator==(const Station&, const Station&) = default;
};

// Codes: FileUnreadable, MalformedEntry, DuplicateStation, EmptyGazetteer.
class GazetteerError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// Station list read from code<TAB>name<TAB>division<TAB>zone rows.
class Gazetteer {
 public:
  Gazetteer() = default;
  explicit Gazetteer(std::vector<Station> stations);

  static Gazetteer load(const std::filesystem::path& path);

  const std::vector<Station>& stations() const { return stations_; }
  // Normalized name tokens (and the code as a one-token alias) per station index.
  const std::vector<std::vector<std::vector<std::string>>>& forms() const { return forms_; }
  const std::set<std::pair<std::string, std::string>>& declared_pairs() const { return pairs_; }
  const Station* find_by_name(std::string_view name) const;
  const std::string& version() const { return version_; }

 private:
  std::vector<Station> stations_;
  std::vector<std::vector<std::vector<std::string>>> forms_;
  std::set<std::pair<std::string, std::string>> pairs_;  // (zone, division)
  std::string version_;
};

struct CalendarDate {
  int year = 0;
  int month = 0;
  int day = 0;

  std::string to_string() const;  // "YYYY-MM-DD"
  static std::optional<CalendarDate> parse_iso(std::string_view s);
  friend bool operator==(const CalendarDate&, const CalendarDate&) = default;
};

// Half-open token position range.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

struct EntitySet {
  std::optional<std::string> pnr;
  std::optional<std::string> train_no;
  std::optional<std::string> mobile;
  std::optional<std::string> transaction_id;
  std::optional<std::string> user_id;
  std::optional<CalendarDate> booking_date;
  std::optional<Station> station;
  std::optional<std::string> platform;
  std::optional<std::string> coach;  // upper-case, e.g. "S4"
  std::map<EntityField, Span> spans;
  // Later occurrences of an already-populated field; not used downstream.
  std::vector<std::pair<EntityField, Span>> duplicates;

  bool has(EntityField f) const;
  std::set<EntityField> populated() const;
  // Display value of a populated field (station name for stations).
  std::optional<std::string> value_of(EntityField f) const;

  friend bool operator==(const EntitySet&, const EntitySet&) = default;
};

// Best-effort rule extraction, in order: context-keyword rules (pnr, mobile,
// transaction id, user id), context-free shape rules (train number, bare
// 10-digit numbers, dates, platform, coach), then gazetteer scan. Only the
// first occurrence of each field is kept and no token feeds two fields.
EntitySet extract_entities(std::span<const Token> tokens, const Gazetteer& gazetteer);

}  // namespace railtriage

#endif  // RAILTRIAGE_EXTRACT_HPP_
