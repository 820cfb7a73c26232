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

#include "railtriage/route.hpp"

#include "railtriage/util.hpp"

namespace railtriage {

std::string_view to_string(RouteConfidence c) {
  return c == RouteConfidence::Resolved ? "resolved" : "fallback";
}

std::string_view to_string(RouteBasis b) {
  switch (b) {
    case RouteBasis::Station: return "station";
    case RouteBasis::Train: return "train";
    case RouteBasis::CategoryDefault: return "category_default";
  }
  return "?";
}

std::optional<RouteConfidence> parse_route_confidence(std::string_view s) {
  if (s == "resolved") return RouteConfidence::Resolved;
  if (s == "fallback") return RouteConfidence::Fallback;
  return std::nullopt;
}

std::optional<RouteBasis> parse_route_basis(std::string_view s) {
  for (auto b : {RouteBasis::Station, RouteBasis::Train, RouteBasis::CategoryDefault}) {
    if (to_string(b) == s) return b;
  }
  return std::nullopt;
}

RouteTables::RouteTables(std::map<ComplaintCategory, std::string> departments,
                         std::map<std::string, TrainRoute> trains,
                         std::pair<std::string, std::string> fallback, const Gazetteer& gazetteer)
    : departments_(std::move(departments)), default_(std::move(fallback)) {
  for (auto c : kAllCategories) {
    const auto it = departments_.find(c);
    if (it == departments_.end() || it->second.empty()) {
      throw RouteError("IncompleteDepartmentMap", std::string(to_string(c)));
    }
  }
  if (default_.first.empty() || default_.second.empty()) {
    throw RouteError("MissingDefaultRoute", "empty default route");
  }
  for (auto& [no, tr] : trains) {
    if (!gazetteer.declared_pairs().count({tr.zone, tr.division})) {
      throw RouteError("UndeclaredDivision", no + " -> " + tr.zone + "/" + tr.division);
    }
    trains_.emplace(no, std::move(tr));
  }
  std::string fingerprint;
  for (const auto& [c, d] : departments_) fingerprint += std::string(to_string(c)) + '\t' + d + '\n';
  for (const auto& [no, tr] : trains_) fingerprint += no + '\t' + tr.division + '\t' + tr.zone + '\n';
  fingerprint += default_.first + '\t' + default_.second + '\n';
  version_ = content_hash(fingerprint);
}

RouteTables RouteTables::load(const std::filesystem::path& dir, const Gazetteer& gazetteer) {
  auto read = [](const std::filesystem::path& path) {
    try {
      return parse_tsv(read_file(path));
    } catch (const IoError&) {
      throw RouteError("FileUnreadable", path.string());
    }
  };
  auto where = [](const char* file, std::size_t line) {
    return std::string(file) + ":" + std::to_string(line);
  };

  std::map<ComplaintCategory, std::string> departments;
  for (const auto& row : read(dir / "departments.tsv")) {
    const auto c = row.cols.size() == 2 ? parse_category(row.cols[0]) : std::nullopt;
    if (!c || row.cols[1].empty()) throw RouteError("MalformedEntry", where("departments.tsv", row.line));
    departments[*c] = row.cols[1];
  }

  std::map<std::string, TrainRoute> trains;
  for (const auto& row : read(dir / "trains.tsv")) {
    if (row.cols.size() != 3 || !is_all_digits(row.cols[0]) || row.cols[0].size() != 5) {
      throw RouteError("MalformedEntry", where("trains.tsv", row.line));
    }
    trains[row.cols[0]] = {row.cols[1], row.cols[2]};
  }

  std::vector<TsvRow> fallback_rows;
  try {
    fallback_rows = parse_tsv(read_file(dir / "default_route.tsv"));
  } catch (const IoError&) {
    throw RouteError("MissingDefaultRoute", (dir / "default_route.tsv").string());
  }
  if (fallback_rows.size() != 1 || fallback_rows[0].cols.size() != 2) {
    throw RouteError("MissingDefaultRoute", "default_route.tsv must hold one zone<TAB>division row");
  }
  return RouteTables(std::move(departments), std::move(trains),
                     {fallback_rows[0].cols[0], fallback_rows[0].cols[1]}, gazetteer);
}

const TrainRoute* RouteTables::train(std::string_view train_no) const {
  const auto it = trains_.find(train_no);
  return it == trains_.end() ? nullptr : &it->second;
}

RoutingAssignment route(ComplaintCategory category, const EntitySet& entities,
                        const RouteTables& tables) {
  RoutingAssignment a;
  a.department = tables.department_for(category);
  if (entities.station) {
    a.zone = entities.station->zone;
    a.division = entities.station->division;
    a.confidence = RouteConfidence::Resolved;
    a.basis = RouteBasis::Station;
    return a;
  }
  if (entities.train_no) {
    if (const auto* tr = tables.train(*entities.train_no)) {
      a.zone = tr->zone;
      a.division = tr->division;
      a.confidence = RouteConfidence::Resolved;
      a.basis = RouteBasis::Train;
      return a;
    }
  }
  a.zone = tables.default_zone();
  a.division = tables.default_division();
  a.confidence = RouteConfidence::Fallback;
  a.basis = RouteBasis::CategoryDefault;
  return a;
}

}  // namespace railtriage
