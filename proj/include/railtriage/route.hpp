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

#ifndef RAILTRIAGE_ROUTE_HPP_
#define RAILTRIAGE_ROUTE_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <utility>

#include "railtriage/error.hpp"
#include "railtriage/extract.hpp"
#include "railtriage/types.hpp"

namespace railtriage {

// Codes: FileUnreadable, MalformedEntry, MissingDefaultRoute,
// IncompleteDepartmentMap, UndeclaredDivision.
class RouteError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

enum class RouteConfidence { Resolved, Fallback };
enum class RouteBasis { Station, Train, CategoryDefault };
std::string_view to_string(RouteConfidence c);
std::string_view to_string(RouteBasis b);
std::optional<RouteConfidence> parse_route_confidence(std::string_view s);
std::optional<RouteBasis> parse_route_basis(std::string_view s);

struct RoutingAssignment {
  std::string zone;
  std::string division;
  std::string department;
  RouteConfidence confidence = RouteConfidence::Fallback;
  RouteBasis basis = RouteBasis::CategoryDefault;

  friend bool operator==(const RoutingAssignment&, const RoutingAssignment&) = default;
};

struct TrainRoute {
  std::string division;
  std::string zone;
};

// departments.tsv (category<TAB>department, one row per category),
// trains.tsv (train_no<TAB>division<TAB>zone) and default_route.tsv
// (zone<TAB>division, one row). Train divisions must be declared by the
// gazetteer.
class RouteTables {
 public:
  RouteTables() = default;
  RouteTables(std::map<ComplaintCategory, std::string> departments,
              std::map<std::string, TrainRoute> trains, std::pair<std::string, std::string> fallback,
              const Gazetteer& gazetteer);

  static RouteTables load(const std::filesystem::path& dir, const Gazetteer& gazetteer);

  const std::string& department_for(ComplaintCategory c) const { return departments_.at(c); }
  const TrainRoute* train(std::string_view train_no) const;
  const std::string& default_zone() const { return default_.first; }
  const std::string& default_division() const { return default_.second; }
  const std::string& version() const { return version_; }

 private:
  std::map<ComplaintCategory, std::string> departments_;
  std::map<std::string, TrainRoute, std::less<>> trains_;
  std::pair<std::string, std::string> default_;  // (zone, division)
  std::string version_;
};

// Department from the category; zone and division from the station, else
// the train, else the default entry (fallback). Never throws.
RoutingAssignment route(ComplaintCategory category, const EntitySet& entities,
                        const RouteTables& tables);

}  // namespace railtriage

#endif  // RAILTRIAGE_ROUTE_HPP_
