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

#ifndef RAILTRIAGE_SERIALIZE_HPP_
#define RAILTRIAGE_SERIALIZE_HPP_

#include <string>

#include <json.hpp>

#include "railtriage/pipeline.hpp"

// JSON forms of pipeline results. Field order is fixed, so equal values
// always dump to identical bytes.
namespace railtriage {

using Json = nlohmann::ordered_json;

Json to_json(const TypeDecision& d);
Json to_json(const EntitySet& e);
Json to_json(const CategoryResult& c);
Json to_json(const CompletenessReport& r);
Json to_json(const RoutingAssignment& a);
Json to_json(const TriageResult& r);
Json to_json(const TriageFailure& f);
Json to_json(const TriageOutcome& o);

// Inverse of to_json(TriageResult). Throws Error("BadRecord").
TriageResult triage_result_from_json(const Json& j);

// One compact line, no trailing newline.
std::string to_json_line(const TriageOutcome& o);

}  // namespace railtriage

#endif  // RAILTRIAGE_SERIALIZE_HPP_
