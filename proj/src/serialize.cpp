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

#include "railtriage/serialize.hpp"

namespace railtriage {

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json tweet_json(const TweetRecord& t) {
  return {{"id", t.id},
          {"author_handle", t.author_handle},
          {"created_at", t.created_at},
          {"text", t.text},
          {"target_handle", t.target_handle}};
}

[[noreturn]] void bad(const std::string& what) { throw Error("BadRecord", what); }

template <typename E, typename Parse>
E parse_enum(const Json& j, const char* key, Parse parse) {
  const auto v = parse(j.at(key).get<std::string>());
  if (!v) bad(std::string("bad value for ") + key);
  return *v;
}

std::optional<std::string> optional_string(const Json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<std::string>();
}

}  // namespace

Json to_json(const TypeDecision& d) {
  Json evidence = Json::array();
  for (const auto& e : d.matched_evidence) evidence.push_back({{"position", e.position}, {"reason", e.reason}});
  return {{"tweet_type", to_string(d.tweet_type)},
          {"positive_count", d.positive_count},
          {"negative_count", d.negative_count},
          {"content_tokens", d.content_tokens},
          {"trigger", to_string(d.trigger)},
          {"matched_evidence", std::move(evidence)}};
}

Json to_json(const EntitySet& e) {
  Json j;
  j["pnr"] = optional_json(e.pnr);
  j["train_no"] = optional_json(e.train_no);
  j["mobile"] = optional_json(e.mobile);
  j["transaction_id"] = optional_json(e.transaction_id);
  j["user_id"] = optional_json(e.user_id);
  j["booking_date"] = e.booking_date ? Json(e.booking_date->to_string()) : Json(nullptr);
  if (e.station) {
    j["station"] = {{"code", e.station->code},
                    {"name", e.station->name},
                    {"division", e.station->division},
                    {"zone", e.station->zone}};
  } else {
    j["station"] = nullptr;
  }
  j["platform"] = optional_json(e.platform);
  j["coach"] = optional_json(e.coach);
  Json spans = Json::object();
  for (auto f : kAllEntityFields) {
    if (const auto it = e.spans.find(f); it != e.spans.end()) {
      spans[std::string(to_string(f))] = {it->second.begin, it->second.end};
    }
  }
  j["spans"] = std::move(spans);
  Json dups = Json::array();
  for (const auto& [f, s] : e.duplicates) dups.push_back({{"field", to_string(f)}, {"span", {s.begin, s.end}}});
  j["duplicates"] = std::move(dups);
  return j;
}

Json to_json(const CategoryResult& c) {
  return {{"category", to_string(c.category)}, {"score", c.score}, {"matched", c.matched}};
}

Json to_json(const CompletenessReport& r) {
  Json missing = Json::array();
  for (auto f : r.missing) missing.push_back(to_string(f));
  return {{"status", to_string(r.status)},
          {"missing", std::move(missing)},
          {"prompt", optional_json(r.prompt)},
          {"schema_id", optional_json(r.schema_id)}};
}

Json to_json(const RoutingAssignment& a) {
  return {{"zone", a.zone},
          {"division", a.division},
          {"department", a.department},
          {"confidence", to_string(a.confidence)},
          {"basis", to_string(a.basis)}};
}

Json to_json(const TriageResult& r) {
  Json j;
  j["tweet"] = tweet_json(r.tweet);
  j["decision"] = to_json(r.decision);
  j["entities"] = to_json(r.entities);
  j["category"] = r.category ? to_json(*r.category) : Json(nullptr);
  j["completeness"] = to_json(r.completeness);
  j["routing"] = r.routing ? to_json(*r.routing) : Json(nullptr);
  j["pipeline_version"] = r.pipeline_version;
  j["processed_at"] = r.processed_at;
  return j;
}

Json to_json(const TriageFailure& f) {
  Json j;
  j["tweet"] = tweet_json(f.tweet);
  j["error"] = {{"code", f.error_code}, {"detail", f.error_detail}};
  j["pipeline_version"] = f.pipeline_version;
  j["processed_at"] = f.processed_at;
  return j;
}

Json to_json(const TriageOutcome& o) {
  return std::visit([](const auto& v) { return to_json(v); }, o);
}

std::string to_json_line(const TriageOutcome& o) { return to_json(o).dump(); }

TriageResult triage_result_from_json(const Json& j) {
  try {
    TriageResult r;
    const auto& t = j.at("tweet");
    r.tweet = {t.at("id").get<std::string>(), t.at("author_handle").get<std::string>(),
               t.at("created_at").get<std::string>(), t.at("text").get<std::string>(),
               t.at("target_handle").get<std::string>()};

    const auto& d = j.at("decision");
    r.decision.tweet_type = parse_enum<TweetType>(d, "tweet_type", parse_tweet_type);
    r.decision.positive_count = d.at("positive_count").get<std::size_t>();
    r.decision.negative_count = d.at("negative_count").get<std::size_t>();
    r.decision.content_tokens = d.at("content_tokens").get<std::size_t>();
    r.decision.trigger = parse_enum<Trigger>(d, "trigger", parse_trigger);
    for (const auto& e : d.at("matched_evidence")) {
      r.decision.matched_evidence.push_back({e.at("position").get<std::size_t>(), e.at("reason").get<std::string>()});
    }

    const auto& e = j.at("entities");
    r.entities.pnr = optional_string(e, "pnr");
    r.entities.train_no = optional_string(e, "train_no");
    r.entities.mobile = optional_string(e, "mobile");
    r.entities.transaction_id = optional_string(e, "transaction_id");
    r.entities.user_id = optional_string(e, "user_id");
    if (const auto date = optional_string(e, "booking_date")) {
      r.entities.booking_date = CalendarDate::parse_iso(*date);
      if (!r.entities.booking_date) bad("booking_date");
    }
    if (const auto& s = e.at("station"); !s.is_null()) {
      r.entities.station = Station{s.at("code").get<std::string>(), s.at("name").get<std::string>(),
                                   s.at("division").get<std::string>(), s.at("zone").get<std::string>()};
    }
    r.entities.platform = optional_string(e, "platform");
    r.entities.coach = optional_string(e, "coach");
    for (const auto& [name, span] : e.at("spans").items()) {
      const auto f = parse_entity_field(name);
      if (!f) bad("span field " + name);
      r.entities.spans[*f] = {span.at(0).get<std::size_t>(), span.at(1).get<std::size_t>()};
    }
    for (const auto& dup : e.at("duplicates")) {
      const auto f = parse_entity_field(dup.at("field").get<std::string>());
      if (!f) bad("duplicate field");
      r.entities.duplicates.emplace_back(
          *f, Span{dup.at("span").at(0).get<std::size_t>(), dup.at("span").at(1).get<std::size_t>()});
    }

    if (const auto& c = j.at("category"); !c.is_null()) {
      CategoryResult cr;
      cr.category = parse_enum<ComplaintCategory>(c, "category", parse_category);
      cr.score = c.at("score").get<long>();
      cr.matched = c.at("matched").get<std::vector<std::string>>();
      r.category = std::move(cr);
    }

    const auto& comp = j.at("completeness");
    r.completeness.status = parse_enum<CompletenessStatus>(comp, "status", parse_completeness_status);
    for (const auto& m : comp.at("missing")) {
      const auto f = parse_entity_field(m.get<std::string>());
      if (!f) bad("missing field");
      r.completeness.missing.push_back(*f);
    }
    r.completeness.prompt = optional_string(comp, "prompt");
    r.completeness.schema_id = optional_string(comp, "schema_id");

    if (const auto& rt = j.at("routing"); !rt.is_null()) {
      RoutingAssignment a;
      a.zone = rt.at("zone").get<std::string>();
      a.division = rt.at("division").get<std::string>();
      a.department = rt.at("department").get<std::string>();
      a.confidence = parse_enum<RouteConfidence>(rt, "confidence", parse_route_confidence);
      a.basis = parse_enum<RouteBasis>(rt, "basis", parse_route_basis);
      r.routing = std::move(a);
    }
    r.pipeline_version = j.at("pipeline_version").get<std::string>();
    r.processed_at = j.at("processed_at").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& ex) {
    bad(ex.what());
  }
}

}  // namespace railtriage
