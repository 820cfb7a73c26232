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

#ifndef RAILTRIAGE_TYPES_HPP_
#define RAILTRIAGE_TYPES_HPP_

#include <array>
#include <optional>
#include <string_view>

// Closed enumerations shared across pipeline stages, with their canonical
// spellings in tables and JSON.
namespace railtriage {

enum class TweetType { Complaint, Suggestion, Appreciation };
inline constexpr std::array kAllTweetTypes = {TweetType::Complaint, TweetType::Suggestion,
                                              TweetType::Appreciation};

enum class Polarity { Positive, Negative, Neutral };

// Declared order is the fallback taxonomy order used for ties when a rules
// file does not mention a category.
enum class ComplaintCategory {
  DivyangjanFacilities,
  BedRoll,
  StaffBehavior,
  Cleanliness,
  PassengerAmenities,
  CoachMaintenance,
  WaterAvailability,
  UnreservedTicketing,
  CateringVending,
  TicketingRefund,
  Punctuality,
  Security,
  Miscellaneous,
};
inline constexpr std::array kAllCategories = {
    ComplaintCategory::DivyangjanFacilities, ComplaintCategory::BedRoll,
    ComplaintCategory::StaffBehavior,        ComplaintCategory::Cleanliness,
    ComplaintCategory::PassengerAmenities,   ComplaintCategory::CoachMaintenance,
    ComplaintCategory::WaterAvailability,    ComplaintCategory::UnreservedTicketing,
    ComplaintCategory::CateringVending,      ComplaintCategory::TicketingRefund,
    ComplaintCategory::Punctuality,          ComplaintCategory::Security,
    ComplaintCategory::Miscellaneous,
};

// Fields of EntitySet, in declaration order.
enum class EntityField {
  Pnr,
  TrainNo,
  Mobile,
  TransactionId,
  UserId,
  BookingDate,
  Station,
  Platform,
  Coach,
};
inline constexpr std::array kAllEntityFields = {
    EntityField::Pnr,         EntityField::TrainNo, EntityField::Mobile,
    EntityField::TransactionId, EntityField::UserId, EntityField::BookingDate,
    EntityField::Station,     EntityField::Platform, EntityField::Coach,
};

std::string_view to_string(TweetType t);
std::string_view to_string(Polarity p);
std::string_view to_string(ComplaintCategory c);
std::string_view to_string(EntityField f);

// Parsers accept the canonical spelling case-insensitively.
std::optional<TweetType> parse_tweet_type(std::string_view s);
std::optional<Polarity> parse_polarity(std::string_view s);
std::optional<ComplaintCategory> parse_category(std::string_view s);
std::optional<EntityField> parse_entity_field(std::string_view s);

constexpr std::size_t index_of(TweetType t) { return static_cast<std::size_t>(t); }
constexpr std::size_t index_of(ComplaintCategory c) { return static_cast<std::size_t>(c); }

}  // namespace railtriage

#endif  // RAILTRIAGE_TYPES_HPP_
