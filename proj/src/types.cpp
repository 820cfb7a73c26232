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

#include "railtriage/types.hpp"

#include "railtriage/util.hpp"

namespace railtriage {

std::string_view to_string(TweetType t) {
  switch (t) {
    case TweetType::Complaint: return "Complaint";
    case TweetType::Suggestion: return "Suggestion";
    case TweetType::Appreciation: return "Appreciation";
  }
  return "?";
}

std::string_view to_string(Polarity p) {
  switch (p) {
    case Polarity::Positive: return "positive";
    case Polarity::Negative: return "negative";
    case Polarity::Neutral: return "neutral";
  }
  return "?";
}

std::string_view to_string(ComplaintCategory c) {
  switch (c) {
    case ComplaintCategory::DivyangjanFacilities: return "DivyangjanFacilities";
    case ComplaintCategory::BedRoll: return "BedRoll";
    case ComplaintCategory::StaffBehavior: return "StaffBehavior";
    case ComplaintCategory::Cleanliness: return "Cleanliness";
    case ComplaintCategory::PassengerAmenities: return "PassengerAmenities";
    case ComplaintCategory::CoachMaintenance: return "CoachMaintenance";
    case ComplaintCategory::WaterAvailability: return "WaterAvailability";
    case ComplaintCategory::UnreservedTicketing: return "UnreservedTicketing";
    case ComplaintCategory::CateringVending: return "CateringVending";
    case ComplaintCategory::TicketingRefund: return "TicketingRefund";
    case ComplaintCategory::Punctuality: return "Punctuality";
    case ComplaintCategory::Security: return "Security";
    case ComplaintCategory::Miscellaneous: return "Miscellaneous";
  }
  return "?";
}

std::string_view to_string(EntityField f) {
  switch (f) {
    case EntityField::Pnr: return "pnr";
    case EntityField::TrainNo: return "train_no";
    case EntityField::Mobile: return "mobile";
    case EntityField::TransactionId: return "transaction_id";
    case EntityField::UserId: return "user_id";
    case EntityField::BookingDate: return "booking_date";
    case EntityField::Station: return "station";
    case EntityField::Platform: return "platform";
    case EntityField::Coach: return "coach";
  }
  return "?";
}

namespace {

template <typename Enum, std::size_t N>
std::optional<Enum> parse_from(std::string_view s, const std::array<Enum, N>& all) {
  const auto wanted = to_lower_ascii(s);
  for (auto v : all) {
    if (to_lower_ascii(to_string(v)) == wanted) return v;
  }
  return std::nullopt;
}

}  // namespace

std::optional<TweetType> parse_tweet_type(std::string_view s) {
  return parse_from(s, kAllTweetTypes);
}

std::optional<Polarity> parse_polarity(std::string_view s) {
  return parse_from(s, std::array{Polarity::Positive, Polarity::Negative, Polarity::Neutral});
}

std::optional<ComplaintCategory> parse_category(std::string_view s) {
  return parse_from(s, kAllCategories);
}

std::optional<EntityField> parse_entity_field(std::string_view s) {
  return parse_from(s, kAllEntityFields);
}

}  // namespace railtriage
