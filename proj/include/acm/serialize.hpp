#pragma once

#include <json.hpp>

#include "acm/continuity.hpp"
#include "acm/genus_search.hpp"
#include "acm/macaulay.hpp"
#include "acm/ranges.hpp"
#include "acm/regularity.hpp"

// nlohmann::json keeps object keys sorted and every list below is emitted in
// ascending order, so equal values always serialize to equal text.

namespace acm {

void to_json(nlohmann::json& j, const GapCertificate& c);
void from_json(const nlohmann::json& j, GapCertificate& c);

void to_json(nlohmann::json& j, const GenusRange& r);
void from_json(const nlohmann::json& j, GenusRange& r);

void to_json(nlohmann::json& j, const DegreeClassification& c);
void from_json(const nlohmann::json& j, DegreeClassification& c);

void to_json(nlohmann::json& j, const RegularityAnswer& a);
void from_json(const nlohmann::json& j, RegularityAnswer& a);

void to_json(nlohmann::json& j, const ContinuityTable& t);
void from_json(const nlohmann::json& j, ContinuityTable& t);

void to_json(nlohmann::json& j, const TreeExport& t);

GapReason gapReasonFromString(const std::string& name);

}  // namespace acm

namespace nlohmann {

template <>
struct adl_serializer<acm::OSequence> {
  static void to_json(json& j, const acm::OSequence& h);
  static acm::OSequence from_json(const json& j);
};

template <>
struct adl_serializer<acm::HilbertData> {
  static void to_json(json& j, const acm::HilbertData& data);
  static acm::HilbertData from_json(const json& j);
};

}  // namespace nlohmann
