#include "acm/serialize.hpp"

#include <stdexcept>

using nlohmann::json;

namespace acm {

GapReason gapReasonFromString(const std::string& name) {
  for (const auto r : {GapReason::BetweenRanges, GapReason::HoleAlwaysGap, GapReason::Searched})
    if (toString(r) == name) return r;
  throw std::invalid_argument("unknown gap reason: " + name);
}

void to_json(json& j, const GapCertificate& c) {
  j = json{{"value", c.value}, {"reason", toString(c.reason)}, {"length", c.length}, {"offset", c.offset},
           {"rule", c.rule}};
}

void from_json(const json& j, GapCertificate& c) {
  j.at("value").get_to(c.value);
  c.reason = gapReasonFromString(j.at("reason").get<std::string>());
  j.at("length").get_to(c.length);
  j.at("offset").get_to(c.offset);
  j.at("rule").get_to(c.rule);
}

void to_json(json& j, const GenusRange& r) {
  j = json{{"d", r.d},        {"s", r.s}, {"min", r.minGenus}, {"max", r.maxGenus}, {"minWitness", r.minWitness},
           {"maxWitness", r.maxWitness}};
}

void from_json(const json& j, GenusRange& r) {
  j.at("d").get_to(r.d);
  j.at("s").get_to(r.s);
  j.at("min").get_to(r.minGenus);
  j.at("max").get_to(r.maxGenus);
  r.minWitness = j.at("minWitness").get<OSequence>();
  r.maxWitness = j.at("maxWitness").get<OSequence>();
}

void to_json(json& j, const DegreeClassification& c) {
  json witnesses = json::array();
  for (const auto& [g, h] : c.witnesses) witnesses.push_back(json{{"genus", g}, {"h", h}});
  const auto st = c.stats();
  j = json{{"d", c.d},
           {"genera", c.genera.values()},
           {"gaps", c.gapValues()},
           {"certificates", c.gaps},
           {"witnesses", witnesses},
           {"stats", {{"certainGenera", st.certainGenera}, {"certainGaps", st.certainGaps}, {"searched", st.searched}}}};
}

void from_json(const json& j, DegreeClassification& c) {
  c.d = j.at("d").get<Int>();
  c.genera = GenusSet(c.d);
  for (const Int g : j.at("genera").get<std::vector<Int>>()) c.genera.insert(g);
  c.gaps = j.at("certificates").get<std::vector<GapCertificate>>();
  c.witnesses.clear();
  for (const auto& w : j.at("witnesses")) c.witnesses.emplace(w.at("genus").get<Int>(), w.at("h").get<OSequence>());
  if (j.at("gaps").get<std::vector<Int>>() != c.gapValues())
    throw std::invalid_argument("gap list disagrees with certificates");
}

void to_json(json& j, const RegularityAnswer& a) {
  j = json{{"d", a.d},
           {"g", a.g},
           {"minRegularity", a.minRegularity},
           {"postulationRegularity", a.postulationRegularity},
           {"witness", a.witness}};
}

void from_json(const json& j, RegularityAnswer& a) {
  j.at("d").get_to(a.d);
  j.at("g").get_to(a.g);
  j.at("minRegularity").get_to(a.minRegularity);
  j.at("postulationRegularity").get_to(a.postulationRegularity);
  a.witness = j.at("witness").get<OSequence>();
}

void to_json(json& j, const ContinuityTable& t) { j = json{{"m", t.values}}; }

void from_json(const json& j, ContinuityTable& t) { j.at("m").get_to(t.values); }

void to_json(json& j, const TreeExport& t) {
  json edges = json::array();
  for (const auto& [p, c] : t.edges) edges.push_back(json::array({p.str(), c.str()}));
  j = json{{"root", t.root.str()}, {"edges", edges}};
}

}  // namespace acm

namespace nlohmann {

void adl_serializer<acm::OSequence>::to_json(json& j, const acm::OSequence& h) {
  j = json(std::vector<acm::Int>(h.entries().begin(), h.entries().end()));
}

acm::OSequence adl_serializer<acm::OSequence>::from_json(const json& j) {
  return acm::OSequence(j.get<std::vector<acm::Int>>());
}

void adl_serializer<acm::HilbertData>::to_json(json& j, const acm::HilbertData& data) {
  j = json{{"h", data.hVector},
           {"zeroDim", data.zeroDimFunction},
           {"curve", data.curveFunction},
           {"leading", data.leading},
           {"constant", data.constant},
           {"postulationRegularity", data.postulationRegularity()}};
}

acm::HilbertData adl_serializer<acm::HilbertData>::from_json(const json& j) {
  return acm::HilbertData{j.at("h").get<acm::OSequence>(), j.at("zeroDim").get<std::vector<acm::Int>>(),
                          j.at("curve").get<std::vector<acm::Int>>(), j.at("leading").get<acm::Int>(),
                          j.at("constant").get<acm::Int>()};
}

}  // namespace nlohmann
