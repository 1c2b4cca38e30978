#pragma once

#include <string>

#include <json.hpp>

#include "circuit/bounds.hpp"
#include "circuit/inequality.hpp"
#include "circuit/ratio.hpp"
#include "circuit/simulator.hpp"

namespace circuit {

using json = nlohmann::ordered_json;

// Every rational is written as a "p/q" (or "p") string.

inline json caches_to_json(const CacheMap& c) {
  json out = json::object();
  for (const auto& [pos, n] : c) out[pos.str()] = n;
  return out;
}

inline json to_json(const SimReport& r) {
  json j;
  j["feasible"] = r.feasible;
  j["total_time"] = r.total_time.str();
  j["violations"] = json::array();
  for (const auto& v : r.violations)
    j["violations"].push_back(
        {{"kind", to_string(v.kind)}, {"clock", v.clock.str()}, {"position", v.position.str()}, {"detail", v.detail}});
  const auto& l = r.ledger;
  j["ledger"] = {{"boxes_taken", l.boxes_taken.str()},       {"consumed", l.consumed.str()},
                 {"ants_lost", l.ants_lost.str()},           {"discarded", l.discarded.str()},
                 {"left_in_caches", l.left_in_caches.str()}, {"carried_at_end", l.carried_at_end.str()},
                 {"balanced", l.balanced()}};
  j["marks"] = json::object();
  for (const auto& m : r.marks) {
    std::string key = m.label;
    for (int k = 2; j["marks"].contains(key); ++k) key = m.label + " (" + std::to_string(k) + ")";
    j["marks"][key] = {{"elapsed", m.elapsed.str()}, {"position", m.position.str()}, {"caches", caches_to_json(m.caches)}};
  }
  j["circuit_covered"] = r.circuit_covered;
  j["final_position"] = r.final_position.str();
  j["final_caches"] = caches_to_json(r.final_caches);
  return j;
}

inline json to_json(const LinIneq& q) {
  json coeffs = json::object();
  for (const auto& [v, c] : q.coeffs()) coeffs[v.name()] = c.str();
  json j;
  if (!q.label().empty()) j["label"] = q.label();
  j["coefficients"] = coeffs;
  j["constant"] = q.constant().str();
  return j;
}

inline LinIneq lin_ineq_from_json(const json& j) {
  LinIneq q(j.value("label", std::string()));
  for (const auto& [name, c] : j.at("coefficients").items()) q.add(VarId::parse(name), Ratio::parse(c.get<std::string>()));
  q.add_constant(Ratio::parse(j.at("constant").get<std::string>()));
  return q;
}

inline json to_json(const BoundLine& l) {
  return {{"a", l.a.str()}, {"b", l.b.str()}, {"axis", l.axis == BoundLine::Axis::kGamma ? "gamma" : "reverse"}};
}

inline BoundLine bound_line_from_json(const json& j) {
  std::string axis = j.value("axis", std::string("gamma"));
  if (axis != "gamma" && axis != "reverse") throw std::invalid_argument("line axis must be 'gamma' or 'reverse'");
  return {Ratio::parse(j.at("a").get<std::string>()), Ratio::parse(j.at("b").get<std::string>()),
          axis == "gamma" ? BoundLine::Axis::kGamma : BoundLine::Axis::kReverse};
}

/// `note` is free text stored with the certificate.
inline json to_json(const Certificate& c, const std::string& note = "") {
  json j;
  j["system"] = json::array();
  for (const auto& q : c.system) j["system"].push_back(to_json(q));
  j["target"] = to_json(c.target);
  j["multipliers"] = json::array();
  for (const auto& m : c.multipliers) j["multipliers"].push_back(m.str());
  j["slack"] = c.slack.str();
  if (c.line) j["line"] = to_json(*c.line);
  j["units"] = c.units.str();
  if (!note.empty()) j["note"] = note;
  return j;
}

inline Certificate certificate_from_json(const json& j) {
  Certificate c;
  for (const auto& q : j.at("system")) c.system.push_back(lin_ineq_from_json(q));
  c.target = lin_ineq_from_json(j.at("target"));
  for (const auto& m : j.at("multipliers")) c.multipliers.push_back(Ratio::parse(m.get<std::string>()));
  c.slack = Ratio::parse(j.at("slack").get<std::string>());
  if (j.contains("line")) c.line = bound_line_from_json(j.at("line"));
  if (j.contains("units")) c.units = Ratio::parse(j.at("units").get<std::string>());
  return c;
}

}  // namespace circuit
