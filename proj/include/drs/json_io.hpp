#pragma once

// JSON views of solver results and verdicts (nlohmann::ordered_json, so field
// order and therefore output bytes are fixed).

#include <json.hpp>

#include "drs/resolving.hpp"
#include "drs/set_cover.hpp"

namespace drs {

using Json = nlohmann::ordered_json;

/// {"objective", "value", "witness", "optimal"} plus "anchor" for phi.
inline Json to_json(const SolveResult& r) {
  Json j;
  j["objective"] = to_string(r.objective);
  j["value"] = r.value;
  j["witness"] = r.witness;
  j["optimal"] = r.optimal;
  if (r.anchor) j["anchor"] = *r.anchor;
  return j;
}

inline SolveResult solve_result_from_json(const Json& j) {
  SolveResult r;
  r.objective = parse_objective(j.at("objective").get<std::string>());
  r.value = j.at("value").get<int>();
  r.witness = j.at("witness").get<LandmarkSet>();
  r.optimal = j.at("optimal").get<bool>();
  if (j.contains("anchor")) r.anchor = j.at("anchor").get<VertexId>();
  return r;
}

inline Json to_json(const std::string& kind, const Verdict& v) {
  Json j;
  j["kind"] = kind;
  j["verdict"] = v.passed ? "pass" : "fail";
  if (v.witness) j["witness_pair"] = {v.witness->first, v.witness->second};
  return j;
}

}  // namespace drs
