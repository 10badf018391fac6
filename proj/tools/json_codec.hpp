#pragma once

#include <json.hpp>

#include "hajos/hajos.hpp"

namespace hajos::cli {

using nlohmann::json;

inline json edges_json(const std::vector<Edge>& es) {
  json out = json::array();
  for (const Edge& e : es) out.push_back({e.u, e.v});
  return out;
}

inline json decomposition_json(const CycleDecomposition& d) { return {{"n", d.n}, {"cycles", d.cycles}}; }

/// Accepts {"cycles": [[...], ...]} with optional "n", or a bare array of cycles.
inline CycleDecomposition decomposition_from_json(const json& j, int n) {
  const json& cycles = j.is_array() ? j : j.at("cycles");
  CycleDecomposition d;
  d.n = j.is_object() && j.contains("n") ? j.at("n").get<int>() : n;
  d.cycles = cycles.get<std::vector<std::vector<Vertex>>>();
  return d;
}

inline json plan_json(const TraceEntry& t) {
  const auto& p = t.plan;
  return {{"variant", to_string(p.structure.variant)},
          {"removed_vertices", p.removed_vertices.members()},
          {"removed_edges", edges_json(p.removed_edges)},
          {"added_edges", edges_json(p.added_edges)},
          {"lift_case", {{"tag", p.lift_case.tag}, {"y", p.lift_case.y}}},
          {"branches", t.branches}};
}

inline json trace_json(const ReductionTrace& tr) {
  json plans = json::array();
  for (const auto& t : tr.plans) plans.push_back(plan_json(t));
  return {{"plans", plans}, {"base", decomposition_json(tr.base)}};
}

inline json path_decomposition_json(const PathDecomposition& pd) {
  json bags = json::array();
  for (const auto& b : pd.bags) bags.push_back(b.members());
  return {{"found", true}, {"width", pd.width()}, {"bags", bags}};
}

}  // namespace hajos::cli
