#pragma once

// JSON forms of the library types. Object keys come out sorted and arrays in
// a fixed order, so dumps are byte-stable.

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "rhodesign/alternating.hpp"
#include "rhodesign/constructions.hpp"
#include "rhodesign/decomposition.hpp"
#include "rhodesign/error.hpp"
#include "rhodesign/graph.hpp"
#include "rhodesign/labeling.hpp"

namespace rhodesign {

using json = nlohmann::json;

inline json to_json(const Graph& g) {
  json vertices = json::array();
  for (Vertex x = 0; x < g.vertex_count(); ++x) vertices.push_back(x);
  json edges = json::array();
  for (const Edge& e : g.sorted_edges()) edges.push_back({e.u, e.v});
  return {{"vertices", vertices}, {"edges", edges}, {"roots", g.roots()}};
}

inline Graph graph_from_json(const json& j) {
  try {
    std::vector<Vertex> vertices = j.at("vertices").get<std::vector<Vertex>>();
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      require(vertices[k] == k, errc::invalid_parameter, "vertex ids must be 0..n-1");
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      require(e.size() == 2, errc::invalid_parameter, "edge must be a pair");
      edges.push_back(Edge{e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
    }
    std::vector<Vertex> roots;
    if (j.contains("roots")) roots = j.at("roots").get<std::vector<Vertex>>();
    return Graph(vertices.size(), std::move(edges), std::move(roots));
  } catch (const json::exception& ex) {
    fail(errc::invalid_parameter, std::string("malformed graph JSON: ") + ex.what());
  }
}

inline json to_json(const Labeling& f) {
  json labels = json::object();
  for (std::size_t x = 0; x < f.size(); ++x) labels[std::to_string(x)] = f.values()[x];
  return {{"t", f.bound()}, {"labels", labels}};
}

/// Vertex ids must be exactly 0..k-1; a gap is an incomplete labeling.
inline Labeling labeling_from_json(const json& j) {
  try {
    const Label t = j.at("t").get<Label>();
    std::map<std::size_t, Label> by_vertex;
    for (const auto& [key, value] : j.at("labels").items()) {
      std::size_t used = 0;
      const unsigned long id = std::stoul(key, &used);
      require(used == key.size(), errc::invalid_parameter, "bad vertex id '" + key + "'");
      by_vertex[id] = value.get<Label>();
    }
    std::vector<Label> values;
    for (const auto& [id, value] : by_vertex) {
      require(id == values.size(), errc::incomplete_labeling,
              "no label for vertex " + std::to_string(values.size()));
      values.push_back(value);
    }
    return Labeling(std::move(values), t);
  } catch (const json::exception& ex) {
    fail(errc::invalid_parameter, std::string("malformed labeling JSON: ") + ex.what());
  } catch (const std::logic_error&) {
    fail(errc::invalid_parameter, "labeling keys must be vertex ids");
  }
}

inline json to_json(const Bipartition& b) { return {{"A", b.side_a()}, {"B", b.side_b()}}; }

inline Bipartition bipartition_from_json(const Graph& g, const json& j) {
  try {
    return Bipartition::from_sides(g, j.at("A").get<std::vector<Vertex>>(),
                                   j.at("B").get<std::vector<Vertex>>());
  } catch (const json::exception& ex) {
    fail(errc::invalid_parameter, std::string("malformed bipartition JSON: ") + ex.what());
  }
}

inline json to_json(const DifferenceProfile& p) {
  return {{"modulus", p.modulus}, {"raw", p.raw}, {"reduced", p.reduced}};
}

inline json to_json(const VerificationReport& r) {
  json out = {{"kind", std::string(to_string(r.kind))},
              {"pass", r.pass},
              {"violations", r.violations},
              {"lambda", nullptr}};
  if (r.lambda) out["lambda"] = *r.lambda;
  if (r.kind == CheckKind::uniformly_ordered) out["rhoPlusPlus"] = r.rho_plus_plus;
  return out;
}

inline json to_json(const ShiftWindow& w) {
  auto intervals = [](const std::vector<Label>& members) {
    json out = json::array();
    for (const auto& [lo, hi] : as_intervals(members)) out.push_back({lo, hi});
    return out;
  };
  return {{"t", w.bound},
          {"forAB", w.for_ab},
          {"forBA", w.for_ba},
          {"forABIntervals", intervals(w.for_ab)},
          {"forBAIntervals", intervals(w.for_ba)}};
}

inline json to_json(const SignedDifferenceSequence& s) {
  return {{"pattern", std::string(to_string(s.pattern))}, {"a", s.magnitudes}, {"r", s.base},
          {"k", s.shift}};
}

inline SignedDifferenceSequence sequence_from_json(const json& j) {
  try {
    auto pattern = parse_sign_pattern(j.at("pattern").get<std::string>());
    require(pattern.has_value(), errc::invalid_parameter, "pattern must be pos-first or neg-first");
    SignedDifferenceSequence s;
    s.pattern = *pattern;
    s.magnitudes = j.at("a").get<std::vector<Label>>();
    s.base = j.at("r").get<Label>();
    s.shift = j.value("k", Label{0});
    return s;
  } catch (const json::exception& ex) {
    fail(errc::invalid_parameter, std::string("malformed sequence JSON: ") + ex.what());
  }
}

inline json to_json(const PositionPair& p) {
  return {{"xs", p.xs}, {"ys", p.ys}, {"r", p.base}};
}

inline json to_json(const StageParameters& s) {
  return {{"m", s.m},  {"n", s.n},  {"p", s.p},
          {"q", s.q},  {"r", s.r},  {"s", s.s},
          {"a", s.differences}, {"stated", s.stated}};
}

inline json to_json(const ConstructionResult& c) {
  json stages = json::array();
  for (const auto& s : c.stages) stages.push_back(to_json(s));
  json params = {{"family", std::string(to_string(c.family))},
                 {"m", c.ms},
                 {"n", c.ns},
                 {"p", c.p},
                 {"r", c.modulus}};
  json out = {{"graph", to_json(c.graph)},
              {"labeling", to_json(c.labeling)},
              {"bipartition", to_json(c.bipartition)},
              {"statedDifferences", c.stated_differences},
              {"parameters", params},
              {"stages", stages}};
  if (!c.auxiliary.empty()) out["auxiliary"] = c.auxiliary;
  return out;
}

inline json to_json(const BlockEdges& block) {
  json out = json::array();
  for (const auto& [a, b] : block) out.push_back({a, b});
  return out;
}

inline json to_json(const DecompositionCertificate& c, bool include_developed) {
  json base = json::array();
  for (const auto& b : c.base_blocks) base.push_back(to_json(b));
  json out = {{"v", c.v}, {"baseBlocks", base}, {"edgeCount", c.edge_count}, {"pass", c.pass}};
  if (c.violation) out["violation"] = *c.violation;
  if (include_developed) {
    json dev = json::array();
    for (const auto& b : c.developed) dev.push_back(to_json(b));
    out["developed"] = dev;
  }
  return out;
}

inline std::vector<BlockEdges> blocks_from_json(const json& j) {
  std::vector<BlockEdges> out;
  try {
    for (const auto& block : j) {
      BlockEdges b;
      for (const auto& e : block) b.emplace_back(e.at(0).get<Label>(), e.at(1).get<Label>());
      out.push_back(std::move(b));
    }
  } catch (const json::exception& ex) {
    fail(errc::invalid_parameter, std::string("malformed block list: ") + ex.what());
  }
  return out;
}

/// Two-space indent plus trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace rhodesign
