// Copyright 2026 The graphspan Authors
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

#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "graphspan/graph.hpp"
#include "graphspan/layered.hpp"
#include "graphspan/span.hpp"
#include "graphspan/table.hpp"
#include "graphspan/track.hpp"

namespace graphspan {

using Json = nlohmann::ordered_json;

/// Graph together with the optional layer structure and the spec string it
/// was built from (empty when it did not come from a spec).
struct GraphDoc {
  Graph graph;
  std::optional<LayerLayout> layers;
  std::string spec;
};

/// Pair of tracks with everything needed to re-verify them.
struct TrackBundle {
  GraphDoc graph;
  MovementRule rule = MovementRule::traditional;
  Track f;
  Track g;
  std::optional<int> claimed_distance;
};

namespace detail {

inline int parse_int(std::string_view text, std::string_view what) {
  if (text.empty()) throw ParseError("empty " + std::string(what));
  int value = 0;
  std::size_t pos = 0;
  try {
    value = std::stoi(std::string(text), &pos);
  } catch (const std::exception&) {
    throw ParseError("invalid " + std::string(what) + ": \"" +
                     std::string(text) + "\"");
  }
  if (pos != text.size())
    throw ParseError("invalid " + std::string(what) + ": \"" +
                     std::string(text) + "\"");
  return value;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace detail

/// Inclusive integer range "A..B"; a single number stands for A..A.
inline std::pair<int, int> parse_range(std::string_view text) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    int v = detail::parse_int(text, "range bound");
    return {v, v};
  }
  int lo = detail::parse_int(text.substr(0, dots), "range bound");
  int hi = detail::parse_int(text.substr(dots + 2), "range bound");
  return {lo, hi};
}

/// Graph spec mini-language:
///   mc:N:K        multilayered cycle MC(N, K)
///   cycle:N       cycle C_N
///   path:N        path P_N
///   complete:N    complete graph K_N
///   file:PATH     edge-list file ("n m" header, then "u v" lines)
///   ml:PATH:K     K-layer multilayered graph over an edge-list file
inline GraphDoc parse_graph_spec(const std::string& spec) {
  auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  GraphDoc doc;
  doc.spec = spec;
  if (head == "mc") {
    if (colon == std::string::npos) throw ParseError("mc spec needs mc:N:K");
    auto rest = spec.substr(colon + 1);
    auto second = rest.find(':');
    if (second == std::string::npos) throw ParseError("mc spec needs mc:N:K");
    int n = detail::parse_int(rest.substr(0, second), "cycle length");
    int k = detail::parse_int(rest.substr(second + 1), "layer count");
    doc.graph = multilayered_cycle(n, k);
    doc.layers = LayerLayout(n, k);
    return doc;
  }
  if (head == "cycle" || head == "path" || head == "complete") {
    if (colon == std::string::npos)
      throw ParseError(head + " spec needs " + head + ":N");
    int n = detail::parse_int(spec.substr(colon + 1), "vertex count");
    doc.graph = head == "cycle" ? cycle_graph(n)
                : head == "path" ? path_graph(n)
                                 : complete_graph(n);
    return doc;
  }
  if (head == "file") {
    if (colon == std::string::npos) throw ParseError("file spec needs file:PATH");
    doc.graph = from_edge_list(detail::read_file(spec.substr(colon + 1)));
    return doc;
  }
  if (head == "ml") {
    if (colon == std::string::npos) throw ParseError("ml spec needs ml:PATH:K");
    auto rest = spec.substr(colon + 1);
    auto last = rest.rfind(':');  // paths may contain colons
    if (last == std::string::npos) throw ParseError("ml spec needs ml:PATH:K");
    int k = detail::parse_int(rest.substr(last + 1), "layer count");
    Graph base = from_edge_list(detail::read_file(rest.substr(0, last)));
    doc.graph = multilayer(base, k);
    doc.layers = LayerLayout(base.vertex_count(), k);
    return doc;
  }
  throw ParseError("unknown graph spec: \"" + spec +
                   "\" (expected mc:, cycle:, path:, complete:, file: or ml:)");
}

inline Json graph_to_json(const GraphDoc& doc, bool include_edges = true) {
  Json j = Json::object();
  if (!doc.spec.empty()) j["spec"] = doc.spec;
  j["vertices"] = doc.graph.vertex_count();
  if (include_edges) {
    Json edges = Json::array();
    for (const auto& [u, v] : doc.graph.edge_list())
      edges.push_back(Json::array({u, v}));
    j["edges"] = std::move(edges);
  } else {
    j["edge_count"] = doc.graph.edge_count();
  }
  if (doc.layers)
    j["layers"] = Json{{"base", doc.layers->base_count()},
                       {"count", doc.layers->layer_count()}};
  return j;
}

inline GraphDoc graph_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("graph document must be an object");
  GraphDoc doc;
  if (j.contains("spec")) doc.spec = j.at("spec").get<std::string>();
  if (!j.contains("vertices") || !j.contains("edges"))
    throw ParseError("graph document needs \"vertices\" and \"edges\"");
  int n = j.at("vertices").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw ParseError("each edge must be a [u, v] pair");
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  try {
    doc.graph = Graph::from_edges(n, edges);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("graph document: ") + e.what());
  }
  if (j.contains("layers")) {
    const auto& lay = j.at("layers");
    doc.layers = LayerLayout(lay.at("base").get<int>(),
                             lay.at("count").get<int>());
    if (doc.layers->total() != n)
      throw ParseError("layers do not match the vertex count");
  }
  return doc;
}

inline Json bundle_to_json(const TrackBundle& b) {
  Json j = Json::object();
  j["format"] = "graphspan-tracks";
  j["version"] = 1;
  j["graph"] = graph_to_json(b.graph, /*include_edges=*/true);
  j["rule"] = std::string(to_string(b.rule));
  j["tracks"] = Json::array({b.f.steps, b.g.steps});
  if (b.claimed_distance) j["claimed_distance"] = *b.claimed_distance;
  j["length"] = b.f.length();
  if (b.graph.layers) {
    auto render = [&](const Track& t) {
      Json labels = Json::array();
      for (int v : t.steps)
        labels.push_back(to_string(b.graph.layers->label(v)));
      return labels;
    };
    j["labels"] = Json::array({render(b.f), render(b.g)});
  }
  return j;
}

inline TrackBundle bundle_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("track bundle must be an object");
  if (j.contains("format") &&
      j.at("format").get<std::string>() != "graphspan-tracks")
    throw ParseError("not a graphspan-tracks document");
  TrackBundle b;
  if (!j.contains("graph") || !j.contains("rule") || !j.contains("tracks"))
    throw ParseError("track bundle needs \"graph\", \"rule\" and \"tracks\"");
  b.graph = graph_from_json(j.at("graph"));
  b.rule = parse_movement_rule(j.at("rule").get<std::string>());
  const auto& tracks = j.at("tracks");
  if (!tracks.is_array() || tracks.size() != 2)
    throw ParseError("\"tracks\" must hold exactly 2 tracks");
  b.f = Track{tracks.at(0).get<std::vector<int>>()};
  b.g = Track{tracks.at(1).get<std::vector<int>>()};
  if (j.contains("claimed_distance"))
    b.claimed_distance = j.at("claimed_distance").get<int>();
  return b;
}

inline Json span_report_to_json(const SpanReport& report) {
  Json j = Json::object();
  j["rule"] = std::string(to_string(report.rule));
  j["span"] = std::string(span_name(report.rule));
  j["value"] = report.value;
  j["method"] = std::string(to_string(report.method));
  if (const auto* cw = std::get_if<ComponentWitness>(&report.witness)) {
    Json states = Json::array();
    for (const auto& s : cw->states)
      states.push_back(Json::array({s.a, s.b}));
    j["witness"] = Json{{"type", "component"},
                        {"component_id", cw->component_id},
                        {"states", std::move(states)}};
  } else {
    const auto& tw = std::get<TrackPairWitness>(report.witness);
    j["witness"] = Json{{"type", "tracks"},
                        {"tracks", Json::array({tw.f.steps, tw.g.steps})}};
  }
  return j;
}

/// CSV with the fixed header "n,k,strong,direct,cartesian".
inline std::string table_to_csv(const std::vector<McTableRow>& rows) {
  std::ostringstream out;
  out << "n,k,strong,direct,cartesian\n";
  for (const auto& r : rows)
    out << r.n << ',' << r.k << ',' << r.strong_span << ',' << r.direct_span
        << ',' << r.cartesian_span << '\n';
  return out.str();
}

/// Per-step trace of a pair of tracks over a multilayered cycle:
/// "step,f_step,g_step,distance". Row 0 shows the starting distance; row i
/// classifies each player's move i and the distance after it.
inline std::string trace_to_csv(const Graph& g, const LayerLayout& layout,
                                const Track& f, const Track& t) {
  if (f.length() != t.length())
    throw PreconditionError("trace needs equal-length tracks");
  if (f.empty()) throw PreconditionError("trace of empty tracks");
  std::ostringstream out;
  out << "step,f_step,g_step,distance\n";
  auto dist = [&](std::size_t i) {
    auto d = g.distance(f[i], t[i]);
    if (!d) throw PreconditionError("trace positions are unreachable");
    return *d;
  };
  out << "0,-,-," << dist(0) << '\n';
  for (std::size_t i = 0; i + 1 < f.length(); ++i) {
    StepKind fk =
        classify_step(layout, layout.label(f[i]), layout.label(f[i + 1]));
    StepKind gk =
        classify_step(layout, layout.label(t[i]), layout.label(t[i + 1]));
    out << (i + 1) << ',' << to_string(fk) << ',' << to_string(gk) << ','
        << dist(i + 1) << '\n';
  }
  return out.str();
}

}  // namespace graphspan
