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

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "graphspan/io.hpp"
#include "graphspan/track.hpp"

namespace graphspan {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  std::optional<int> distance;  // smallest pointwise distance, when computed

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Re-checks everything a track bundle asserts: rule-specific validity of
/// both tracks (with coverage), the smallest pointwise distance against the
/// claimed one, and, on layered graphs, the meeting properties of the two
/// layer sequences.
inline VerifyReport verify_bundle(const TrackBundle& b) {
  VerifyReport report;
  const Graph& g = b.graph.graph;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
    return ok;
  };

  bool lengths_ok =
      add("tracks have equal length", b.f.length() == b.g.length(),
          std::to_string(b.f.length()) + " and " + std::to_string(b.g.length()));

  bool valid = lengths_ok;
  switch (b.rule) {
    case MovementRule::traditional: {
      auto cf = validate_lazy_track(g, b.f);
      valid = add("first track moves or stays along edges and covers every "
                  "vertex",
                  bool(cf), cf.message()) && valid;
      auto cg = validate_lazy_track(g, b.g, Coverage::surjective, 1);
      valid = add("second track moves or stays along edges and covers every "
                  "vertex",
                  bool(cg), cg.message()) && valid;
      break;
    }
    case MovementRule::active: {
      auto cf = validate_ltrack(g, b.f);
      valid = add("first track moves along an edge every step and covers "
                  "every vertex",
                  bool(cf), cf.message()) && valid;
      auto cg = validate_ltrack(g, b.g, Coverage::surjective, 1);
      valid = add("second track moves along an edge every step and covers "
                  "every vertex",
                  bool(cg), cg.message()) && valid;
      break;
    }
    case MovementRule::lazy: {
      if (lengths_ok) {
        auto c = validate_opposite(g, b.f, b.g);
        valid = add("exactly one player moves each step and both tracks "
                    "cover every vertex",
                    bool(c), c.message()) && valid;
      } else {
        add("exactly one player moves each step and both tracks cover every "
            "vertex",
            false, "skipped: lengths differ");
        valid = false;
      }
      break;
    }
  }

  if (lengths_ok && !b.f.empty()) {
    bool positions_ok = true;
    for (int v : b.f.steps)
      positions_ok = positions_ok && v >= 0 && v < g.vertex_count();
    for (int v : b.g.steps)
      positions_ok = positions_ok && v >= 0 && v < g.vertex_count();
    if (positions_ok) {
      int d = track_distance(g, b.f, b.g);
      report.distance = d;
      if (b.claimed_distance)
        add("smallest pointwise distance meets the claim", d >= *b.claimed_distance,
            "computed " + std::to_string(d) + ", claimed " +
                std::to_string(*b.claimed_distance));
      else
        add("smallest pointwise distance computed", true, std::to_string(d));
    }
  }

  if (b.graph.layers && valid && lengths_ok) {
    const LayerLayout& lay = *b.graph.layers;
    auto layer_of = [&](int v) { return lay.label(v).layer; };
    if (b.rule == MovementRule::lazy) {
      std::size_t where = 0;
      for (std::size_t i = 0; i < b.f.length(); ++i)
        if (layer_of(b.f[i]) == layer_of(b.g[i])) {
          where = i + 1;
          break;
        }
      add("players share a layer at some position", where != 0,
          where ? "first at position " + std::to_string(where)
                : "never");
    }
    std::size_t near = 0;
    for (std::size_t i = 0; i < b.f.length(); ++i)
      if (std::abs(layer_of(b.f[i]) - layer_of(b.g[i])) <= 1) {
        near = i + 1;
        break;
      }
    add("players are within one layer of each other at some position",
        near != 0, near ? "first at position " + std::to_string(near)
                        : "never");
  }

  return report;
}

inline std::string render(const VerifyReport& report) {
  std::string out;
  for (const auto& c : report.checks) {
    out += c.passed ? "PASS " : "FAIL ";
    out += c.name;
    if (!c.detail.empty()) {
      out += ": ";
      out += c.detail;
    }
    out += '\n';
  }
  out += report.passed() ? "verification passed\n" : "verification FAILED\n";
  return out;
}

}  // namespace graphspan
