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

#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "graphspan/graph.hpp"
#include "graphspan/layered.hpp"

namespace graphspan {

/// Finite walk, stored as the visited vertex at positions 1..length().
struct Track {
  std::vector<int> steps;

  Track() = default;
  Track(std::vector<int> s) : steps(std::move(s)) {}  // NOLINT(google-explicit-constructor)
  Track(std::initializer_list<int> s) : steps(s) {}

  std::size_t length() const { return steps.size(); }
  bool empty() const { return steps.empty(); }
  int operator[](std::size_t i) const { return steps[i]; }

  friend bool operator==(const Track&, const Track&) = default;
};

/// How the two players are allowed to move in each time step.
enum class MovementRule {
  traditional,  // each player moves along an edge or stays
  active,       // both players move along an edge every step
  lazy,         // exactly one player moves along an edge every step
};

inline constexpr std::array<MovementRule, 3> all_movement_rules = {
    MovementRule::traditional, MovementRule::active, MovementRule::lazy};

inline std::string_view to_string(MovementRule rule) {
  switch (rule) {
    case MovementRule::traditional: return "traditional";
    case MovementRule::active: return "active";
    case MovementRule::lazy: return "lazy";
  }
  throw std::invalid_argument("unknown movement rule");
}

/// Span family name associated with a movement rule (the product graph
/// whose walks realize pairs of such movements).
inline std::string_view span_name(MovementRule rule) {
  switch (rule) {
    case MovementRule::traditional: return "strong";
    case MovementRule::active: return "direct";
    case MovementRule::lazy: return "cartesian";
  }
  throw std::invalid_argument("unknown movement rule");
}

inline MovementRule parse_movement_rule(std::string_view text) {
  if (text == "traditional") return MovementRule::traditional;
  if (text == "active") return MovementRule::active;
  if (text == "lazy") return MovementRule::lazy;
  throw ParseError("unknown movement rule: \"" + std::string(text) +
                   "\" (expected traditional, active or lazy)");
}

/// Direction of a single step in a multilayered cycle.
enum class StepKind { still, up, down, clockwise, counter_clockwise };

inline std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::still: return "still";
    case StepKind::up: return "up";
    case StepKind::down: return "down";
    case StepKind::clockwise: return "clockwise";
    case StepKind::counter_clockwise: return "counter-clockwise";
  }
  throw std::invalid_argument("unknown step kind");
}

/// Everything a track validator can object to. `none` means the track is
/// accepted.
enum class TrackFault {
  none,
  empty_track,           // tracks must have length >= 1
  vertex_out_of_range,   // position holds an id outside the graph
  non_edge_step,         // consecutive vertices differ but share no edge
  still_step,            // a stay where the rule requires a move
  mover_mismatch,        // opposite pair: not exactly one player moved
  not_surjective,        // some vertex is never visited
};

inline std::string_view to_string(TrackFault fault) {
  switch (fault) {
    case TrackFault::none: return "ok";
    case TrackFault::empty_track: return "track is empty";
    case TrackFault::vertex_out_of_range: return "vertex id out of range";
    case TrackFault::non_edge_step: return "step is not along an edge";
    case TrackFault::still_step: return "player stays where a move is required";
    case TrackFault::mover_mismatch: return "not exactly one player moves";
    case TrackFault::not_surjective: return "track misses some vertex";
  }
  throw std::invalid_argument("unknown track fault");
}

/// Whether validation demands that every vertex of the graph is visited.
/// `walk_only` checks just the step legality.
enum class Coverage { surjective, walk_only };

/// Validator verdict. `step` and `track` locate the first offending step
/// (1-indexed) and which track it occurred in (0 = first, 1 = second); both
/// are 0 when not applicable.
struct TrackCheck {
  TrackFault fault = TrackFault::none;
  std::size_t step = 0;
  int track = 0;

  explicit operator bool() const { return fault == TrackFault::none; }

  std::string message() const {
    if (fault == TrackFault::none) return "ok";
    std::string out{to_string(fault)};
    if (step > 0) out += " (step " + std::to_string(step) + ")";
    if (track > 0) out += " [second track]";
    return out;
  }
};

namespace detail {

inline TrackCheck check_positions(const Graph& g, const Track& t,
                                  int which_track) {
  if (t.empty()) return {TrackFault::empty_track, 0, which_track};
  for (std::size_t i = 0; i < t.length(); ++i)
    if (t[i] < 0 || t[i] >= g.vertex_count())
      return {TrackFault::vertex_out_of_range, i + 1, which_track};
  return {};
}

inline TrackCheck check_surjective(const Graph& g, const Track& t,
                                   int which_track) {
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : t.steps) seen[static_cast<std::size_t>(v)] = 1;
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (!seen[v]) return {TrackFault::not_surjective, 0, which_track};
  return {};
}

}  // namespace detail

/// Walk that moves along an edge at every step (no stays), optionally
/// required to visit every vertex.
inline TrackCheck validate_ltrack(const Graph& g, const Track& t,
                                  Coverage coverage = Coverage::surjective,
                                  int which_track = 0) {
  if (auto c = detail::check_positions(g, t, which_track); !c) return c;
  for (std::size_t i = 0; i + 1 < t.length(); ++i) {
    if (t[i] == t[i + 1]) return {TrackFault::still_step, i + 1, which_track};
    if (!g.has_edge(t[i], t[i + 1]))
      return {TrackFault::non_edge_step, i + 1, which_track};
  }
  if (coverage == Coverage::surjective)
    if (auto c = detail::check_surjective(g, t, which_track); !c) return c;
  return {};
}

/// Walk that either moves along an edge or stays at every step.
inline TrackCheck validate_lazy_track(const Graph& g, const Track& t,
                                      Coverage coverage = Coverage::surjective,
                                      int which_track = 0) {
  if (auto c = detail::check_positions(g, t, which_track); !c) return c;
  for (std::size_t i = 0; i + 1 < t.length(); ++i)
    if (t[i] != t[i + 1] && !g.has_edge(t[i], t[i + 1]))
      return {TrackFault::non_edge_step, i + 1, which_track};
  if (coverage == Coverage::surjective)
    if (auto c = detail::check_surjective(g, t, which_track); !c) return c;
  return {};
}

/// Pair of equal-length lazy tracks where exactly one of the two moves at
/// every step. Throws PreconditionError when the lengths differ.
inline TrackCheck validate_opposite(const Graph& g, const Track& f,
                                    const Track& t,
                                    Coverage coverage = Coverage::surjective) {
  if (f.length() != t.length())
    throw PreconditionError("opposite tracks must have equal length: " +
                            std::to_string(f.length()) + " vs " +
                            std::to_string(t.length()));
  if (auto c = validate_lazy_track(g, f, Coverage::walk_only, 0); !c) return c;
  if (auto c = validate_lazy_track(g, t, Coverage::walk_only, 1); !c) return c;
  for (std::size_t i = 0; i + 1 < f.length(); ++i) {
    bool f_moves = f[i] != f[i + 1];
    bool t_moves = t[i] != t[i + 1];
    if (f_moves == t_moves) return {TrackFault::mover_mismatch, i + 1, 0};
  }
  if (coverage == Coverage::surjective) {
    if (auto c = detail::check_surjective(g, f, 0); !c) return c;
    if (auto c = detail::check_surjective(g, t, 1); !c) return c;
  }
  return {};
}

/// Smallest pointwise distance between two equal-length tracks:
/// min over positions i of d(f(i), g(i)). Throws PreconditionError on a
/// length mismatch, empty tracks, or an unreachable pair of positions.
inline int track_distance(const Graph& g, const Track& f, const Track& t) {
  if (f.length() != t.length())
    throw PreconditionError("track distance needs equal-length tracks");
  if (f.empty()) throw PreconditionError("track distance of empty tracks");
  int best = -1;
  for (std::size_t i = 0; i < f.length(); ++i) {
    auto d = g.distance(f[i], t[i]);
    if (!d)
      throw PreconditionError("track positions in different components at step " +
                              std::to_string(i + 1));
    if (best < 0 || *d < best) best = *d;
  }
  return best;
}

/// Direction of one step between layered vertices of a multilayered cycle:
/// still, up/down one layer, or clockwise/counter-clockwise around the
/// cycle (counter-clockwise increments the base vertex mod n). Throws
/// PreconditionError when the two vertices are not equal or adjacent.
/// With n = 3 every horizontal move reads as counter-clockwise.
inline StepKind classify_step(const LayerLayout& layout, LayeredVertexId from,
                              LayeredVertexId to) {
  const int n = layout.base_count();
  layout.flat(from);  // bounds checks
  layout.flat(to);
  if (from == to) return StepKind::still;
  if (from.base == to.base) {
    if (to.layer == from.layer + 1) return StepKind::up;
    if (to.layer == from.layer - 1) return StepKind::down;
    throw PreconditionError("layer jump is not a single step");
  }
  if (from.layer != to.layer)
    throw PreconditionError("diagonal move is not a single step");
  const int diff = ((to.base - from.base) % n + n) % n;
  if (diff == 1) return StepKind::counter_clockwise;
  if (diff == n - 1) return StepKind::clockwise;
  throw PreconditionError("base move is not along a cycle edge");
}

/// Step kinds of a track over a multilayered cycle, one per step
/// (length() - 1 entries).
inline std::vector<StepKind> classify_track(const LayerLayout& layout,
                                            const Track& t) {
  std::vector<StepKind> kinds;
  if (t.empty()) return kinds;
  kinds.reserve(t.length() - 1);
  for (std::size_t i = 0; i + 1 < t.length(); ++i)
    kinds.push_back(
        classify_step(layout, layout.label(t[i]), layout.label(t[i + 1])));
  return kinds;
}

}  // namespace graphspan
