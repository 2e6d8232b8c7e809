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

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "graphspan/graph.hpp"
#include "graphspan/track.hpp"

namespace graphspan {

/// Joint position of the two players.
struct ProductState {
  int a = 0;  // first player
  int b = 0;  // second player

  friend bool operator==(const ProductState&, const ProductState&) = default;
};

namespace detail {

/// Calls fn(a2, b2) for every joint position reachable from (a, b) in one
/// step under the rule. A traditional step lets each player move or stay
/// but drops the nothing-happens case; an active step moves both; a lazy
/// step moves exactly one.
template <typename F>
void for_each_joint_move(const Graph& g, MovementRule rule, int a, int b,
                         F&& fn) {
  const auto& na = g.neighbors(a);
  const auto& nb = g.neighbors(b);
  switch (rule) {
    case MovementRule::traditional:
      for (int b2 : nb) fn(a, b2);
      for (int a2 : na) {
        fn(a2, b);
        for (int b2 : nb) fn(a2, b2);
      }
      return;
    case MovementRule::active:
      for (int a2 : na)
        for (int b2 : nb) fn(a2, b2);
      return;
    case MovementRule::lazy:
      for (int a2 : na) fn(a2, b);
      for (int b2 : nb) fn(a, b2);
      return;
  }
  throw std::invalid_argument("unknown movement rule");
}

}  // namespace detail

/// Graph on the joint positions whose pairwise distance is at least
/// min_distance, with an edge for every legal simultaneous step under the
/// rule. `states[i]` is the joint position behind vertex i of `graph`;
/// `state_index` inverts that map (-1 for positions below the distance
/// threshold).
struct ProductGraph {
  Graph graph;
  std::vector<ProductState> states;
  std::vector<int> index;  // a * base_n + b -> state index, or -1
  int base_n = 0;

  int state_index(int a, int b) const {
    return index[static_cast<std::size_t>(a) * static_cast<std::size_t>(base_n) +
                 static_cast<std::size_t>(b)];
  }
};

inline ProductGraph product_graph(const Graph& g, int min_distance,
                                  MovementRule rule) {
  if (min_distance < 0)
    throw PreconditionError("minimum distance must be >= 0");
  const int n = g.vertex_count();
  const auto& dist = g.distance_matrix();
  auto far_enough = [&](int a, int b) {
    int d = dist[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(b)];
    // Unreachable pairs are infinitely far apart.
    return d < 0 || d >= min_distance;
  };

  ProductGraph pg;
  pg.base_n = n;
  pg.index.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                  -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (far_enough(a, b)) {
        pg.index[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(b)] =
            static_cast<int>(pg.states.size());
        pg.states.push_back({a, b});
      }

  std::vector<std::pair<int, int>> edges;
  for (int s = 0; s < static_cast<int>(pg.states.size()); ++s) {
    const auto [a, b] = pg.states[static_cast<std::size_t>(s)];
    detail::for_each_joint_move(g, rule, a, b, [&](int a2, int b2) {
      int t = pg.state_index(a2, b2);
      if (t > s) edges.emplace_back(s, t);
    });
  }
  // Joint steps are reversible, so each edge is discovered from both ends.
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  pg.graph = Graph::from_edges(static_cast<int>(pg.states.size()), edges);
  return pg;
}

/// Connected components as vertex lists, ordered by smallest member;
/// within a component, vertices appear in BFS discovery order.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    queue.clear();
    queue.push_back(s);
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int v : g.neighbors(queue[head]))
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          queue.push_back(v);
        }
    comps.push_back(queue);
  }
  return comps;
}

/// Certificate naming a component of the product graph whose two
/// projections both cover every vertex of the base graph.
struct ComponentWitness {
  int component_id = 0;               // position among the components
  std::vector<ProductState> states;   // the component's joint positions
};

/// Certificate consisting of an explicit pair of tracks.
struct TrackPairWitness {
  Track f;
  Track g;
};

enum class SpanMethod { components, oracle };

inline std::string_view to_string(SpanMethod method) {
  switch (method) {
    case SpanMethod::components: return "components";
    case SpanMethod::oracle: return "oracle";
  }
  throw std::invalid_argument("unknown span method");
}

/// Result of a span computation: the largest distance the two players can
/// guarantee while both visit every vertex, plus a certificate.
struct SpanReport {
  MovementRule rule = MovementRule::traditional;
  int value = 0;
  SpanMethod method = SpanMethod::components;
  std::variant<ComponentWitness, TrackPairWitness> witness;
};

namespace detail {

inline void require_span_input(const Graph& g) {
  if (g.vertex_count() == 0)
    throw PreconditionError("span is undefined for the empty graph");
  if (!g.connected())
    throw PreconditionError("span is undefined for a disconnected graph");
}

/// First component of the distance-min_distance product whose projections
/// both cover the base vertex set, or nullopt.
inline std::optional<std::pair<int, std::vector<int>>> qualifying_component(
    const Graph& g, const ProductGraph& pg) {
  const int n = g.vertex_count();
  auto comps = connected_components(pg.graph);
  for (int id = 0; id < static_cast<int>(comps.size()); ++id) {
    const auto& comp = comps[static_cast<std::size_t>(id)];
    std::vector<char> cov_a(static_cast<std::size_t>(n), 0);
    std::vector<char> cov_b(static_cast<std::size_t>(n), 0);
    int count_a = 0, count_b = 0;
    for (int s : comp) {
      const auto [a, b] = pg.states[static_cast<std::size_t>(s)];
      if (!cov_a[static_cast<std::size_t>(a)]) {
        cov_a[static_cast<std::size_t>(a)] = 1;
        ++count_a;
      }
      if (!cov_b[static_cast<std::size_t>(b)]) {
        cov_b[static_cast<std::size_t>(b)] = 1;
        ++count_b;
      }
    }
    if (count_a == n && count_b == n) return std::make_pair(id, comp);
  }
  return std::nullopt;
}

}  // namespace detail

/// Exact span by the component characterization: the players can keep
/// distance >= k while both cover the graph exactly when some connected
/// component of the k-filtered product projects onto the whole vertex set
/// on both sides (walk the component along a spanning-tree tour to realize
/// the coverage, and read the two projections of any realizing pair as a
/// walk inside one component to see the converse). The search descends
/// from the diameter; distance 0 always qualifies on a connected graph.
inline SpanReport span_by_components(const Graph& g, MovementRule rule) {
  detail::require_span_input(g);
  for (int k = g.diameter(); k >= 0; --k) {
    ProductGraph pg = product_graph(g, k, rule);
    auto hit = detail::qualifying_component(g, pg);
    if (!hit) continue;
    ComponentWitness w;
    w.component_id = hit->first;
    w.states.reserve(hit->second.size());
    for (int s : hit->second)
      w.states.push_back(pg.states[static_cast<std::size_t>(s)]);
    return {rule, k, SpanMethod::components, std::move(w)};
  }
  throw std::logic_error("distance 0 must qualify on a connected graph");
}

/// Largest vertex count the exhaustive oracle accepts by default. The
/// oracle walks every (positions, coverage, coverage) triple, so memory
/// grows as n^2 * 4^n bits.
inline constexpr int kOracleVertexCap = 10;

/// Largest vertex count for which the oracle reconstructs witness tracks
/// (witnesses need a predecessor per search state).
inline constexpr int kOracleWitnessCap = 8;

namespace detail {

struct OracleOutcome {
  bool reachable = false;
  Track f;
  Track g;
};

/// Breadth-first search over (pair of positions, pair of coverage sets).
/// Start states are all pairs at distance >= min_distance; success is full
/// coverage on both sides. With want_witness, predecessors are recorded
/// and a realizing pair of tracks is reconstructed.
inline OracleOutcome oracle_search(const Graph& g, MovementRule rule,
                                   int min_distance, bool want_witness) {
  const int n = g.vertex_count();
  const auto& dist = g.distance_matrix();
  auto far_enough = [&](int a, int b) {
    int d = dist[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(b)];
    return d < 0 || d >= min_distance;
  };

  const std::uint32_t full = (n >= 32) ? ~std::uint32_t{0}
                                       : ((std::uint32_t{1} << n) - 1);
  const int cov_bits = n;
  const auto encode = [&](int a, int b, std::uint32_t ca, std::uint32_t cb) {
    return (static_cast<std::uint64_t>(a * n + b) << (2 * cov_bits)) |
           (static_cast<std::uint64_t>(ca) << cov_bits) |
           static_cast<std::uint64_t>(cb);
  };

  // Under the hard vertex cap of 12 every index fits in 32 bits, which
  // halves the queue's memory footprint.
  const std::size_t space = (static_cast<std::size_t>(n) *
                             static_cast<std::size_t>(n))
                            << (2 * cov_bits);
  std::vector<bool> visited(space, false);
  std::vector<std::uint32_t> parent;
  if (want_witness) parent.assign(space, ~std::uint32_t{0});

  std::vector<std::uint32_t> queue;
  std::uint32_t goal = ~std::uint32_t{0};

  auto offer = [&](std::uint64_t idx64, std::uint64_t from) {
    const auto idx = static_cast<std::uint32_t>(idx64);
    if (visited[static_cast<std::size_t>(idx)]) return false;
    visited[static_cast<std::size_t>(idx)] = true;
    if (want_witness) parent[static_cast<std::size_t>(idx)] =
        static_cast<std::uint32_t>(from);
    queue.push_back(idx);
    std::uint32_t ca = static_cast<std::uint32_t>(idx >> cov_bits) &
                       ((std::uint32_t{1} << cov_bits) - 1);
    std::uint32_t cb = static_cast<std::uint32_t>(idx) &
                       ((std::uint32_t{1} << cov_bits) - 1);
    if (ca == full && cb == full) {
      goal = idx;
      return true;
    }
    return false;
  };

  bool found = false;
  for (int a = 0; a < n && !found; ++a)
    for (int b = 0; b < n && !found; ++b)
      if (far_enough(a, b)) {
        std::uint64_t idx = encode(a, b, std::uint32_t{1} << a,
                                   std::uint32_t{1} << b);
        found = offer(idx, idx);
      }

  for (std::size_t head = 0; head < queue.size() && !found; ++head) {
    const std::uint32_t cur = queue[head];
    const int pos = static_cast<int>(cur >> (2 * cov_bits));
    const int a = pos / n, b = pos % n;
    const std::uint32_t ca = static_cast<std::uint32_t>(cur >> cov_bits) &
                             ((std::uint32_t{1} << cov_bits) - 1);
    const std::uint32_t cb = static_cast<std::uint32_t>(cur) &
                             ((std::uint32_t{1} << cov_bits) - 1);
    detail::for_each_joint_move(g, rule, a, b, [&](int a2, int b2) {
      if (found || !far_enough(a2, b2)) return;
      std::uint64_t next = encode(a2, b2, ca | (std::uint32_t{1} << a2),
                                  cb | (std::uint32_t{1} << b2));
      found = offer(next, cur);
    });
  }

  OracleOutcome out;
  out.reachable = found;
  if (found && want_witness) {
    std::vector<int> fa, fb;
    std::uint32_t idx = goal;
    while (true) {
      int pos = static_cast<int>(idx >> (2 * cov_bits));
      fa.push_back(pos / n);
      fb.push_back(pos % n);
      std::uint32_t prev = parent[static_cast<std::size_t>(idx)];
      if (prev == idx) break;
      idx = prev;
    }
    std::reverse(fa.begin(), fa.end());
    std::reverse(fb.begin(), fb.end());
    out.f = Track{std::move(fa)};
    out.g = Track{std::move(fb)};
  }
  return out;
}

inline void check_oracle_cap(const Graph& g, int vertex_cap) {
  constexpr int kHardCap = 12;  // the search-state encoding needs 2n+7 <= 32
  const int cap = std::min(vertex_cap, kHardCap);
  if (g.vertex_count() > cap)
    throw CapExceededError(
        "oracle supports at most " + std::to_string(cap) +
        " vertices, got " + std::to_string(g.vertex_count()) +
        "; use the components method for larger graphs");
}

}  // namespace detail

/// Exhaustive check: can the players keep pairwise distance >= min_distance
/// while both eventually cover every vertex? Independent of the component
/// characterization; intended as a cross-check on small graphs. Refuses
/// graphs with more than vertex_cap vertices.
inline bool span_oracle(const Graph& g, MovementRule rule, int min_distance,
                        int vertex_cap = kOracleVertexCap) {
  detail::require_span_input(g);
  detail::check_oracle_cap(g, vertex_cap);
  if (min_distance < 0)
    throw PreconditionError("minimum distance must be >= 0");
  return detail::oracle_search(g, rule, min_distance, false).reachable;
}

/// Largest feasible distance according to the exhaustive oracle, with a
/// witness. Up to kOracleWitnessCap vertices the witness is a reconstructed
/// track pair; beyond that it is a qualifying product component.
inline SpanReport span_oracle_value(const Graph& g, MovementRule rule,
                                    int vertex_cap = kOracleVertexCap) {
  detail::require_span_input(g);
  detail::check_oracle_cap(g, vertex_cap);
  const bool want_tracks = g.vertex_count() <= kOracleWitnessCap;
  for (int k = g.diameter(); k >= 0; --k) {
    auto outcome = detail::oracle_search(g, rule, k, want_tracks);
    if (!outcome.reachable) continue;
    SpanReport report;
    report.rule = rule;
    report.value = k;
    report.method = SpanMethod::oracle;
    if (want_tracks) {
      report.witness = TrackPairWitness{std::move(outcome.f),
                                        std::move(outcome.g)};
    } else {
      ProductGraph pg = product_graph(g, k, rule);
      auto hit = detail::qualifying_component(g, pg);
      if (!hit)
        throw std::logic_error(
            "oracle found a covering pair but no product component qualifies");
      ComponentWitness w;
      w.component_id = hit->first;
      for (int s : hit->second)
        w.states.push_back(pg.states[static_cast<std::size_t>(s)]);
      report.witness = std::move(w);
    }
    return report;
  }
  throw std::logic_error("distance 0 must qualify on a connected graph");
}

/// Explicit pair of tracks that keep distance >= min_distance and both
/// cover the graph: a spanning-tree tour of a qualifying product component,
/// cut off once both coverages are complete. Throws PreconditionError when
/// no component qualifies at this distance (min_distance above the span).
inline std::pair<Track, Track> witness_tracks(const Graph& g,
                                              MovementRule rule,
                                              int min_distance) {
  detail::require_span_input(g);
  ProductGraph pg = product_graph(g, min_distance, rule);
  auto hit = detail::qualifying_component(g, pg);
  if (!hit)
    throw PreconditionError(
        "no qualifying product component at distance " +
        std::to_string(min_distance) + "; the span is smaller");
  const auto& comp = hit->second;
  const int n = g.vertex_count();

  // BFS spanning tree of the component, children in discovery order.
  std::vector<std::vector<int>> children(pg.states.size());
  std::vector<char> seen(pg.states.size(), 0);
  std::vector<int> order;
  const int root = comp.front();
  seen[static_cast<std::size_t>(root)] = 1;
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int u = order[head];
    for (int v : pg.graph.neighbors(u))
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        children[static_cast<std::size_t>(u)].push_back(v);
        order.push_back(v);
      }
  }

  std::vector<char> cov_a(static_cast<std::size_t>(n), 0);
  std::vector<char> cov_b(static_cast<std::size_t>(n), 0);
  int remaining_a = n, remaining_b = n;
  std::vector<int> fa, fb;
  auto visit = [&](int s) {
    const auto [a, b] = pg.states[static_cast<std::size_t>(s)];
    fa.push_back(a);
    fb.push_back(b);
    if (!cov_a[static_cast<std::size_t>(a)]) {
      cov_a[static_cast<std::size_t>(a)] = 1;
      --remaining_a;
    }
    if (!cov_b[static_cast<std::size_t>(b)]) {
      cov_b[static_cast<std::size_t>(b)] = 1;
      --remaining_b;
    }
    return remaining_a == 0 && remaining_b == 0;
  };

  bool done = visit(root);
  struct Frame {
    int node;
    std::size_t next_child;
  };
  std::vector<Frame> stack{{root, 0}};
  while (!stack.empty() && !done) {
    Frame& fr = stack.back();
    const auto& kids = children[static_cast<std::size_t>(fr.node)];
    if (fr.next_child < kids.size()) {
      int c = kids[fr.next_child++];
      done = visit(c);
      if (!done) stack.push_back({c, 0});
    } else {
      stack.pop_back();
      if (!stack.empty()) done = visit(stack.back().node);
    }
  }
  if (!done)
    throw std::logic_error("component tour ended before covering the graph");
  return {Track{std::move(fa)}, Track{std::move(fb)}};
}

}  // namespace graphspan
