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

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphspan {

/// Malformed textual input (edge lists, graph specs, JSON documents).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation does not hold (parameter bounds,
/// disconnected input where connectivity is required, and similar).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An input exceeds a configured size cap.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are kept sorted. All-pairs shortest-path hop counts are
/// computed by BFS from every vertex on first use and cached; copies of a
/// Graph share the cache. Instances never change after construction and are
/// safe to read from multiple threads.
class Graph {
 public:
  Graph() : cache_(std::make_shared<DistanceCache>()) {}

  /// Builds a graph from an explicit edge list. Rejects out-of-range
  /// endpoints, self-loops and duplicate edges.
  static Graph from_edges(int vertex_count,
                          const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count < 0) throw PreconditionError("vertex count must be >= 0");
    Graph g;
    g.n_ = vertex_count;
    g.adj_.assign(static_cast<std::size_t>(vertex_count), {});
    std::vector<std::pair<int, int>> normalized;
    normalized.reserve(edges.size());
    for (const auto& [u, v] : edges) {
      if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
        throw PreconditionError("edge endpoint out of range: " +
                                std::to_string(u) + " " + std::to_string(v));
      if (u == v)
        throw PreconditionError("self-loop at vertex " + std::to_string(u));
      normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    if (std::adjacent_find(normalized.begin(), normalized.end()) !=
        normalized.end())
      throw PreconditionError("duplicate edge in input");
    for (const auto& [u, v] : normalized) {
      g.adj_[static_cast<std::size_t>(u)].push_back(v);
      g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    g.m_ = normalized.size();
    return g;
  }

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return m_; }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  /// Edges as (u, v) pairs with u < v, sorted.
  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[static_cast<std::size_t>(u)])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool connected() const {
    if (n_ <= 1) return true;
    const auto& d = distance_matrix();
    for (int v = 0; v < n_; ++v)
      if (d[static_cast<std::size_t>(v)] < 0) return false;
    return true;
  }

  /// Shortest-path hop count, or nullopt when v is unreachable from u.
  std::optional<int> distance(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    int d = distance_matrix()[static_cast<std::size_t>(u) *
                                  static_cast<std::size_t>(n_) +
                              static_cast<std::size_t>(v)];
    if (d < 0) return std::nullopt;
    return d;
  }

  /// Maximum pairwise distance. Requires a connected nonempty graph.
  int diameter() const {
    if (n_ == 0) throw PreconditionError("diameter of the empty graph");
    const auto& d = distance_matrix();
    int best = 0;
    for (int v : d) {
      if (v < 0) throw PreconditionError("diameter of a disconnected graph");
      best = std::max(best, v);
    }
    return best;
  }

  /// Flat row-major all-pairs matrix; -1 marks an unreachable pair.
  /// Computed on first call, then shared by all copies of this graph.
  const std::vector<int>& distance_matrix() const {
    std::call_once(cache_->once, [this] { cache_->d = bfs_all_pairs(); });
    return cache_->d;
  }

 private:
  struct DistanceCache {
    std::once_flag once;
    std::vector<int> d;
  };

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("vertex id out of range: " + std::to_string(v));
  }

  std::vector<int> bfs_all_pairs() const {
    std::vector<int> d(static_cast<std::size_t>(n_) *
                           static_cast<std::size_t>(n_),
                       -1);
    std::vector<int> queue(static_cast<std::size_t>(n_));
    for (int s = 0; s < n_; ++s) {
      int* row = d.data() + static_cast<std::size_t>(s) *
                                static_cast<std::size_t>(n_);
      row[s] = 0;
      std::size_t head = 0, tail = 0;
      queue[tail++] = s;
      while (head < tail) {
        int u = queue[head++];
        for (int v : adj_[static_cast<std::size_t>(u)]) {
          if (row[v] < 0) {
            row[v] = row[u] + 1;
            queue[tail++] = v;
          }
        }
      }
    }
    return d;
  }

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::shared_ptr<DistanceCache> cache_;
};

/// Cycle C_n, edges {v, v+1 mod n}. Requires n >= 3.
inline Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

/// Path P_n. n = 1 gives the one-vertex graph.
inline Graph path_graph(int n) {
  if (n < 1) throw PreconditionError("path needs at least 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

/// Complete graph K_n.
inline Graph complete_graph(int n) {
  if (n < 1) throw PreconditionError("complete graph needs at least 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

/// Parses the edge-list text format: first line "n m", then m lines "u v"
/// with 0-indexed endpoints. Blank lines are ignored.
inline Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1, m = -1;
  if (!(in >> n >> m)) throw ParseError("edge list: missing \"n m\" header");
  if (n < 0 || m < 0) throw ParseError("edge list: negative header values");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v))
      throw ParseError("edge list: expected " + std::to_string(m) +
                       " edges, got " + std::to_string(i));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  long long extra;
  if (in >> extra) throw ParseError("edge list: trailing tokens after edges");
  return Graph::from_edges(static_cast<int>(n), edges);
}

/// Writes the same format from_edge_list reads.
inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace graphspan
