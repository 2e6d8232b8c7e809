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

#include <string>
#include <vector>

#include "graphspan/graph.hpp"

namespace graphspan {

/// Vertex of a multilayered graph: base vertex 0..n-1 in layer 1..k.
struct LayeredVertexId {
  int base = 0;   // 0-indexed vertex of the base graph
  int layer = 1;  // 1-indexed layer

  friend bool operator==(const LayeredVertexId&,
                         const LayeredVertexId&) = default;
};

/// Bijection between LayeredVertexId and the flat ids 0..n*k-1 used by
/// Graph. Flat id (layer-1)*n + base, so each layer is a contiguous block.
class LayerLayout {
 public:
  LayerLayout(int base_count, int layer_count)
      : base_count_(base_count), layer_count_(layer_count) {
    if (base_count < 1) throw PreconditionError("layout needs >= 1 base vertex");
    if (layer_count < 1) throw PreconditionError("layout needs >= 1 layer");
  }

  int base_count() const { return base_count_; }
  int layer_count() const { return layer_count_; }
  int total() const { return base_count_ * layer_count_; }

  int flat(LayeredVertexId v) const {
    if (v.base < 0 || v.base >= base_count_)
      throw std::out_of_range("base vertex out of range: " +
                              std::to_string(v.base));
    if (v.layer < 1 || v.layer > layer_count_)
      throw std::out_of_range("layer out of range: " + std::to_string(v.layer));
    return (v.layer - 1) * base_count_ + v.base;
  }

  LayeredVertexId label(int flat_id) const {
    if (flat_id < 0 || flat_id >= total())
      throw std::out_of_range("flat id out of range: " +
                              std::to_string(flat_id));
    return {flat_id % base_count_, flat_id / base_count_ + 1};
  }

  friend bool operator==(const LayerLayout&, const LayerLayout&) = default;

 private:
  int base_count_;
  int layer_count_;
};

/// "i,j" rendering of a layered vertex (base i, layer j).
inline std::string to_string(LayeredVertexId v) {
  return std::to_string(v.base) + "," + std::to_string(v.layer);
}

/// Multilayered graph: k disjoint copies of the base graph, plus an edge
/// between the copies of each base vertex in consecutive layers. Vertices
/// follow the LayerLayout(base n, k) flat numbering.
inline Graph multilayer(const Graph& base, int layers) {
  if (base.vertex_count() < 1)
    throw PreconditionError("multilayer needs a nonempty base graph");
  if (layers < 2) throw PreconditionError("multilayer needs at least 2 layers");
  const int n = base.vertex_count();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(layers) * base.edge_count() +
                static_cast<std::size_t>(layers - 1) *
                    static_cast<std::size_t>(n));
  for (int j = 0; j < layers; ++j) {
    const int off = j * n;
    for (const auto& [u, v] : base.edge_list())
      edges.emplace_back(off + u, off + v);
  }
  for (int j = 0; j + 1 < layers; ++j)
    for (int a = 0; a < n; ++a) edges.emplace_back(j * n + a, (j + 1) * n + a);
  return Graph::from_edges(n * layers, edges);
}

/// Multilayered cycle MC(n, k) = multilayer of C_n with k layers.
/// Requires n >= 3 and k >= 2.
inline Graph multilayered_cycle(int n, int k) {
  return multilayer(cycle_graph(n), k);
}

}  // namespace graphspan
