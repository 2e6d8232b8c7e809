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

// Spans of the Morabaraba board. Three concentric rings of eight positions,
// with spokes between matching positions of neighboring rings, form the
// multilayered cycle MC(8, 3): 24 vertices, 40 edges.

#include <iostream>

#include "graphspan/graphspan.hpp"

int main() {
  using namespace graphspan;

  const int n = 8, k = 3;
  const Graph board = multilayered_cycle(n, k);
  const LayerLayout layout(n, k);

  std::cout << "Morabaraba board as MC(" << n << ", " << k << "): "
            << board.vertex_count() << " vertices, " << board.edge_count()
            << " edges, diameter " << board.diameter() << "\n\n";

  std::cout << "How far apart can two players stay while each walks the "
               "whole board?\n";
  for (MovementRule rule : all_movement_rules) {
    SpanReport report = span_by_components(board, rule);
    const auto& witness = std::get<ComponentWitness>(report.witness);
    std::cout << "  " << span_name(rule) << " span (" << to_string(rule)
              << " movement): " << report.value << "  [component of "
              << witness.states.size() << " joint positions]\n";
  }

  std::cout << "\nAn optimal pair of lazy walks (exactly one player moves "
               "per turn):\n";
  auto [f, g] = cartesian_strategy(n, k);
  std::cout << "  length " << f.length() << ", distance never below "
            << track_distance(board, f, g) << "\n";
  std::cout << "  first positions (ring position, ring):\n";
  for (std::size_t i = 0; i < 10; ++i)
    std::cout << "    t=" << i << "  f=(" << to_string(layout.label(f[i]))
              << ")  g=(" << to_string(layout.label(g[i])) << ")\n";
  std::cout << "    ...\n";
  return 0;
}
