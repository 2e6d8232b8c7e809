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

#include <algorithm>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "graphspan/layered.hpp"
#include "graphspan/span.hpp"

using namespace graphspan;

namespace {

// All connected graphs on n labeled vertices.
std::vector<Graph> connected_graphs(int n) {
  std::vector<std::pair<int, int>> all_pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
  std::vector<Graph> out;
  for (unsigned mask = 0; mask < (1u << all_pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < all_pairs.size(); ++i)
      if (mask & (1u << i)) edges.push_back(all_pairs[i]);
    Graph g = Graph::from_edges(n, edges);
    if (g.connected()) out.push_back(std::move(g));
  }
  return out;
}

void check_witness(const Graph& g, const SpanReport& report) {
  if (const auto* tracks = std::get_if<TrackPairWitness>(&report.witness)) {
    switch (report.rule) {
      case MovementRule::traditional:
        REQUIRE(bool(validate_lazy_track(g, tracks->f)));
        REQUIRE(bool(validate_lazy_track(g, tracks->g)));
        break;
      case MovementRule::active:
        REQUIRE(bool(validate_ltrack(g, tracks->f)));
        REQUIRE(bool(validate_ltrack(g, tracks->g)));
        break;
      case MovementRule::lazy:
        REQUIRE(bool(validate_opposite(g, tracks->f, tracks->g)));
        break;
    }
    CHECK(track_distance(g, tracks->f, tracks->g) == report.value);
    return;
  }
  const auto& cw = std::get<ComponentWitness>(report.witness);
  const int n = g.vertex_count();
  std::vector<char> cov_a(n, 0), cov_b(n, 0);
  for (const auto& s : cw.states) {
    REQUIRE(g.distance(s.a, s.b).value_or(report.value) >= report.value);
    cov_a[s.a] = 1;
    cov_b[s.b] = 1;
  }
  CHECK(std::count(cov_a.begin(), cov_a.end(), 1) == n);
  CHECK(std::count(cov_b.begin(), cov_b.end(), 1) == n);
  // The witness must be exactly the claimed component of the product.
  ProductGraph pg = product_graph(g, report.value, report.rule);
  auto comps = connected_components(pg.graph);
  REQUIRE(cw.component_id < static_cast<int>(comps.size()));
  const auto& comp = comps[cw.component_id];
  REQUIRE(comp.size() == cw.states.size());
  for (std::size_t i = 0; i < comp.size(); ++i)
    CHECK(pg.states[comp[i]] == cw.states[i]);
}

}  // namespace

TEST_CASE("oracle values on small graphs") {
  struct Case {
    Graph g;
    int traditional, active, lazy;
  };
  std::vector<Case> cases;
  cases.push_back({path_graph(1), 0, 0, 0});
  cases.push_back({path_graph(2), 1, 1, 0});
  cases.push_back({path_graph(3), 1, 1, 0});
  cases.push_back({cycle_graph(3), 1, 1, 1});
  cases.push_back({cycle_graph(4), 2, 2, 1});
  cases.push_back({cycle_graph(5), 2, 2, 2});
  cases.push_back({cycle_graph(6), 3, 3, 2});
  cases.push_back({cycle_graph(7), 3, 3, 3});
  cases.push_back({complete_graph(4), 1, 1, 1});

  for (const auto& c : cases) {
    CAPTURE(c.g.vertex_count(), c.g.edge_count());
    auto t = span_oracle_value(c.g, MovementRule::traditional);
    auto a = span_oracle_value(c.g, MovementRule::active);
    auto l = span_oracle_value(c.g, MovementRule::lazy);
    CHECK(t.value == c.traditional);
    CHECK(a.value == c.active);
    CHECK(l.value == c.lazy);
    CHECK(t.method == SpanMethod::oracle);
    check_witness(c.g, t);
    check_witness(c.g, a);
    check_witness(c.g, l);
  }
}

TEST_CASE("oracle feasibility is monotone in the distance") {
  Graph c6 = cycle_graph(6);
  for (MovementRule rule : all_movement_rules) {
    int value = span_oracle_value(c6, rule).value;
    for (int k = 0; k <= c6.diameter() + 1; ++k)
      CHECK(span_oracle(c6, rule, k) == (k <= value));
  }
}

TEST_CASE("oracle rejects oversized graphs and bad distances") {
  CHECK_THROWS_AS(span_oracle(complete_graph(11), MovementRule::lazy, 0),
                  CapExceededError);
  CHECK_THROWS_AS(span_oracle_value(complete_graph(11), MovementRule::lazy),
                  CapExceededError);
  CHECK_THROWS_AS(span_oracle(cycle_graph(4), MovementRule::lazy, -1),
                  PreconditionError);
  // A raised cap still hits the hard limit of the state encoding.
  CHECK_THROWS_AS(span_oracle(complete_graph(13), MovementRule::lazy, 0, 20),
                  CapExceededError);
}

TEST_CASE("span operations reject degenerate inputs") {
  Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}});
  for (MovementRule rule : all_movement_rules) {
    CHECK_THROWS_AS(span_by_components(split, rule), PreconditionError);
    CHECK_THROWS_AS(span_oracle(split, rule, 1), PreconditionError);
    CHECK_THROWS_AS(span_by_components(Graph(), rule), PreconditionError);
    CHECK_THROWS_AS(witness_tracks(split, rule, 0), PreconditionError);
  }
}

TEST_CASE("component search matches the oracle values") {
  std::vector<Graph> graphs;
  graphs.push_back(path_graph(1));
  graphs.push_back(path_graph(2));
  graphs.push_back(path_graph(5));
  graphs.push_back(cycle_graph(3));
  graphs.push_back(cycle_graph(4));
  graphs.push_back(cycle_graph(5));
  graphs.push_back(cycle_graph(6));
  graphs.push_back(cycle_graph(7));
  graphs.push_back(complete_graph(4));
  graphs.push_back(multilayered_cycle(3, 2));
  graphs.push_back(multilayered_cycle(4, 2));

  for (const auto& g : graphs)
    for (MovementRule rule : all_movement_rules) {
      CAPTURE(g.vertex_count(), g.edge_count(), to_string(rule));
      SpanReport by_comp = span_by_components(g, rule);
      SpanReport by_oracle = span_oracle_value(g, rule);
      CHECK(by_comp.value == by_oracle.value);
      CHECK(by_comp.method == SpanMethod::components);
      check_witness(g, by_comp);
      check_witness(g, by_oracle);
    }
}

TEST_CASE("agreement on every connected graph with up to 4 vertices") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : connected_graphs(n))
      for (MovementRule rule : all_movement_rules) {
        CAPTURE(n, g.edge_list(), to_string(rule));
        CHECK(span_by_components(g, rule).value ==
              span_oracle_value(g, rule).value);
      }
}

TEST_CASE("rule orderings on small connected graphs") {
  // Active and lazy pairs are special cases of traditional pairs, so the
  // traditional span dominates both.
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : connected_graphs(n)) {
      int t = span_by_components(g, MovementRule::traditional).value;
      int a = span_by_components(g, MovementRule::active).value;
      int l = span_by_components(g, MovementRule::lazy).value;
      CHECK(l <= t);
      CHECK(a <= t);
    }
}

TEST_CASE("multilayered cycle span values") {
  struct Row {
    int n, k, strong, direct, cartesian;
  };
  for (const auto& row : std::vector<Row>{{3, 2, 2, 2, 1},
                                          {4, 2, 3, 3, 2},
                                          {6, 3, 4, 4, 3},
                                          {8, 3, 5, 5, 4}}) {
    Graph g = multilayered_cycle(row.n, row.k);
    CAPTURE(row.n, row.k);
    CHECK(span_by_components(g, MovementRule::traditional).value == row.strong);
    CHECK(span_by_components(g, MovementRule::active).value == row.direct);
    CHECK(span_by_components(g, MovementRule::lazy).value == row.cartesian);
  }
}

TEST_CASE("feasibility fails just above the span on layered examples") {
  CHECK_FALSE(span_oracle(multilayered_cycle(3, 2), MovementRule::lazy, 2));
  CHECK(span_oracle(multilayered_cycle(3, 2), MovementRule::lazy, 1));
  CHECK_FALSE(
      span_oracle(multilayered_cycle(4, 2), MovementRule::traditional, 4));
  CHECK(span_oracle(multilayered_cycle(4, 2), MovementRule::traditional, 3));
}

TEST_CASE("product graph structure") {
  SECTION("active product of a 4-cycle at distance 2 is a 4-cycle on "
          "antipodal pairs") {
    Graph c4 = cycle_graph(4);
    ProductGraph pg = product_graph(c4, 2, MovementRule::active);
    REQUIRE(pg.states.size() == 4);
    for (const auto& s : pg.states) CHECK(c4.distance(s.a, s.b) == 2);
    for (int i = 0; i < 4; ++i) CHECK(pg.graph.degree(i) == 2);
    CHECK(connected_components(pg.graph).size() == 1);
  }
  SECTION("swapping the players is an automorphism of the product") {
    Graph g = multilayered_cycle(4, 2);
    for (MovementRule rule : all_movement_rules) {
      ProductGraph pg = product_graph(g, 2, rule);
      for (const auto& s : pg.states)
        REQUIRE(pg.state_index(s.b, s.a) >= 0);
      for (const auto& [x, y] : pg.graph.edge_list()) {
        auto sx = pg.states[x], sy = pg.states[y];
        CHECK(pg.graph.has_edge(pg.state_index(sx.b, sx.a),
                                pg.state_index(sy.b, sy.a)));
      }
    }
  }
  SECTION("lazy product steps move exactly one player") {
    Graph g = cycle_graph(5);
    ProductGraph pg = product_graph(g, 1, MovementRule::lazy);
    for (const auto& [x, y] : pg.graph.edge_list()) {
      auto sx = pg.states[x], sy = pg.states[y];
      bool first_moves = sx.a != sy.a;
      bool second_moves = sx.b != sy.b;
      CHECK(first_moves != second_moves);
    }
  }
  SECTION("distance filter keeps only far pairs") {
    Graph c6 = cycle_graph(6);
    ProductGraph pg = product_graph(c6, 3, MovementRule::traditional);
    REQUIRE(pg.states.size() == 6);  // only antipodal pairs
    for (const auto& s : pg.states) CHECK(c6.distance(s.a, s.b) == 3);
  }
}

TEST_CASE("witness tracks realize the requested distance") {
  std::vector<Graph> graphs;
  graphs.push_back(cycle_graph(6));
  graphs.push_back(multilayered_cycle(4, 2));
  graphs.push_back(multilayered_cycle(5, 3));
  for (const auto& g : graphs)
    for (MovementRule rule : all_movement_rules) {
      const int value = span_by_components(g, rule).value;
      auto [f, t] = witness_tracks(g, rule, value);
      CAPTURE(g.vertex_count(), to_string(rule), value);
      switch (rule) {
        case MovementRule::traditional:
          REQUIRE(bool(validate_lazy_track(g, f)));
          REQUIRE(bool(validate_lazy_track(g, t)));
          break;
        case MovementRule::active:
          REQUIRE(bool(validate_ltrack(g, f)));
          REQUIRE(bool(validate_ltrack(g, t)));
          break;
        case MovementRule::lazy:
          REQUIRE(bool(validate_opposite(g, f, t)));
          break;
      }
      CHECK(track_distance(g, f, t) == value);
      CHECK_THROWS_AS(witness_tracks(g, rule, value + 1), PreconditionError);
    }
}

TEST_CASE("distance zero is always feasible on connected graphs") {
  for (MovementRule rule : all_movement_rules) {
    CHECK(span_oracle(path_graph(4), rule, 0));
    CHECK(span_oracle(path_graph(1), rule, 0));
    CHECK(span_by_components(path_graph(4), rule).value >= 0);
  }
}
