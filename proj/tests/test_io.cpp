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
#include <cstdio>
#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "graphspan/io.hpp"
#include "graphspan/strategy.hpp"
#include "graphspan/verify.hpp"

using namespace graphspan;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path(name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

TrackBundle lazy_bundle(int n, int k) {
  TrackBundle b;
  b.graph.graph = multilayered_cycle(n, k);
  b.graph.layers = LayerLayout(n, k);
  b.graph.spec = "mc:" + std::to_string(n) + ":" + std::to_string(k);
  b.rule = MovementRule::lazy;
  auto [f, g] = cartesian_strategy(n, k);
  b.f = std::move(f);
  b.g = std::move(g);
  b.claimed_distance = n / 2;
  return b;
}

}  // namespace

TEST_CASE("range parsing") {
  CHECK(parse_range("3..10") == std::pair{3, 10});
  CHECK(parse_range("4") == std::pair{4, 4});
  CHECK(parse_range("7..7") == std::pair{7, 7});
  CHECK_THROWS_AS(parse_range(""), ParseError);
  CHECK_THROWS_AS(parse_range("a..b"), ParseError);
  CHECK_THROWS_AS(parse_range("3.."), ParseError);
  CHECK_THROWS_AS(parse_range("3..4x"), ParseError);
}

TEST_CASE("graph spec mini-language") {
  SECTION("generators") {
    GraphDoc mc = parse_graph_spec("mc:6:3");
    CHECK(mc.graph.vertex_count() == 18);
    REQUIRE(mc.layers.has_value());
    CHECK(mc.layers->base_count() == 6);
    CHECK(mc.layers->layer_count() == 3);
    CHECK(mc.spec == "mc:6:3");

    CHECK(parse_graph_spec("cycle:5").graph.edge_count() == 5);
    CHECK(parse_graph_spec("path:4").graph.edge_count() == 3);
    CHECK(parse_graph_spec("complete:4").graph.edge_count() == 6);
    CHECK_FALSE(parse_graph_spec("cycle:5").layers.has_value());
  }
  SECTION("files") {
    TempFile tmp("io_test_base.edges", "3 2\n0 1\n1 2\n");
    GraphDoc file_doc = parse_graph_spec("file:" + tmp.path);
    CHECK(file_doc.graph.vertex_count() == 3);
    CHECK(file_doc.graph.edge_count() == 2);

    GraphDoc ml_doc = parse_graph_spec("ml:" + tmp.path + ":2");
    CHECK(ml_doc.graph.vertex_count() == 6);
    CHECK(ml_doc.graph.edge_count() == 2 * 2 + 3);
    REQUIRE(ml_doc.layers.has_value());
    CHECK(ml_doc.layers->layer_count() == 2);
  }
  SECTION("errors") {
    CHECK_THROWS_AS(parse_graph_spec("mc:6"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("mc:6:x"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("cycle"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("cycle:x"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("bogus:3"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("file:does_not_exist.edges"),
                    ParseError);
    CHECK_THROWS_AS(parse_graph_spec("ml:does_not_exist.edges:2"), ParseError);
    // Well-formed spec, illegal parameter: a precondition, not a parse error.
    CHECK_THROWS_AS(parse_graph_spec("cycle:2"), PreconditionError);
    CHECK_THROWS_AS(parse_graph_spec("mc:3:1"), PreconditionError);
  }
}

TEST_CASE("track bundle JSON round trip") {
  TrackBundle b = lazy_bundle(4, 2);
  Json j = bundle_to_json(b);
  CHECK(j.at("format") == "graphspan-tracks");
  CHECK(j.at("rule") == "lazy");
  CHECK(j.at("length") == b.f.length());
  REQUIRE(j.contains("labels"));
  CHECK(j.at("labels").at(0).at(0) == "0,1");

  TrackBundle back = bundle_from_json(j);
  CHECK(back.rule == b.rule);
  CHECK(back.f == b.f);
  CHECK(back.g == b.g);
  CHECK(back.claimed_distance == b.claimed_distance);
  CHECK(back.graph.graph.edge_list() == b.graph.graph.edge_list());
  REQUIRE(back.graph.layers.has_value());
  CHECK(*back.graph.layers == *b.graph.layers);
}

TEST_CASE("track bundle JSON rejects malformed documents") {
  TrackBundle b = lazy_bundle(3, 2);
  Json good = bundle_to_json(b);

  Json one_track = good;
  one_track["tracks"] = Json::array({b.f.steps});
  CHECK_THROWS_AS(bundle_from_json(one_track), ParseError);

  Json bad_rule = good;
  bad_rule["rule"] = "sideways";
  CHECK_THROWS_AS(bundle_from_json(bad_rule), ParseError);

  Json no_graph = good;
  no_graph.erase("graph");
  CHECK_THROWS_AS(bundle_from_json(no_graph), ParseError);

  Json bad_layers = good;
  bad_layers["graph"]["layers"]["count"] = 7;
  CHECK_THROWS_AS(bundle_from_json(bad_layers), ParseError);

  Json bad_edge = good;
  bad_edge["graph"]["edges"][0] = Json::array({1, 2, 3});
  CHECK_THROWS_AS(bundle_from_json(bad_edge), ParseError);

  CHECK_THROWS_AS(bundle_from_json(Json::array()), ParseError);
}

TEST_CASE("span report JSON carries the witness") {
  Graph g = multilayered_cycle(4, 2);
  SpanReport by_comp = span_by_components(g, MovementRule::traditional);
  Json jc = span_report_to_json(by_comp);
  CHECK(jc.at("rule") == "traditional");
  CHECK(jc.at("span") == "strong");
  CHECK(jc.at("value") == 3);
  CHECK(jc.at("method") == "components");
  CHECK(jc.at("witness").at("type") == "component");
  CHECK(jc.at("witness").at("states").size() ==
        std::get<ComponentWitness>(by_comp.witness).states.size());

  SpanReport by_oracle = span_oracle_value(g, MovementRule::traditional);
  Json jo = span_report_to_json(by_oracle);
  CHECK(jo.at("method") == "oracle");
  CHECK(jo.at("witness").at("type") == "tracks");
  REQUIRE(jo.at("witness").at("tracks").size() == 2);
}

TEST_CASE("table CSV format") {
  std::vector<McTableRow> rows = {mc_closed_form_row(3, 2),
                                  mc_closed_form_row(8, 3)};
  CHECK(table_to_csv(rows) ==
        "n,k,strong,direct,cartesian\n"
        "3,2,2,2,1\n"
        "8,3,5,5,4\n");
  CHECK(table_to_csv({}) == "n,k,strong,direct,cartesian\n");
}

TEST_CASE("trace CSV format") {
  TrackBundle b = lazy_bundle(4, 2);
  std::string csv =
      trace_to_csv(b.graph.graph, *b.graph.layers, b.f, b.g);
  CHECK(csv.rfind("step,f_step,g_step,distance\n", 0) == 0);
  CHECK(csv.find("\n0,-,-,2\n") != std::string::npos);
  CHECK(csv.find("counter-clockwise") != std::string::npos);
  CHECK(csv.find("still") != std::string::npos);
  // One line per position plus the header.
  std::size_t lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == b.f.length() + 1);
}

TEST_CASE("graph JSON with and without edges") {
  GraphDoc doc = parse_graph_spec("mc:4:2");
  Json with_edges = graph_to_json(doc);
  CHECK(with_edges.at("vertices") == 8);
  CHECK(with_edges.at("edges").size() == 12);
  CHECK(with_edges.at("layers").at("base") == 4);
  Json without = graph_to_json(doc, /*include_edges=*/false);
  CHECK(without.at("edge_count") == 12);
  CHECK_FALSE(without.contains("edges"));
}

TEST_CASE("bundle verification") {
  SECTION("a correct lazy bundle passes with meeting positions reported") {
    VerifyReport report = verify_bundle(lazy_bundle(5, 3));
    CHECK(report.passed());
    REQUIRE(report.distance.has_value());
    CHECK(*report.distance == 2);
    std::string text = render(report);
    CHECK(text.find("players share a layer") != std::string::npos);
    CHECK(text.find("verification passed") != std::string::npos);
  }
  SECTION("stay-free pairs verify under traditional and active rules") {
    TrackBundle b = lazy_bundle(4, 2);
    auto [f, g] = strong_strategy(4, 2);
    b.f = f;
    b.g = g;
    b.claimed_distance = 3;
    b.rule = MovementRule::active;
    CHECK(verify_bundle(b).passed());
    b.rule = MovementRule::traditional;
    CHECK(verify_bundle(b).passed());
  }
  SECTION("an inflated claim fails") {
    TrackBundle b = lazy_bundle(5, 3);
    b.claimed_distance = *b.claimed_distance + 1;
    VerifyReport report = verify_bundle(b);
    CHECK_FALSE(report.passed());
    CHECK(render(report).find("FAIL") != std::string::npos);
  }
  SECTION("a tampered step fails validation") {
    TrackBundle b = lazy_bundle(5, 3);
    b.f.steps[2] = b.f.steps[2] == 0 ? 7 : 0;  // break a step
    CHECK_FALSE(verify_bundle(b).passed());
  }
  SECTION("a lazy pair does not verify as an active pair") {
    TrackBundle b = lazy_bundle(4, 2);
    b.rule = MovementRule::active;  // stays are illegal under this rule
    CHECK_FALSE(verify_bundle(b).passed());
  }
  SECTION("length mismatch is reported instead of thrown") {
    TrackBundle b = lazy_bundle(4, 2);
    b.g.steps.pop_back();
    VerifyReport report = verify_bundle(b);
    CHECK_FALSE(report.passed());
  }
}
