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

#include <catch2/catch_amalgamated.hpp>

#include "graphspan/table.hpp"

using namespace graphspan;

TEST_CASE("span table over a small grid") {
  auto rows = mc_span_table(3, 5, 2, 3);
  REQUIRE(rows.size() == 6);
  // Ordered by (n, k).
  CHECK(rows[0].n == 3);
  CHECK(rows[0].k == 2);
  CHECK(rows[1].n == 3);
  CHECK(rows[1].k == 3);
  CHECK(rows[5].n == 5);
  CHECK(rows[5].k == 3);
  for (const auto& row : rows) {
    CAPTURE(row.n, row.k);
    CHECK(row == mc_closed_form_row(row.n, row.k));
  }
}

TEST_CASE("parallel table equals the sequential table") {
  auto sequential = mc_span_table(3, 6, 2, 3, 1);
  auto parallel = mc_span_table(3, 6, 2, 3, 4);
  CHECK(sequential == parallel);
}

TEST_CASE("empty ranges give an empty table") {
  CHECK(mc_span_table(5, 4, 2, 3).empty());
  CHECK(mc_span_table(3, 4, 3, 2).empty());
}

TEST_CASE("table caps and preconditions") {
  CHECK_THROWS_AS(mc_span_table(3, 3, 2, 3, 0), PreconditionError);
  CHECK_THROWS_AS(mc_span_table(1, 3, 2, 2), PreconditionError);
  CHECK_THROWS_AS(mc_span_table(3, 3, 1, 2), PreconditionError);
  CHECK_THROWS_AS(mc_span_table(3, 3, 2, 20000), CapExceededError);
  CHECK_THROWS_AS(mc_span_table(3, 202, 2, 51), CapExceededError);
}

TEST_CASE("closed form violations are flagged with the exact marker") {
  std::vector<McTableRow> rows = {mc_closed_form_row(4, 2),
                                  {5, 2, 4, 3, 2},  // tampered strong span
                                  mc_closed_form_row(6, 2)};
  auto messages = closed_form_violations(rows);
  REQUIRE(messages.size() == 1);
  CHECK(messages[0].find("THEOREM VIOLATION") == 0);
  CHECK(messages[0].find("n=5 k=2") != std::string::npos);
  CHECK(closed_form_violations({mc_closed_form_row(3, 2)}).empty());
}
