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

#include <utility>
#include <vector>

#include "graphspan/graph.hpp"
#include "graphspan/layered.hpp"
#include "graphspan/track.hpp"

namespace graphspan {

namespace detail {

/// Position of one player on a multilayered cycle.
struct CyclePos {
  int col;    // base vertex, 0..n-1
  int layer;  // 1..k
};

/// One scheduled move: which player moves and by how much.
struct ScheduledMove {
  bool first_player;
  int d_col;    // -1 clockwise, +1 counter-clockwise, 0 vertical
  int d_layer;  // +1 up, -1 down, 0 horizontal
};

inline void self_check_pair(const Graph& g, const Track& f, const Track& t,
                            bool opposite, int expected_distance) {
  TrackCheck check = opposite ? validate_opposite(g, f, t)
                              : [&] {
                                  if (auto c = validate_ltrack(g, f); !c)
                                    return c;
                                  return validate_ltrack(g, t,
                                                         Coverage::surjective,
                                                         1);
                                }();
  if (!check)
    throw std::logic_error("strategy self-check failed: " + check.message());
  if (track_distance(g, f, t) != expected_distance)
    throw std::logic_error("strategy self-check failed: distance " +
                           std::to_string(track_distance(g, f, t)) +
                           " instead of " +
                           std::to_string(expected_distance));
}

}  // namespace detail

/// Opposite pair of tracks on MC(n, k) whose smallest pointwise distance is
/// exactly floor(n/2), the cartesian span. The first player starts at
/// (0, 1), the second at (floor(n/2), 1). Both sweep their current column
/// vertically, alternating single moves; at the extreme layers the columns
/// advance counter-clockwise by a four-move shift (the moving player first
/// steps one layer toward the middle, so the shift never closes the gap
/// below floor(n/2)). Generation stops as soon as both players have covered
/// every vertex. The result is self-checked before being returned.
inline std::pair<Track, Track> cartesian_strategy(int n, int k) {
  if (n < 3) throw PreconditionError("multilayered cycles need n >= 3");
  if (k < 2) throw PreconditionError("multilayered cycles need k >= 2");
  const int m = n / 2;
  const LayerLayout layout(n, k);

  // Build the full move program: the initial upward sweep, then column
  // shifts alternating with vertical sweeps. n shift rounds are more than
  // coverage can need; execution stops early.
  std::vector<detail::ScheduledMove> program;
  program.reserve(static_cast<std::size_t>(2 * n * k + 2 * n));
  for (int i = 1; i < k; ++i) {
    program.push_back({true, 0, +1});
    program.push_back({false, 0, +1});
  }
  bool at_top = true;
  for (int round = 0; round < n; ++round) {
    const int away = at_top ? -1 : +1;  // one layer toward the middle
    program.push_back({true, 0, away});
    program.push_back({true, +1, 0});
    program.push_back({false, +1, 0});
    program.push_back({true, 0, -away});
    for (int i = 1; i < k; ++i) {
      program.push_back({true, 0, away});
      program.push_back({false, 0, away});
    }
    at_top = !at_top;
  }

  detail::CyclePos f{0, 1}, g{m, 1};
  std::vector<int> ft{layout.flat({f.col, f.layer})};
  std::vector<int> gt{layout.flat({g.col, g.layer})};
  std::vector<char> cov_f(static_cast<std::size_t>(layout.total()), 0);
  std::vector<char> cov_g(static_cast<std::size_t>(layout.total()), 0);
  int left_f = layout.total(), left_g = layout.total();
  auto mark = [](std::vector<char>& cov, int& left, int id) {
    if (!cov[static_cast<std::size_t>(id)]) {
      cov[static_cast<std::size_t>(id)] = 1;
      --left;
    }
  };
  mark(cov_f, left_f, ft.back());
  mark(cov_g, left_g, gt.back());

  for (const auto& mv : program) {
    if (left_f == 0 && left_g == 0) break;
    detail::CyclePos& p = mv.first_player ? f : g;
    p.col = ((p.col + mv.d_col) % n + n) % n;
    p.layer += mv.d_layer;
    ft.push_back(layout.flat({f.col, f.layer}));
    gt.push_back(layout.flat({g.col, g.layer}));
    mark(cov_f, left_f, ft.back());
    mark(cov_g, left_g, gt.back());
  }
  if (left_f != 0 || left_g != 0)
    throw std::logic_error("schedule exhausted before covering the graph");

  Track first{std::move(ft)}, second{std::move(gt)};
  detail::self_check_pair(multilayered_cycle(n, k), first, second,
                          /*opposite=*/true, m);
  return {std::move(first), std::move(second)};
}

/// Pair of stay-free tracks on MC(n, k) whose smallest pointwise distance
/// is exactly floor(n/2)+1, the strong and direct span. The first player
/// starts at (0, 1), the second at (floor(n/2), 2). Both make the same
/// clockwise move whenever either moves horizontally, so their columns stay
/// floor(n/2) apart; vertical moves happen simultaneously and keep the
/// layers exactly one apart. The first player sweeps layers 1..k and then
/// layer k-1 again; the second player's layers run 2, 1, 2, 3, ..., k.
/// Every position is therefore at distance exactly floor(n/2)+1. The
/// result is self-checked before being returned.
inline std::pair<Track, Track> strong_strategy(int n, int k) {
  if (n < 3) throw PreconditionError("multilayered cycles need n >= 3");
  if (k < 2) throw PreconditionError("multilayered cycles need k >= 2");
  const int m = n / 2;
  const LayerLayout layout(n, k);

  detail::CyclePos f{0, 1}, g{m, 2};
  std::vector<int> ft{layout.flat({f.col, f.layer})};
  std::vector<int> gt{layout.flat({g.col, g.layer})};
  auto step = [&](int d_col, int df_layer, int dg_layer) {
    f.col = ((f.col + d_col) % n + n) % n;
    g.col = ((g.col + d_col) % n + n) % n;
    f.layer += df_layer;
    g.layer += dg_layer;
    ft.push_back(layout.flat({f.col, f.layer}));
    gt.push_back(layout.flat({g.col, g.layer}));
  };

  for (int j = 1; j <= k; ++j) {
    for (int i = 0; i < n; ++i) step(-1, 0, 0);  // both clockwise
    if (j < k)
      step(0, +1, j == 1 ? -1 : +1);
    else
      step(0, -1, +1);
  }
  for (int i = 0; i < n; ++i) step(-1, 0, 0);  // re-sweep one layer down

  Track first{std::move(ft)}, second{std::move(gt)};
  detail::self_check_pair(multilayered_cycle(n, k), first, second,
                          /*opposite=*/false, m + 1);
  return {std::move(first), std::move(second)};
}

}  // namespace graphspan
