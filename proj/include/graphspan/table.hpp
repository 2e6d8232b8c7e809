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

#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "graphspan/layered.hpp"
#include "graphspan/span.hpp"

namespace graphspan {

/// One multilayered-cycle cell: the three span values of MC(n, k).
struct McTableRow {
  int n = 0;
  int k = 0;
  int strong_span = 0;     // traditional movement
  int direct_span = 0;     // active movement
  int cartesian_span = 0;  // lazy movement

  friend bool operator==(const McTableRow&, const McTableRow&) = default;
};

/// Proven closed form for multilayered cycles: the strong and direct spans
/// are floor(n/2)+1 and the cartesian span floor(n/2), for every layer
/// count k >= 2.
inline McTableRow mc_closed_form_row(int n, int k) {
  return {n, k, n / 2 + 1, n / 2 + 1, n / 2};
}

/// Messages flagging rows that deviate from the closed form, one per bad
/// row; empty when every row matches.
inline std::vector<std::string> closed_form_violations(
    const std::vector<McTableRow>& rows) {
  std::vector<std::string> out;
  for (const auto& row : rows) {
    const McTableRow expected = mc_closed_form_row(row.n, row.k);
    if (row == expected) continue;
    out.push_back("THEOREM VIOLATION: n=" + std::to_string(row.n) +
                  " k=" + std::to_string(row.k) + " got strong=" +
                  std::to_string(row.strong_span) + " direct=" +
                  std::to_string(row.direct_span) + " cartesian=" +
                  std::to_string(row.cartesian_span) + ", expected strong=" +
                  std::to_string(expected.strong_span) + " direct=" +
                  std::to_string(expected.direct_span) + " cartesian=" +
                  std::to_string(expected.cartesian_span));
  }
  return out;
}

inline constexpr int kTableCellVertexCap = 5000;   // n * k per cell
inline constexpr long long kTableCellCountCap = 10000;

/// Span values of MC(n, k) for every cell of [n_lo, n_hi] x [k_lo, k_hi],
/// computed with span_by_components and ordered by (n, k). Empty ranges
/// yield an empty table. `jobs` worker threads split the cells; the result
/// does not depend on `jobs`.
inline std::vector<McTableRow> mc_span_table(int n_lo, int n_hi, int k_lo,
                                             int k_hi, int jobs = 1) {
  if (jobs < 1) throw PreconditionError("jobs must be >= 1");
  if (n_lo > n_hi || k_lo > k_hi) return {};
  if (n_lo < 3) throw PreconditionError("multilayered cycles need n >= 3");
  if (k_lo < 2) throw PreconditionError("multilayered cycles need k >= 2");

  const long long n_count = n_hi - n_lo + 1;
  const long long k_count = k_hi - k_lo + 1;
  const long long cells = n_count * k_count;
  if (cells > kTableCellCountCap)
    throw CapExceededError("table would have " + std::to_string(cells) +
                           " cells; the cap is " +
                           std::to_string(kTableCellCountCap));
  if (static_cast<long long>(n_hi) * k_hi > kTableCellVertexCap)
    throw CapExceededError(
        "largest cell would have " + std::to_string(n_hi) + " * " +
        std::to_string(k_hi) + " vertices; the cap is " +
        std::to_string(kTableCellVertexCap));

  std::vector<McTableRow> rows(static_cast<std::size_t>(cells));
  std::atomic<long long> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    try {
      long long i;
      while ((i = next.fetch_add(1)) < cells) {
        const int n = n_lo + static_cast<int>(i / k_count);
        const int k = k_lo + static_cast<int>(i % k_count);
        const Graph g = multilayered_cycle(n, k);
        McTableRow row{n, k, 0, 0, 0};
        row.strong_span =
            span_by_components(g, MovementRule::traditional).value;
        row.direct_span = span_by_components(g, MovementRule::active).value;
        row.cartesian_span = span_by_components(g, MovementRule::lazy).value;
        rows[static_cast<std::size_t>(i)] = row;
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  const int thread_count =
      static_cast<int>(std::min<long long>(jobs, cells));
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return rows;
}

}  // namespace graphspan
