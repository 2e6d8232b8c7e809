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

// Command-line front end: span computations, span tables over multilayered
// cycles, strategy generation and track verification.
//
// Exit codes: 0 success, 1 internal error, 2 parse or I/O error, 3 graph
// precondition violated, 4 size cap exceeded, 5 verification failure,
// 6 theorem violation in a table.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphspan/graphspan.hpp"

namespace {

using namespace graphspan;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCap = 4;
constexpr int kExitVerification = 5;
constexpr int kExitTheoremViolation = 6;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
  if (!out) throw ParseError("cannot write file: " + path);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<MovementRule> rules_from_flag(const std::string& flag) {
  if (flag == "all")
    return {all_movement_rules.begin(), all_movement_rules.end()};
  return {parse_movement_rule(flag)};
}

int run_span(const std::string& graph_spec, const std::string& rule_flag,
             const std::string& method_flag, const std::string& out_path) {
  GraphDoc doc = parse_graph_spec(graph_spec);
  SpanMethod method;
  if (method_flag == "components") {
    method = SpanMethod::components;
  } else if (method_flag == "oracle") {
    method = SpanMethod::oracle;
  } else {
    throw ParseError("unknown method: \"" + method_flag +
                     "\" (expected components or oracle)");
  }

  Json out = Json::object();
  out["graph"] = graph_to_json(doc, /*include_edges=*/false);
  out["reports"] = Json::array();
  for (MovementRule rule : rules_from_flag(rule_flag)) {
    SpanReport report = method == SpanMethod::components
                            ? span_by_components(doc.graph, rule)
                            : span_oracle_value(doc.graph, rule);
    out["reports"].push_back(span_report_to_json(report));
    std::cerr << span_name(rule) << " span (" << to_string(rule)
              << " movement): " << report.value << '\n';
  }
  write_output(out_path, out.dump(2) + "\n");
  return kExitOk;
}

int run_table(const std::string& n_range, const std::string& k_range,
              int jobs, const std::string& out_path) {
  auto [n_lo, n_hi] = parse_range(n_range);
  auto [k_lo, k_hi] = parse_range(k_range);
  auto rows = mc_span_table(n_lo, n_hi, k_lo, k_hi, jobs);
  write_output(out_path, table_to_csv(rows));
  const auto violations = closed_form_violations(rows);
  for (const auto& line : violations) std::cerr << line << '\n';
  return violations.empty() ? kExitOk : kExitTheoremViolation;
}

int run_strategy(int n, int k, const std::string& rule_flag,
                 const std::string& out_path, const std::string& trace_path) {
  const MovementRule rule = parse_movement_rule(rule_flag);
  TrackBundle bundle;
  bundle.graph.graph = multilayered_cycle(n, k);
  bundle.graph.layers = LayerLayout(n, k);
  bundle.graph.spec = "mc:" + std::to_string(n) + ":" + std::to_string(k);
  bundle.rule = rule;
  if (rule == MovementRule::lazy) {
    auto [f, g] = cartesian_strategy(n, k);
    bundle.f = std::move(f);
    bundle.g = std::move(g);
    bundle.claimed_distance = n / 2;
    const long long compact = 2LL * n * k - 1;
    if (static_cast<long long>(bundle.f.length()) != compact)
      std::cerr << "note: schedule length " << bundle.f.length()
                << " (a fully interleaved sweep would have length " << compact
                << "; the distance-preserving column shifts add steps)\n";
  } else {
    auto [f, g] = strong_strategy(n, k);
    bundle.f = std::move(f);
    bundle.g = std::move(g);
    bundle.claimed_distance = n / 2 + 1;
  }
  std::cerr << span_name(rule) << " strategy for " << bundle.graph.spec
            << ": length " << bundle.f.length() << ", distance >= "
            << *bundle.claimed_distance << " at every step\n";
  write_output(out_path, bundle_to_json(bundle).dump(2) + "\n");
  if (!trace_path.empty())
    write_output(trace_path,
                 trace_to_csv(bundle.graph.graph, *bundle.graph.layers,
                              bundle.f, bundle.g));
  return kExitOk;
}

int run_verify(const std::string& in_path) {
  TrackBundle bundle = bundle_from_json(parse_json(read_input(in_path)));
  VerifyReport report = verify_bundle(bundle);
  std::cout << render(report);
  return report.passed() ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "graphspan: exact vertex spans of graphs and multilayered cycles"};
  app.require_subcommand(1);

  std::string graph_spec, rule_flag = "all", method_flag = "components";
  std::string out_path, trace_path, n_range, k_range, verify_path;
  int jobs = 1, strat_n = 0, strat_k = 0;

  auto* span_cmd = app.add_subcommand(
      "span", "Compute span values of a graph under the movement rules");
  span_cmd->add_option("--graph", graph_spec,
                       "Graph spec (mc:N:K, cycle:N, path:N, complete:N, "
                       "file:PATH, ml:PATH:K)")
      ->required();
  span_cmd->add_option("--rule", rule_flag,
                       "traditional, active, lazy or all (default all)");
  span_cmd->add_option("--method", method_flag,
                       "components (default) or oracle");
  span_cmd->add_option("--out", out_path, "Write the JSON report here");

  auto* table_cmd = app.add_subcommand(
      "table", "Span table of multilayered cycles MC(n, k) as CSV");
  table_cmd->add_option("--n", n_range, "Cycle lengths, A..B or a single N")
      ->required();
  table_cmd->add_option("--k", k_range, "Layer counts, A..B or a single K")
      ->required();
  table_cmd->add_option("--jobs", jobs, "Worker threads (default 1)");
  table_cmd->add_option("--out", out_path, "Write the CSV here");

  auto* strategy_cmd = app.add_subcommand(
      "strategy", "Generate an optimal pair of tracks on MC(n, k)");
  strategy_cmd->add_option("--n", strat_n, "Cycle length (>= 3)")->required();
  strategy_cmd->add_option("--k", strat_k, "Layer count (>= 2)")->required();
  strategy_cmd
      ->add_option("--rule", rule_flag, "traditional, active or lazy")
      ->required();
  strategy_cmd->add_option("--out", out_path, "Write the track JSON here");
  strategy_cmd->add_option("--trace", trace_path,
                           "Also write a per-step CSV trace here");

  auto* verify_cmd = app.add_subcommand(
      "verify", "Re-check a track JSON document (file path or - for stdin)");
  verify_cmd->add_option("bundle", verify_path, "Track JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*span_cmd)
      return run_span(graph_spec, rule_flag, method_flag, out_path);
    if (*table_cmd) return run_table(n_range, k_range, jobs, out_path);
    if (*strategy_cmd)
      return run_strategy(strat_n, strat_k, rule_flag, out_path, trace_path);
    if (*verify_cmd) return run_verify(verify_path);
    std::cerr << "error: no subcommand\n";
    return kExitParse;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::logic_error& e) {
    std::cerr << "self-check failure: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
