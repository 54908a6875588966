// Copyright 2026 The Authors.
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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "matint/ledger.hpp"
#include "matint/oracle.hpp"
#include "matint/reachability.hpp"

namespace matint {

// r_bar = size of the greedy maximal common independent set; r_bar <= r <=
// 2 r_bar. At most 2n queries (Stage::kGreedy).
std::size_t estimate_r(const IndependenceOracle& m1, const IndependenceOracle& m2);

// Distance bound for the Cunningham stage. 1 when r_bar <= 1; otherwise
// with T = n sqrt(r_bar) ln n (randomized) or n r_bar^(2/3) L
// (deterministic), L = max(1, ln r_bar):
//   d = clamp(ceil(sqrt(r_bar T / (n L))), 1, 2 r_bar + 2).
std::size_t select_d(std::size_t r_bar, std::size_t n, CategorizerMode mode);

enum class Algorithm : std::uint8_t {
  kNaive,       // greedy + fresh layering per augmentation
  kCunningham,  // greedy + phased Cunningham to optimality
  kPipeline,    // greedy + Cunningham to distance d + augmentation search
  kApprox,      // greedy + Cunningham to distance d, then stop
  kBrute,       // exhaustive search, n <= 20
};

std::string_view algorithm_name(Algorithm algorithm);
// Throws ValidationError for unknown names.
Algorithm parse_algorithm(std::string_view name);

struct SolveOptions {
  Algorithm algorithm = Algorithm::kPipeline;
  CategorizerMode mode = CategorizerMode::kRandomized;
  std::uint64_t seed = 0;
  // Pipeline: overrides select_d / select_h. Approx: d is required.
  std::optional<std::size_t> d;
  std::optional<std::size_t> h;
  std::size_t repetitions = 0;  // 0: default_repetitions(n)
  // Replaces the greedy start; must be common independent.
  std::optional<std::vector<ElementId>> bootstrap;
  bool phased_cunningham = true;
  bool check_invariants = false;
  PhaseObserver* observer = nullptr;
  std::string instance_id;
};

struct SolveReport {
  std::string instance_id;
  Algorithm algorithm = Algorithm::kPipeline;
  CategorizerMode mode = CategorizerMode::kRandomized;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t r_bar = 0;
  std::size_t d = 0;
  std::size_t h = 0;
  // n^(1/5) r_bar^(-2/5) ln^(-1/5) r_bar; reported only, never used.
  double epsilon = 0;
  LedgerSnapshot ledger;
  std::size_t answer_size = 0;
  std::size_t greedy_size = 0;
  std::size_t stage2_augmentations = 0;
  std::size_t stage3_augmentations = 0;
  std::size_t layerings = 0;
  std::size_t augmentation_calls = 0;
  std::size_t phases = 0;
  std::size_t misclassification_events = 0;
  std::vector<std::uint64_t> reverse_bfs_costs;
  double wall_time_ms = 0;
};

struct SolveResult {
  std::vector<ElementId> set;  // ascending
  SolveReport report;
};

// Runs options.algorithm. The oracles are charged to a ledger owned by the
// call (their previous ledger is restored afterwards). Throws
// ValidationError for a bad bootstrap set and ContractViolation for bad
// options.
SolveResult run_solver(IndependenceOracle& m1, IndependenceOracle& m2,
                       const SolveOptions& options);

// run_solver with the pipeline / approximation algorithm.
SolveResult solve(IndependenceOracle& m1, IndependenceOracle& m2,
                  SolveOptions options);
SolveResult solve_approx(IndependenceOracle& m1, IndependenceOracle& m2,
                         std::size_t d, SolveOptions options);

// Report schema:
//   {instance_id, algorithm, mode, seed, n, r_bar, d, h, epsilon,
//    stage_ledgers: {<stage>: {m1, m2, total}}, total_queries, answer_size,
//    greedy_size, stage2_augmentations, stage3_augmentations, layerings,
//    augmentation_calls, phases, misclassification_events,
//    reverse_bfs_max_queries, wall_time_ms}
// With include_time = false the wall_time_ms field is left out, which makes
// the document a pure function of instance and options.
nlohmann::ordered_json report_to_json(const SolveReport& report,
                                      bool include_time = true);

}  // namespace matint
