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
#include <span>
#include <string_view>
#include <vector>

#include "matint/neighborhood.hpp"
#include "matint/rng.hpp"

namespace matint {

enum class CategorizerMode : std::uint8_t { kRandomized, kDeterministic };

// "rand" / "det".
std::string_view mode_name(CategorizerMode mode);

// Sample size for one heavy/light experiment: 0 when x_size <= 10h,
// otherwise the least k with (1 - 10h/x_size)^k <= 1/4. For that k also
// (1 - h/x_size)^k >= 3/4.
std::size_t choose_k(std::size_t h, std::size_t x_size);

// ceil(80 ln max(n, 2)).
std::size_t default_repetitions(std::size_t n);

// max(1, ceil(sqrt(r))) randomized, max(1, ceil(cbrt(r))) deterministic.
std::size_t select_h(std::size_t r_est, CategorizerMode mode);

// Smallest m with m^degree >= x.
std::uint64_t ceil_root(std::uint64_t x, int degree);

// Draws k elements of `x` uniformly with replacement and asks whether v has
// an out-edge into the sample. Returns true ("success") when it has none.
// k = 0 succeeds without a query.
bool experiment_once(NeighborhoodOracle& oracle, ElementId v,
                     std::span<const ElementId> x, std::size_t k, Rng& rng,
                     Stage stage = Stage::kCategorizeRand);

enum class Label : std::uint8_t { kUnknown, kHeavy, kLight };

// Mutable state of one augmenting-path search. Indexed by vertex id.
struct PhaseState {
  std::size_t h = 1;
  std::size_t phase = 0;

  // Found set F with a predecessor for every member except s.
  std::vector<char> in_f;
  std::vector<Vertex> pred;

  // Labels of right-side vertices outside F.
  std::vector<Label> label;
  // Out-neighbours of light vertices in S at the time they were labelled;
  // entries that have since joined F are ignored. light_in is the reverse
  // index.
  std::vector<std::vector<ElementId>> light_out;
  std::vector<std::vector<ElementId>> light_in;
  // Cached answer to "v -> t?": -1 unknown, 0 no, 1 yes.
  std::vector<std::int8_t> t_edge;

  // Deterministic mode: candidate sets N_v, weights w(u) = #{v : u in N_v}
  // and holders[u] = {v : u in N_v}.
  std::vector<std::vector<ElementId>> n_v;
  std::vector<std::uint32_t> weight;
  std::vector<std::vector<ElementId>> holders;

  bool in_fs(ElementId u) const { return in_f[u] != 0; }
};

// Hook for tests: called once per phase right after categorization.
class PhaseObserver {
 public:
  virtual ~PhaseObserver() = default;
  virtual void after_categorize(NeighborhoodOracle& oracle,
                                const PhaseState& state) = 0;
};

struct AugmentationConfig {
  CategorizerMode mode = CategorizerMode::kRandomized;
  std::size_t h = 1;
  // 0 selects default_repetitions(n).
  std::size_t repetitions = 0;
  // Verify the phase invariants with extra queries (Stage::kOther) and throw
  // InvariantViolation on failure.
  bool check_invariants = false;
  PhaseObserver* observer = nullptr;
};

struct AugmentationStats {
  std::size_t phases = 0;
  // Vertices declared heavy by sampling that turned out to have fewer than h
  // out-neighbours in S \ F when reached.
  std::size_t misclassification_events = 0;
  // Underlying queries spent by each reverse BFS call.
  std::vector<std::uint64_t> reverse_bfs_costs;
};

struct AugmentationResult {
  std::optional<AugmentingPath> path;  // chordless; empty means no s-t path
  AugmentationStats stats;
};

// Searches for an s -> t path in the graph behind `oracle`. The result is
// exact for every random stream; randomness only affects the query count.
AugmentationResult find_augmenting_path(NeighborhoodOracle& oracle,
                                        const AugmentationConfig& config,
                                        Rng& rng);

// One reverse BFS from the heavy vertices of `state` towards F. Returns the
// path x0, x1, ..., xk with x0 in F and xk heavy, or nothing when no vertex
// of F reaches a heavy vertex. Light vertices are reached through their
// recorded edges without queries.
std::optional<std::vector<Vertex>> reverse_bfs(NeighborhoodOracle& oracle,
                                               const PhaseState& state);

}  // namespace matint
