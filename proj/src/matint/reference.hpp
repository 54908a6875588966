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
#include <vector>

#include "matint/oracle.hpp"

namespace matint {

// Scans elements in id order and keeps each one that leaves the set common
// independent. The result is maximal, hence at least half the optimum.
// At most 2n queries, charged to Stage::kGreedy.
std::vector<ElementId> greedy_maximal_common(const IndependenceOracle& m1,
                                             const IndependenceOracle& m2);

struct BruteForceResult {
  std::size_t size = 0;
  std::vector<ElementId> witness;
};

inline constexpr std::size_t kBruteForceLimit = 20;

// Exact optimum by exhaustive search over common independent sets
// (depth-first over elements; downward closure makes pruning at dependent
// prefixes exact). Refuses n > kBruteForceLimit with ContractViolation; use
// naive_exact() for larger instances. Queries are charged to Stage::kOther.
BruteForceResult brute_force_max_common(const IndependenceOracle& m1,
                                        const IndependenceOracle& m2);

}  // namespace matint
