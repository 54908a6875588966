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

#include "matint/reference.hpp"

#include <string>

namespace matint {

std::vector<ElementId> greedy_maximal_common(const IndependenceOracle& m1,
                                             const IndependenceOracle& m2) {
  if (m1.ground_size() != m2.ground_size()) {
    throw ContractViolation("matroids are over different ground sets");
  }
  std::vector<ElementId> set;
  for (ElementId v = 0; v < m1.ground_size(); ++v) {
    set.push_back(v);
    if (m1.is_independent(set, Stage::kGreedy) &&
        m2.is_independent(set, Stage::kGreedy)) {
      continue;
    }
    set.pop_back();
  }
  return set;
}

namespace {

struct Search {
  const IndependenceOracle& m1;
  const IndependenceOracle& m2;
  std::size_t n;
  std::vector<ElementId> current;
  BruteForceResult best;

  void run(ElementId next) {
    if (current.size() > best.size) {
      best.size = current.size();
      best.witness = current;
    }
    if (current.size() + (n - next) <= best.size) return;
    for (ElementId v = next; v < n; ++v) {
      if (current.size() + (n - v) <= best.size) return;
      current.push_back(v);
      if (m1.is_independent(current, Stage::kOther) &&
          m2.is_independent(current, Stage::kOther)) {
        run(v + 1);
      }
      current.pop_back();
    }
  }
};

}  // namespace

BruteForceResult brute_force_max_common(const IndependenceOracle& m1,
                                        const IndependenceOracle& m2) {
  if (m1.ground_size() != m2.ground_size()) {
    throw ContractViolation("matroids are over different ground sets");
  }
  const std::size_t n = m1.ground_size();
  if (n > kBruteForceLimit) {
    throw ContractViolation("exhaustive search refused for n = " +
                            std::to_string(n) + " > " +
                            std::to_string(kBruteForceLimit) +
                            "; use naive_exact instead");
  }
  Search search{m1, m2, n, {}, {}};
  search.run(0);
  return search.best;
}

}  // namespace matint
