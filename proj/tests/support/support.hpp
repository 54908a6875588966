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

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "matint/classic.hpp"
#include "matint/exchange_graph.hpp"
#include "matint/hidden_graph.hpp"
#include "matint/instance.hpp"
#include "matint/neighborhood.hpp"
#include "matint/oracle.hpp"
#include "matint/reference.hpp"
#include "matint/rng.hpp"

namespace support {

using namespace matint;

struct OraclePair {
  std::unique_ptr<IndependenceOracle> m1;
  std::unique_ptr<IndependenceOracle> m2;
};

inline OraclePair oracles(const Instance& inst) {
  return {make_oracle(inst.matroid1, inst.n), make_oracle(inst.matroid2, inst.n)};
}

inline std::unique_ptr<IndependenceOracle> partition(
    std::size_t n, const std::vector<std::vector<ElementId>>& blocks,
    const std::vector<std::uint32_t>& caps) {
  std::vector<std::uint32_t> block_of(n, 0);
  for (std::uint32_t b = 0; b < blocks.size(); ++b) {
    for (ElementId e : blocks[b]) block_of[e] = b;
  }
  return std::make_unique<PartitionOracle>(std::move(block_of), caps);
}

// 2x2 bipartite matching: elements are edges 0=(a,x) 1=(a,y) 2=(b,x) 3=(b,y).
inline OraclePair two_by_two() {
  return {partition(4, {{0, 1}, {2, 3}}, {1, 1}), partition(4, {{0, 2}, {1, 3}}, {1, 1})};
}

inline std::vector<std::vector<ElementId>> subsets(std::span<const ElementId> xs) {
  std::vector<std::vector<ElementId>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << xs.size()); ++mask) {
    std::vector<ElementId> sub;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (mask >> i & 1) sub.push_back(xs[i]);
    }
    out.push_back(std::move(sub));
  }
  return out;
}

// Forward edges between non-consecutive path vertices, by single-edge tests.
inline bool has_chord(NeighborhoodOracle& g, const std::vector<Vertex>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 2; j < p.size(); ++j) {
      if (g.has_edge(p[i], p[j], Stage::kOther)) return true;
    }
  }
  return false;
}

// Some s-t path (DFS order, usually long) on an enumerated adjacency.
inline std::vector<Vertex> dfs_path(const std::vector<std::vector<Vertex>>& adj,
                                    Vertex s, Vertex t) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<Vertex> stack{s};
  std::vector<std::size_t> next(adj.size(), 0);
  seen[s] = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    if (x == t) return stack;
    if (next[x] < adj[x].size()) {
      const Vertex y = adj[x][next[x]++];
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    } else {
      stack.pop_back();
    }
  }
  return {};
}

// BFS distance s -> t over an adjacency list, or SIZE_MAX.
inline std::size_t bfs_distance(const std::vector<std::vector<Vertex>>& adj,
                                Vertex s, Vertex t) {
  std::vector<std::size_t> dist(adj.size(), SIZE_MAX);
  std::vector<Vertex> q{s};
  dist[s] = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (Vertex y : adj[q[i]]) {
      if (dist[y] == SIZE_MAX) {
        dist[y] = dist[q[i]] + 1;
        q.push_back(y);
      }
    }
  }
  return dist[t];
}

// A random common independent set: greedy over a shuffled order, stopped early.
inline std::vector<ElementId> random_common(const IndependenceOracle& m1,
                                            const IndependenceOracle& m2, Rng& rng) {
  std::vector<ElementId> order(m1.ground_size());
  for (ElementId e = 0; e < order.size(); ++e) order[e] = e;
  rng.shuffle(order);
  const std::size_t stop = rng.below(order.size() + 1);
  std::vector<ElementId> s;
  for (std::size_t i = 0; i < stop; ++i) {
    s.push_back(order[i]);
    if (!m1.is_independent(s) || !m2.is_independent(s)) s.pop_back();
  }
  return s;
}

inline const Family kAllFamilies[] = {Family::kBipartiteMatching, Family::kRainbowSpanningTree,
                                      Family::kRandomBinaryLinear, Family::kPlantedRank,
                                      Family::kUniformPartition};

}  // namespace support
