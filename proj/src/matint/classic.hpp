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
#include <limits>
#include <vector>

#include "matint/exchange_graph.hpp"
#include "matint/oracle.hpp"

namespace matint {

inline constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// BFS layers of G(S) from s. Right-side layers are odd, left-side layers
// even; layers[0] = {s}. Layers are sorted by id.
struct LayeredBfs {
  std::vector<std::size_t> dist;  // per vertex, kUnreached if unassigned
  std::vector<std::vector<Vertex>> layers;
  std::vector<Vertex> to_t;  // last right layer members with an edge to t
  bool reached_t = false;
  // Stopped because t is further than max_dist (t may still be reachable).
  bool truncated = false;

  std::size_t dist_t() const { return dist.back(); }
};

struct LayeringOptions {
  // Per-vertex lower bounds on the distance from s. A right vertex is not
  // tested at layers below its bound. Updated in place with what the
  // layering learns. Bounds stay valid across shortest-path augmentations
  // because distances from s never decrease.
  std::vector<std::size_t>* lower_bounds = nullptr;
  std::size_t max_dist = kUnreached;
};

// Right layer k+1: one exists_in_edge per unassigned right vertex against
// left layer k (the s-edge test for k = 0). Then one t-test per member; the
// layering ends if any succeeds. Left layer k+2: out_edge drains from each
// member over the unassigned part of S. Stage::kBfsLayering.
LayeredBfs bfs_layering(ExchangeGraphView& view,
                        const LayeringOptions& options = {});

struct CunninghamOptions {
  // Phased: one layering per distinct s-t distance; paths that respect the
  // layer labels are found and applied until none remain. Fresh: a new
  // layering before every augmentation.
  bool phased = true;
  // Assert distance monotonicity and the exit condition with extra
  // layerings.
  bool check_invariants = false;
};

struct CunninghamStats {
  std::size_t augmentations = 0;
  std::size_t layerings = 0;
  // s-t distance of each layering that reached t, in order.
  std::vector<std::size_t> distances;
  // No s-t path is left; otherwise the exit was dist(s, t) > d_max.
  bool maximum = false;
};

// Augments along shortest paths while dist(s, t) <= d_max. d_max >= 1.
CunninghamStats cunningham_until(ExchangeGraphView& view, std::size_t d_max,
                                 const CunninghamOptions& options = {});

struct NaiveStats {
  std::size_t greedy_size = 0;
  CunninghamStats augment;
};

// Greedy, then fresh layering plus one shortest path per augmentation until
// t is unreachable. Exact.
std::vector<ElementId> naive_exact(const IndependenceOracle& m1,
                                   const IndependenceOracle& m2,
                                   NaiveStats* stats = nullptr);

}  // namespace matint
