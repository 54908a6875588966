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
#include <vector>

#include "matint/common.hpp"

namespace matint {

// Set-query access to a directed bipartite graph with sides
// left = S + {s, t} and right = V \ S. Only right-side vertices can be asked
// about: "does some vertex of X have an edge into v?" and "does v have an
// edge into some vertex of X?". Edges never leave t nor enter s; s only
// points into the right side and t is only entered from it.
//
// Elements are vertices 0..n-1; the source is n and the sink n + 1.
class NeighborhoodOracle {
 public:
  explicit NeighborhoodOracle(std::size_t n) : n_(n) {}
  virtual ~NeighborhoodOracle() = default;

  std::size_t element_count() const { return n_; }
  std::size_t vertex_count() const { return n_ + 2; }
  Vertex source() const { return static_cast<Vertex>(n_); }
  Vertex sink() const { return static_cast<Vertex>(n_ + 1); }
  bool is_element(Vertex x) const { return x < n_; }

  // True when element e is on the left side (in S).
  virtual bool in_s(ElementId e) const = 0;

  // Edge from some u in `from` (+ s when with_source) into v. v must be on
  // the right, `from` on the left. Empty `from` without the source is false
  // and costs nothing.
  bool exists_in_edge(ElementId v, std::span<const ElementId> from,
                      bool with_source, Stage stage);
  // Edge from v into some u in `to` (+ t when with_sink).
  bool exists_out_edge(ElementId v, std::span<const ElementId> to,
                       bool with_sink, Stage stage);

  // One in-neighbour of v among `ordered` (+ s), or nothing. The source is
  // tested first with a dedicated query and preferred; otherwise the result
  // is the first in-neighbour in the given order, found by binary search
  // over prefixes. At most ceil(log2 |ordered|) + 2 queries.
  std::optional<Vertex> in_edge(ElementId v, std::span<const ElementId> ordered,
                                bool with_source, Stage stage);
  // Mirror of in_edge for out-neighbours, with the sink preferred.
  std::optional<Vertex> out_edge(ElementId v, std::span<const ElementId> ordered,
                                 bool with_sink, Stage stage);

  // Single-edge test for any ordered pair of vertices; pairs that cannot be
  // edges (same side, into s, out of t) are false without a query.
  bool has_edge(Vertex from, Vertex to, Stage stage);

  // Underlying queries (independence queries or probes) issued so far.
  std::uint64_t queries_issued() const { return issued_; }

 protected:
  void charge(std::uint64_t queries = 1) { issued_ += queries; }

  // Implementations may assume the arguments have been validated and that
  // at least one of `from`/with_source is non-empty.
  virtual bool query_in(ElementId v, std::span<const ElementId> from,
                        bool with_source, Stage stage) = 0;
  virtual bool query_out(ElementId v, std::span<const ElementId> to,
                         bool with_sink, Stage stage) = 0;

 private:
  void check_right(ElementId v) const;
  void check_left(std::span<const ElementId> xs) const;

  template <bool kIn>
  std::optional<Vertex> search(ElementId v, std::span<const ElementId> ordered,
                               bool with_terminal, Stage stage);

  std::size_t n_;
  std::uint64_t issued_ = 0;
};

// An s -> t path s, v1, u1, v2, ..., vk, t alternating between right-side
// (v) and left-side (u) vertices.
struct AugmentingPath {
  std::vector<Vertex> vertices;
  bool chordless = false;

  // Number of right-side vertices, i.e. how much applying the path grows S.
  std::size_t right_count() const { return vertices.size() / 2; }
};

// Throws ContractViolation unless `path` has the s, right, left, ..., right, t
// shape over `oracle`'s sides with no repeated vertex.
void check_path_shape(const NeighborhoodOracle& oracle,
                      std::span<const Vertex> path);

// Shortcuts `path` into a chordless s -> t path (no proper subsequence is an
// s -> t path). One left-to-right pass: each right-side vertex looks for an
// in-neighbour among its non-adjacent ancestors (earliest first, s
// preferred) and an out-neighbour among its non-adjacent descendants
// (furthest first, t preferred); the vertices skipped by a shortcut are
// dropped. Shortcuts only shrink the ancestor/descendant sets of vertices
// already checked, so one pass suffices. O(|p| log |p|) queries, charged to
// Stage::kPostprocess.
AugmentingPath make_chordless(NeighborhoodOracle& oracle,
                              std::vector<Vertex> path);

// Full adjacency by single-edge queries (quadratic; for tests and debug
// checks). adjacency[x] lists the out-neighbours of vertex x.
std::vector<std::vector<Vertex>> enumerate_edges(NeighborhoodOracle& oracle,
                                                 Stage stage = Stage::kOther);

}  // namespace matint
