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

#include "matint/neighborhood.hpp"

#include <string>

namespace matint {

void NeighborhoodOracle::check_right(ElementId v) const {
  if (v >= n_) {
    throw ContractViolation("vertex " + std::to_string(v) + " is not an element");
  }
  if (in_s(v)) {
    throw ContractViolation("neighbourhood queries need a vertex outside S; " +
                            std::to_string(v) + " is in S");
  }
}

void NeighborhoodOracle::check_left(std::span<const ElementId> xs) const {
  for (ElementId u : xs) {
    if (u >= n_ || !in_s(u)) {
      throw ContractViolation("query set contains " + std::to_string(u) +
                              ", which is not in S");
    }
  }
}

bool NeighborhoodOracle::exists_in_edge(ElementId v,
                                        std::span<const ElementId> from,
                                        bool with_source, Stage stage) {
  check_right(v);
  check_left(from);
  if (from.empty() && !with_source) return false;
  return query_in(v, from, with_source, stage);
}

bool NeighborhoodOracle::exists_out_edge(ElementId v,
                                         std::span<const ElementId> to,
                                         bool with_sink, Stage stage) {
  check_right(v);
  check_left(to);
  if (to.empty() && !with_sink) return false;
  return query_out(v, to, with_sink, stage);
}

template <bool kIn>
std::optional<Vertex> NeighborhoodOracle::search(
    ElementId v, std::span<const ElementId> ordered, bool with_terminal,
    Stage stage) {
  check_right(v);
  check_left(ordered);
  auto exists = [&](std::span<const ElementId> xs, bool terminal) {
    return kIn ? query_in(v, xs, terminal, stage)
               : query_out(v, xs, terminal, stage);
  };
  if (with_terminal && exists({}, true)) {
    return kIn ? source() : sink();
  }
  if (ordered.empty() || !exists(ordered, false)) return std::nullopt;
  // Smallest prefix length that still contains a neighbour.
  std::size_t lo = 1;
  std::size_t hi = ordered.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (exists(ordered.first(mid), false)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return ordered[lo - 1];
}

std::optional<Vertex> NeighborhoodOracle::in_edge(
    ElementId v, std::span<const ElementId> ordered, bool with_source,
    Stage stage) {
  return search<true>(v, ordered, with_source, stage);
}

std::optional<Vertex> NeighborhoodOracle::out_edge(
    ElementId v, std::span<const ElementId> ordered, bool with_sink,
    Stage stage) {
  return search<false>(v, ordered, with_sink, stage);
}

bool NeighborhoodOracle::has_edge(Vertex from, Vertex to, Stage stage) {
  if (from == to || from == sink() || to == source()) return false;
  if (from == source()) {
    return is_element(to) && !in_s(to) && exists_in_edge(to, {}, true, stage);
  }
  if (to == sink()) {
    return !in_s(from) && exists_out_edge(from, {}, true, stage);
  }
  const ElementId a = from;
  const ElementId b = to;
  if (in_s(a) && !in_s(b)) return exists_in_edge(b, {&a, 1}, false, stage);
  if (!in_s(a) && in_s(b)) return exists_out_edge(a, {&b, 1}, false, stage);
  return false;
}

void check_path_shape(const NeighborhoodOracle& oracle,
                      std::span<const Vertex> path) {
  if (path.size() < 3 || path.size() % 2 == 0 || path.front() != oracle.source() ||
      path.back() != oracle.sink()) {
    throw ContractViolation("an s-t path must look like s, v1, u1, ..., vk, t");
  }
  std::vector<char> seen(oracle.vertex_count(), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex x = path[i];
    if (x >= oracle.vertex_count() || seen[x]) {
      throw ContractViolation("path repeats or leaves the vertex set");
    }
    seen[x] = 1;
    if (i == 0 || i + 1 == path.size()) continue;
    if (!oracle.is_element(x) || oracle.in_s(x) != (i % 2 == 0)) {
      throw ContractViolation("path does not alternate between the sides");
    }
  }
}

AugmentingPath make_chordless(NeighborhoodOracle& oracle,
                              std::vector<Vertex> path) {
  check_path_shape(oracle, path);
  std::vector<ElementId> xs;
  for (std::size_t i = 1; i + 1 < path.size(); i += 2) {
    const ElementId v = path[i];

    // Ancestors other than the parent, earliest first; s is always at 0.
    if (i >= 3) {
      xs.clear();
      for (std::size_t j = 2; j + 1 < i; j += 2) xs.push_back(path[j]);
      if (auto u = oracle.in_edge(v, xs, true, Stage::kPostprocess)) {
        std::size_t j = 0;
        while (path[j] != *u) ++j;
        path.erase(path.begin() + static_cast<std::ptrdiff_t>(j + 1),
                   path.begin() + static_cast<std::ptrdiff_t>(i));
        i = j + 1;
      }
    }

    // Descendants other than the child, furthest first; t is last.
    const bool child_is_sink = i + 2 == path.size();
    if (!child_is_sink) {
      xs.clear();
      for (std::size_t j = path.size() - 3; j > i + 1; j -= 2) xs.push_back(path[j]);
      if (auto w = oracle.out_edge(v, xs, true, Stage::kPostprocess)) {
        std::size_t j = path.size() - 1;
        while (path[j] != *w) --j;
        path.erase(path.begin() + static_cast<std::ptrdiff_t>(i + 1),
                   path.begin() + static_cast<std::ptrdiff_t>(j));
      }
    }
  }
  return AugmentingPath{std::move(path), true};
}

std::vector<std::vector<Vertex>> enumerate_edges(NeighborhoodOracle& oracle,
                                                 Stage stage) {
  std::vector<std::vector<Vertex>> adj(oracle.vertex_count());
  const auto n = static_cast<Vertex>(oracle.element_count());
  for (Vertex v = 0; v < n; ++v) {
    if (oracle.in_s(v)) continue;
    if (oracle.has_edge(oracle.source(), v, stage)) adj[oracle.source()].push_back(v);
    if (oracle.has_edge(v, oracle.sink(), stage)) adj[v].push_back(oracle.sink());
    for (Vertex u = 0; u < n; ++u) {
      if (!oracle.in_s(u)) continue;
      if (oracle.has_edge(u, v, stage)) adj[u].push_back(v);
      if (oracle.has_edge(v, u, stage)) adj[v].push_back(u);
    }
  }
  return adj;
}

}  // namespace matint
