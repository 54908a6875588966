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

#include "matint/classic.hpp"

#include <algorithm>
#include <string>

#include "matint/reference.hpp"

namespace matint {

namespace {

constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

void raise_bound(std::vector<std::size_t>* bounds, Vertex x, std::size_t d) {
  if (bounds && (*bounds)[x] < d) (*bounds)[x] = d;
}

}  // namespace

LayeredBfs bfs_layering(ExchangeGraphView& view, const LayeringOptions& options) {
  const Vertex s = view.source();
  const Vertex t = view.sink();
  auto* bounds = options.lower_bounds;
  LayeredBfs out;
  out.dist.assign(view.vertex_count(), kUnreached);
  out.dist[s] = 0;
  out.layers.push_back({s});

  std::vector<ElementId> open_right;
  std::vector<ElementId> open_left;
  for (ElementId e = 0; e < view.element_count(); ++e) {
    (view.in_s(e) ? open_left : open_right).push_back(e);
  }

  std::vector<ElementId> left_layer;  // elements of the current left layer
  std::size_t k = 0;
  for (;;) {
    if (k + 2 > options.max_dist) {
      out.truncated = true;
      for (ElementId v : open_right) raise_bound(bounds, v, k + 1);
      break;
    }
    std::vector<Vertex> right;
    std::vector<ElementId> still_open;
    for (ElementId v : open_right) {
      const bool skip = bounds && (*bounds)[v] > k + 1;
      if (!skip && view.exists_in_edge(v, left_layer, k == 0, Stage::kBfsLayering)) {
        out.dist[v] = k + 1;
        right.push_back(v);
      } else {
        still_open.push_back(v);
      }
    }
    open_right.swap(still_open);
    if (right.empty()) break;
    out.layers.push_back(right);

    for (ElementId v : right) {
      if (view.exists_out_edge(v, {}, true, Stage::kBfsLayering)) out.to_t.push_back(v);
    }
    if (!out.to_t.empty()) {
      out.dist[t] = k + 2;
      out.reached_t = true;
      for (ElementId v : open_right) raise_bound(bounds, v, k + 3);
      break;
    }

    std::vector<Vertex> next;
    for (ElementId v : right) {
      std::span<const ElementId> rest(open_left);
      std::size_t pos = 0;
      std::size_t found = 0;
      while (auto u = view.out_edge(v, rest.subspan(pos), false, Stage::kBfsLayering)) {
        out.dist[*u] = k + 2;
        next.push_back(*u);
        ++found;
        while (rest[pos] != *u) ++pos;
        ++pos;
      }
      if (found) {
        std::erase_if(open_left, [&](ElementId u) { return out.dist[u] != kUnreached; });
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    out.layers.push_back(next);
    left_layer = next;
    k += 2;
  }
  if (bounds) {
    for (Vertex x = 0; x < view.element_count(); ++x) {
      if (out.dist[x] != kUnreached) raise_bound(bounds, x, out.dist[x]);
    }
  }
  return out;
}

namespace {

// Shortest-path search inside one layering. good[x] means x may still lead
// to t along edges that go up one layer at a time; dead vertices were on an
// applied path.
class LayerWalker {
 public:
  LayerWalker(ExchangeGraphView& view, const LayeredBfs& layers)
      : view_(view),
        bfs_(layers),
        ell_(layers.dist_t()),
        good_(view.vertex_count(), 0),
        dead_(view.vertex_count(), 0),
        succ_(view.vertex_count(), kNoVertex),
        cursor_(view.vertex_count(), 0) {}

  // Trust the layering: everything below the last layer is good, the last
  // layer where it has a t-edge.
  void assume_layers() {
    for (std::size_t j = 1; j + 1 < ell_; ++j) {
      for (Vertex x : bfs_.layers[j]) good_[x] = 1;
    }
    for (Vertex v : bfs_.to_t) good_[v] = 1;
  }

  // Recompute good from scratch in the current graph, backwards from t.
  void mark() {
    std::fill(good_.begin(), good_.end(), 0);
    std::fill(succ_.begin(), succ_.end(), kNoVertex);
    for (Vertex v : bfs_.layers[ell_ - 1]) {
      if (!dead_[v]) {
        good_[v] = view_.exists_out_edge(v, {}, true, Stage::kClassicAugment);
      }
    }
    std::vector<ElementId> xs;
    for (std::size_t j = ell_ - 2; j >= 1; --j) {
      if (j % 2 == 0) {
        for (Vertex v : bfs_.layers[j + 1]) {
          if (!good_[v]) continue;
          xs.clear();
          for (Vertex u : bfs_.layers[j]) {
            if (!dead_[u] && !good_[u]) xs.push_back(u);
          }
          std::span<const ElementId> rest(xs);
          std::size_t pos = 0;
          while (auto u = view_.in_edge(v, rest.subspan(pos), false,
                                        Stage::kClassicAugment)) {
            good_[*u] = 1;
            succ_[*u] = v;
            while (rest[pos] != *u) ++pos;
            ++pos;
          }
        }
      } else {
        xs.clear();
        for (Vertex u : bfs_.layers[j + 1]) {
          if (good_[u]) xs.push_back(u);
        }
        for (Vertex v : bfs_.layers[j]) {
          if (!dead_[v]) {
            good_[v] = view_.exists_out_edge(v, xs, false, Stage::kClassicAugment);
          }
        }
      }
    }
  }

  // Depth-first walk from s through good vertices, one layer up per step,
  // checking every edge in the current graph. Vertices that turn out to be
  // dead ends lose their good mark.
  std::optional<std::vector<Vertex>> walk() {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    std::vector<Vertex> stack{view_.source()};
    std::vector<ElementId> xs;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      const std::size_t j = stack.size() - 1;  // layer of x
      if (j % 2 == 1) {
        if (j + 1 == ell_) {
          if (view_.exists_out_edge(x, {}, true, Stage::kClassicAugment)) {
            stack.push_back(view_.sink());
            return stack;
          }
        } else {
          xs.clear();
          for (Vertex u : bfs_.layers[j + 1]) {
            if (good_[u] && !dead_[u]) xs.push_back(u);
          }
          if (auto u = view_.out_edge(x, xs, false, Stage::kClassicAugment)) {
            stack.push_back(*u);
            continue;
          }
        }
      } else if (auto v = advance_left(x, j)) {
        stack.push_back(*v);
        continue;
      }
      good_[x] = 0;
      stack.pop_back();
    }
    return std::nullopt;
  }

  void retire(const std::vector<Vertex>& path) {
    for (Vertex x : path) dead_[x] = 1;
  }

 private:
  bool left_edge(Vertex x, ElementId v) {
    if (x == view_.source()) {
      return view_.exists_in_edge(v, {}, true, Stage::kClassicAugment);
    }
    const ElementId u = x;
    return view_.exists_in_edge(v, {&u, 1}, false, Stage::kClassicAugment);
  }

  // Next right vertex after left vertex x (or s) at layer j: the recorded
  // successor if its edge still exists, else the lowest id with an edge.
  std::optional<Vertex> advance_left(Vertex x, std::size_t j) {
    const auto& next = bfs_.layers[j + 1];
    const Vertex hint = succ_[x];
    if (hint != kNoVertex) {
      succ_[x] = kNoVertex;
      if (good_[hint] && !dead_[hint] && left_edge(x, hint)) return hint;
    }
    for (std::size_t& i = cursor_[x]; i < next.size(); ++i) {
      const Vertex v = next[i];
      if (v == hint || !good_[v] || dead_[v]) continue;
      if (left_edge(x, v)) {
        ++i;
        return v;
      }
    }
    return std::nullopt;
  }

  ExchangeGraphView& view_;
  const LayeredBfs& bfs_;
  std::size_t ell_;
  std::vector<char> good_;
  std::vector<char> dead_;
  std::vector<Vertex> succ_;
  std::vector<std::size_t> cursor_;
};

void confirm_exit(ExchangeGraphView& view, std::size_t d_max) {
  LayeringOptions fresh;
  fresh.max_dist = d_max;
  const LayeredBfs check = bfs_layering(view, fresh);
  if (check.reached_t) {
    throw InvariantViolation("stage exited but a fresh layering finds dist(s,t) = " +
                             std::to_string(check.dist_t()) + " <= " +
                             std::to_string(d_max));
  }
}

}  // namespace

CunninghamStats cunningham_until(ExchangeGraphView& view, std::size_t d_max,
                                 const CunninghamOptions& options) {
  if (d_max == 0) throw ContractViolation("d_max must be at least 1");
  CunninghamStats stats;
  std::vector<std::size_t> bounds(view.vertex_count(), 0);
  LayeringOptions layering;
  layering.max_dist = d_max;
  if (options.phased) layering.lower_bounds = &bounds;

  for (;;) {
    const LayeredBfs bfs = bfs_layering(view, layering);
    ++stats.layerings;
    if (!bfs.reached_t) {
      if (!bfs.truncated) {
        stats.maximum = true;
        if (options.phased) {
          // Lower bounds only skip tests; a plain layering settles it.
          const LayeredBfs check = bfs_layering(view);
          ++stats.layerings;
          if (check.reached_t) {
            throw InvariantViolation("distance lower bounds hid an s-t path");
          }
        }
      } else if (options.check_invariants) {
        confirm_exit(view, d_max);
      }
      return stats;
    }
    const std::size_t ell = bfs.dist_t();
    if (options.check_invariants && !stats.distances.empty() &&
        ell < stats.distances.back()) {
      throw InvariantViolation("s-t distance dropped from " +
                               std::to_string(stats.distances.back()) + " to " +
                               std::to_string(ell));
    }
    stats.distances.push_back(ell);

    LayerWalker walker(view, bfs);
    if (options.phased) {
      walker.mark();
    } else {
      walker.assume_layers();
    }
    bool fresh_marks = true;
    std::size_t found = 0;
    for (;;) {
      auto path = walker.walk();
      if (!path) {
        if (options.phased && !fresh_marks) {
          walker.mark();
          fresh_marks = true;
          continue;
        }
        break;
      }
      walker.retire(*path);
      AugmentingPath p = make_chordless(view, *path);
      if (p.vertices.size() != path->size()) {
        throw InvariantViolation("a shortest augmenting path had a chord");
      }
      view.apply(p);
      ++stats.augmentations;
      ++found;
      fresh_marks = false;
      if (!options.phased) break;
    }
    if (found == 0) {
      throw InvariantViolation("layering reached t at distance " +
                               std::to_string(ell) + " but no path was found");
    }
  }
}

std::vector<ElementId> naive_exact(const IndependenceOracle& m1,
                                   const IndependenceOracle& m2,
                                   NaiveStats* stats) {
  ExchangeGraphView view(m1, m2, greedy_maximal_common(m1, m2));
  const std::size_t greedy_size = view.size();
  CunninghamOptions options;
  options.phased = false;
  const CunninghamStats augment = cunningham_until(view, kUnreached, options);
  if (stats) {
    stats->greedy_size = greedy_size;
    stats->augment = augment;
  }
  return view.current();
}

}  // namespace matint
