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

#include "matint/reachability.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

namespace matint {

std::string_view mode_name(CategorizerMode mode) {
  return mode == CategorizerMode::kRandomized ? "rand" : "det";
}

std::size_t choose_k(std::size_t h, std::size_t x_size) {
  if (h == 0) throw ContractViolation("h must be at least 1");
  if (x_size <= 10 * h) return 0;
  const double q = static_cast<double>(x_size - 10 * h) /
                   static_cast<double>(x_size);  // 1 - 10x
  auto k = static_cast<std::size_t>(
      std::max(1.0, std::ceil(std::log(0.25) / std::log(q))));
  // Settle rounding in the quotient by testing the definition directly.
  while (k > 1 && std::pow(q, static_cast<double>(k - 1)) <= 0.25) --k;
  while (std::pow(q, static_cast<double>(k)) > 0.25) ++k;
  return k;
}

std::size_t default_repetitions(std::size_t n) {
  const double ln = std::log(static_cast<double>(std::max<std::size_t>(n, 2)));
  return static_cast<std::size_t>(std::ceil(80.0 * ln));
}

std::uint64_t ceil_root(std::uint64_t x, int degree) {
  auto power_at_least = [&](std::uint64_t m) {
    // m^degree >= x without overflow.
    std::uint64_t p = 1;
    for (int i = 0; i < degree; ++i) {
      if (p > x / m) return true;
      p *= m;
    }
    return p >= x;
  };
  if (x <= 1) return x;
  std::uint64_t guess = static_cast<std::uint64_t>(
      std::pow(static_cast<double>(x), 1.0 / degree));
  guess = std::max<std::uint64_t>(guess, 1);
  while (guess > 1 && power_at_least(guess - 1)) --guess;
  while (!power_at_least(guess)) ++guess;
  return guess;
}

std::size_t select_h(std::size_t r_est, CategorizerMode mode) {
  const int degree = mode == CategorizerMode::kRandomized ? 2 : 3;
  return std::max<std::size_t>(1, ceil_root(r_est, degree));
}

bool experiment_once(NeighborhoodOracle& oracle, ElementId v,
                     std::span<const ElementId> x, std::size_t k, Rng& rng,
                     Stage stage) {
  if (k == 0) return true;
  if (x.empty()) throw ContractViolation("cannot sample from an empty set");
  std::vector<ElementId> sample(k);
  for (auto& e : sample) e = x[rng.below(x.size())];
  std::sort(sample.begin(), sample.end());
  sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
  return !oracle.exists_out_edge(v, sample, false, stage);
}

namespace {

constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

// S ordered by ascending weight. Weights move by one, so each update is a
// swap with the boundary of the element's bucket.
class WeightOrder {
 public:
  WeightOrder(std::span<const ElementId> elements, std::size_t n)
      : order_(elements.begin(), elements.end()),
        pos_(n, 0),
        start_{0, static_cast<std::uint32_t>(elements.size())} {
    for (std::size_t i = 0; i < order_.size(); ++i) pos_[order_[i]] = i;
  }

  const std::vector<ElementId>& order() const { return order_; }

  void increment(ElementId u, std::vector<std::uint32_t>& weight) {
    const std::uint32_t w = weight[u];
    if (start_.size() < w + 3) start_.push_back(static_cast<std::uint32_t>(order_.size()));
    place(u, start_[w + 1] - 1);
    --start_[w + 1];
    ++weight[u];
  }

  void decrement(ElementId u, std::vector<std::uint32_t>& weight) {
    const std::uint32_t w = weight[u];
    place(u, start_[w]);
    ++start_[w];
    --weight[u];
  }

 private:
  void place(ElementId u, std::size_t j) {
    const ElementId other = order_[j];
    std::swap(order_[pos_[u]], order_[j]);
    pos_[other] = pos_[u];
    pos_[u] = j;
  }

  std::vector<ElementId> order_;
  std::vector<std::size_t> pos_;
  // start_[w]: first index of weight >= w; the last entry is |S|.
  std::vector<std::uint32_t> start_;
};

std::size_t index_of(std::span<const ElementId> xs, std::size_t from, Vertex x) {
  while (xs[from] != x) ++from;
  return from;
}

class Augmenter {
 public:
  Augmenter(NeighborhoodOracle& oracle, const AugmentationConfig& config, Rng& rng)
      : oracle_(oracle),
        config_(config),
        rng_(rng),
        n_(oracle.element_count()),
        s_(oracle.source()),
        t_(oracle.sink()) {
    if (config.h == 0) throw ContractViolation("h must be at least 1");
    reps_ = config.repetitions ? config.repetitions : default_repetitions(n_);
    const std::size_t vertices = oracle.vertex_count();
    state_.h = config.h;
    state_.in_f.assign(vertices, 0);
    state_.pred.assign(vertices, kNone);
    state_.label.assign(n_, Label::kUnknown);
    state_.light_out.resize(n_);
    state_.light_in.resize(n_);
    state_.t_edge.assign(n_, -1);
    state_.n_v.resize(n_);
    state_.weight.assign(n_, 0);
    state_.holders.resize(n_);
    sampled_heavy_.assign(n_, 0);
    scratch_.assign(n_, 0);
    for (ElementId e = 0; e < n_; ++e) {
      (oracle.in_s(e) ? left_ : right_).push_back(e);
    }
    if (config.mode == CategorizerMode::kDeterministic) order_.emplace(left_, n_);
    state_.in_f[s_] = 1;
  }

  AugmentationResult run() {
    AugmentationResult result;
    auto& stats = result.stats;
    for (;;) {
      ++state_.phase;
      ++stats.phases;
      if (config_.check_invariants) check_found_set();
      if (config_.mode == CategorizerMode::kRandomized) {
        categorize_randomized();
      } else {
        categorize_deterministic();
      }
      if (config_.check_invariants) check_labels();
      if (config_.observer) config_.observer->after_categorize(oracle_, state_);

      const std::uint64_t before = oracle_.queries_issued();
      auto path = reverse_bfs(oracle_, state_);
      stats.reverse_bfs_costs.push_back(oracle_.queries_issued() - before);
      if (!path) return result;

      std::size_t path_left = 0;
      for (std::size_t i = 1; i < path->size(); ++i) {
        const Vertex x = (*path)[i];
        state_.pred[x] = (*path)[i - 1];
        join(x);
        if (oracle_.in_s(x)) ++path_left;
      }
      const Vertex root = path->back();
      const std::size_t from_root = close_over(root);
      if (sampled_heavy_[root] && !state_.in_f[t_] &&
          from_root + path_left < state_.h) {
        ++stats.misclassification_events;
      }
      for (std::size_t i = 1; i + 1 < path->size() && !state_.in_f[t_]; ++i) {
        const Vertex x = (*path)[i];
        if (!oracle_.in_s(x)) close_over(x);
      }
      if (state_.in_f[t_]) break;
    }

    std::vector<Vertex> walk{t_};
    while (walk.back() != s_) walk.push_back(state_.pred[walk.back()]);
    std::reverse(walk.begin(), walk.end());
    result.path = make_chordless(oracle_, std::move(walk));
    return result;
  }

 private:
  // S \ F_S in ascending id order.
  std::vector<ElementId> open_left() const {
    std::vector<ElementId> xs;
    for (ElementId u : left_) {
      if (!state_.in_f[u]) xs.push_back(u);
    }
    return xs;
  }

  bool has_t_edge(ElementId v, Stage stage) {
    if (state_.t_edge[v] < 0) {
      state_.t_edge[v] = oracle_.exists_out_edge(v, {}, true, stage) ? 1 : 0;
    }
    return state_.t_edge[v] == 1;
  }

  void make_light(ElementId v, std::vector<ElementId> out) {
    state_.label[v] = Label::kLight;
    for (ElementId u : out) state_.light_in[u].push_back(v);
    state_.light_out[v] = std::move(out);
  }

  void categorize_randomized() {
    const std::vector<ElementId> xs = open_left();
    const std::size_t k = choose_k(state_.h, xs.size());
    for (ElementId v : right_) {
      if (state_.in_f[v] || state_.label[v] == Label::kLight) continue;
      sampled_heavy_[v] = 0;
      if (has_t_edge(v, Stage::kCategorizeRand)) {
        state_.label[v] = Label::kHeavy;
        continue;
      }
      // Heavy iff fewer than reps/2 successes; stop once that is settled.
      std::size_t successes = 0;
      for (std::size_t done = 0; done < reps_; ++done) {
        if (2 * successes >= reps_) break;
        if (2 * (successes + (reps_ - done)) < reps_) break;
        if (experiment_once(oracle_, v, xs, k, rng_)) ++successes;
      }
      if (2 * successes < reps_) {
        state_.label[v] = Label::kHeavy;
        sampled_heavy_[v] = 1;
        continue;
      }
      // Likely light: list out-neighbours, giving up at h.
      std::vector<ElementId> found;
      std::span<const ElementId> rest(xs);
      std::size_t pos = 0;
      while (found.size() < state_.h) {
        auto u = oracle_.out_edge(v, rest.subspan(pos), false, Stage::kLightEdges);
        if (!u) break;
        found.push_back(*u);
        pos = index_of(rest, pos, *u) + 1;
      }
      if (found.size() >= state_.h) {
        state_.label[v] = Label::kHeavy;
      } else {
        make_light(v, std::move(found));
      }
    }
  }

  void categorize_deterministic() {
    std::vector<ElementId> xs;
    for (ElementId v : right_) {
      if (state_.in_f[v] || state_.label[v] == Label::kLight) continue;
      if (has_t_edge(v, Stage::kCategorizeDet)) {
        state_.label[v] = Label::kHeavy;
        continue;
      }
      auto& nv = state_.n_v[v];
      if (nv.size() < state_.h) {
        for (ElementId u : nv) scratch_[u] = 1;
        xs.clear();
        for (ElementId u : order_->order()) {
          if (!state_.in_f[u] && !scratch_[u]) xs.push_back(u);
        }
        for (ElementId u : nv) scratch_[u] = 0;
        // Earlier entries have no edge from v, so each search resumes
        // right after the last neighbour found.
        std::span<const ElementId> rest(xs);
        std::size_t pos = 0;
        while (nv.size() < state_.h) {
          auto u = oracle_.out_edge(v, rest.subspan(pos), false, Stage::kCategorizeDet);
          if (!u) break;
          nv.push_back(*u);
          state_.holders[*u].push_back(v);
          order_->increment(*u, state_.weight);
          pos = index_of(rest, pos, *u) + 1;
        }
        if (nv.size() < state_.h) {
          make_light(v, nv);
          continue;
        }
      }
      state_.label[v] = Label::kHeavy;
    }
  }

  void join(Vertex x) {
    state_.in_f[x] = 1;
    if (!order_ || x == t_) return;
    auto& weight = state_.weight;
    if (oracle_.in_s(x)) {
      for (ElementId v : state_.holders[x]) {
        auto& nv = state_.n_v[v];
        nv.erase(std::find(nv.begin(), nv.end(), x));
        order_->decrement(x, weight);
      }
      state_.holders[x].clear();
    } else {
      for (ElementId u : state_.n_v[x]) {
        auto& hs = state_.holders[u];
        hs.erase(std::find(hs.begin(), hs.end(), x));
        order_->decrement(u, weight);
      }
      state_.n_v[x].clear();
    }
  }

  // Adds every out-neighbour of v in (S \ F) + t to F. Returns how many S
  // vertices were added; stops early once t is reached.
  std::size_t close_over(ElementId v) {
    const std::vector<ElementId> xs = open_left();
    std::span<const ElementId> rest(xs);
    std::size_t pos = 0;
    std::size_t added = 0;
    bool with_sink = true;
    for (;;) {
      auto u = oracle_.out_edge(v, rest.subspan(pos), with_sink, Stage::kPathClosure);
      if (!u) break;
      state_.pred[*u] = v;
      join(*u);
      if (*u == t_) break;
      with_sink = false;
      ++added;
      pos = index_of(rest, pos, *u) + 1;
    }
    return added;
  }

  // Invariants checked at phase start: every member of F is reached from
  // its recorded predecessor, and no right-side member of F has an edge
  // leaving F.
  void check_found_set() {
    const std::vector<ElementId> xs = open_left();
    for (Vertex x = 0; x < oracle_.vertex_count(); ++x) {
      if (!state_.in_f[x] || x == s_) continue;
      const Vertex p = state_.pred[x];
      if (p == kNone || !state_.in_f[p] || !oracle_.has_edge(p, x, Stage::kOther)) {
        fail("vertex " + std::to_string(x) + " in F lacks a valid predecessor");
      }
    }
    for (ElementId v : right_) {
      if (!state_.in_f[v]) continue;
      if (oracle_.exists_out_edge(v, xs, !state_.in_f[t_], Stage::kOther)) {
        fail("right vertex " + std::to_string(v) + " in F has an edge leaving F");
      }
    }
  }

  // Invariants checked after categorization: light edge lists are complete,
  // light stays light, and the weights add up.
  void check_labels() {
    const std::vector<ElementId> xs = open_left();
    std::vector<ElementId> rest;
    for (ElementId v : right_) {
      if (was_light_.size() == n_ && was_light_[v] && state_.label[v] != Label::kLight) {
        fail("light vertex " + std::to_string(v) + " lost its label");
      }
      if (state_.in_f[v] || state_.label[v] != Label::kLight) continue;
      for (ElementId u : state_.light_out[v]) {
        if (!state_.in_f[u]) scratch_[u] = 1;
      }
      rest.clear();
      for (ElementId u : xs) {
        if (!scratch_[u]) rest.push_back(u);
      }
      for (ElementId u : state_.light_out[v]) {
        if (!scratch_[u]) continue;
        scratch_[u] = 0;
        if (!oracle_.has_edge(v, u, Stage::kOther)) {
          fail("recorded light edge " + std::to_string(v) + "->" +
               std::to_string(u) + " does not exist");
        }
      }
      if (oracle_.exists_out_edge(v, rest, true, Stage::kOther)) {
        fail("light vertex " + std::to_string(v) + " has an unrecorded out-edge");
      }
      if (state_.light_out[v].size() >= state_.h) {
        fail("light vertex " + std::to_string(v) + " has h or more out-edges");
      }
    }
    was_light_.assign(n_, 0);
    for (ElementId v : right_) was_light_[v] = state_.label[v] == Label::kLight;

    std::uint64_t weight_sum = 0;
    std::uint64_t set_sum = 0;
    for (ElementId u : left_) weight_sum += state_.weight[u];
    for (ElementId v : right_) set_sum += state_.n_v[v].size();
    if (weight_sum != set_sum ||
        weight_sum > static_cast<std::uint64_t>(n_) * state_.h) {
      fail("weights sum to " + std::to_string(weight_sum) + " but candidate sets to " +
           std::to_string(set_sum));
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvariantViolation("phase " + std::to_string(state_.phase) + ": " + what);
  }

  NeighborhoodOracle& oracle_;
  const AugmentationConfig& config_;
  Rng& rng_;
  std::size_t n_;
  Vertex s_;
  Vertex t_;
  std::size_t reps_ = 1;
  PhaseState state_;
  std::vector<ElementId> left_;
  std::vector<ElementId> right_;
  std::optional<WeightOrder> order_;
  std::vector<char> sampled_heavy_;
  std::vector<char> scratch_;
  std::vector<char> was_light_;
};

}  // namespace

std::optional<std::vector<Vertex>> reverse_bfs(NeighborhoodOracle& oracle,
                                               const PhaseState& state) {
  const std::size_t n = oracle.element_count();
  const Vertex s = oracle.source();
  std::vector<char> visited(oracle.vertex_count(), 0);
  std::vector<Vertex> next(oracle.vertex_count(), kNone);
  std::vector<ElementId> left;
  std::deque<Vertex> queue;
  for (ElementId e = 0; e < n; ++e) {
    if (oracle.in_s(e)) {
      left.push_back(e);
    } else if (!state.in_f[e] && state.label[e] == Label::kHeavy) {
      visited[e] = 1;
      queue.push_back(e);
    }
  }

  auto path_from = [&](Vertex x) {
    std::vector<Vertex> path{x};
    while (next[path.back()] != kNone) path.push_back(next[path.back()]);
    return path;
  };

  std::vector<ElementId> xs;
  while (!queue.empty()) {
    const Vertex y = queue.front();
    queue.pop_front();
    if (oracle.in_s(y)) {
      for (ElementId w : state.light_in[y]) {
        if (visited[w]) continue;
        visited[w] = 1;
        next[w] = y;
        if (state.in_f[w]) return path_from(w);
        queue.push_back(w);
      }
      continue;
    }
    xs.clear();
    for (ElementId u : left) {
      if (!visited[u]) xs.push_back(u);
    }
    std::span<const ElementId> rest(xs);
    std::size_t pos = 0;
    bool with_source = !visited[s];
    for (;;) {
      auto x = oracle.in_edge(y, rest.subspan(pos), with_source, Stage::kReverseBfs);
      if (!x) break;
      visited[*x] = 1;
      next[*x] = y;
      if (state.in_f[*x]) return path_from(*x);
      queue.push_back(*x);
      with_source = false;
      pos = index_of(rest, pos, *x) + 1;
    }
  }
  return std::nullopt;
}

AugmentationResult find_augmenting_path(NeighborhoodOracle& oracle,
                                        const AugmentationConfig& config,
                                        Rng& rng) {
  return Augmenter(oracle, config, rng).run();
}

}  // namespace matint
