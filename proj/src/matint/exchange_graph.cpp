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

#include "matint/exchange_graph.hpp"

#include <algorithm>
#include <string>

namespace matint {

ExchangeGraphView::ExchangeGraphView(const IndependenceOracle& m1,
                                     const IndependenceOracle& m2,
                                     std::vector<ElementId> s)
    : NeighborhoodOracle(m1.ground_size()),
      m1_(m1),
      m2_(m2),
      s_list_(std::move(s)),
      in_s_(m1.ground_size(), 0),
      scratch_(m1.ground_size(), 0) {
  if (m1.ground_size() != m2.ground_size()) {
    throw ContractViolation("matroids are over different ground sets");
  }
  for (ElementId e : s_list_) {
    if (e >= in_s_.size() || in_s_[e]) {
      throw ContractViolation("initial set has a repeated or out-of-range element");
    }
    in_s_[e] = 1;
  }
  std::sort(s_list_.begin(), s_list_.end());
}

bool ExchangeGraphView::exchange_query(const IndependenceOracle& m, ElementId v,
                                       std::span<const ElementId> removed,
                                       Stage stage) {
  for (ElementId u : removed) scratch_[u] = 1;
  buffer_.clear();
  for (ElementId u : s_list_) {
    if (!scratch_[u]) buffer_.push_back(u);
  }
  buffer_.push_back(v);
  for (ElementId u : removed) scratch_[u] = 0;
  charge();
  return m.is_independent(buffer_, stage);
}

bool ExchangeGraphView::query_in(ElementId v, std::span<const ElementId> from,
                                 bool with_source, Stage stage) {
  if (with_source && exchange_query(m1_, v, {}, stage)) return true;
  return !from.empty() && exchange_query(m1_, v, from, stage);
}

bool ExchangeGraphView::query_out(ElementId v, std::span<const ElementId> to,
                                  bool with_sink, Stage stage) {
  if (with_sink && exchange_query(m2_, v, {}, stage)) return true;
  return !to.empty() && exchange_query(m2_, v, to, stage);
}

void ExchangeGraphView::apply(const AugmentingPath& path) {
  if (!path.chordless) {
    throw ContractViolation("only chordless paths may be applied");
  }
  check_path_shape(*this, path.vertices);
  std::vector<char> next = in_s_;
  for (std::size_t i = 1; i + 1 < path.vertices.size(); ++i) {
    const Vertex x = path.vertices[i];
    next[x] = next[x] ? 0 : 1;
  }
  std::vector<ElementId> list;
  list.reserve(s_list_.size() + 1);
  for (ElementId e = 0; e < next.size(); ++e) {
    if (next[e]) list.push_back(e);
  }
  if (list.size() != s_list_.size() + 1) {
    throw InvariantViolation("augmentation did not grow S by exactly one");
  }
  if (!m1_.is_independent(list, Stage::kOther) ||
      !m2_.is_independent(list, Stage::kOther)) {
    throw InvariantViolation("S xor V(p) is not common independent (path of " +
                             std::to_string(path.vertices.size()) +
                             " vertices)");
  }
  in_s_ = std::move(next);
  s_list_ = std::move(list);
}

void validate_common(const IndependenceOracle& m1, const IndependenceOracle& m2,
                     std::span<const ElementId> set) {
  std::vector<char> seen(m1.ground_size(), 0);
  for (ElementId e : set) {
    if (e >= seen.size() || seen[e]) {
      throw ValidationError("set has a repeated or out-of-range element");
    }
    seen[e] = 1;
  }
  if (!m1.is_independent(set, Stage::kOther)) {
    throw ValidationError("set is not independent in the first matroid");
  }
  if (!m2.is_independent(set, Stage::kOther)) {
    throw ValidationError("set is not independent in the second matroid");
  }
}

}  // namespace matint
