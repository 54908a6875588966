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

#include "matint/oracle.hpp"

#include <algorithm>
#include <string>

namespace matint {

std::string_view matroid_kind_name(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kUniform:
      return "uniform";
    case MatroidKind::kPartition:
      return "partition";
    case MatroidKind::kGraphic:
      return "graphic";
    case MatroidKind::kBinaryLinear:
      return "binary_linear";
    case MatroidKind::kHiddenCustom:
      return "hidden_custom";
  }
  return "unknown";
}

bool IndependenceOracle::is_independent(std::span<const ElementId> set,
                                        Stage stage) const {
  for (ElementId e : set) {
    if (e >= n_) {
      throw ContractViolation("element " + std::to_string(e) +
                              " out of range for ground set of size " +
                              std::to_string(n_));
    }
  }
  if (ledger_ != nullptr) ledger_->record(matroid_slot_, stage);
  return check(set);
}

PartitionOracle::PartitionOracle(std::vector<std::uint32_t> block_of,
                                 std::vector<std::uint32_t> caps)
    : IndependenceOracle(MatroidKind::kPartition, block_of.size()),
      block_of_(std::move(block_of)),
      caps_(std::move(caps)) {
  for (auto b : block_of_) {
    if (b >= caps_.size()) throw ContractViolation("partition block out of range");
  }
}

bool PartitionOracle::check(std::span<const ElementId> set) const {
  thread_local std::vector<std::uint32_t> used;
  thread_local std::vector<std::uint32_t> touched;
  if (used.size() < caps_.size()) used.resize(caps_.size(), 0);
  touched.clear();
  bool ok = true;
  for (ElementId e : set) {
    const auto b = block_of_[e];
    if (used[b] == 0) touched.push_back(b);
    if (++used[b] > caps_[b]) {
      ok = false;
      break;
    }
  }
  for (auto b : touched) used[b] = 0;
  return ok;
}

GraphicOracle::GraphicOracle(
    std::size_t vertex_count,
    std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoints)
    : IndependenceOracle(MatroidKind::kGraphic, endpoints.size()),
      vertex_count_(vertex_count),
      endpoints_(std::move(endpoints)) {
  for (const auto& [a, b] : endpoints_) {
    if (a >= vertex_count_ || b >= vertex_count_) {
      throw ContractViolation("graphic edge references a missing vertex");
    }
  }
}

bool GraphicOracle::check(std::span<const ElementId> set) const {
  // Union-find over the touched vertices only; parent[v] == v + 1 encodes
  // "untouched" as 0 so the scratch array never needs a full reset.
  thread_local std::vector<std::uint32_t> parent;
  thread_local std::vector<std::uint32_t> touched;
  if (parent.size() < vertex_count_) parent.resize(vertex_count_, 0);
  touched.clear();

  auto find = [&](std::uint32_t v) {
    if (parent[v] == 0) {
      parent[v] = v + 1;
      touched.push_back(v);
    }
    std::uint32_t root = v;
    while (parent[root] != root + 1) root = parent[root] - 1;
    while (parent[v] != root + 1) {
      const std::uint32_t next = parent[v] - 1;
      parent[v] = root + 1;
      v = next;
    }
    return root;
  };

  bool acyclic = set.size() < vertex_count_ || set.empty();
  if (acyclic) {
    for (ElementId e : set) {
      const auto ra = find(endpoints_[e].first);
      const auto rb = find(endpoints_[e].second);
      if (ra == rb) {
        acyclic = false;
        break;
      }
      parent[ra] = rb + 1;
    }
  }
  for (auto v : touched) parent[v] = 0;
  return acyclic;
}

BinaryLinearOracle::BinaryLinearOracle(
    std::size_t dim, std::vector<std::vector<std::uint64_t>> columns)
    : IndependenceOracle(MatroidKind::kBinaryLinear, columns.size()),
      dim_(dim),
      words_((dim + 63) / 64),
      columns_(std::move(columns)) {
  for (auto& col : columns_) {
    if (col.size() != words_) {
      throw ContractViolation("binary column has the wrong dimension");
    }
    if (dim_ % 64 != 0 && !col.empty() &&
        (col.back() >> (dim_ % 64)) != 0) {
      throw ContractViolation("binary column has bits beyond its dimension");
    }
  }
}

bool BinaryLinearOracle::check(std::span<const ElementId> set) const {
  if (set.size() > dim_) return false;
  // basis row p holds a reduced vector whose highest set bit is p.
  thread_local std::vector<std::uint64_t> basis;
  thread_local std::vector<std::uint32_t> pivots;
  thread_local std::vector<std::uint64_t> row;
  basis.assign(set.size() * words_, 0);
  pivots.clear();
  row.resize(words_);

  auto highest_bit = [&](const std::uint64_t* v) -> std::int64_t {
    for (std::size_t w = words_; w-- > 0;) {
      if (v[w] != 0) {
        return static_cast<std::int64_t>(w * 64 + 63 -
                                         static_cast<std::size_t>(__builtin_clzll(v[w])));
      }
    }
    return -1;
  };

  for (ElementId e : set) {
    std::copy(columns_[e].begin(), columns_[e].end(), row.begin());
    for (;;) {
      const std::int64_t top = highest_bit(row.data());
      if (top < 0) return false;
      const auto it = std::find(pivots.begin(), pivots.end(),
                                static_cast<std::uint32_t>(top));
      if (it == pivots.end()) {
        std::copy(row.begin(), row.end(),
                  basis.begin() + static_cast<std::ptrdiff_t>(pivots.size() * words_));
        pivots.push_back(static_cast<std::uint32_t>(top));
        break;
      }
      const auto* b = basis.data() + (it - pivots.begin()) * words_;
      for (std::size_t w = 0; w < words_; ++w) row[w] ^= b[w];
    }
  }
  return true;
}

}  // namespace matint
