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
#include <functional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "matint/common.hpp"
#include "matint/ledger.hpp"

namespace matint {

enum class MatroidKind : std::uint8_t {
  kUniform,
  kPartition,
  kGraphic,
  kBinaryLinear,
  kHiddenCustom,
};

std::string_view matroid_kind_name(MatroidKind kind);

// Answers "is T independent?" for one matroid on the ground set [0, n).
//
// Every call goes through is_independent(), which range-checks T and charges
// one query to the attached ledger under the caller's stage. Implementations
// are pure: no state survives between queries, so the number of queries a
// solver makes does not depend on oracle internals. Concurrent queries are
// safe; scratch space is thread-local.
//
// The elements of T are assumed distinct.
class IndependenceOracle {
 public:
  IndependenceOracle(MatroidKind kind, std::size_t n) : kind_(kind), n_(n) {}
  virtual ~IndependenceOracle() = default;

  IndependenceOracle(const IndependenceOracle&) = delete;
  IndependenceOracle& operator=(const IndependenceOracle&) = delete;

  bool is_independent(std::span<const ElementId> set,
                      Stage stage = Stage::kOther) const;

  MatroidKind kind() const { return kind_; }
  std::size_t ground_size() const { return n_; }

  // Queries are charged to `ledger` under matroid slot `matroid` (0 or 1).
  // Passing nullptr detaches.
  void attach_ledger(QueryLedger* ledger, int matroid) {
    ledger_ = ledger;
    matroid_slot_ = matroid;
  }
  QueryLedger* ledger() const { return ledger_; }
  int matroid_slot() const { return matroid_slot_; }

 protected:
  virtual bool check(std::span<const ElementId> set) const = 0;

 private:
  MatroidKind kind_;
  std::size_t n_;
  QueryLedger* ledger_ = nullptr;
  int matroid_slot_ = 0;
};

// Sets of size at most k.
class UniformOracle final : public IndependenceOracle {
 public:
  UniformOracle(std::size_t n, std::size_t k)
      : IndependenceOracle(MatroidKind::kUniform, n), k_(k) {}

 protected:
  bool check(std::span<const ElementId> set) const override {
    return set.size() <= k_;
  }

 private:
  std::size_t k_;
};

// At most caps[b] elements from block b. block_of maps each element to its
// block.
class PartitionOracle final : public IndependenceOracle {
 public:
  PartitionOracle(std::vector<std::uint32_t> block_of,
                  std::vector<std::uint32_t> caps);

 protected:
  bool check(std::span<const ElementId> set) const override;

 private:
  std::vector<std::uint32_t> block_of_;
  std::vector<std::uint32_t> caps_;
};

// Element i is the edge endpoints[i] of a multigraph; independent sets are
// forests. Self-loops are dependent on their own.
class GraphicOracle final : public IndependenceOracle {
 public:
  GraphicOracle(std::size_t vertex_count,
                std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoints);

 protected:
  bool check(std::span<const ElementId> set) const override;

 private:
  std::size_t vertex_count_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoints_;
};

// Element i is a column vector over GF(2) of dimension `dim`, packed into
// 64-bit words (bit j of the vector is bit j % 64 of word j / 64).
// Independence is linear independence, decided by elimination from scratch
// on every query.
class BinaryLinearOracle final : public IndependenceOracle {
 public:
  BinaryLinearOracle(std::size_t dim,
                     std::vector<std::vector<std::uint64_t>> columns);

 protected:
  bool check(std::span<const ElementId> set) const override;

 private:
  std::size_t dim_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> columns_;
};

// Any independence predicate supplied by the caller. The predicate must
// describe a matroid; nothing here checks that.
class CallbackOracle final : public IndependenceOracle {
 public:
  using Predicate = std::function<bool(std::span<const ElementId>)>;

  CallbackOracle(std::size_t n, Predicate predicate)
      : IndependenceOracle(MatroidKind::kHiddenCustom, n),
        predicate_(std::move(predicate)) {}

 protected:
  bool check(std::span<const ElementId> set) const override {
    return predicate_(set);
  }

 private:
  Predicate predicate_;
};

}  // namespace matint
