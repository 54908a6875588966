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

#include <array>
#include <atomic>
#include <cstdint>

#include "matint/common.hpp"

namespace matint {

// Per-matroid, per-stage independence-query counters. This is the unit of
// cost every benchmark reports. Counters are atomic so concurrent queries on
// shared oracles stay exact.
class QueryLedger {
 public:
  static constexpr int kMatroids = 2;

  QueryLedger() = default;
  QueryLedger(const QueryLedger& other) { *this = other; }
  QueryLedger& operator=(const QueryLedger& other);

  void record(int matroid, Stage stage) {
    counts_[matroid][static_cast<std::size_t>(stage)].fetch_add(
        1, std::memory_order_relaxed);
  }

  std::uint64_t count(int matroid, Stage stage) const {
    return counts_[matroid][static_cast<std::size_t>(stage)].load(
        std::memory_order_relaxed);
  }
  std::uint64_t stage_total(Stage stage) const {
    return count(0, stage) + count(1, stage);
  }
  std::uint64_t matroid_total(int matroid) const;
  std::uint64_t total() const { return matroid_total(0) + matroid_total(1); }

 private:
  std::array<std::array<std::atomic<std::uint64_t>, kStageCount>, kMatroids>
      counts_{};
};

// Plain snapshot of a ledger, used for deltas and reports.
struct LedgerSnapshot {
  std::array<std::array<std::uint64_t, kStageCount>, QueryLedger::kMatroids>
      counts{};

  static LedgerSnapshot of(const QueryLedger& ledger);

  std::uint64_t stage_total(Stage stage) const {
    const auto i = static_cast<std::size_t>(stage);
    return counts[0][i] + counts[1][i];
  }
  std::uint64_t total() const;
  LedgerSnapshot operator-(const LedgerSnapshot& earlier) const;
};

}  // namespace matint
