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

#include "matint/ledger.hpp"

namespace matint {

QueryLedger& QueryLedger::operator=(const QueryLedger& other) {
  for (int m = 0; m < kMatroids; ++m) {
    for (std::size_t s = 0; s < kStageCount; ++s) {
      counts_[m][s].store(other.counts_[m][s].load(std::memory_order_relaxed),
                          std::memory_order_relaxed);
    }
  }
  return *this;
}

std::uint64_t QueryLedger::matroid_total(int matroid) const {
  std::uint64_t sum = 0;
  for (const auto& c : counts_[matroid]) sum += c.load(std::memory_order_relaxed);
  return sum;
}

LedgerSnapshot LedgerSnapshot::of(const QueryLedger& ledger) {
  LedgerSnapshot snap;
  for (int m = 0; m < QueryLedger::kMatroids; ++m) {
    for (std::size_t s = 0; s < kStageCount; ++s) {
      snap.counts[m][s] = ledger.count(m, static_cast<Stage>(s));
    }
  }
  return snap;
}

std::uint64_t LedgerSnapshot::total() const {
  std::uint64_t sum = 0;
  for (const auto& row : counts) {
    for (auto c : row) sum += c;
  }
  return sum;
}

LedgerSnapshot LedgerSnapshot::operator-(const LedgerSnapshot& earlier) const {
  LedgerSnapshot out;
  for (int m = 0; m < QueryLedger::kMatroids; ++m) {
    for (std::size_t s = 0; s < kStageCount; ++s) {
      out.counts[m][s] = counts[m][s] - earlier.counts[m][s];
    }
  }
  return out;
}

}  // namespace matint
