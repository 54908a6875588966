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
#include <span>
#include <vector>

#include "matint/neighborhood.hpp"
#include "matint/oracle.hpp"

namespace matint {

// The exchange graph G(S) of a common independent set S, with edges decided
// by independence queries:
//   s -> v   iff S + v in I1
//   v -> t   iff S + v in I2
//   u -> v   iff S - u + v in I1   (u in S, v not in S)
//   v -> u   iff S - u + v in I2
// A set query over X (subset of S) is a single query on (S \ X) + v. When
// S + v is already independent every u in S is a neighbour; such edges are
// kept and left to make_chordless.
class ExchangeGraphView final : public NeighborhoodOracle {
 public:
  // `s` is trusted to be common independent; see validate_common().
  ExchangeGraphView(const IndependenceOracle& m1, const IndependenceOracle& m2,
                    std::vector<ElementId> s = {});

  bool in_s(ElementId e) const override { return in_s_[e] != 0; }
  const std::vector<ElementId>& current() const { return s_list_; }
  std::size_t size() const { return s_list_.size(); }

  const IndependenceOracle& m1() const { return m1_; }
  const IndependenceOracle& m2() const { return m2_; }

  // S <- S xor V(p). The path must be chordless. The result is re-checked
  // with one query per matroid (Stage::kOther); a failure throws
  // InvariantViolation and leaves S unchanged.
  void apply(const AugmentingPath& path);

 protected:
  bool query_in(ElementId v, std::span<const ElementId> from, bool with_source,
                Stage stage) override;
  bool query_out(ElementId v, std::span<const ElementId> to, bool with_sink,
                 Stage stage) override;

 private:
  bool exchange_query(const IndependenceOracle& m, ElementId v,
                      std::span<const ElementId> removed, Stage stage);

  const IndependenceOracle& m1_;
  const IndependenceOracle& m2_;
  std::vector<ElementId> s_list_;
  std::vector<char> in_s_;
  std::vector<char> scratch_;
  std::vector<ElementId> buffer_;
};

// Throws ValidationError unless `set` is a duplicate-free list of elements
// that is independent in both matroids. Two queries (Stage::kOther).
void validate_common(const IndependenceOracle& m1, const IndependenceOracle& m2,
                     std::span<const ElementId> set);

}  // namespace matint
