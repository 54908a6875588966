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
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace matint {

// Index of a ground-set element, in [0, n).
using ElementId = std::uint32_t;

// Exchange-graph vertex. Elements keep their ElementId; the source and sink
// are n and n + 1 (see NeighborhoodOracle::source()/sink()).
using Vertex = std::uint32_t;

// Which part of a solver issued an oracle query. Every query is charged to
// exactly one stage.
enum class Stage : std::uint8_t {
  kGreedy,
  kBfsLayering,
  kClassicAugment,
  kCategorizeRand,
  kCategorizeDet,
  kLightEdges,
  kReverseBfs,
  kPathClosure,
  kPostprocess,
  kOther,
};

inline constexpr std::size_t kStageCount = 10;

inline constexpr std::array<std::string_view, kStageCount> kStageNames = {
    "greedy",       "bfs_layering", "classic_augment", "categorize_rand",
    "categorize_det", "light_edges", "reverse_bfs",    "path_closure",
    "postprocess",  "other",
};

constexpr std::string_view stage_name(Stage stage) {
  return kStageNames[static_cast<std::size_t>(stage)];
}

// A caller broke an operation's precondition (element out of range, vertex on
// the wrong side of the exchange graph, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal post-condition failed. Always a solver bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Caller-supplied data was rejected (e.g. a bootstrap set that is not common
// independent).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance, plan or graph file.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace matint
