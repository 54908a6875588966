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

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "matint/oracle.hpp"

namespace matint {

struct UniformSpec {
  std::uint32_t k = 0;
  bool operator==(const UniformSpec&) const = default;
};

// Blocks must cover [0, n) disjointly; caps[i] applies to blocks[i].
struct PartitionSpec {
  std::vector<std::vector<ElementId>> blocks;
  std::vector<std::uint32_t> caps;
  bool operator==(const PartitionSpec&) const = default;
};

// Element i is edges[i].
struct GraphicSpec {
  std::uint32_t vertex_count = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  bool operator==(const GraphicSpec&) const = default;
};

// Element i is columns[i], packed little-endian into 64-bit words.
struct BinaryLinearSpec {
  std::uint32_t dim = 0;
  std::vector<std::vector<std::uint64_t>> columns;
  bool operator==(const BinaryLinearSpec&) const = default;
};

using MatroidSpec =
    std::variant<UniformSpec, PartitionSpec, GraphicSpec, BinaryLinearSpec>;

// A matroid-intersection instance: two matroids on the same ground set.
struct Instance {
  std::string id;
  std::size_t n = 0;
  MatroidSpec matroid1;
  MatroidSpec matroid2;
  bool operator==(const Instance&) const = default;
};

// Throws SchemaError when a spec is inconsistent with n (blocks not a
// disjoint cover, dangling graph vertices, ragged columns, ...).
void validate(const Instance& instance);

std::unique_ptr<IndependenceOracle> make_oracle(const MatroidSpec& spec,
                                                std::size_t n);

// JSON instance format:
//   {"id": str, "n": int, "matroid1": {...}, "matroid2": {...}}
// with per-kind payloads
//   {"kind": "uniform", "k": int}
//   {"kind": "partition", "blocks": [[e, ...], ...], "caps": [int, ...]}
//   {"kind": "graphic", "vertices": int, "edges": [[a, b], ...]}
//   {"kind": "binary_linear", "dim": int, "columns": [hex, ...]}
// Hex columns are big-endian digit strings of exactly ceil(dim / 4) digits.
// to_json() output is canonical, so save/load/save is byte-identical.
std::string to_json(const Instance& instance);
Instance instance_from_json(std::string_view text);

void save_instance(const Instance& instance, const std::string& path);
Instance load_instance(const std::string& path);

std::string encode_hex_column(const std::vector<std::uint64_t>& words,
                              std::uint32_t dim);
std::vector<std::uint64_t> decode_hex_column(std::string_view hex,
                                             std::uint32_t dim);

enum class Family : std::uint8_t {
  kBipartiteMatching,
  kRainbowSpanningTree,
  kRandomBinaryLinear,
  kPlantedRank,
  kUniformPartition,
};

std::string_view family_name(Family family);
// Throws ValidationError for an unknown name.
Family parse_family(std::string_view name);

struct GenerateOptions {
  // bipartite_matching: planted matching size as a fraction of n.
  double r_ratio = 0.5;
  // planted_rank: target rank; negative means n / 2.
  std::int64_t planted_rank = -1;
};

// Deterministic in (family, n, seed, options). n >= 1.
//   bipartite_matching   partition x partition; elements are edges of a
//                        bipartite graph with a planted perfect matching on
//                        round(r_ratio * n) vertex pairs, so r is known.
//   rainbow_spanning_tree graphic x partition (random edge colours).
//   random_binary_linear two random GF(2) column matroids.
//   planted_rank         graphic x partition whose rank is planted_rank:
//                        a rainbow spanning tree on rank + 1 vertices plus
//                        extra edges recoloured from the tree's palette.
//   uniform_partition    uniform x partition.
Instance generate_instance(Family family, std::size_t n, std::uint64_t seed,
                           const GenerateOptions& options = {});

// The planted rank of a generated instance when the family plants one
// (bipartite_matching, planted_rank); -1 otherwise.
std::int64_t planted_rank_of(Family family, std::size_t n,
                             const GenerateOptions& options = {});

}  // namespace matint
