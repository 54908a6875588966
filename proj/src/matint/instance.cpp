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

#include "matint/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "matint/rng.hpp"

namespace matint {
namespace {

using nlohmann::json;

std::size_t spec_size(const MatroidSpec& spec, std::size_t n) {
  return std::visit(
      [&](const auto& s) -> std::size_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniformSpec>) {
          return n;
        } else if constexpr (std::is_same_v<T, PartitionSpec>) {
          std::size_t total = 0;
          for (const auto& b : s.blocks) total += b.size();
          return total;
        } else if constexpr (std::is_same_v<T, GraphicSpec>) {
          return s.edges.size();
        } else {
          return s.columns.size();
        }
      },
      spec);
}

void validate_spec(const MatroidSpec& spec, std::size_t n,
                   std::string_view which) {
  const std::string where = std::string(which) + ": ";
  if (spec_size(spec, n) != n) {
    throw SchemaError(where + "matroid does not have n elements");
  }
  if (const auto* p = std::get_if<PartitionSpec>(&spec)) {
    if (p->caps.size() != p->blocks.size()) {
      throw SchemaError(where + "caps and blocks differ in length");
    }
    std::vector<char> seen(n, 0);
    for (const auto& block : p->blocks) {
      for (ElementId e : block) {
        if (e >= n) throw SchemaError(where + "block element out of range");
        if (seen[e]) throw SchemaError(where + "blocks are not disjoint");
        seen[e] = 1;
      }
    }
  } else if (const auto* g = std::get_if<GraphicSpec>(&spec)) {
    for (const auto& [a, b] : g->edges) {
      if (a >= g->vertex_count || b >= g->vertex_count) {
        throw SchemaError(where + "edge references a missing vertex");
      }
    }
  } else if (const auto* bl = std::get_if<BinaryLinearSpec>(&spec)) {
    const std::size_t words = (bl->dim + 63) / 64;
    for (const auto& col : bl->columns) {
      if (col.size() != words) {
        throw SchemaError(where + "column has the wrong dimension");
      }
      if (bl->dim % 64 != 0 && (col.back() >> (bl->dim % 64)) != 0) {
        throw SchemaError(where + "column has bits beyond its dimension");
      }
    }
  }
}

json spec_to_json(const MatroidSpec& spec) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        json j;
        if constexpr (std::is_same_v<T, UniformSpec>) {
          j["kind"] = "uniform";
          j["k"] = s.k;
        } else if constexpr (std::is_same_v<T, PartitionSpec>) {
          j["kind"] = "partition";
          j["blocks"] = s.blocks;
          j["caps"] = s.caps;
        } else if constexpr (std::is_same_v<T, GraphicSpec>) {
          j["kind"] = "graphic";
          j["vertices"] = s.vertex_count;
          json edges = json::array();
          for (const auto& [a, b] : s.edges) edges.push_back({a, b});
          j["edges"] = std::move(edges);
        } else {
          j["kind"] = "binary_linear";
          j["dim"] = s.dim;
          json cols = json::array();
          for (const auto& c : s.columns) cols.push_back(encode_hex_column(c, s.dim));
          j["columns"] = std::move(cols);
        }
        return j;
      },
      spec);
}

MatroidSpec spec_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "uniform") {
    return UniformSpec{j.at("k").get<std::uint32_t>()};
  }
  if (kind == "partition") {
    PartitionSpec p;
    p.blocks = j.at("blocks").get<std::vector<std::vector<ElementId>>>();
    p.caps = j.at("caps").get<std::vector<std::uint32_t>>();
    return p;
  }
  if (kind == "graphic") {
    GraphicSpec g;
    g.vertex_count = j.at("vertices").get<std::uint32_t>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw SchemaError("edge must be a pair");
      g.edges.emplace_back(e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>());
    }
    return g;
  }
  if (kind == "binary_linear") {
    BinaryLinearSpec b;
    b.dim = j.at("dim").get<std::uint32_t>();
    for (const auto& c : j.at("columns")) {
      b.columns.push_back(decode_hex_column(c.get<std::string>(), b.dim));
    }
    return b;
  }
  throw SchemaError("unknown matroid kind '" + kind + "'");
}

PartitionSpec partition_from_labels(const std::vector<std::uint32_t>& label,
                                    std::uint32_t label_count,
                                    const std::vector<std::uint32_t>& caps) {
  PartitionSpec p;
  std::vector<std::int64_t> block_index(label_count, -1);
  for (ElementId e = 0; e < label.size(); ++e) {
    const auto l = label[e];
    if (block_index[l] < 0) {
      block_index[l] = static_cast<std::int64_t>(p.blocks.size());
      p.blocks.emplace_back();
      p.caps.push_back(caps[l]);
    }
    p.blocks[static_cast<std::size_t>(block_index[l])].push_back(e);
  }
  return p;
}

std::size_t planted_matching_size(std::size_t n, double r_ratio) {
  const auto m = static_cast<std::int64_t>(std::llround(r_ratio * static_cast<double>(n)));
  return static_cast<std::size_t>(std::clamp<std::int64_t>(m, 1, static_cast<std::int64_t>(n)));
}

std::size_t planted_rank_target(std::size_t n, const GenerateOptions& options) {
  if (options.planted_rank < 0) return n / 2;
  return std::min<std::size_t>(static_cast<std::size_t>(options.planted_rank), n);
}

Instance bipartite_matching(std::size_t n, Rng& rng, double r_ratio) {
  const std::size_t m = planted_matching_size(n, r_ratio);
  std::vector<std::uint32_t> perm(m);
  for (std::uint32_t i = 0; i < m; ++i) perm[i] = i;
  rng.shuffle(perm);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(n);
  for (std::uint32_t i = 0; i < m; ++i) edges.emplace_back(i, perm[i]);
  while (edges.size() < n) {
    edges.emplace_back(static_cast<std::uint32_t>(rng.below(m)),
                       static_cast<std::uint32_t>(rng.below(m)));
  }
  rng.shuffle(edges);
  std::vector<std::uint32_t> left(n), right(n);
  for (std::size_t e = 0; e < n; ++e) {
    left[e] = edges[e].first;
    right[e] = edges[e].second;
  }
  const std::vector<std::uint32_t> ones(m, 1);
  Instance inst;
  inst.n = n;
  inst.matroid1 = partition_from_labels(left, static_cast<std::uint32_t>(m), ones);
  inst.matroid2 = partition_from_labels(right, static_cast<std::uint32_t>(m), ones);
  return inst;
}

Instance rainbow_spanning_tree(std::size_t n, Rng& rng) {
  const auto vertices = static_cast<std::uint32_t>(std::max<std::size_t>(2, n / 3 + 1));
  const auto colours = static_cast<std::uint32_t>(std::max<std::size_t>(1, n / 2));
  GraphicSpec g;
  g.vertex_count = vertices;
  std::vector<std::uint32_t> colour(n);
  for (std::size_t e = 0; e < n; ++e) {
    const auto a = static_cast<std::uint32_t>(rng.below(vertices));
    auto b = static_cast<std::uint32_t>(rng.below(vertices - 1));
    if (b >= a) ++b;
    g.edges.emplace_back(a, b);
    colour[e] = static_cast<std::uint32_t>(rng.below(colours));
  }
  Instance inst;
  inst.n = n;
  inst.matroid1 = std::move(g);
  inst.matroid2 = partition_from_labels(colour, colours, std::vector<std::uint32_t>(colours, 1));
  return inst;
}

BinaryLinearSpec random_columns(std::size_t n, std::uint32_t dim, Rng& rng) {
  BinaryLinearSpec spec;
  spec.dim = dim;
  const std::size_t words = (dim + 63) / 64;
  for (std::size_t e = 0; e < n; ++e) {
    std::vector<std::uint64_t> col(words, 0);
    for (std::uint32_t bit = 0; bit < dim; ++bit) {
      if (rng.bernoulli(0.5)) col[bit / 64] |= std::uint64_t{1} << (bit % 64);
    }
    spec.columns.push_back(std::move(col));
  }
  return spec;
}

Instance random_binary_linear(std::size_t n, Rng& rng) {
  Instance inst;
  inst.n = n;
  inst.matroid1 = random_columns(n, static_cast<std::uint32_t>(std::max<std::size_t>(1, (n + 1) / 2)), rng);
  inst.matroid2 = random_columns(n, static_cast<std::uint32_t>(std::max<std::size_t>(1, (2 * n + 2) / 3)), rng);
  return inst;
}

Instance planted_rank(std::size_t n, Rng& rng, std::size_t rank) {
  const auto vertices = static_cast<std::uint32_t>(rank + 1);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<std::uint32_t> colour;
  std::vector<std::uint32_t> palette(rank);
  for (std::uint32_t i = 0; i < rank; ++i) palette[i] = i;
  rng.shuffle(palette);
  for (std::uint32_t v = 1; v <= rank; ++v) {
    edges.emplace_back(static_cast<std::uint32_t>(rng.below(v)), v);
    colour.push_back(palette[v - 1]);
  }
  while (edges.size() < n) {
    const auto a = static_cast<std::uint32_t>(rng.below(vertices));
    std::uint32_t b = a;
    if (vertices > 1) {
      b = static_cast<std::uint32_t>(rng.below(vertices - 1));
      if (b >= a) ++b;
    }
    edges.emplace_back(a, b);
    colour.push_back(rank == 0 ? 0 : static_cast<std::uint32_t>(rng.below(rank)));
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  GraphicSpec g;
  g.vertex_count = vertices;
  std::vector<std::uint32_t> shuffled_colour(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.edges.push_back(edges[order[i]]);
    shuffled_colour[i] = colour[order[i]];
  }
  const auto colours = static_cast<std::uint32_t>(std::max<std::size_t>(1, rank));
  Instance inst;
  inst.n = n;
  inst.matroid1 = std::move(g);
  inst.matroid2 = partition_from_labels(
      shuffled_colour, colours,
      std::vector<std::uint32_t>(colours, rank == 0 ? 0 : 1));
  return inst;
}

Instance uniform_partition(std::size_t n, Rng& rng) {
  const auto blocks = static_cast<std::uint32_t>(std::max<std::size_t>(1, n / 3));
  std::vector<std::uint32_t> label(n), caps(blocks);
  for (auto& l : label) l = static_cast<std::uint32_t>(rng.below(blocks));
  for (auto& c : caps) c = static_cast<std::uint32_t>(1 + rng.below(2));
  Instance inst;
  inst.n = n;
  inst.matroid1 = UniformSpec{static_cast<std::uint32_t>(1 + rng.below(n))};
  inst.matroid2 = partition_from_labels(label, blocks, caps);
  return inst;
}

}  // namespace

void validate(const Instance& instance) {
  validate_spec(instance.matroid1, instance.n, "matroid1");
  validate_spec(instance.matroid2, instance.n, "matroid2");
}

std::unique_ptr<IndependenceOracle> make_oracle(const MatroidSpec& spec,
                                                std::size_t n) {
  return std::visit(
      [n](const auto& s) -> std::unique_ptr<IndependenceOracle> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniformSpec>) {
          return std::make_unique<UniformOracle>(n, s.k);
        } else if constexpr (std::is_same_v<T, PartitionSpec>) {
          std::vector<std::uint32_t> block_of(n, 0);
          for (std::uint32_t b = 0; b < s.blocks.size(); ++b) {
            for (ElementId e : s.blocks[b]) block_of[e] = b;
          }
          return std::make_unique<PartitionOracle>(std::move(block_of), s.caps);
        } else if constexpr (std::is_same_v<T, GraphicSpec>) {
          return std::make_unique<GraphicOracle>(s.vertex_count, s.edges);
        } else {
          return std::make_unique<BinaryLinearOracle>(s.dim, s.columns);
        }
      },
      spec);
}

std::string encode_hex_column(const std::vector<std::uint64_t>& words,
                              std::uint32_t dim) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::uint32_t digits = (dim + 3) / 4;
  std::string out(digits, '0');
  for (std::uint32_t d = 0; d < digits; ++d) {
    const std::uint32_t bit = 4 * d;
    const auto nibble = (words[bit / 64] >> (bit % 64)) & 0xF;
    out[digits - 1 - d] = kDigits[nibble];
  }
  return out;
}

std::vector<std::uint64_t> decode_hex_column(std::string_view hex,
                                             std::uint32_t dim) {
  const std::uint32_t digits = (dim + 3) / 4;
  if (hex.size() != digits) {
    throw SchemaError("hex column '" + std::string(hex) + "' must have " +
                      std::to_string(digits) + " digits");
  }
  std::vector<std::uint64_t> words((dim + 63) / 64, 0);
  for (std::uint32_t d = 0; d < digits; ++d) {
    const char c = hex[digits - 1 - d];
    std::uint64_t nibble;
    if (c >= '0' && c <= '9') {
      nibble = static_cast<std::uint64_t>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      nibble = static_cast<std::uint64_t>(c - 'a' + 10);
    } else {
      throw SchemaError("bad hex digit in column '" + std::string(hex) + "'");
    }
    const std::uint32_t bit = 4 * d;
    words[bit / 64] |= nibble << (bit % 64);
  }
  if (dim % 64 != 0 && !words.empty() && (words.back() >> (dim % 64)) != 0) {
    throw SchemaError("hex column '" + std::string(hex) + "' exceeds its dimension");
  }
  return words;
}

std::string to_json(const Instance& instance) {
  json j;
  j["id"] = instance.id;
  j["n"] = instance.n;
  j["matroid1"] = spec_to_json(instance.matroid1);
  j["matroid2"] = spec_to_json(instance.matroid2);
  return j.dump(1) + "\n";
}

Instance instance_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("instance is not valid JSON: ") + e.what());
  }
  Instance inst;
  try {
    if (j.contains("id")) inst.id = j.at("id").get<std::string>();
    inst.n = j.at("n").get<std::size_t>();
    inst.matroid1 = spec_from_json(j.at("matroid1"));
    inst.matroid2 = spec_from_json(j.at("matroid2"));
  } catch (const json::exception& e) {
    throw SchemaError(std::string("instance schema error: ") + e.what());
  }
  validate(inst);
  return inst;
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << to_json(instance);
  if (!out) throw IoError("failed writing '" + path + "'");
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return instance_from_json(buf.str());
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kBipartiteMatching:
      return "bipartite_matching";
    case Family::kRainbowSpanningTree:
      return "rainbow_spanning_tree";
    case Family::kRandomBinaryLinear:
      return "random_binary_linear";
    case Family::kPlantedRank:
      return "planted_rank";
    case Family::kUniformPartition:
      return "uniform_partition";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (auto f : {Family::kBipartiteMatching, Family::kRainbowSpanningTree,
                 Family::kRandomBinaryLinear, Family::kPlantedRank,
                 Family::kUniformPartition}) {
    if (family_name(f) == name) return f;
  }
  throw ValidationError("unknown instance family '" + std::string(name) + "'");
}

Instance generate_instance(Family family, std::size_t n, std::uint64_t seed,
                           const GenerateOptions& options) {
  if (n == 0) throw ValidationError("instance size must be at least 1");
  Rng rng = Rng(seed).split(static_cast<std::uint64_t>(family) + 1);
  Instance inst;
  switch (family) {
    case Family::kBipartiteMatching:
      inst = bipartite_matching(n, rng, options.r_ratio);
      break;
    case Family::kRainbowSpanningTree:
      inst = rainbow_spanning_tree(n, rng);
      break;
    case Family::kRandomBinaryLinear:
      inst = random_binary_linear(n, rng);
      break;
    case Family::kPlantedRank:
      inst = planted_rank(n, rng, planted_rank_target(n, options));
      break;
    case Family::kUniformPartition:
      inst = uniform_partition(n, rng);
      break;
  }
  inst.id = std::string(family_name(family)) + "-" + std::to_string(n) + "-" +
            std::to_string(seed);
  validate(inst);
  return inst;
}

std::int64_t planted_rank_of(Family family, std::size_t n,
                             const GenerateOptions& options) {
  switch (family) {
    case Family::kBipartiteMatching:
      return static_cast<std::int64_t>(planted_matching_size(n, options.r_ratio));
    case Family::kPlantedRank:
      return static_cast<std::int64_t>(planted_rank_target(n, options));
    default:
      return -1;
  }
}

}  // namespace matint
