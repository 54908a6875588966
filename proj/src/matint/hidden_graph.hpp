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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matint/ledger.hpp"
#include "matint/neighborhood.hpp"

namespace matint {

// A bipartite digraph stored explicitly and exposed only through set
// queries. Every answered query is a probe: in-probes go to slot 0 of
// probes(), out-probes to slot 1, under the caller's stage.
class HiddenGraph final : public NeighborhoodOracle {
 public:
  // in_s[e] puts element e on the left side.
  HiddenGraph(std::size_t n, std::vector<char> in_s);

  bool in_s(ElementId e) const override { return in_s_[e] != 0; }

  // Throws ContractViolation for pairs that cannot be edges.
  void add_edge(Vertex from, Vertex to);
  bool edge(Vertex from, Vertex to) const;
  std::size_t edge_count() const { return edge_count_; }
  // Out-neighbours of x in ascending order.
  std::vector<Vertex> out_neighbors(Vertex x) const;

  const QueryLedger& probes() const { return probes_; }
  std::uint64_t probe_count() const { return probes_.total(); }

 protected:
  bool query_in(ElementId v, std::span<const ElementId> from, bool with_source,
                Stage stage) override;
  bool query_out(ElementId v, std::span<const ElementId> to, bool with_sink,
                 Stage stage) override;

 private:
  std::vector<char> in_s_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;  // row-major (n + 2) x (n + 2)
  std::size_t edge_count_ = 0;
  QueryLedger probes_;
};

enum class HiddenKind : std::uint8_t {
  kRandomGnp,
  kLayeredPath,
  kAdversarialLongPath,
  kNoStPath,
};

std::string_view hidden_kind_name(HiddenKind kind);
// Throws ValidationError for unknown names.
HiddenKind parse_hidden_kind(std::string_view name);

struct HiddenOptions {
  // Edge probability for random_gnp / no_st_path; negative means 2/n.
  double p = -1.0;
  // s-t distance for layered_path; 0 means 2 * ceil(n / 4). Must be even.
  std::size_t depth = 0;
};

// Deterministic in (kind, n, seed, options). n >= 2.
//   random_gnp:            random sides, each possible edge with probability
//                          p (terminal edges 2p).
//   layered_path:          layers at distance 1..depth-1 from s; forward
//                          edges only between consecutive layers, plus
//                          random backward edges. Distance exactly depth.
//   adversarial_long_path: one alternating path through (almost) every
//                          element, with dense backward edges.
//   no_st_path:            random_gnp with every t-edge from an
//                          s-reachable vertex removed.
HiddenGraph generate_hidden(HiddenKind kind, std::size_t n, std::uint64_t seed,
                            const HiddenOptions& options = {});

struct Reachability {
  bool reachable = false;
  std::size_t distance = 0;  // valid when reachable
};

// Plain BFS over the stored adjacency; issues no probes.
Reachability reference_reachability(const HiddenGraph& graph);

// BFS distances from s (SIZE_MAX where unreachable); issues no probes.
std::vector<std::size_t> reference_distances(const HiddenGraph& graph);

// Line format:
//   hidden <n>
//   S <left elements...>
//   e <from> <to>        endpoints are element ids, 's' or 't'
void dump_hidden(const HiddenGraph& graph, std::ostream& out);
// Throws SchemaError on malformed input.
HiddenGraph load_hidden(std::istream& in);

}  // namespace matint
