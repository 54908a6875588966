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

#include "matint/hidden_graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "matint/rng.hpp"

namespace matint {

HiddenGraph::HiddenGraph(std::size_t n, std::vector<char> in_s)
    : NeighborhoodOracle(n),
      in_s_(std::move(in_s)),
      words_((n + 2 + 63) / 64),
      bits_(words_ * (n + 2), 0) {
  if (in_s_.size() != n) {
    throw ContractViolation("side vector does not match the element count");
  }
}

void HiddenGraph::add_edge(Vertex from, Vertex to) {
  const bool ok =
      from < vertex_count() && to < vertex_count() && from != sink() &&
      to != source() && from != to &&
      (from == source() ? !in_s(to) && to != sink()
       : to == sink()   ? !in_s(from)
                        : in_s(from) != in_s(to));
  if (!ok) {
    throw ContractViolation("pair " + std::to_string(from) + "->" +
                            std::to_string(to) + " cannot be an edge");
  }
  std::uint64_t& word = bits_[from * words_ + to / 64];
  const std::uint64_t bit = std::uint64_t{1} << (to % 64);
  if (!(word & bit)) ++edge_count_;
  word |= bit;
}

bool HiddenGraph::edge(Vertex from, Vertex to) const {
  return (bits_[from * words_ + to / 64] >> (to % 64)) & 1;
}

std::vector<Vertex> HiddenGraph::out_neighbors(Vertex x) const {
  std::vector<Vertex> out;
  for (Vertex y = 0; y < vertex_count(); ++y) {
    if (edge(x, y)) out.push_back(y);
  }
  return out;
}

bool HiddenGraph::query_in(ElementId v, std::span<const ElementId> from,
                           bool with_source, Stage stage) {
  probes_.record(0, stage);
  charge();
  if (with_source && edge(source(), v)) return true;
  return std::any_of(from.begin(), from.end(),
                     [&](ElementId u) { return edge(u, v); });
}

bool HiddenGraph::query_out(ElementId v, std::span<const ElementId> to,
                            bool with_sink, Stage stage) {
  probes_.record(1, stage);
  charge();
  if (with_sink && edge(v, sink())) return true;
  return std::any_of(to.begin(), to.end(),
                     [&](ElementId u) { return edge(v, u); });
}

std::string_view hidden_kind_name(HiddenKind kind) {
  switch (kind) {
    case HiddenKind::kRandomGnp: return "random_gnp";
    case HiddenKind::kLayeredPath: return "layered_path";
    case HiddenKind::kAdversarialLongPath: return "adversarial_long_path";
    case HiddenKind::kNoStPath: return "no_st_path";
  }
  return "?";
}

HiddenKind parse_hidden_kind(std::string_view name) {
  for (auto kind : {HiddenKind::kRandomGnp, HiddenKind::kLayeredPath,
                    HiddenKind::kAdversarialLongPath, HiddenKind::kNoStPath}) {
    if (hidden_kind_name(kind) == name) return kind;
  }
  throw ValidationError("unknown hidden graph kind '" + std::string(name) + "'");
}

namespace {

std::vector<char> random_sides(std::size_t n, Rng& rng) {
  std::vector<ElementId> ids(n);
  for (ElementId e = 0; e < n; ++e) ids[e] = e;
  rng.shuffle(ids);
  std::vector<char> in_s(n, 0);
  for (std::size_t i = 0; i < n / 2; ++i) in_s[ids[i]] = 1;
  return in_s;
}

HiddenGraph random_gnp(std::size_t n, double p, Rng& rng) {
  HiddenGraph g(n, random_sides(n, rng));
  const double terminal = std::min(1.0, 2 * p);
  for (Vertex v = 0; v < n; ++v) {
    if (g.in_s(v)) continue;
    if (rng.bernoulli(terminal)) g.add_edge(g.source(), v);
    if (rng.bernoulli(terminal)) g.add_edge(v, g.sink());
    for (Vertex u = 0; u < n; ++u) {
      if (!g.in_s(u)) continue;
      if (rng.bernoulli(p)) g.add_edge(u, v);
      if (rng.bernoulli(p)) g.add_edge(v, u);
    }
  }
  return g;
}

// Layer l (1..depth-1) is on the right when l is odd. Every vertex gets one
// edge from a random vertex of the previous layer.
HiddenGraph layered(std::size_t n, std::size_t depth, double back_p, Rng& rng) {
  if (depth < 2 || depth % 2 != 0 || depth - 1 > n) {
    throw ContractViolation("layered path depth must be even and in [2, n + 1]");
  }
  const std::size_t layers = depth - 1;
  std::vector<ElementId> ids(n);
  for (ElementId e = 0; e < n; ++e) ids[e] = e;
  rng.shuffle(ids);
  // One vertex per layer first, the rest spread at random.
  std::vector<std::size_t> layer_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    layer_of[ids[i]] = i < layers ? i + 1 : 1 + rng.below(layers);
  }
  std::vector<char> in_s(n, 0);
  std::vector<std::vector<Vertex>> members(depth + 1);
  for (ElementId e = 0; e < n; ++e) {
    in_s[e] = layer_of[e] % 2 == 0;
    members[layer_of[e]].push_back(e);
  }
  HiddenGraph g(n, std::move(in_s));
  members[0] = {g.source()};
  members[depth] = {g.sink()};
  for (std::size_t l = 1; l <= depth; ++l) {
    const auto& prev = members[l - 1];
    for (Vertex y : members[l]) {
      g.add_edge(prev[rng.below(prev.size())], y);
      for (Vertex x : prev) {
        if (rng.bernoulli(0.3)) g.add_edge(x, y);
      }
    }
  }
  // Backward edges between opposite sides never shorten distances.
  for (std::size_t hi = 2; hi < depth; ++hi) {
    for (std::size_t lo = hi % 2 == 0 ? 1 : 2; lo + 1 < hi; lo += 2) {
      for (Vertex x : members[hi]) {
        for (Vertex y : members[lo]) {
          if (rng.bernoulli(back_p)) g.add_edge(x, y);
        }
      }
    }
  }
  return g;
}

}  // namespace

HiddenGraph generate_hidden(HiddenKind kind, std::size_t n, std::uint64_t seed,
                            const HiddenOptions& options) {
  if (n < 2) throw ContractViolation("hidden graphs need n >= 2");
  Rng rng = Rng(seed).split(0x4844 + static_cast<std::uint64_t>(kind));
  const double p = options.p >= 0 ? options.p : std::min(1.0, 2.0 / n);
  switch (kind) {
    case HiddenKind::kRandomGnp:
      return random_gnp(n, p, rng);
    case HiddenKind::kLayeredPath: {
      const std::size_t depth = options.depth ? options.depth : 2 * ((n + 3) / 4);
      return layered(n, depth, std::min(1.0, 4.0 / n), rng);
    }
    case HiddenKind::kAdversarialLongPath: {
      // Odd element count on the path: k right, k - 1 left vertices.
      const std::size_t used = n % 2 == 1 ? n : n - 1;
      return layered(n, used + 1, 0.5, rng);
    }
    case HiddenKind::kNoStPath: {
      HiddenGraph g = random_gnp(n, std::min(1.0, 1.5 * p), rng);
      const auto dist = reference_distances(g);
      HiddenGraph pruned(n, [&] {
        std::vector<char> in_s(n);
        for (ElementId e = 0; e < n; ++e) in_s[e] = g.in_s(e);
        return in_s;
      }());
      for (Vertex x = 0; x < g.vertex_count(); ++x) {
        for (Vertex y : g.out_neighbors(x)) {
          if (y == g.sink() && dist[x] != std::numeric_limits<std::size_t>::max()) {
            continue;
          }
          pruned.add_edge(x, y);
        }
      }
      return pruned;
    }
  }
  throw ContractViolation("unknown hidden graph kind");
}

std::vector<std::size_t> reference_distances(const HiddenGraph& graph) {
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(graph.vertex_count(), kInf);
  std::deque<Vertex> queue{graph.source()};
  dist[graph.source()] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : graph.out_neighbors(x)) {
      if (dist[y] != kInf) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

Reachability reference_reachability(const HiddenGraph& graph) {
  const std::size_t d = reference_distances(graph)[graph.sink()];
  if (d == std::numeric_limits<std::size_t>::max()) return {};
  return {true, d};
}

void dump_hidden(const HiddenGraph& graph, std::ostream& out) {
  auto name = [&](Vertex x) {
    if (x == graph.source()) return std::string("s");
    if (x == graph.sink()) return std::string("t");
    return std::to_string(x);
  };
  out << "hidden " << graph.element_count() << "\nS";
  for (ElementId e = 0; e < graph.element_count(); ++e) {
    if (graph.in_s(e)) out << ' ' << e;
  }
  out << '\n';
  for (Vertex x = 0; x < graph.vertex_count(); ++x) {
    for (Vertex y : graph.out_neighbors(x)) {
      out << "e " << name(x) << ' ' << name(y) << '\n';
    }
  }
}

HiddenGraph load_hidden(std::istream& in) {
  std::string line;
  std::string tag;
  std::size_t n = 0;
  if (!std::getline(in, line)) throw SchemaError("empty hidden graph file");
  {
    std::istringstream header(line);
    if (!(header >> tag >> n) || tag != "hidden" || n < 1) {
      throw SchemaError("expected 'hidden <n>' on the first line");
    }
  }
  std::vector<char> in_s(n, 0);
  if (!std::getline(in, line)) throw SchemaError("missing 'S' line");
  {
    std::istringstream sides(line);
    if (!(sides >> tag) || tag != "S") throw SchemaError("expected the 'S' line");
    long long e = 0;
    while (sides >> e) {
      if (e < 0 || static_cast<std::size_t>(e) >= n) {
        throw SchemaError("S element out of range");
      }
      in_s[static_cast<std::size_t>(e)] = 1;
    }
    if (!sides.eof()) throw SchemaError("malformed 'S' line");
  }
  HiddenGraph g(n, std::move(in_s));
  auto vertex = [&](const std::string& token) -> Vertex {
    if (token == "s") return g.source();
    if (token == "t") return g.sink();
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(token, &used);
      if (used == token.size() && value < n) return static_cast<Vertex>(value);
    } catch (const std::exception&) {
    }
    throw SchemaError("bad vertex '" + token + "'");
  };
  std::size_t line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream edge_line(line);
    std::string a;
    std::string b;
    std::string extra;
    if (!(edge_line >> tag >> a >> b) || tag != "e" || (edge_line >> extra)) {
      throw SchemaError("line " + std::to_string(line_no) + ": expected 'e <from> <to>'");
    }
    try {
      g.add_edge(vertex(a), vertex(b));
    } catch (const ContractViolation& e) {
      throw SchemaError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return g;
}

}  // namespace matint
