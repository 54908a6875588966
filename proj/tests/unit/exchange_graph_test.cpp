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

#include <doctest.h>

#include <algorithm>
#include <bit>

#include "support.hpp"

using namespace matint;
using support::oracles;

namespace {

// Set answers must equal the OR of single-edge answers, for every (v, X).
void check_set_queries(ExchangeGraphView& g) {
  const std::size_t n = g.element_count();
  std::vector<ElementId> left;
  for (ElementId e = 0; e < n; ++e) {
    if (g.in_s(e)) left.push_back(e);
  }
  REQUIRE(left.size() <= 10);
  const auto all = support::subsets(left);
  for (ElementId v = 0; v < n; ++v) {
    if (g.in_s(v)) continue;
    for (const auto& x : all) {
      for (bool term : {false, true}) {
        bool in = term && g.has_edge(g.source(), v, Stage::kOther);
        bool out = term && g.has_edge(v, g.sink(), Stage::kOther);
        for (ElementId u : x) {
          in = in || g.has_edge(u, v, Stage::kOther);
          out = out || g.has_edge(v, u, Stage::kOther);
        }
        CHECK(g.exists_in_edge(v, x, term, Stage::kOther) == in);
        CHECK(g.exists_out_edge(v, x, term, Stage::kOther) == out);
      }
    }
  }
}

// Edges 0=(a,x) 1=(a,y) 2=(b,x); (b,y) missing.
support::OraclePair path_matching() {
  return {support::partition(3, {{0, 1}, {2}}, {1, 1}),
          support::partition(3, {{0, 2}, {1}}, {1, 1})};
}

bool is_subsequence(const std::vector<Vertex>& sub, const std::vector<Vertex>& seq) {
  std::size_t i = 0;
  for (Vertex x : seq) {
    if (i < sub.size() && sub[i] == x) ++i;
  }
  return i == sub.size();
}

}  // namespace

TEST_CASE("empty X is false and free") {
  auto [m1, m2] = support::two_by_two();
  ExchangeGraphView g(*m1, *m2, {0});
  const auto before = g.queries_issued();
  CHECK_FALSE(g.exists_in_edge(3, {}, false, Stage::kOther));
  CHECK_FALSE(g.exists_out_edge(3, {}, false, Stage::kOther));
  CHECK(g.queries_issued() == before);
}

TEST_CASE("terminal edges follow S + v") {
  auto [m1, m2] = support::two_by_two();
  ExchangeGraphView g(*m1, *m2, {0});
  // S = {(a,x)}; (b,y) is free on both sides, (a,y) blocked in M1, (b,x) in M2
  CHECK(g.exists_in_edge(3, {}, true, Stage::kOther));
  CHECK(g.exists_out_edge(3, {}, true, Stage::kOther));
  CHECK_FALSE(g.exists_in_edge(1, {}, true, Stage::kOther));
  CHECK(g.exists_out_edge(1, {}, true, Stage::kOther));
  CHECK(g.exists_in_edge(2, {}, true, Stage::kOther));
  CHECK_FALSE(g.exists_out_edge(2, {}, true, Stage::kOther));
}

TEST_CASE("argument checks") {
  auto [m1, m2] = support::two_by_two();
  ExchangeGraphView g(*m1, *m2, {0});
  std::vector<ElementId> right{1};
  std::vector<ElementId> left{0};
  CHECK_THROWS_AS(g.exists_in_edge(0, left, false, Stage::kOther), ContractViolation);
  CHECK_THROWS_AS(g.exists_in_edge(1, right, false, Stage::kOther), ContractViolation);
  CHECK_THROWS_AS(g.exists_out_edge(9, left, false, Stage::kOther), ContractViolation);
  CHECK_FALSE(g.has_edge(g.sink(), 1, Stage::kOther));
  CHECK_FALSE(g.has_edge(1, g.source(), Stage::kOther));
  CHECK_FALSE(g.has_edge(1, 2, Stage::kOther));
}

TEST_CASE("set queries on the 2x2 matching") {
  auto [m1, m2] = support::two_by_two();
  for (ElementId s = 0; s < 4; ++s) {
    ExchangeGraphView g(*m1, *m2, {s});
    check_set_queries(g);
  }
}

TEST_CASE("set queries on random instances") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto fam = trial % 2 ? Family::kRainbowSpanningTree : Family::kRandomBinaryLinear;
    auto inst = generate_instance(fam, 6 + trial % 7, trial);
    auto [m1, m2] = oracles(inst);
    ExchangeGraphView g(*m1, *m2, support::random_common(*m1, *m2, rng));
    check_set_queries(g);
  }
}

TEST_CASE("set query costs one oracle query") {
  auto inst = generate_instance(Family::kRainbowSpanningTree, 12, 3);
  auto [m1, m2] = oracles(inst);
  QueryLedger ledger;
  m1->attach_ledger(&ledger, 0);
  m2->attach_ledger(&ledger, 1);
  ExchangeGraphView g(*m1, *m2, greedy_maximal_common(*m1, *m2));
  const auto s = g.current();
  ElementId v = 0;
  while (g.in_s(v)) ++v;
  const auto base = ledger.total();
  g.exists_in_edge(v, s, false, Stage::kReverseBfs);
  CHECK(ledger.count(0, Stage::kReverseBfs) == 1);
  g.exists_out_edge(v, s, false, Stage::kReverseBfs);
  CHECK(ledger.count(1, Stage::kReverseBfs) == 1);
  // the t part is its own query, skipped when it already answers yes
  const bool to_t = g.exists_out_edge(v, {}, true, Stage::kReverseBfs);
  g.exists_out_edge(v, s, true, Stage::kReverseBfs);
  CHECK(ledger.count(1, Stage::kReverseBfs) == (to_t ? 3 : 4));
  CHECK(ledger.total() - base == g.queries_issued());
}

TEST_CASE("in_edge and out_edge find the first neighbour in the given order") {
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    auto inst = generate_instance(support::kAllFamilies[trial % 5], 8 + trial % 12, trial);
    auto [m1, m2] = oracles(inst);
    ExchangeGraphView g(*m1, *m2, support::random_common(*m1, *m2, rng));
    auto order = g.current();
    // weights: random permutation of S
    rng.shuffle(order);
    const std::size_t budget = std::bit_width(order.size()) + 2;
    for (ElementId v = 0; v < inst.n; ++v) {
      if (g.in_s(v)) continue;
      for (bool term : {false, true}) {
        std::optional<Vertex> want_in, want_out;
        if (term && g.has_edge(g.source(), v, Stage::kOther)) want_in = g.source();
        if (term && g.has_edge(v, g.sink(), Stage::kOther)) want_out = g.sink();
        for (ElementId u : order) {
          if (!want_in && g.has_edge(u, v, Stage::kOther)) want_in = u;
          if (!want_out && g.has_edge(v, u, Stage::kOther)) want_out = u;
        }
        auto before = g.queries_issued();
        CHECK(g.in_edge(v, order, term, Stage::kOther) == want_in);
        CHECK(g.queries_issued() - before <= budget);
        before = g.queries_issued();
        CHECK(g.out_edge(v, order, term, Stage::kOther) == want_out);
        CHECK(g.queries_issued() - before <= budget);
      }
    }
  }
}

TEST_CASE("in_edge on a singleton") {
  auto [m1, m2] = support::two_by_two();
  ExchangeGraphView g(*m1, *m2, {0});
  std::vector<ElementId> x{0};
  // (a,y) -> shares a with (a,x) in M1, so 0 -> 1
  CHECK(g.in_edge(1, x, false, Stage::kOther) == Vertex{0});
  CHECK(g.out_edge(2, x, false, Stage::kOther) == Vertex{0});
}

TEST_CASE("apply a length one path") {
  auto [m1, m2] = support::two_by_two();
  ExchangeGraphView g(*m1, *m2, {0});
  AugmentingPath p{{g.source(), 3, g.sink()}, true};
  g.apply(p);
  CHECK(g.current() == std::vector<ElementId>{0, 3});
}

TEST_CASE("apply the alternating path on a 2x2 matching") {
  auto [m1, m2] = path_matching();
  // S = {(a,x)}; the only way up is s -> (b,x) -> (a,x) -> (a,y) -> t
  ExchangeGraphView g(*m1, *m2, {0});
  auto adj = enumerate_edges(g);
  CHECK(support::bfs_distance(adj, g.source(), g.sink()) == 4);
  auto p = make_chordless(g, {g.source(), 2, 0, 1, g.sink()});
  CHECK(p.chordless);
  CHECK(p.vertices.size() == 5);
  g.apply(p);
  CHECK(g.current() == std::vector<ElementId>{1, 2});
  CHECK(brute_force_max_common(*m1, *m2).size == g.size());
}

TEST_CASE("apply rejects paths that are not chordless or malformed") {
  auto [m1, m2] = path_matching();
  ExchangeGraphView g(*m1, *m2, {0});
  AugmentingPath raw{{g.source(), 2, 0, 1, g.sink()}, false};
  CHECK_THROWS_AS(g.apply(raw), ContractViolation);
  AugmentingPath bad{{g.source(), 2, 1, g.sink()}, true};
  CHECK_THROWS_AS(g.apply(bad), ContractViolation);
  CHECK(g.current() == std::vector<ElementId>{0});
}

TEST_CASE("every applied path grows S by one") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto inst = generate_instance(support::kAllFamilies[seed % 5], 10, seed);
    auto [m1, m2] = oracles(inst);
    ExchangeGraphView g(*m1, *m2);
    for (;;) {
      auto adj = enumerate_edges(g);
      auto path = support::dfs_path(adj, g.source(), g.sink());
      if (path.empty()) break;
      const auto before = g.size();
      auto p = make_chordless(g, path);
      g.apply(p);
      CHECK(g.size() == before + 1);
      validate_common(*m1, *m2, g.current());
    }
    CHECK(g.size() == brute_force_max_common(*m1, *m2).size);
  }
}

TEST_CASE("validate_common") {
  auto [m1, m2] = support::two_by_two();
  std::vector<ElementId> ok{0, 3}, clash{0, 1}, dup{0, 0}, range{7};
  validate_common(*m1, *m2, ok);
  CHECK_THROWS_AS(validate_common(*m1, *m2, clash), ValidationError);
  CHECK_THROWS_AS(validate_common(*m1, *m2, dup), ValidationError);
  CHECK_THROWS_AS(validate_common(*m1, *m2, range), ValidationError);
}

TEST_CASE("make_chordless keeps a length three path") {
  auto [m1, m2] = support::two_by_two();
  ExchangeGraphView g(*m1, *m2, {0});
  auto p = make_chordless(g, {g.source(), 3, g.sink()});
  CHECK(p.vertices == std::vector<Vertex>{g.source(), 3, g.sink()});
  CHECK(p.chordless);
}

TEST_CASE("make_chordless drops vertices skipped by an ancestor edge") {
  // s -> 0 -> 1 -> 2 -> 3 -> 4 -> t with a shortcut 1 -> 4
  std::vector<char> side{0, 1, 0, 1, 0};
  HiddenGraph g(5, side);
  const Vertex s = g.source(), t = g.sink();
  g.add_edge(s, 0);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, t);
  g.add_edge(1, 4);
  auto p = make_chordless(g, {s, 0, 1, 2, 3, 4, t});
  CHECK(p.vertices == std::vector<Vertex>{s, 0, 1, 4, t});
  CHECK_FALSE(support::has_chord(g, p.vertices));
}

TEST_CASE("make_chordless prefers s and t") {
  std::vector<char> side{0, 1, 0, 1, 0};
  HiddenGraph g(5, side);
  const Vertex s = g.source(), t = g.sink();
  for (auto [a, b] : std::vector<std::pair<Vertex, Vertex>>{
           {s, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, t}, {s, 2}, {2, t}}) {
    g.add_edge(a, b);
  }
  auto p = make_chordless(g, {s, 0, 1, 2, 3, 4, t});
  CHECK(p.vertices == std::vector<Vertex>{s, 2, t});
}

TEST_CASE("make_chordless output has no chord, n <= 14") {
  Rng rng(99);
  int paths = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const std::size_t n = 4 + seed % 11;
    if (seed % 2) {
      auto g = generate_hidden(static_cast<HiddenKind>(seed / 2 % 3), n, seed,
                               {.p = 0.35, .depth = 0});
      auto adj = enumerate_edges(g);
      auto path = support::dfs_path(adj, g.source(), g.sink());
      if (path.empty()) continue;
      auto p = make_chordless(g, path);
      check_path_shape(g, p.vertices);
      CHECK_FALSE(support::has_chord(g, p.vertices));
      CHECK(is_subsequence(p.vertices, path));
      ++paths;
    } else {
      auto inst = generate_instance(support::kAllFamilies[seed / 2 % 5], n, seed);
      auto [m1, m2] = oracles(inst);
      ExchangeGraphView g(*m1, *m2, support::random_common(*m1, *m2, rng));
      auto adj = enumerate_edges(g);
      auto path = support::dfs_path(adj, g.source(), g.sink());
      if (path.empty()) continue;
      auto p = make_chordless(g, path);
      check_path_shape(g, p.vertices);
      CHECK_FALSE(support::has_chord(g, p.vertices));
      const auto before = g.size();
      g.apply(p);
      CHECK(g.size() == before + 1);
      ++paths;
    }
  }
  CHECK(paths > 150);
}
