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

#include "matint/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "matint/classic.hpp"
#include "matint/exchange_graph.hpp"
#include "matint/reference.hpp"

namespace matint {

std::size_t estimate_r(const IndependenceOracle& m1, const IndependenceOracle& m2) {
  return greedy_maximal_common(m1, m2).size();
}

std::size_t select_d(std::size_t r_bar, std::size_t n, CategorizerMode mode) {
  if (r_bar <= 1) return 1;
  const double r = static_cast<double>(r_bar);
  const double nn = static_cast<double>(std::max<std::size_t>(n, 2));
  const double log_r = std::max(1.0, std::log(r));
  const double t = mode == CategorizerMode::kRandomized
                       ? nn * std::sqrt(r) * std::log(nn)
                       : nn * std::cbrt(r * r) * log_r;
  const double d = std::ceil(std::sqrt(r * t / (nn * log_r)));
  const double hi = 2.0 * r + 2.0;
  return static_cast<std::size_t>(std::clamp(d, 1.0, hi));
}

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kNaive: return "naive";
    case Algorithm::kCunningham: return "cunningham";
    case Algorithm::kPipeline: return "pipeline";
    case Algorithm::kApprox: return "approx";
    case Algorithm::kBrute: return "brute";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::kNaive, Algorithm::kCunningham, Algorithm::kPipeline,
                 Algorithm::kApprox, Algorithm::kBrute}) {
    if (algorithm_name(a) == name) return a;
  }
  throw ValidationError("unknown algorithm '" + std::string(name) + "'");
}

namespace {

// Points both oracles at `ledger` for the lifetime of the guard.
class LedgerScope {
 public:
  LedgerScope(IndependenceOracle& m1, IndependenceOracle& m2, QueryLedger& ledger)
      : m1_(m1), m2_(m2), prev1_(m1.ledger()), prev2_(m2.ledger()),
        slot1_(m1.matroid_slot()), slot2_(m2.matroid_slot()) {
    m1.attach_ledger(&ledger, 0);
    m2.attach_ledger(&ledger, 1);
  }
  ~LedgerScope() {
    m1_.attach_ledger(prev1_, slot1_);
    m2_.attach_ledger(prev2_, slot2_);
  }
  LedgerScope(const LedgerScope&) = delete;
  LedgerScope& operator=(const LedgerScope&) = delete;

 private:
  IndependenceOracle& m1_;
  IndependenceOracle& m2_;
  QueryLedger* prev1_;
  QueryLedger* prev2_;
  int slot1_;
  int slot2_;
};

double epsilon_of(std::size_t n, std::size_t r_bar) {
  if (r_bar == 0) return 0;
  const double r = static_cast<double>(r_bar);
  const double log_r = std::max(1.0, std::log(r));
  return std::pow(static_cast<double>(n), 0.2) * std::pow(r, -0.4) *
         std::pow(log_r, -0.2);
}

void run_pipeline(IndependenceOracle& m1, IndependenceOracle& m2,
                  const SolveOptions& options, SolveReport& report,
                  std::vector<ElementId>& set) {
  const std::size_t n = m1.ground_size();
  const bool approx = options.algorithm == Algorithm::kApprox;
  if (approx && !options.d) {
    throw ContractViolation("the approximation mode needs a distance bound d");
  }
  if ((options.d && *options.d == 0) || (options.h && *options.h == 0)) {
    throw ContractViolation("d and h overrides must be at least 1");
  }

  std::vector<ElementId> greedy = greedy_maximal_common(m1, m2);
  std::vector<ElementId> start = greedy;
  if (options.bootstrap) {
    validate_common(m1, m2, *options.bootstrap);
    start = *options.bootstrap;
  }
  report.greedy_size = greedy.size();
  report.r_bar = std::max(greedy.size(), start.size());
  report.epsilon = epsilon_of(n, report.r_bar);
  if (report.r_bar == 0) return;  // r = 0

  report.d = options.d ? *options.d : select_d(report.r_bar, n, options.mode);
  report.h = options.h ? *options.h : select_h(report.r_bar, options.mode);

  ExchangeGraphView view(m1, m2, std::move(start));
  CunninghamOptions stage2;
  stage2.phased = options.phased_cunningham;
  stage2.check_invariants = options.check_invariants;
  const CunninghamStats cunningham = cunningham_until(view, report.d, stage2);
  report.stage2_augmentations = cunningham.augmentations;
  report.layerings = cunningham.layerings;

  if (!approx && !cunningham.maximum) {
    AugmentationConfig config;
    config.mode = options.mode;
    config.h = report.h;
    config.repetitions = options.repetitions;
    config.check_invariants = options.check_invariants;
    config.observer = options.observer;
    Rng rng = Rng(options.seed).split(1);
    for (;;) {
      AugmentationResult found = find_augmenting_path(view, config, rng);
      ++report.augmentation_calls;
      report.phases += found.stats.phases;
      report.misclassification_events += found.stats.misclassification_events;
      report.reverse_bfs_costs.insert(report.reverse_bfs_costs.end(),
                                      found.stats.reverse_bfs_costs.begin(),
                                      found.stats.reverse_bfs_costs.end());
      if (!found.path) break;
      view.apply(*found.path);
      ++report.stage3_augmentations;
    }
  }
  set = view.current();
}

}  // namespace

SolveResult run_solver(IndependenceOracle& m1, IndependenceOracle& m2,
                       const SolveOptions& options) {
  if (m1.ground_size() != m2.ground_size()) {
    throw ContractViolation("matroids are over different ground sets");
  }
  const auto start = std::chrono::steady_clock::now();
  QueryLedger ledger;
  SolveResult result;
  SolveReport& report = result.report;
  report.instance_id = options.instance_id;
  report.algorithm = options.algorithm;
  report.mode = options.mode;
  report.seed = options.seed;
  report.n = m1.ground_size();
  {
    LedgerScope scope(m1, m2, ledger);
    switch (options.algorithm) {
      case Algorithm::kNaive: {
        NaiveStats stats;
        result.set = naive_exact(m1, m2, &stats);
        report.greedy_size = stats.greedy_size;
        report.r_bar = stats.greedy_size;
        report.stage2_augmentations = stats.augment.augmentations;
        report.layerings = stats.augment.layerings;
        break;
      }
      case Algorithm::kCunningham: {
        ExchangeGraphView view(m1, m2, greedy_maximal_common(m1, m2));
        report.greedy_size = report.r_bar = view.size();
        CunninghamOptions opts;
        opts.phased = options.phased_cunningham;
        opts.check_invariants = options.check_invariants;
        const CunninghamStats stats = cunningham_until(view, kUnreached, opts);
        report.stage2_augmentations = stats.augmentations;
        report.layerings = stats.layerings;
        result.set = view.current();
        break;
      }
      case Algorithm::kPipeline:
      case Algorithm::kApprox:
        run_pipeline(m1, m2, options, report, result.set);
        break;
      case Algorithm::kBrute:
        result.set = brute_force_max_common(m1, m2).witness;
        break;
    }
  }
  std::sort(result.set.begin(), result.set.end());
  report.answer_size = result.set.size();
  report.ledger = LedgerSnapshot::of(ledger);
  report.wall_time_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return result;
}

SolveResult solve(IndependenceOracle& m1, IndependenceOracle& m2,
                  SolveOptions options) {
  options.algorithm = Algorithm::kPipeline;
  return run_solver(m1, m2, options);
}

SolveResult solve_approx(IndependenceOracle& m1, IndependenceOracle& m2,
                         std::size_t d, SolveOptions options) {
  options.algorithm = Algorithm::kApprox;
  options.d = d;
  return run_solver(m1, m2, options);
}

nlohmann::ordered_json report_to_json(const SolveReport& report, bool include_time) {
  nlohmann::ordered_json j;
  j["instance_id"] = report.instance_id;
  j["algorithm"] = algorithm_name(report.algorithm);
  j["mode"] = mode_name(report.mode);
  j["seed"] = report.seed;
  j["n"] = report.n;
  j["r_bar"] = report.r_bar;
  j["d"] = report.d;
  j["h"] = report.h;
  j["epsilon"] = report.epsilon;
  nlohmann::ordered_json stages = nlohmann::ordered_json::object();
  for (std::size_t s = 0; s < kStageCount; ++s) {
    const std::uint64_t a = report.ledger.counts[0][s];
    const std::uint64_t b = report.ledger.counts[1][s];
    stages[std::string(kStageNames[s])] = {{"m1", a}, {"m2", b}, {"total", a + b}};
  }
  j["stage_ledgers"] = std::move(stages);
  j["total_queries"] = report.ledger.total();
  j["answer_size"] = report.answer_size;
  j["greedy_size"] = report.greedy_size;
  j["stage2_augmentations"] = report.stage2_augmentations;
  j["stage3_augmentations"] = report.stage3_augmentations;
  j["layerings"] = report.layerings;
  j["augmentation_calls"] = report.augmentation_calls;
  j["phases"] = report.phases;
  j["misclassification_events"] = report.misclassification_events;
  std::uint64_t worst = 0;
  for (auto c : report.reverse_bfs_costs) worst = std::max(worst, c);
  j["reverse_bfs_max_queries"] = worst;
  if (include_time) j["wall_time_ms"] = report.wall_time_ms;
  return j;
}

}  // namespace matint
