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

#include "matint/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "matint/pipeline.hpp"

namespace matint {

std::string_view bench_algorithm_name(BenchAlgorithm algorithm) {
  switch (algorithm) {
    case BenchAlgorithm::kNaive: return "naive";
    case BenchAlgorithm::kCunningham: return "cunningham";
    case BenchAlgorithm::kPipelineRand: return "pipeline_rand";
    case BenchAlgorithm::kPipelineDet: return "pipeline_det";
  }
  return "?";
}

BenchAlgorithm parse_bench_algorithm(std::string_view name) {
  for (auto a : {BenchAlgorithm::kNaive, BenchAlgorithm::kCunningham,
                 BenchAlgorithm::kPipelineRand, BenchAlgorithm::kPipelineDet}) {
    if (bench_algorithm_name(a) == name) return a;
  }
  throw SchemaError("unknown benchmark algorithm '" + std::string(name) + "'");
}

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw ValidationError("unknown output format '" + std::string(name) + "'");
}

BenchPlan parse_plan(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("plan is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("plan must be a JSON object");
  BenchPlan plan;
  try {
    for (const auto& f : j.at("families")) {
      try {
        plan.families.push_back(parse_family(f.get<std::string>()));
      } catch (const ValidationError& e) {
        throw SchemaError(e.what());
      }
    }
    for (const auto& n : j.at("sizes")) plan.sizes.push_back(n.get<std::size_t>());
    plan.r_ratio = j.value("r_ratio", 0.5);
    for (const auto& a : j.at("algorithms")) {
      plan.algorithms.push_back(parse_bench_algorithm(a.get<std::string>()));
    }
    for (const auto& s : j.at("seeds")) plan.seeds.push_back(s.get<std::uint64_t>());
    if (j.contains("output")) {
      const auto& out = j.at("output");
      plan.output_path = out.value("path", "");
      try {
        plan.format = parse_format(out.value("format", "json"));
      } catch (const ValidationError& e) {
        throw SchemaError(e.what());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("bad plan field: ") + e.what());
  }
  if (plan.families.empty() || plan.algorithms.empty()) {
    throw SchemaError("plan needs at least one family and one algorithm");
  }
  if (plan.sizes.empty() || !std::is_sorted(plan.sizes.begin(), plan.sizes.end()) ||
      std::adjacent_find(plan.sizes.begin(), plan.sizes.end()) != plan.sizes.end() ||
      plan.sizes.front() < 1) {
    throw SchemaError("sizes must be positive and strictly ascending");
  }
  if (plan.seeds.empty()) throw SchemaError("seeds must be non-empty");
  if (!(plan.r_ratio > 0 && plan.r_ratio <= 1)) {
    throw SchemaError("r_ratio must be in (0, 1]");
  }
  return plan;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size() / 2;
  return values.size() % 2 ? values[m] : (values[m - 1] + values[m]) / 2;
}

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t k = xs.size();
  double mx = 0;
  double my = 0;
  for (std::size_t i = 0; i < k; ++i) {
    mx += std::log(xs[i]);
    my += std::log(ys[i]);
  }
  mx /= static_cast<double>(k);
  my /= static_cast<double>(k);
  double sxy = 0;
  double sxx = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const double dx = std::log(xs[i]) - mx;
    sxy += dx * (std::log(ys[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0) throw ContractViolation("slope needs two distinct sizes");
  return sxy / sxx;
}

namespace {

struct Cell {
  Family family;
  std::size_t n;
  std::uint64_t seed;
};

SolveOptions options_for(BenchAlgorithm algorithm, std::uint64_t seed,
                         const std::string& id) {
  SolveOptions o;
  o.seed = seed;
  o.instance_id = id;
  switch (algorithm) {
    case BenchAlgorithm::kNaive: o.algorithm = Algorithm::kNaive; break;
    case BenchAlgorithm::kCunningham: o.algorithm = Algorithm::kCunningham; break;
    case BenchAlgorithm::kPipelineRand:
      o.algorithm = Algorithm::kPipeline;
      o.mode = CategorizerMode::kRandomized;
      break;
    case BenchAlgorithm::kPipelineDet:
      o.algorithm = Algorithm::kPipeline;
      o.mode = CategorizerMode::kDeterministic;
      break;
  }
  return o;
}

std::vector<BenchRow> run_cell(const BenchPlan& plan, const Cell& cell,
                               const BenchOptions& options) {
  GenerateOptions gen;
  gen.r_ratio = plan.r_ratio;
  const Instance instance = generate_instance(cell.family, cell.n, cell.seed, gen);
  auto m1 = make_oracle(instance.matroid1, instance.n);
  auto m2 = make_oracle(instance.matroid2, instance.n);

  std::vector<BenchRow> rows;
  std::optional<std::size_t> reference;
  for (BenchAlgorithm algorithm : plan.algorithms) {
    const SolveResult result =
        run_solver(*m1, *m2, options_for(algorithm, cell.seed, instance.id));
    BenchRow row;
    row.family = cell.family;
    row.n = cell.n;
    row.seed = cell.seed;
    row.algorithm = algorithm;
    row.instance_id = instance.id;
    row.answer_size = result.report.answer_size;
    row.ledger = result.report.ledger;
    row.wall_time_ms = result.report.wall_time_ms;
    if (algorithm == BenchAlgorithm::kNaive) reference = row.answer_size;
    rows.push_back(row);
  }
  if (!options.verify) return rows;
  if (!reference) {
    SolveOptions naive;
    naive.algorithm = Algorithm::kNaive;
    reference = run_solver(*m1, *m2, naive).report.answer_size;
  }
  for (BenchRow& row : rows) {
    row.reference_size = reference;
    if (row.answer_size != *reference) {
      const std::filesystem::path path =
          std::filesystem::path(options.dump_dir) / (instance.id + ".json");
      save_instance(instance, path.string());
      throw VerificationFailure(
          std::string(bench_algorithm_name(row.algorithm)) + " answered " +
              std::to_string(row.answer_size) + " but naive_exact found " +
              std::to_string(*reference) + " on " + instance.id +
              "; instance written to " + path.string(),
          path.string());
    }
  }
  return rows;
}

}  // namespace

BenchReport run_bench(const BenchPlan& plan, const BenchOptions& options) {
  std::vector<Cell> cells;
  for (Family family : plan.families) {
    for (std::size_t n : plan.sizes) {
      for (std::uint64_t seed : plan.seeds) cells.push_back({family, n, seed});
    }
  }
  // Largest cells first so the pool drains evenly.
  std::vector<std::size_t> order(cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cells[a].n > cells[b].n;
  });

  std::vector<std::vector<BenchRow>> results(cells.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (;;) {
      if (stop.load()) return;
      const std::size_t k = next.fetch_add(1);
      if (k >= order.size()) return;
      try {
        results[order[k]] = run_cell(plan, cells[order[k]], options);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        stop.store(true);
        return;
      }
    }
  };
  unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(cells.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  BenchReport report;
  report.plan = plan;
  for (auto& rows : results) {
    for (auto& row : rows) report.rows.push_back(std::move(row));
  }

  for (Family family : plan.families) {
    for (BenchAlgorithm algorithm : plan.algorithms) {
      std::vector<double> xs;
      std::vector<double> ys;
      for (std::size_t n : plan.sizes) {
        BenchSummary s;
        s.family = family;
        s.algorithm = algorithm;
        s.n = n;
        std::vector<double> totals;
        for (const BenchRow& row : report.rows) {
          if (row.family != family || row.algorithm != algorithm || row.n != n) continue;
          const auto total = row.ledger.total();
          totals.push_back(static_cast<double>(total));
          s.max_queries = std::max(s.max_queries, total);
          for (std::size_t st = 0; st < kStageCount; ++st) {
            s.mean_stage[st] += static_cast<double>(row.ledger.stage_total(static_cast<Stage>(st)));
          }
        }
        s.runs = totals.size();
        if (s.runs) {
          s.median_queries = median(totals);
          double sum = 0;
          for (double t : totals) sum += t;
          s.mean_queries = sum / static_cast<double>(s.runs);
          for (auto& m : s.mean_stage) m /= static_cast<double>(s.runs);
        }
        if (s.median_queries > 0) {
          xs.push_back(static_cast<double>(n));
          ys.push_back(s.median_queries);
        }
        report.summary.push_back(s);
      }
      BenchSlope slope{family, algorithm, std::nullopt};
      if (xs.size() >= 4) slope.slope = loglog_slope(xs, ys);
      report.slopes.push_back(slope);
    }
  }
  return report;
}

namespace {

nlohmann::ordered_json stages_json(const std::array<double, kStageCount>& values) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (std::size_t s = 0; s < kStageCount; ++s) j[std::string(kStageNames[s])] = values[s];
  return j;
}

const BenchSlope* find_slope(const BenchReport& report, Family f, BenchAlgorithm a) {
  for (const auto& s : report.slopes) {
    if (s.family == f && s.algorithm == a) return &s;
  }
  return nullptr;
}

}  // namespace

nlohmann::ordered_json bench_to_json(const BenchReport& report, bool include_time) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json plan;
  for (Family f : report.plan.families) plan["families"].push_back(family_name(f));
  plan["sizes"] = report.plan.sizes;
  plan["r_ratio"] = report.plan.r_ratio;
  for (BenchAlgorithm a : report.plan.algorithms) {
    plan["algorithms"].push_back(bench_algorithm_name(a));
  }
  plan["seeds"] = report.plan.seeds;
  j["plan"] = std::move(plan);

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const BenchRow& row : report.rows) {
    nlohmann::ordered_json r;
    r["family"] = family_name(row.family);
    r["n"] = row.n;
    r["seed"] = row.seed;
    r["algorithm"] = bench_algorithm_name(row.algorithm);
    r["instance_id"] = row.instance_id;
    r["answer_size"] = row.answer_size;
    r["verified"] = row.reference_size.has_value();
    r["total_queries"] = row.ledger.total();
    std::array<double, kStageCount> per_stage{};
    for (std::size_t s = 0; s < kStageCount; ++s) {
      per_stage[s] = static_cast<double>(row.ledger.stage_total(static_cast<Stage>(s)));
    }
    r["stage_ledgers"] = stages_json(per_stage);
    if (include_time) r["wall_time_ms"] = row.wall_time_ms;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);

  nlohmann::ordered_json summary = nlohmann::ordered_json::array();
  for (const BenchSummary& s : report.summary) {
    nlohmann::ordered_json r;
    r["family"] = family_name(s.family);
    r["algorithm"] = bench_algorithm_name(s.algorithm);
    r["n"] = s.n;
    r["runs"] = s.runs;
    r["median_queries"] = s.median_queries;
    r["mean_queries"] = s.mean_queries;
    r["max_queries"] = s.max_queries;
    r["mean_stage_queries"] = stages_json(s.mean_stage);
    summary.push_back(std::move(r));
  }
  j["summary"] = std::move(summary);

  nlohmann::ordered_json slopes = nlohmann::ordered_json::array();
  for (const BenchSlope& s : report.slopes) {
    nlohmann::ordered_json r;
    r["family"] = family_name(s.family);
    r["algorithm"] = bench_algorithm_name(s.algorithm);
    r["slope"] = s.slope ? nlohmann::ordered_json(*s.slope) : nlohmann::ordered_json();
    slopes.push_back(std::move(r));
  }
  j["slopes"] = std::move(slopes);
  return j;
}

std::string bench_to_csv(const BenchReport& report) {
  std::ostringstream out;
  out.precision(10);
  out << "family,algorithm,n,runs,median_queries,mean_queries,max_queries";
  for (auto name : kStageNames) out << ",mean_" << name;
  out << ",slope\n";
  for (const BenchSummary& s : report.summary) {
    out << family_name(s.family) << ',' << bench_algorithm_name(s.algorithm) << ','
        << s.n << ',' << s.runs << ',' << s.median_queries << ',' << s.mean_queries
        << ',' << s.max_queries;
    for (double m : s.mean_stage) out << ',' << m;
    const BenchSlope* slope = find_slope(report, s.family, s.algorithm);
    out << ',';
    if (slope && slope->slope) out << *slope->slope;
    out << '\n';
  }
  return out.str();
}

}  // namespace matint
