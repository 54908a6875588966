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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "matint/instance.hpp"
#include "matint/ledger.hpp"

namespace matint {

enum class BenchAlgorithm : std::uint8_t {
  kNaive,
  kCunningham,
  kPipelineRand,
  kPipelineDet,
};

std::string_view bench_algorithm_name(BenchAlgorithm algorithm);
BenchAlgorithm parse_bench_algorithm(std::string_view name);

enum class OutputFormat : std::uint8_t { kJson, kCsv };
OutputFormat parse_format(std::string_view name);

// Plan file:
//   {"families": [...], "sizes": [...], "r_ratio": 0.5,
//    "algorithms": ["naive", "pipeline_rand", ...], "seeds": [...],
//    "output": {"path": "report.json", "format": "json"}}
// sizes must be ascending and seeds non-empty. "output" is optional.
struct BenchPlan {
  std::vector<Family> families;
  std::vector<std::size_t> sizes;
  double r_ratio = 0.5;
  std::vector<BenchAlgorithm> algorithms;
  std::vector<std::uint64_t> seeds;
  std::string output_path;
  OutputFormat format = OutputFormat::kJson;
};

// Throws SchemaError.
BenchPlan parse_plan(std::string_view json_text);

struct BenchRow {
  Family family{};
  std::size_t n = 0;
  std::uint64_t seed = 0;
  BenchAlgorithm algorithm{};
  std::string instance_id;
  std::size_t answer_size = 0;
  std::optional<std::size_t> reference_size;  // naive answer when verified
  LedgerSnapshot ledger;
  double wall_time_ms = 0;
};

struct BenchSummary {
  Family family{};
  BenchAlgorithm algorithm{};
  std::size_t n = 0;
  std::size_t runs = 0;
  double median_queries = 0;
  double mean_queries = 0;
  std::uint64_t max_queries = 0;
  std::array<double, kStageCount> mean_stage{};
};

struct BenchSlope {
  Family family{};
  BenchAlgorithm algorithm{};
  std::optional<double> slope;  // needs at least 4 sizes
};

struct BenchReport {
  BenchPlan plan;
  std::vector<BenchRow> rows;
  std::vector<BenchSummary> summary;
  std::vector<BenchSlope> slopes;
};

struct BenchOptions {
  bool verify = true;
  // 0: one per hardware thread.
  unsigned workers = 0;
  // Where an instance that fails verification is written.
  std::string dump_dir = ".";
};

// Thrown when an answer differs from the naive reference; the offending
// instance has been written to dump_path.
class VerificationFailure : public std::runtime_error {
 public:
  VerificationFailure(const std::string& what, std::string dump_path)
      : std::runtime_error(what), dump_path_(std::move(dump_path)) {}
  const std::string& dump_path() const { return dump_path_; }

 private:
  std::string dump_path_;
};

// Runs every (family, size, seed) cell with every algorithm. Rows come out in
// plan order regardless of the worker count, and all query counts are pure
// functions of the plan.
BenchReport run_bench(const BenchPlan& plan, const BenchOptions& options = {});

// Least-squares slope of ln y against ln x. Needs two distinct x values.
double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

double median(std::vector<double> values);

nlohmann::ordered_json bench_to_json(const BenchReport& report,
                                     bool include_time = true);
// One line per (family, algorithm, n) summary, slope repeated per group.
std::string bench_to_csv(const BenchReport& report);

}  // namespace matint
