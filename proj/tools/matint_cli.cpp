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

// matint: generate instances, solve them, run scaling benchmarks.
// Only talks to the library through the C interface.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "matint/matint.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerify = 2, kInvariant = 3 };

int exit_for(matint_status status) {
  std::cerr << "matint: " << matint_status_name(status) << ": "
            << matint_last_error() << "\n";
  switch (status) {
    case MATINT_OK: return kOk;
    case MATINT_VERIFICATION: return kVerify;
    case MATINT_INVARIANT: return kInvariant;
    default: return kUsage;
  }
}

// Owns a char* from the library.
struct Text {
  char* p = nullptr;
  ~Text() { matint_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

bool write_out(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << "\n";
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "matint: cannot write " << path << "\n";
    return false;
  }
  f << body;
  if (!body.empty() && body.back() != '\n') f << "\n";
  return static_cast<bool>(f);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "matint: cannot read " << path << "\n";
    return false;
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  out = ss.str();
  return true;
}

struct GenArgs {
  std::string family;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::string out;
  double r_ratio = 0.5;
  std::int64_t planted = -1;
};

int run_gen(const GenArgs& a) {
  matint_instance* inst = nullptr;
  matint_status st = matint_instance_generate(a.family.c_str(), a.n, a.seed, a.r_ratio,
                                              a.planted, &inst);
  if (st != MATINT_OK) return exit_for(st);
  int code = kOk;
  if (a.out.empty() || a.out == "-") {
    Text json;
    st = matint_instance_to_json(inst, &json.p);
    if (st == MATINT_OK) {
      std::cout << json.str() << "\n";
    } else {
      code = exit_for(st);
    }
  } else {
    st = matint_instance_save(inst, a.out.c_str());
    if (st != MATINT_OK) code = exit_for(st);
  }
  matint_instance_free(inst);
  return code;
}

struct SolveArgs {
  std::string path;
  std::string algo = "pipeline";
  std::string mode = "rand";
  std::uint64_t seed = 0;
  std::uint64_t d = 0;
  std::uint64_t h = 0;
  std::uint64_t reps = 0;
  bool check = false;
  bool fresh = false;
  bool no_time = false;
  std::string format = "json";
  std::string out;
};

int run_solve(SolveArgs a) {
  // pipeline_rand / pipeline_det as in bench plans
  if (a.algo == "pipeline_rand" || a.algo == "pipeline_det") {
    a.mode = a.algo.substr(9);
    a.algo = "pipeline";
  }
  matint_instance* inst = nullptr;
  matint_status st = matint_instance_load(a.path.c_str(), &inst);
  if (st != MATINT_OK) return exit_for(st);

  matint_solve_options o;
  matint_solve_options_init(&o);
  o.algorithm = a.algo.c_str();
  o.mode = a.mode.c_str();
  o.seed = a.seed;
  o.d = a.d;
  o.h = a.h;
  o.repetitions = a.reps;
  o.check_invariants = a.check;
  o.phased_cunningham = !a.fresh;
  matint_result* res = nullptr;
  st = matint_solve(inst, &o, &res);
  matint_instance_free(inst);
  if (st != MATINT_OK) return exit_for(st);

  Text report;
  st = matint_result_report_json(res, !a.no_time, &report.p);
  if (st != MATINT_OK) {
    matint_result_free(res);
    return exit_for(st);
  }
  std::string body;
  if (a.format == "csv") {
    body = "answer_size,witness\n" + std::to_string(matint_result_size(res)) + ",";
    const std::uint32_t* w = matint_result_witness(res);
    for (std::uint64_t i = 0; i < matint_result_size(res); ++i) {
      if (i) body += ' ';
      body += std::to_string(w[i]);
    }
    body += "\n";
  } else {
    body = report.str();
  }
  matint_result_free(res);
  return write_out(a.out, body) ? kOk : kUsage;
}

struct BenchArgs {
  std::string plan;
  bool no_verify = false;
  std::string format;
  std::string out;
  unsigned workers = 0;
  std::string dump_dir = ".";
};

int run_bench(const BenchArgs& a) {
  std::string plan;
  if (!read_file(a.plan, plan)) return kUsage;
  Text path, plan_format;
  matint_status st = matint_bench_plan_output(plan.c_str(), &path.p, &plan_format.p);
  if (st != MATINT_OK) return exit_for(st);

  matint_bench_options o;
  matint_bench_options_init(&o);
  o.verify = !a.no_verify;
  o.workers = a.workers;
  o.dump_dir = a.dump_dir.c_str();
  if (!a.format.empty()) o.format = a.format.c_str();
  Text report;
  st = matint_bench_run(plan.c_str(), &o, &report.p);
  if (st != MATINT_OK) return exit_for(st);
  const std::string out = a.out.empty() ? path.str() : a.out;
  return write_out(out, report.str()) ? kOk : kUsage;
}

int run_verify(const std::string& path, std::uint64_t seed, const std::string& out) {
  matint_instance* inst = nullptr;
  matint_status st = matint_instance_load(path.c_str(), &inst);
  if (st != MATINT_OK) return exit_for(st);
  Text summary;
  st = matint_verify(inst, seed, &summary.p);
  matint_instance_free(inst);
  if (summary.p) write_out(out, summary.str());
  return st == MATINT_OK ? kOk : exit_for(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid intersection solver and benchmark runner"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");  // -h is taken by --h
  app.set_version_flag("--version", matint_version());

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "write a generated instance");
  g->add_option("family", gen.family, "bipartite_matching, rainbow_spanning_tree, "
                                      "random_binary_linear, planted_rank, uniform_partition")
      ->required();
  g->add_option("n", gen.n, "ground set size")->required();
  g->add_option("seed", gen.seed)->required();
  g->add_option("--out,-o", gen.out, "instance file (stdout if omitted)");
  g->add_option("--r-ratio", gen.r_ratio, "target r/n")->check(CLI::Range(0.0, 1.0));
  g->add_option("--planted-rank", gen.planted, "planted_rank only; default n/2");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "solve an instance file");
  s->add_option("instance", solve.path)->required()->check(CLI::ExistingFile);
  s->add_option("--algo", solve.algo)
      ->check(CLI::IsMember({"naive", "cunningham", "pipeline", "pipeline_rand",
                             "pipeline_det", "approx", "brute"}));
  s->add_option("--mode", solve.mode)->check(CLI::IsMember({"rand", "det"}));
  s->add_option("--seed", solve.seed);
  s->add_option("--d", solve.d, "distance bound (required for approx)");
  s->add_option("--h", solve.h, "heaviness threshold");
  s->add_option("--reps", solve.reps, "sampling repetitions per vertex");
  s->add_flag("--check", solve.check, "run internal invariant checks");
  s->add_flag("--fresh-layers", solve.fresh, "relayer from scratch every augmentation");
  s->add_flag("--no-time", solve.no_time, "omit wall time from the report");
  s->add_option("--format", solve.format)->check(CLI::IsMember({"json", "csv"}));
  s->add_option("--out,-o", solve.out);

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "run a benchmark plan");
  b->add_option("plan", bench.plan)->required()->check(CLI::ExistingFile);
  b->add_flag("--no-verify", bench.no_verify, "skip the naive cross-check");
  b->add_option("--format", bench.format)->check(CLI::IsMember({"json", "csv"}));
  b->add_option("--out,-o", bench.out, "overrides the plan's output path");
  b->add_option("--workers", bench.workers, "0: hardware threads");
  b->add_option("--dump-dir", bench.dump_dir, "where mismatching instances go");

  std::string verify_path, verify_out;
  std::uint64_t verify_seed = 0;
  auto* v = app.add_subcommand("verify", "cross-check all algorithms on an instance");
  v->add_option("instance", verify_path)->required()->check(CLI::ExistingFile);
  v->add_option("--seed", verify_seed);
  v->add_option("--out,-o", verify_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*g) return run_gen(gen);
  if (*s) return run_solve(solve);
  if (*b) return run_bench(bench);
  if (*v) return run_verify(verify_path, verify_seed, verify_out);
  return kUsage;
}
