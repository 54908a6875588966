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

#include "matint/matint.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "matint/bench.hpp"
#include "matint/instance.hpp"
#include "matint/pipeline.hpp"
#include "matint/reference.hpp"

struct matint_instance {
  matint::Instance instance;
};

struct matint_result {
  std::vector<std::uint32_t> witness;
  matint::SolveReport report;
};

namespace {

thread_local std::string last_error;

matint_status fail(matint_status status, const char* what) {
  last_error = what;
  return status;
}

// Runs f and turns any exception into a status plus last_error.
template <typename F>
matint_status guarded(F&& f) {
  try {
    return f();
  } catch (const matint::VerificationFailure& e) {
    return fail(MATINT_VERIFICATION, e.what());
  } catch (const matint::SchemaError& e) {
    return fail(MATINT_SCHEMA, e.what());
  } catch (const matint::IoError& e) {
    return fail(MATINT_IO, e.what());
  } catch (const matint::ValidationError& e) {
    return fail(MATINT_INVALID_ARGUMENT, e.what());
  } catch (const matint::ContractViolation& e) {
    return fail(MATINT_CONTRACT, e.what());
  } catch (const matint::InvariantViolation& e) {
    return fail(MATINT_INVARIANT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MATINT_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MATINT_INTERNAL, e.what());
  } catch (...) {
    return fail(MATINT_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

#define MATINT_REQUIRE(cond)                                        \
  do {                                                              \
    if (!(cond)) return fail(MATINT_INVALID_ARGUMENT, #cond " is false"); \
  } while (0)

}  // namespace

extern "C" {

const char* matint_last_error(void) { return last_error.c_str(); }

const char* matint_status_name(matint_status status) {
  switch (status) {
    case MATINT_OK: return "ok";
    case MATINT_INVALID_ARGUMENT: return "invalid_argument";
    case MATINT_SCHEMA: return "schema";
    case MATINT_IO: return "io";
    case MATINT_CONTRACT: return "contract";
    case MATINT_INVARIANT: return "invariant";
    case MATINT_VERIFICATION: return "verification";
    case MATINT_UNSUPPORTED: return "unsupported";
    case MATINT_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* matint_version(void) { return "1.0.0"; }

void matint_string_free(char* text) { std::free(text); }

matint_status matint_instance_generate(const char* family, uint64_t n,
                                       uint64_t seed, double r_ratio,
                                       int64_t planted_rank,
                                       matint_instance** out) {
  MATINT_REQUIRE(family != nullptr && out != nullptr);
  return guarded([&] {
    matint::GenerateOptions options;
    options.r_ratio = r_ratio;
    options.planted_rank = planted_rank;
    auto* handle = new matint_instance{
        matint::generate_instance(matint::parse_family(family), n, seed, options)};
    *out = handle;
    return MATINT_OK;
  });
}

matint_status matint_instance_parse(const char* json, matint_instance** out) {
  MATINT_REQUIRE(json != nullptr && out != nullptr);
  return guarded([&] {
    *out = new matint_instance{matint::instance_from_json(json)};
    return MATINT_OK;
  });
}

matint_status matint_instance_load(const char* path, matint_instance** out) {
  MATINT_REQUIRE(path != nullptr && out != nullptr);
  return guarded([&] {
    *out = new matint_instance{matint::load_instance(path)};
    return MATINT_OK;
  });
}

matint_status matint_instance_save(const matint_instance* instance,
                                   const char* path) {
  MATINT_REQUIRE(instance != nullptr && path != nullptr);
  return guarded([&] {
    matint::save_instance(instance->instance, path);
    return MATINT_OK;
  });
}

matint_status matint_instance_to_json(const matint_instance* instance, char** out) {
  MATINT_REQUIRE(instance != nullptr && out != nullptr);
  return guarded([&] {
    *out = copy_string(matint::to_json(instance->instance));
    return MATINT_OK;
  });
}

uint64_t matint_instance_size(const matint_instance* instance) {
  return instance ? instance->instance.n : 0;
}

const char* matint_instance_id(const matint_instance* instance) {
  return instance ? instance->instance.id.c_str() : "";
}

void matint_instance_free(matint_instance* instance) { delete instance; }

void matint_solve_options_init(matint_solve_options* options) {
  if (!options) return;
  *options = matint_solve_options{};
  options->algorithm = "pipeline";
  options->mode = "rand";
  options->phased_cunningham = 1;
}

matint_status matint_solve(const matint_instance* instance,
                           const matint_solve_options* options,
                           matint_result** out) {
  MATINT_REQUIRE(instance != nullptr && options != nullptr && out != nullptr);
  MATINT_REQUIRE(options->bootstrap != nullptr || options->bootstrap_len == 0);
  return guarded([&] {
    matint::SolveOptions o;
    o.algorithm = matint::parse_algorithm(options->algorithm ? options->algorithm : "pipeline");
    const std::string mode = options->mode ? options->mode : "rand";
    if (mode == "rand") {
      o.mode = matint::CategorizerMode::kRandomized;
    } else if (mode == "det") {
      o.mode = matint::CategorizerMode::kDeterministic;
    } else {
      throw matint::ValidationError("unknown mode '" + mode + "' (rand or det)");
    }
    o.seed = options->seed;
    if (options->d) o.d = options->d;
    if (options->h) o.h = options->h;
    o.repetitions = options->repetitions;
    o.check_invariants = options->check_invariants != 0;
    o.phased_cunningham = options->phased_cunningham != 0;
    if (options->bootstrap) {
      o.bootstrap.emplace(options->bootstrap, options->bootstrap + options->bootstrap_len);
    }
    o.instance_id = instance->instance.id;
    const auto& inst = instance->instance;
    auto m1 = matint::make_oracle(inst.matroid1, inst.n);
    auto m2 = matint::make_oracle(inst.matroid2, inst.n);
    matint::SolveResult solved = matint::run_solver(*m1, *m2, o);
    *out = new matint_result{std::move(solved.set), std::move(solved.report)};
    return MATINT_OK;
  });
}

uint64_t matint_result_size(const matint_result* result) {
  return result ? result->witness.size() : 0;
}

const uint32_t* matint_result_witness(const matint_result* result) {
  return result ? result->witness.data() : nullptr;
}

matint_status matint_result_report_json(const matint_result* result,
                                        int include_time, char** out) {
  MATINT_REQUIRE(result != nullptr && out != nullptr);
  return guarded([&] {
    auto j = matint::report_to_json(result->report, include_time != 0);
    j["witness"] = result->witness;
    *out = copy_string(j.dump());
    return MATINT_OK;
  });
}

void matint_result_free(matint_result* result) { delete result; }

matint_status matint_brute_force(const matint_instance* instance, uint64_t* size) {
  MATINT_REQUIRE(instance != nullptr && size != nullptr);
  return guarded([&] {
    const auto& inst = instance->instance;
    auto m1 = matint::make_oracle(inst.matroid1, inst.n);
    auto m2 = matint::make_oracle(inst.matroid2, inst.n);
    *size = matint::brute_force_max_common(*m1, *m2).size;
    return MATINT_OK;
  });
}

matint_status matint_verify(const matint_instance* instance, uint64_t seed,
                            char** report_json) {
  MATINT_REQUIRE(instance != nullptr && report_json != nullptr);
  return guarded([&] {
    using matint::Algorithm;
    using matint::CategorizerMode;
    const auto& inst = instance->instance;
    auto m1 = matint::make_oracle(inst.matroid1, inst.n);
    auto m2 = matint::make_oracle(inst.matroid2, inst.n);
    struct Run {
      const char* name;
      Algorithm algorithm;
      CategorizerMode mode;
    };
    std::vector<Run> runs = {
        {"naive", Algorithm::kNaive, CategorizerMode::kRandomized},
        {"cunningham", Algorithm::kCunningham, CategorizerMode::kRandomized},
        {"pipeline_rand", Algorithm::kPipeline, CategorizerMode::kRandomized},
        {"pipeline_det", Algorithm::kPipeline, CategorizerMode::kDeterministic},
    };
    if (inst.n <= matint::kBruteForceLimit) {
      runs.push_back({"brute", Algorithm::kBrute, CategorizerMode::kRandomized});
    }
    nlohmann::ordered_json j;
    j["instance_id"] = inst.id;
    j["n"] = inst.n;
    j["seed"] = seed;
    bool agree = true;
    std::optional<std::size_t> first;
    for (const Run& run : runs) {
      matint::SolveOptions o;
      o.algorithm = run.algorithm;
      o.mode = run.mode;
      o.seed = seed;
      o.check_invariants = true;
      const auto size = matint::run_solver(*m1, *m2, o).report.answer_size;
      j["answers"][run.name] = size;
      if (!first) first = size;
      if (size != *first) agree = false;
    }
    j["agree"] = agree;
    *report_json = copy_string(j.dump());
    if (!agree) {
      return fail(MATINT_VERIFICATION, ("algorithms disagree on " + inst.id).c_str());
    }
    return MATINT_OK;
  });
}

void matint_bench_options_init(matint_bench_options* options) {
  if (!options) return;
  *options = matint_bench_options{};
  options->verify = 1;
}

matint_status matint_bench_plan_output(const char* plan_json, char** path,
                                       char** format) {
  MATINT_REQUIRE(plan_json != nullptr && path != nullptr && format != nullptr);
  return guarded([&] {
    const matint::BenchPlan plan = matint::parse_plan(plan_json);
    *path = copy_string(plan.output_path);
    *format = copy_string(plan.format == matint::OutputFormat::kCsv ? "csv" : "json");
    return MATINT_OK;
  });
}

matint_status matint_bench_run(const char* plan_json,
                               const matint_bench_options* options,
                               char** report) {
  MATINT_REQUIRE(plan_json != nullptr && options != nullptr && report != nullptr);
  return guarded([&] {
    const matint::BenchPlan plan = matint::parse_plan(plan_json);
    matint::OutputFormat format = plan.format;
    if (options->format) format = matint::parse_format(options->format);
    matint::BenchOptions o;
    o.verify = options->verify != 0;
    o.workers = options->workers;
    if (options->dump_dir) o.dump_dir = options->dump_dir;
    const matint::BenchReport result = matint::run_bench(plan, o);
    *report = copy_string(format == matint::OutputFormat::kCsv
                              ? matint::bench_to_csv(result)
                              : matint::bench_to_json(result).dump(2) + "\n");
    return MATINT_OK;
  });
}

}  // extern "C"
