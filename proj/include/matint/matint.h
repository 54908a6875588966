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

#ifndef MATINT_MATINT_H_
#define MATINT_MATINT_H_

/* C interface to the matroid-intersection solver.
 *
 * Every fallible call returns a matint_status. On failure a message is kept
 * per thread and can be read with matint_last_error() until the next failing
 * call on that thread. Strings handed out through char** parameters belong
 * to the caller and are released with matint_string_free(). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MATINT_API __declspec(dllexport)
#else
#define MATINT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum matint_status {
  MATINT_OK = 0,
  MATINT_INVALID_ARGUMENT = 1, /* null pointer, unknown name, bad option */
  MATINT_SCHEMA = 2,           /* malformed instance or plan */
  MATINT_IO = 3,
  MATINT_CONTRACT = 4,         /* precondition of an operation broken */
  MATINT_INVARIANT = 5,        /* internal check failed: a solver bug */
  MATINT_VERIFICATION = 6,     /* answers disagree with the reference */
  MATINT_UNSUPPORTED = 7,
  MATINT_INTERNAL = 8
} matint_status;

typedef struct matint_instance matint_instance;
typedef struct matint_result matint_result;

MATINT_API const char* matint_last_error(void);
MATINT_API const char* matint_status_name(matint_status status);
MATINT_API const char* matint_version(void);
MATINT_API void matint_string_free(char* text);

/* Instances. family is one of bipartite_matching, rainbow_spanning_tree,
 * random_binary_linear, planted_rank, uniform_partition. planted_rank < 0
 * picks n / 2. */
MATINT_API matint_status matint_instance_generate(const char* family, uint64_t n,
                                                  uint64_t seed, double r_ratio,
                                                  int64_t planted_rank,
                                                  matint_instance** out);
MATINT_API matint_status matint_instance_parse(const char* json,
                                               matint_instance** out);
MATINT_API matint_status matint_instance_load(const char* path,
                                              matint_instance** out);
MATINT_API matint_status matint_instance_save(const matint_instance* instance,
                                              const char* path);
MATINT_API matint_status matint_instance_to_json(const matint_instance* instance,
                                                 char** out);
MATINT_API uint64_t matint_instance_size(const matint_instance* instance);
MATINT_API const char* matint_instance_id(const matint_instance* instance);
MATINT_API void matint_instance_free(matint_instance* instance);

/* Solving. algorithm: naive, cunningham, pipeline, approx, brute.
 * mode: rand or det. d and h of 0 mean "choose automatically" (approx needs
 * d). A non-null bootstrap replaces the greedy start. */
typedef struct matint_solve_options {
  const char* algorithm;
  const char* mode;
  uint64_t seed;
  uint64_t d;
  uint64_t h;
  uint64_t repetitions;
  int check_invariants;
  int phased_cunningham;
  const uint32_t* bootstrap;
  size_t bootstrap_len;
} matint_solve_options;

MATINT_API void matint_solve_options_init(matint_solve_options* options);
MATINT_API matint_status matint_solve(const matint_instance* instance,
                                      const matint_solve_options* options,
                                      matint_result** out);
MATINT_API uint64_t matint_result_size(const matint_result* result);
/* Ascending element ids; matint_result_size() entries. */
MATINT_API const uint32_t* matint_result_witness(const matint_result* result);
MATINT_API matint_status matint_result_report_json(const matint_result* result,
                                                   int include_time, char** out);
MATINT_API void matint_result_free(matint_result* result);

/* Exhaustive optimum; MATINT_CONTRACT for n > 20. */
MATINT_API matint_status matint_brute_force(const matint_instance* instance,
                                            uint64_t* size);

/* Runs every algorithm (brute force too when n <= 20) and compares sizes.
 * Returns MATINT_VERIFICATION on disagreement; the JSON summary is produced
 * either way. */
MATINT_API matint_status matint_verify(const matint_instance* instance,
                                       uint64_t seed, char** report_json);

/* Benchmarks. */
typedef struct matint_bench_options {
  int verify;
  unsigned workers;     /* 0: one per hardware thread */
  const char* dump_dir; /* NULL: current directory */
  const char* format;   /* json, csv, or NULL for the plan's choice */
} matint_bench_options;

MATINT_API void matint_bench_options_init(matint_bench_options* options);
/* Output path and format named in the plan ("" when absent). */
MATINT_API matint_status matint_bench_plan_output(const char* plan_json,
                                                  char** path, char** format);
/* Runs the plan and renders the scaling report. A verification mismatch
 * returns MATINT_VERIFICATION after writing the instance to dump_dir. */
MATINT_API matint_status matint_bench_run(const char* plan_json,
                                          const matint_bench_options* options,
                                          char** report);

#ifdef __cplusplus
}
#endif

#endif  /* MATINT_MATINT_H_ */
