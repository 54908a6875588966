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

// Drives the matint executable as a user would.
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef MATINT_CLI
#error "MATINT_CLI must name the CLI binary"
#endif

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MATINT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("matint_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen writes loadable, reproducible files") {
  TempDir dir;
  REQUIRE(run("gen bipartite_matching 8 1 -o " + (dir / "a.json")).code == 0);
  REQUIRE(run("gen bipartite_matching 8 1 -o " + (dir / "b.json")).code == 0);
  const std::string a = slurp(dir / "a.json");
  CHECK(a == slurp(dir / "b.json"));
  auto j = nlohmann::json::parse(a);
  CHECK(j["n"] == 8);
  // stdout form is the same document
  auto printed = run("gen bipartite_matching 8 1");
  CHECK(printed.code == 0);
  CHECK(nlohmann::json::parse(printed.out) == j);
}

TEST_CASE("planted rank confirmed by brute force") {
  TempDir dir;
  REQUIRE(run("gen planted_rank 16 7 -o " + (dir / "p.json")).code == 0);
  auto r = run("solve " + (dir / "p.json") + " --algo brute");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["answer_size"] == 8);
}

TEST_CASE("solve") {
  TempDir dir;
  SUBCASE("r = 0") {
    std::ofstream(dir / "zero.json")
        << R"({"id":"zero","n":3,"matroid1":{"kind":"uniform","k":0},)"
           R"("matroid2":{"kind":"uniform","k":3}})";
    auto r = run("solve " + (dir / "zero.json"));
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["answer_size"] == 0);
    CHECK(j["witness"].empty());
  }
  SUBCASE("pipeline_rand agrees with naive, reports are stable") {
    REQUIRE(run("gen rainbow_spanning_tree 60 3 -o " + (dir / "i.json")).code == 0);
    auto fast = run("solve " + (dir / "i.json") + " --algo pipeline_rand --seed 5 --no-time");
    auto slow = run("solve " + (dir / "i.json") + " --algo naive --no-time");
    REQUIRE(fast.code == 0);
    REQUIRE(slow.code == 0);
    CHECK(nlohmann::json::parse(fast.out)["answer_size"] ==
          nlohmann::json::parse(slow.out)["answer_size"]);
    auto again = run("solve " + (dir / "i.json") + " --algo pipeline_rand --seed 5 --no-time");
    CHECK(again.out == fast.out);
    auto det = run("solve " + (dir / "i.json") + " --mode det --d 2 --h 2 --check --no-time");
    REQUIRE(det.code == 0);
    auto jd = nlohmann::json::parse(det.out);
    CHECK(jd["mode"] == "det");
    CHECK(jd["d"] == 2);
    CHECK(jd["h"] == 2);
    CHECK(jd["answer_size"] == nlohmann::json::parse(slow.out)["answer_size"]);
  }
  SUBCASE("csv and --out") {
    REQUIRE(run("gen uniform_partition 10 1 -o " + (dir / "u.json")).code == 0);
    REQUIRE(run("solve " + (dir / "u.json") + " --format csv -o " + (dir / "u.csv")).code == 0);
    CHECK(slurp(dir / "u.csv").rfind("answer_size,witness\n", 0) == 0);
  }
  SUBCASE("bad input") {
    std::ofstream(dir / "bad.json") << R"({"id":"x","n":2})";
    CHECK(run("solve " + (dir / "bad.json")).code == 1);
    CHECK(run("solve " + (dir / "missing.json")).code == 1);
    REQUIRE(run("gen uniform_partition 10 1 -o " + (dir / "u.json")).code == 0);
    CHECK(run("solve " + (dir / "u.json") + " --algo approx").code == 1);
    CHECK(run("solve " + (dir / "u.json") + " --mode fast").code == 1);
  }
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("gen bipartite_matching").code == 1);
  CHECK(run("gen nosuchfamily 8 1").code == 1);
  CHECK(run("--help").code == 0);
}

TEST_CASE("verify") {
  TempDir dir;
  REQUIRE(run("gen random_binary_linear 12 2 -o " + (dir / "v.json")).code == 0);
  auto r = run("verify " + (dir / "v.json") + " --seed 4");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["agree"] == true);
  CHECK(j["answers"].size() == 5);
}

TEST_CASE("bench") {
  TempDir dir;
  const std::string out = dir / "report.csv";
  std::ofstream(dir / "plan.json")
      << R"({"families": ["bipartite_matching"], "sizes": [16, 32, 64, 128],)"
         R"( "algorithms": ["naive", "pipeline_rand"], "seeds": [1, 2],)"
         R"( "output": {"path": ")" << out << R"(", "format": "csv"}})";
  REQUIRE(run("bench " + (dir / "plan.json") + " --workers 1").code == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind("family,algorithm,n", 0) == 0);
  auto j = run("bench " + (dir / "plan.json") + " --no-verify --format json -o -");
  REQUIRE(j.code == 0);
  auto report = nlohmann::json::parse(j.out);
  CHECK(report["slopes"].size() == 2);
  CHECK(report["rows"][0]["verified"] == false);

  std::ofstream(dir / "bad.json") << R"({"families": ["bipartite_matching"], "sizes": [8],)"
                                     R"( "algorithms": ["naive"], "seeds": []})";
  CHECK(run("bench " + (dir / "bad.json")).code == 1);
}
