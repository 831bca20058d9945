// Copyright 2026 The lindex Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "lindex/cli.hpp"

using namespace lindex;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = LINDEX_FIXTURE_DIR;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Scratch directory removed when the test case ends.
struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("lindex_cli_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
};

const char* kK4 = "4 12\n1 2\n1 3\n1 4\n2 1\n2 3\n2 4\n3 1\n3 2\n3 4\n4 1\n4 2\n4 3\n";

}  // namespace

TEST_CASE("analyze reports THETA6") {
  const Run r = run({"analyze", fixture("theta6.graph")});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "{\"n\":6,\"r\":2,\"witness\":[1,2],\"mais\":4,\"case\":\"interlinked\","
        "\"code_length\":4,\"decodable\":true,\"minrank\":4,"
        "\"minrank_equals_mais\":true}\n");
  CHECK(r.err.empty());
}

TEST_CASE("encode reproduces the fixture codes") {
  for (const char* name : {"c3", "k3", "theta6", "2c3", "p3"}) {
    const std::string base = name;
    const std::string expected = slurp(fixture(base + ".code.json"));
    const Run r = run({"encode", fixture(base + ".graph")});
    CHECK(r.code == kExitOk);
    CHECK(r.out == expected);
  }
}

TEST_CASE("encode honours --q") {
  const Run r = run({"encode", "--q", "3", fixture("k3.graph")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("\"q\":3") != std::string::npos);
  CHECK(r.out.find("\"x1+x2+x3\"") != std::string::npos);
  CHECK(run({"encode", "--q", "1", fixture("k3.graph")}).code == kExitInputError);
}

TEST_CASE("config prints the junctions and paths") {
  const Run r = run({"config", fixture("theta6.graph")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("{\"junctions\":{\"v1\":1,\"v2\":2,\"v3\":3,\"v4\":4,\"v5\":5,"
                    "\"v6\":6}",
                    0) == 0);
  CHECK(r.out.find("\"I\":[4,3]") != std::string::npos);
  CHECK(run({"config", fixture("c3.graph")}).code == kExitInputError);
}

TEST_CASE("verify accepts a decodable code and rejects a truncated one") {
  const Run ok = run({"verify", fixture("theta6.graph"), fixture("theta6.code.json")});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.rfind("{\"decodable\":true", 0) == 0);

  TempDir dir;
  const std::string code =
      dir.write("short.json", "{\"q\":2,\"n\":3,\"rows\":[[1,1,0]]}");
  const Run bad = run({"verify", fixture("c3.graph"), code});
  CHECK(bad.code == kExitVerificationFailed);
  CHECK(bad.out.rfind("{\"decodable\":false", 0) == 0);
  CHECK(bad.out.find("\"counterexample\":[[0,0,0],[1,1,0]]") != std::string::npos);
}

TEST_CASE("minrank prints value and witness") {
  const Run r = run({"minrank", fixture("k3.graph")});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "{\"minrank\":1,\"witness\":[[1,1,1],[1,1,1],[1,1,1]]}\n");
}

TEST_CASE("removal number three or more is unsupported") {
  TempDir dir;
  const std::string k4 = dir.write("k4.graph", kK4);
  const Run a = run({"analyze", k4});
  CHECK(a.code == kExitUnsupported);
  CHECK(a.out.find("\"r\":\">=3\"") != std::string::npos);
  CHECK(a.out.find("\"witness\":null") != std::string::npos);
  const Run e = run({"encode", k4});
  CHECK(e.code == kExitUnsupported);
  CHECK(e.out.empty());
  CHECK(e.err.find("unsupported") != std::string::npos);
}

TEST_CASE("input errors exit with code 1") {
  TempDir dir;
  const Run loop = run({"analyze", dir.write("loop.graph", "2 1\n1 1\n")});
  CHECK(loop.code == kExitInputError);
  CHECK(loop.err.find("line 2") != std::string::npos);

  CHECK(run({"analyze", (dir.path / "missing.graph").string()}).code ==
        kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
  CHECK(run({"analyze"}).code == kExitInputError);
  CHECK(run({"verify", fixture("c3.graph"), dir.write("bad.json", "{\"q\":")}).code ==
        kExitInputError);
  CHECK(run({"verify", "--max-bruteforce", "4", fixture("theta6.graph"),
             fixture("theta6.code.json")})
            .code == kExitInputError);
}

TEST_CASE("--out writes to a file") {
  TempDir dir;
  const std::string target = (dir.path / "code.json").string();
  const Run r = run({"encode", "--out", target, fixture("theta6.graph")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  CHECK(slurp(target) == slurp(fixture("theta6.code.json")));
}

TEST_CASE("gen is deterministic") {
  const Run a = run({"gen", "--random", "--n", "5", "--p", "0.3", "--seed", "42"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == "5 6\n1 5\n2 3\n3 1\n3 4\n5 3\n5 4\n");

  const Run k3 = run({"gen", "--structured", "1,1,1,1,1,1,0,0,0"});
  CHECK(k3.code == kExitOk);
  CHECK(k3.out == "3 6\n1 2\n1 3\n2 1\n2 3\n3 1\n3 2\n");

  const Run s1 = run({"gen", "--structured", "2,1,1,3,1,1,0,1,2", "--shuffle",
                      "--seed", "9"});
  const Run s2 = run({"gen", "--structured", "2,1,1,3,1,1,0,1,2", "--shuffle",
                      "--seed", "9"});
  CHECK(s1.code == kExitOk);
  CHECK(s1.out == s2.out);

  CHECK(run({"gen"}).code == kExitInputError);
  CHECK(run({"gen", "--random", "--structured", "1,1,1,1,1,1,1,1,1"}).code ==
        kExitInputError);
  CHECK(run({"gen", "--structured", "1,1,1"}).code == kExitInputError);
  CHECK(run({"gen", "--structured", "1,1,1,1,1,0,1,1,1"}).code == kExitInputError);
}

TEST_CASE("selftest quick passes") {
  const Run r = run({"selftest", "--level", "quick"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("[PASS] 1 ") != std::string::npos);
  CHECK(r.out.find("[SKIP] 2 ") != std::string::npos);
  CHECK(r.out.find("selftest passed") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  const Run r = run({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("analyze") != std::string::npos);
}

TEST_CASE("analyze reports P3 and guarded fields") {
  const Run p = run({"analyze", fixture("p3.graph")});
  CHECK(p.code == kExitOk);
  CHECK(p.out.find("\"r\":0") != std::string::npos);
  CHECK(p.out.find("\"code_length\":3") != std::string::npos);

  const Run g = run({"analyze", "--max-bruteforce", "4", fixture("c3.graph")});
  CHECK(g.code == kExitOk);
  CHECK(g.out.find("\"decodable\":null") != std::string::npos);
}
