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

#include "lindex/error.hpp"
#include "lindex/generate.hpp"
#include "lindex/verify.hpp"
#include "oracles.hpp"

using namespace lindex;

namespace {

using Rows = std::vector<std::vector<int>>;

LinearCode random_code(Rng& rng, int n, int q) {
  LinearCode code{q, n, {}, {}};
  const int length = rng.between(1, n);
  while (static_cast<int>(code.rows.size()) < length) {
    std::vector<int> row(static_cast<std::size_t>(n));
    for (int& c : row) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(q)));
    if (std::any_of(row.begin(), row.end(), [](int c) { return c != 0; })) {
      code.rows.push_back(std::move(row));
      code.labels.emplace_back();
    }
  }
  return code;
}

void check_fitting(const Digraph& g, const MinrankResult& m) {
  const auto vs = g.vertices();
  REQUIRE(m.witness.size() == vs.size());
  for (std::size_t r = 0; r < vs.size(); ++r) {
    REQUIRE(m.witness[r].size() == static_cast<std::size_t>(g.order()));
    for (VertexId j = 1; j <= g.order(); ++j) {
      const int entry = m.witness[r][static_cast<std::size_t>(j - 1)];
      if (j == vs[r]) {
        CHECK(entry == 1);
      } else if (!g.has_arc(vs[r], j)) {
        CHECK(entry == 0);
      }
    }
  }
  CHECK(oracle::rank_gf2(m.witness) == m.value);
}

std::vector<Arc> k4_arcs() {
  std::vector<Arc> arcs;
  for (VertexId i = 1; i <= 4; ++i) {
    for (VertexId j = 1; j <= 4; ++j) {
      if (i != j) arcs.push_back({i, j});
    }
  }
  return arcs;
}

}  // namespace

TEST_CASE("decodability_check accepts the constructed codes") {
  for (const Digraph& g : {oracle::p3(), oracle::c3(), oracle::k3(),
                           oracle::theta6(), oracle::two_c3()}) {
    for (int q : {2, 3}) {
      const DecodabilityReport report = decodability_check(g, build_code(g, q), q);
      CHECK(report.all_decodable());
      CHECK(report.failing().empty());
      CHECK(report.receivers.size() == static_cast<std::size_t>(g.order()));
    }
  }
}

TEST_CASE("decodability_check reports a truncated C3 code") {
  const LinearCode code{2, 3, {{1, 1, 0}}, {RowLabel{}}};
  const DecodabilityReport report = decodability_check(oracle::c3(), code, 2);
  CHECK_FALSE(report.all_decodable());
  CHECK(report.failing() == std::vector<VertexId>{2, 3});
  CHECK(report.receivers[0].decodable);
  CHECK_FALSE(report.receivers[0].counterexample.has_value());
  REQUIRE(report.receivers[1].counterexample.has_value());
  CHECK(report.receivers[1].counterexample->first == std::vector<int>{0, 0, 0});
  CHECK(report.receivers[1].counterexample->second == std::vector<int>{1, 1, 0});
  REQUIRE(report.receivers[2].counterexample.has_value());
  CHECK(report.receivers[2].counterexample->second == std::vector<int>{0, 0, 1});
  CHECK(decodability_oracle(oracle::c3(), code, 2) == report);
}

TEST_CASE("decodability_check honours the guard") {
  const Digraph g = random_digraph(25, 0.1, 1);
  CHECK_THROWS_AS(decodability_check(g, encode_uncoded(g, 2), 2), GuardError);
  CHECK_NOTHROW(decodability_check(oracle::c3(), build_code(oracle::c3(), 2), 2, 8));
  CHECK_THROWS_AS(
      decodability_check(oracle::c3(), build_code(oracle::c3(), 2), 2, 7),
      GuardError);
  CHECK_THROWS_AS(decodability_oracle(g, encode_uncoded(g, 2), 2), GuardError);
}

TEST_CASE("decodability_check agrees with the pairwise oracle") {
  Rng rng(5);
  int failing = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int q = seed % 2 == 0 ? 2 : 3;
    const int n = q == 2 ? 2 + static_cast<int>(seed % 5) : 2 + static_cast<int>(seed % 4);
    const Digraph g = random_digraph(n, 0.4, seed);
    const LinearCode code = random_code(rng, n, q);
    const DecodabilityReport fast = decodability_check(g, code, q);
    REQUIRE(fast == decodability_oracle(g, code, q));
    failing += fast.all_decodable() ? 0 : 1;
  }
  CHECK(failing > 0);
}

TEST_CASE("gf2_rank examples") {
  CHECK(gf2_rank(Rows{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 3);
  CHECK(gf2_rank(Rows{{1, 1}, {1, 1}}) == 1);
  CHECK(gf2_rank(Rows{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}) == 2);
  CHECK(gf2_rank(Rows{{2, 0}, {0, 1}}) == 1);
  CHECK(gf2_rank(Rows{{3, 0}, {0, 1}}) == 2);
  CHECK(gf2_rank(Rows{}) == 0);
  CHECK(gf2_rank(Rows{{0, 0}}) == 0);
}

TEST_CASE("minrank_gf2 on the named graphs") {
  CHECK(minrank_gf2(oracle::k3()).value == 1);
  CHECK(minrank_gf2(oracle::c3()).value == 2);
  CHECK(minrank_gf2(oracle::p3()).value == 3);
  CHECK(minrank_gf2(oracle::theta6()).value == 4);
  CHECK(minrank_gf2(oracle::two_c3()).value == 4);
  CHECK(minrank_gf2(Digraph(4, k4_arcs())).value == 1);
  CHECK(minrank_gf2(oracle::k3()).witness == Rows{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  check_fitting(oracle::theta6(), minrank_gf2(oracle::theta6()));

  const Digraph partial = delete_vertices(oracle::c3(), {2});
  const MinrankResult m = minrank_gf2(partial);
  CHECK(m.value == 2);
  CHECK(m.witness == Rows{{1, 0, 0}, {0, 0, 1}});
}

TEST_CASE("minrank_gf2 guards its search") {
  const Digraph dense = random_digraph(8, 0.9, 2);
  REQUIRE(dense.arc_count() > kMinrankMaxArcs);
  CHECK_THROWS_AS(minrank_gf2(dense), GuardError);
  CHECK_THROWS_AS(minrank_gf2(Digraph(65)), GuardError);
}

TEST_CASE("minrank_gf2 matches exhaustive fitting matrices") {
  for (int n = 1; n <= 3; ++n) {
    for (const Digraph& g : oracle::all_digraphs(n)) {
      const MinrankResult m = minrank_gf2(g);
      REQUIRE(m.value == oracle::minrank(g));
      check_fitting(g, m);
    }
  }
  for (const Digraph& g : oracle::all_digraphs(4)) {
    if (g.arc_count() > 8) continue;
    const MinrankResult m = minrank_gf2(g);
    REQUIRE(m.value == oracle::minrank(g));
    check_fitting(g, m);
  }
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Digraph g = random_digraph(6, 0.3, seed);
    if (g.arc_count() > 12) continue;
    REQUIRE(minrank_gf2(g).value == oracle::minrank(g));
  }
}

TEST_CASE("minrank_gf2 lies between MAIS and the code length") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Digraph g = random_digraph(7, 0.2, seed);
    if (g.arc_count() > kMinrankMaxArcs) continue;
    const int mr = minrank_gf2(g).value;
    CHECK(mais_oracle(g).size <= mr);
    const RemovalResult r = removal_number(g);
    if (!r.at_least_three) CHECK(mr <= g.present_count() - r.r);
  }
}

TEST_CASE("removing an arc never lowers minrank") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Digraph g = random_digraph(6, 0.35, seed);
    if (g.arc_count() == 0 || g.arc_count() > 14) continue;
    const int base = minrank_gf2(g).value;
    const auto arcs = g.arcs();
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      std::vector<Arc> fewer = arcs;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(k));
      CHECK(minrank_gf2(Digraph(g.order(), fewer)).value >= base);
    }
  }
}

TEST_CASE("check_theorem on THETA6") {
  const AnalysisReport r = check_theorem(oracle::theta6(), 2);
  CHECK(r.n == 6);
  CHECK(r.removal.r == 2);
  CHECK(r.removal.witness == std::vector<VertexId>{1, 2});
  CHECK(r.mais == 4);
  CHECK(r.case_label == "interlinked");
  CHECK(r.code_length == 4);
  CHECK(r.decodable == true);
  CHECK(r.minrank == 4);
  CHECK(r.minrank_equals_mais == true);
  REQUIRE(r.code.has_value());
  CHECK(r.code->length() == 4);
}

TEST_CASE("check_theorem on smaller graphs") {
  const AnalysisReport c = check_theorem(oracle::c3(), 3);
  CHECK(c.q == 3);
  CHECK(c.case_label == "one-cycle");
  CHECK(c.code_length == 2);
  CHECK(c.decodable == true);

  const AnalysisReport k4 = check_theorem(Digraph(4, k4_arcs()), 2);
  CHECK(k4.removal.at_least_three);
  CHECK(k4.case_label == "unsupported");
  CHECK(k4.mais == 1);
  CHECK_FALSE(k4.code_length.has_value());
  CHECK_FALSE(k4.decodable.has_value());
  CHECK_FALSE(k4.code.has_value());
  CHECK(k4.minrank == 1);
  CHECK(k4.minrank_equals_mais == true);
}

TEST_CASE("check_theorem leaves guarded fields empty") {
  std::vector<Arc> arcs;
  for (VertexId v = 1; v < 30; ++v) arcs.push_back({v, v + 1});
  arcs.push_back({30, 1});
  const Digraph ring(30, arcs);
  const AnalysisReport r = check_theorem(ring, 2);
  CHECK(r.removal.r == 1);
  CHECK(r.mais == 29);
  CHECK(r.code_length == 29);
  CHECK_FALSE(r.decodable.has_value());
  CHECK_FALSE(r.minrank.has_value());
  CHECK_FALSE(r.minrank_equals_mais.has_value());

  AnalysisOptions tight;
  tight.max_bruteforce = 4;
  const AnalysisReport t = check_theorem(oracle::c3(), 2, tight);
  CHECK_FALSE(t.decodable.has_value());
  CHECK(t.minrank == 2);
}
