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
#include "lindex/mais.hpp"
#include "oracles.hpp"

using namespace lindex;

namespace {

std::set<VertexId> without(const Digraph& g, const std::vector<VertexId>& drop) {
  std::set<VertexId> keep;
  for (VertexId v : g.vertices()) {
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) keep.insert(v);
  }
  return keep;
}

// Smallest deletion set of size <= 2, lexicographically first, or nullopt.
std::optional<std::vector<VertexId>> removal_oracle(const Digraph& g) {
  const auto vs = g.vertices();
  if (oracle::acyclic_on(g, without(g, {}))) return std::vector<VertexId>{};
  for (VertexId a : vs) {
    if (oracle::acyclic_on(g, without(g, {a}))) return std::vector<VertexId>{a};
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (oracle::acyclic_on(g, without(g, {vs[i], vs[j]}))) {
        return std::vector<VertexId>{vs[i], vs[j]};
      }
    }
  }
  return std::nullopt;
}

bool disjoint(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  for (VertexId v : a) {
    if (std::find(b.begin(), b.end(), v) != b.end()) return false;
  }
  return true;
}

void check_against_oracles(const Digraph& g) {
  const MaisResult m = mais_oracle(g);
  REQUIRE(m.size == oracle::mais(g));
  REQUIRE(static_cast<int>(m.kept.size()) == m.size);
  REQUIRE(oracle::acyclic_on(g, std::set<VertexId>(m.kept.begin(), m.kept.end())));

  const RemovalResult r = removal_number(g);
  const auto expected = removal_oracle(g);
  REQUIRE(r.at_least_three == !expected.has_value());
  if (expected) {
    REQUIRE(r.r == static_cast<int>(expected->size()));
    REQUIRE(r.witness == *expected);
    REQUIRE(g.present_count() - r.r == m.size);
  } else {
    REQUIRE(r.witness.empty());
    REQUIRE(g.present_count() - m.size >= 3);
  }

  const auto cycles = oracle::cycles(g);
  std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> pair;
  for (std::size_t i = 0; i < cycles.size() && !pair; ++i) {
    for (std::size_t j = i + 1; j < cycles.size() && !pair; ++j) {
      if (disjoint(cycles[i], cycles[j])) pair.emplace(cycles[i], cycles[j]);
    }
  }
  const auto found = find_disjoint_cycle_pair(g);
  REQUIRE(found.has_value() == pair.has_value());
  if (found) {
    REQUIRE(found->first.vertices() == pair->first);
    REQUIRE(found->second.vertices() == pair->second);
  }
}

}  // namespace

TEST_CASE("mais_oracle on the named graphs") {
  CHECK(mais_oracle(oracle::p3()).size == 3);
  CHECK(mais_oracle(oracle::c3()).size == 2);
  CHECK(mais_oracle(oracle::c3()).kept == std::vector<VertexId>{1, 2});
  CHECK(mais_oracle(oracle::k3()).size == 1);
  CHECK(mais_oracle(oracle::k3()).kept == std::vector<VertexId>{1});
  CHECK(mais_oracle(oracle::theta6()).size == 4);
  CHECK(mais_oracle(oracle::theta6()).kept == std::vector<VertexId>{1, 2, 3, 4});
  CHECK(mais_oracle(Digraph(0)).size == 0);
}

TEST_CASE("mais_oracle counts only present vertices") {
  const Digraph g = delete_vertices(oracle::theta6(), {1});
  CHECK(mais_oracle(g).size == 4);
  CHECK(mais_oracle(g).kept == std::vector<VertexId>{2, 3, 4, 6});
}

TEST_CASE("mais_oracle refuses large graphs") {
  CHECK_THROWS_AS(mais_oracle(Digraph(kMaisOracleMaxVertices + 1)), GuardError);
  CHECK_NOTHROW(mais_oracle(
      delete_vertices(Digraph(kMaisOracleMaxVertices + 1), {1})));
  CHECK_THROWS_AS(mais_oracle(delete_vertices(Digraph(70), {})), GuardError);
}

TEST_CASE("removal_number on the named graphs") {
  const RemovalResult p = removal_number(oracle::p3());
  CHECK(p.r == 0);
  CHECK(p.witness.empty());
  CHECK(p.supported());

  const RemovalResult c = removal_number(oracle::c3());
  CHECK(c.r == 1);
  CHECK(c.witness == std::vector<VertexId>{1});

  const RemovalResult k = removal_number(oracle::k3());
  CHECK(k.r == 2);
  CHECK(k.witness == std::vector<VertexId>{1, 2});

  const RemovalResult t = removal_number(oracle::theta6());
  CHECK(t.r == 2);
  CHECK(t.witness == std::vector<VertexId>{1, 2});

  const RemovalResult two = removal_number(oracle::two_c3());
  CHECK(two.r == 2);
  CHECK(two.witness == std::vector<VertexId>{1, 4});

  std::vector<Arc> k4;
  for (VertexId i = 1; i <= 4; ++i) {
    for (VertexId j = 1; j <= 4; ++j) {
      if (i != j) k4.push_back({i, j});
    }
  }
  const RemovalResult big = removal_number(Digraph(4, k4));
  CHECK(big.at_least_three);
  CHECK_FALSE(big.supported());
  CHECK(big.witness.empty());
}

TEST_CASE("every cycle meets the removal witness") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Digraph g = random_digraph(8, 0.15, seed);
    const RemovalResult r = removal_number(g);
    if (r.at_least_three) continue;
    for (const Cycle& c : enumerate_cycles(g).cycles) {
      bool hit = false;
      for (VertexId w : r.witness) hit |= c.contains(w);
      CHECK(hit);
    }
  }
}

TEST_CASE("find_disjoint_cycle_pair on the named graphs") {
  const auto two = find_disjoint_cycle_pair(oracle::two_c3());
  REQUIRE(two.has_value());
  CHECK(two->first == Cycle({1, 2, 3}));
  CHECK(two->second == Cycle({4, 5, 6}));
  CHECK_FALSE(find_disjoint_cycle_pair(oracle::k3()).has_value());
  CHECK_FALSE(find_disjoint_cycle_pair(oracle::theta6()).has_value());
  CHECK_FALSE(find_disjoint_cycle_pair(oracle::p3()).has_value());
}

TEST_CASE("MAIS, removal and disjoint pairs agree with the oracles for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const Digraph& g : oracle::all_digraphs(n)) check_against_oracles(g);
  }
}

TEST_CASE("MAIS, removal and disjoint pairs agree with the oracles on random graphs") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const int n = 5 + static_cast<int>(seed % 8);
    const Digraph g = random_digraph(n, 0.05 + 0.05 * static_cast<double>(seed % 6), seed);
    check_against_oracles(g);
  }
}

TEST_CASE("removal_number works without bit rows") {
  std::vector<Arc> arcs;
  for (VertexId v = 1; v < 70; ++v) arcs.push_back({v, v + 1});
  arcs.push_back({70, 1});
  arcs.push_back({35, 2});
  const Digraph g(70, arcs);
  REQUIRE_FALSE(g.has_bit_rows());
  const RemovalResult r = removal_number(g);
  CHECK(r.r == 1);
  CHECK(r.witness == std::vector<VertexId>{2});
}
