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
#include "lindex/graph.hpp"
#include "oracles.hpp"

using namespace lindex;

namespace {

std::vector<std::vector<VertexId>> cycle_lists(const CycleList& list) {
  std::vector<std::vector<VertexId>> out;
  for (const Cycle& c : list.cycles) out.push_back(c.vertices());
  return out;
}

ParseError::Kind parse_error_kind(const char* text) {
  try {
    parse_digraph(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return ParseError::Kind::kMalformedDocument;
}

}  // namespace

TEST_CASE("parse_digraph reads the named graphs") {
  CHECK(parse_digraph("3 3\n1 2\n2 3\n3 1") == oracle::c3());
  CHECK(parse_digraph("3 6\n1 2\n2 1\n1 3\n3 1\n2 3\n3 2") == oracle::k3());
  CHECK(parse_digraph("# comment\n\n3 2\n1 2\n2 3\n") == oracle::p3());

  const Digraph isolated = parse_digraph("5 1\n1 2");
  CHECK(isolated.order() == 5);
  CHECK(isolated.present_count() == 5);
  CHECK(isolated.arc_count() == 1);
}

TEST_CASE("parse_digraph names the offending line") {
  try {
    parse_digraph("2 1\n1 1");
    FAIL("self-loop accepted");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::kSelfLoop);
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).rfind("line 2:", 0) == 0);
  }
  CHECK(parse_error_kind("x 1\n1 2") == ParseError::Kind::kMalformedHeader);
  CHECK(parse_error_kind("2\n1 2") == ParseError::Kind::kMalformedHeader);
  CHECK(parse_error_kind("2 1\n1 3") == ParseError::Kind::kEndpointOutOfRange);
  CHECK(parse_error_kind("2 1\n0 1") == ParseError::Kind::kEndpointOutOfRange);
  CHECK(parse_error_kind("2 2\n1 2\n1 2") == ParseError::Kind::kDuplicateArc);
  CHECK(parse_error_kind("2 1\n1 2 3") == ParseError::Kind::kMalformedArc);
  CHECK(parse_error_kind("2 2\n1 2") == ParseError::Kind::kArcCountMismatch);
  CHECK(parse_error_kind("2 1\n1 2\n2 1") == ParseError::Kind::kArcCountMismatch);
  CHECK(parse_error_kind("") == ParseError::Kind::kMalformedHeader);
}

TEST_CASE("Digraph rejects invalid arcs") {
  CHECK_THROWS_AS(Digraph(2, {{1, 1}}), PreconditionError);
  CHECK_THROWS_AS(Digraph(2, {{1, 2}, {1, 2}}), PreconditionError);
  CHECK_THROWS_AS(Digraph(2, {{1, 3}}), PreconditionError);
}

TEST_CASE("serialize_digraph emits arcs in lexicographic order") {
  CHECK(serialize_digraph(oracle::c3()) == "3 3\n1 2\n2 3\n3 1");
  CHECK(serialize_digraph(Digraph(2)) == "2 0");
  CHECK(serialize_digraph(Digraph(3, {{3, 1}, {1, 3}, {1, 2}})) ==
        "3 3\n1 2\n1 3\n3 1");
}

TEST_CASE("serialize and parse round-trip on random graphs") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Digraph g = random_digraph(1 + static_cast<int>(seed % 12),
                                     0.05 * static_cast<double>(seed % 10), seed);
    CHECK(parse_digraph(serialize_digraph(g)) == g);
  }
}

TEST_CASE("is_acyclic on the named graphs") {
  CHECK(is_acyclic(oracle::p3()));
  CHECK_FALSE(is_acyclic(oracle::c3()));
  CHECK_FALSE(is_acyclic(oracle::theta6()));
  CHECK(is_acyclic(Digraph(0)));
}

TEST_CASE("is_acyclic agrees with the in-degree peeling oracle") {
  for (int n = 1; n <= 4; ++n) {
    for (const Digraph& g : oracle::all_digraphs(n)) {
      REQUIRE(is_acyclic(g) == oracle::acyclic(g));
    }
  }
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Digraph g = random_digraph(70, 0.004 * static_cast<double>(seed % 8), seed);
    REQUIRE_FALSE(g.has_bit_rows());
    REQUIRE(is_acyclic(g) == oracle::acyclic(g));
  }
}

TEST_CASE("delete_vertices keeps original ids") {
  const Digraph c = delete_vertices(oracle::c3(), {1});
  CHECK(c.order() == 3);
  CHECK_FALSE(c.contains(1));
  CHECK(c.vertices() == std::vector<VertexId>{2, 3});
  CHECK(c.arcs() == std::vector<Arc>{{2, 3}});
  CHECK(is_acyclic(c));

  const Digraph k = delete_vertices(oracle::k3(), {3});
  CHECK(k.arcs() == std::vector<Arc>{{1, 2}, {2, 1}});
  CHECK_FALSE(is_acyclic(k));

  const Digraph t = delete_vertices(oracle::theta6(), {1, 2});
  CHECK(t.arcs() == std::vector<Arc>{{3, 5}, {3, 6}, {4, 3}});
  CHECK(is_acyclic(t));

  CHECK_THROWS_AS(delete_vertices(oracle::c3(), {4}), PreconditionError);
  CHECK_THROWS_AS(delete_vertices(c, {1}), PreconditionError);
}

TEST_CASE("delete_vertices is order independent") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Digraph g = random_digraph(8, 0.3, seed);
    CHECK(delete_vertices(g, {}) == g);
    CHECK(delete_vertices(delete_vertices(g, {2, 5}), {7}) ==
          delete_vertices(g, {7, 2, 5}));
    CHECK(delete_vertices(delete_vertices(g, {7}), {5, 2}) ==
          delete_vertices(g, {2, 5, 7}));
  }
}

TEST_CASE("enumerate_cycles on the named graphs") {
  CHECK(cycle_lists(enumerate_cycles(oracle::c3())) ==
        std::vector<std::vector<VertexId>>{{1, 2, 3}});
  CHECK(cycle_lists(enumerate_cycles(oracle::k3())) ==
        std::vector<std::vector<VertexId>>{
            {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}, {1, 3, 2}});
  CHECK(enumerate_cycles(oracle::p3()).cycles.empty());
  CHECK(cycle_lists(enumerate_cycles(oracle::theta6())) ==
        std::vector<std::vector<VertexId>>{
            {1, 4, 3, 6},
            {1, 5, 2, 6},
            {2, 4, 3, 5},
            {1, 4, 3, 5, 2, 6},
            {1, 5, 2, 4, 3, 6}});
}

TEST_CASE("enumerate_cycles matches the simple-path oracle") {
  for (int n = 1; n <= 4; ++n) {
    for (const Digraph& g : oracle::all_digraphs(n)) {
      REQUIRE(cycle_lists(enumerate_cycles(g)) == oracle::cycles(g));
    }
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Digraph g = random_digraph(5 + static_cast<int>(seed % 5), 0.3, seed);
    const CycleList list = enumerate_cycles(g);
    REQUIRE_FALSE(list.truncated);
    REQUIRE(cycle_lists(list) == oracle::cycles(g));
    REQUIRE(list.cycles.empty() == is_acyclic(g));
  }
}

TEST_CASE("enumerate_cycles flags truncation") {
  const CycleList list = enumerate_cycles(oracle::k3(), 2);
  CHECK(list.truncated);
  CHECK(list.cycles.size() == 2);
  CHECK_FALSE(enumerate_cycles(oracle::k3(), 5).truncated);
}

TEST_CASE("every cycle lies inside one component") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Digraph g = random_digraph(9, 0.2, seed);
    const auto comps = strongly_connected_components(g);
    std::vector<int> comp_of(10, -1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (VertexId v : comps[c]) comp_of[v] = static_cast<int>(c);
    }
    for (const Cycle& cycle : enumerate_cycles(g).cycles) {
      for (VertexId v : cycle.vertices()) {
        CHECK(comp_of[v] == comp_of[cycle.vertices().front()]);
      }
    }
  }
}

TEST_CASE("strongly_connected_components on the named graphs") {
  using Parts = std::vector<std::vector<VertexId>>;
  CHECK(strongly_connected_components(oracle::p3()) == Parts{{1}, {2}, {3}});
  CHECK(strongly_connected_components(oracle::c3()) == Parts{{1, 2, 3}});
  CHECK(strongly_connected_components(oracle::two_c3()) ==
        Parts{{1, 2, 3}, {4, 5, 6}});
  CHECK(strongly_connected_components(delete_vertices(oracle::c3(), {2})) ==
        Parts{{1}, {3}});
}

TEST_CASE("strongly_connected_components matches mutual reachability") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Digraph g = random_digraph(10, 0.04 * static_cast<double>(seed % 7), seed);
    const auto reach = oracle::reachability(g);
    std::vector<std::vector<VertexId>> expected;
    std::vector<char> placed(11, 0);
    for (VertexId v = 1; v <= 10; ++v) {
      if (placed[v]) continue;
      std::vector<VertexId> comp{v};
      placed[v] = 1;
      for (VertexId w = v + 1; w <= 10; ++w) {
        if (!placed[w] && reach[v][w] && reach[w][v]) {
          comp.push_back(w);
          placed[w] = 1;
        }
      }
      expected.push_back(comp);
    }
    REQUIRE(strongly_connected_components(g) == expected);
  }
}

TEST_CASE("Cycle canonicalizes its rotation") {
  CHECK(Cycle({3, 1, 2}).vertices() == std::vector<VertexId>{1, 2, 3});
  CHECK(Cycle({2, 1}) == Cycle({1, 2}));
  CHECK(Cycle({1, 2}) < Cycle({1, 2, 3}));
  CHECK(Cycle({1, 2, 3}) < Cycle({1, 3, 2}));
  CHECK_THROWS_AS(Cycle({1}), PreconditionError);
  CHECK_THROWS_AS(Cycle({1, 2, 1}), PreconditionError);
  CHECK_THROWS_AS(check_cycle_in(oracle::c3(), Cycle({1, 3, 2})),
                  PreconditionError);
}

TEST_CASE("union_of_cycles keeps the host universe") {
  CHECK(union_of_cycles(oracle::c3(), std::vector<Cycle>{Cycle({1, 2, 3})}) ==
        oracle::c3());
  CHECK(union_of_cycles(oracle::k3(), std::vector<Cycle>{Cycle({1, 2}), Cycle({1, 3}),
                                                         Cycle({2, 3})}) ==
        oracle::k3());
  const Digraph u =
      union_of_cycles(oracle::two_c3(), std::vector<Cycle>{Cycle({1, 2, 3})});
  CHECK(u.order() == 6);
  CHECK(u.arcs() == std::vector<Arc>{{1, 2}, {2, 3}, {3, 1}});
  CHECK(u.successors(4).empty());
  CHECK_THROWS_AS(
      union_of_cycles(oracle::c3(), std::vector<Cycle>{Cycle({1, 3, 2})}),
      PreconditionError);
}
