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

#include "lindex/mais.hpp"

#include <algorithm>
#include <cstdint>

#include "lindex/error.hpp"

namespace lindex {
namespace {

// Acyclicity of the subgraph induced by `mask` (bit v-1 = vertex v).
bool acyclic_on(const Digraph& g, std::uint64_t mask) {
  bool progress = true;
  while (mask != 0 && progress) {
    progress = false;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      const int bit = __builtin_ctzll(rest);
      if ((g.bit_row(bit + 1) & mask) == 0) {
        mask &= ~(std::uint64_t{1} << bit);
        progress = true;
      }
    }
  }
  return mask == 0;
}

bool acyclic_without(const Digraph& g, std::initializer_list<VertexId> removed) {
  if (g.has_bit_rows()) {
    std::uint64_t mask = g.present_mask();
    for (VertexId v : removed) mask &= ~(std::uint64_t{1} << (v - 1));
    return acyclic_on(g, mask);
  }
  return is_acyclic(delete_vertices(g, removed));
}

}  // namespace

MaisResult mais_oracle(const Digraph& g) {
  const std::vector<VertexId> vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  if (n > kMaisOracleMaxVertices || !g.has_bit_rows()) {
    throw GuardError("mais oracle limited to " +
                     std::to_string(kMaisOracleMaxVertices) + " vertices, got " +
                     std::to_string(n));
  }
  // Lexicographic order of sorted k-subsets is the order of index
  // combinations generated with the leftmost index most significant.
  std::vector<int> pick;
  for (int k = n; k >= 0; --k) {
    pick.resize(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::uint64_t mask = 0;
      for (int i : pick) mask |= std::uint64_t{1} << (vs[i] - 1);
      if (acyclic_on(g, mask)) {
        MaisResult result{k, {}};
        for (int i : pick) result.kept.push_back(vs[i]);
        return result;
      }
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {};  // unreachable: the empty set is acyclic
}

RemovalResult removal_number(const Digraph& g) {
  if (is_acyclic(g)) return {0, false, {}};
  const std::vector<VertexId> vs = g.vertices();
  for (VertexId u : vs) {
    if (acyclic_without(g, {u})) return {1, false, {u}};
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (acyclic_without(g, {vs[i], vs[j]})) {
        return {2, false, {vs[i], vs[j]}};
      }
    }
  }
  return {3, true, {}};
}

std::optional<std::pair<Cycle, Cycle>> find_disjoint_cycle_pair(
    const Digraph& g, std::size_t cap) {
  const CycleList list = enumerate_cycles(g, cap);
  const auto& cycles = list.cycles;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    // Cheap filter: the rest of the graph must still hold a cycle.
    if (is_acyclic(delete_vertices(g, cycles[i].vertices()))) continue;
    const auto vi = cycles[i].sorted_vertices();
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      const auto vj = cycles[j].sorted_vertices();
      std::vector<VertexId> common;
      std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(),
                            std::back_inserter(common));
      if (common.empty()) return std::make_pair(cycles[i], cycles[j]);
    }
  }
  if (list.truncated) {
    throw TruncatedEnumeration(
        "cycle enumeration truncated before a disjoint pair was found; raise "
        "the cycle cap");
  }
  return std::nullopt;
}

}  // namespace lindex
