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

// Maximum acyclic induced subgraphs, removal numbers and disjoint cycles.

#ifndef LINDEX_MAIS_HPP
#define LINDEX_MAIS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "lindex/graph.hpp"

namespace lindex {

inline constexpr int kMaisOracleMaxVertices = 24;

/// Minimum number of deletions that leaves the graph acyclic, when it is at
/// most two. `at_least_three` replaces r otherwise and the witness is empty.
struct RemovalResult {
  int r = 0;
  bool at_least_three = false;
  std::vector<VertexId> witness;  // lexicographically smallest minimiser

  bool supported() const noexcept { return !at_least_three; }
};

struct MaisResult {
  int size = 0;
  std::vector<VertexId> kept;  // sorted
};

/// Exhaustive MAIS: subsets by decreasing size, lexicographic within a size.
/// Throws GuardError above kMaisOracleMaxVertices present vertices.
MaisResult mais_oracle(const Digraph& g);

/// Tests the empty set, then single vertices, then pairs, in id order.
RemovalResult removal_number(const Digraph& g);

/// First vertex-disjoint pair of cycles in enumeration order, if any.
/// Throws TruncatedEnumeration when the cap was hit and no pair was found.
std::optional<std::pair<Cycle, Cycle>> find_disjoint_cycle_pair(
    const Digraph& g, std::size_t cap = kDefaultCycleCap);

}  // namespace lindex

#endif  // LINDEX_MAIS_HPP
