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

// Side-information digraphs and the structural primitives built on them.
//
// Vertices are 1-based. Vertex i is simultaneously receiver i and message
// x_i; an arc i->j means receiver i already knows x_j.

#ifndef LINDEX_GRAPH_HPP
#define LINDEX_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lindex {

using VertexId = int;

inline constexpr std::size_t kDefaultCycleCap = 100000;

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Immutable directed graph on the universe {1..n}.
///
/// Deleting vertices keeps the universe and original ids and only clears the
/// presence bit, so witness sets and reports always speak in the caller's ids.
/// Graphs with n <= 64 also carry one adjacency bit-row per vertex.
class Digraph {
 public:
  Digraph() = default;

  /// Edgeless graph with every vertex in 1..n present.
  explicit Digraph(int n);

  /// Throws PreconditionError on self-loops, duplicates or bad endpoints.
  Digraph(int n, std::span<const Arc> arcs);
  Digraph(int n, std::initializer_list<Arc> arcs)
      : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

  /// Size of the vertex universe (including deleted vertices).
  int order() const noexcept { return n_; }
  int present_count() const noexcept;
  bool contains(VertexId v) const noexcept {
    return v >= 1 && v <= n_ && present_[v];
  }
  std::vector<VertexId> vertices() const;

  bool has_arc(VertexId tail, VertexId head) const noexcept;
  /// Sorted ascending.
  const std::vector<VertexId>& successors(VertexId v) const {
    return out_[v];
  }
  /// Lexicographic (tail, head) order.
  std::vector<Arc> arcs() const;
  std::size_t arc_count() const noexcept { return arc_count_; }

  bool has_bit_rows() const noexcept { return !rows_.empty(); }
  /// Out-neighbourhood of v as a bitmask over bit (w - 1). Requires n <= 64.
  std::uint64_t bit_row(VertexId v) const { return rows_[v]; }
  /// Mask of present vertices over bit (v - 1). Requires n <= 64.
  std::uint64_t present_mask() const noexcept;

  friend bool operator==(const Digraph& a, const Digraph& b);

 private:
  friend Digraph delete_vertices(const Digraph&, std::span<const VertexId>);

  int n_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<char> present_{0};
  std::vector<std::vector<VertexId>> out_{{}};
  std::vector<std::uint64_t> rows_;
};

/// Ordered list of distinct vertices; consecutive entries are arcs.
/// A single vertex is a zero-arc path.
struct Path {
  std::vector<VertexId> vertices;

  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  std::size_t arc_count() const {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }

  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Elementary directed cycle, stored in canonical rotation (minimum id first).
class Cycle {
 public:
  Cycle() = default;
  /// Rotates `vertices` to start at its minimum. Requires >= 2 distinct ids.
  explicit Cycle(std::vector<VertexId> vertices);

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  std::size_t length() const noexcept { return vertices_.size(); }
  bool contains(VertexId v) const;
  /// Arcs in traversal order, closing arc last.
  std::vector<Arc> arcs() const;
  std::vector<VertexId> sorted_vertices() const;

  /// Ascending length, then lexicographic canonical rotation.
  friend std::strong_ordering operator<=>(const Cycle& a, const Cycle& b);
  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  std::vector<VertexId> vertices_;
};

struct CycleList {
  std::vector<Cycle> cycles;
  bool truncated = false;
};

/// Parses the plain-text graph format: optional '#' comment lines, a header
/// "n m", then exactly m lines "i j". Throws ParseError naming the line.
Digraph parse_digraph(std::string_view text);

/// Header plus arcs in lexicographic order, LF-separated, no trailing newline.
std::string serialize_digraph(const Digraph& g);

bool is_acyclic(const Digraph& g);

/// Induced subgraph on V(g) minus `removed`, keeping original ids.
/// Throws PreconditionError for ids that are not present in g.
Digraph delete_vertices(const Digraph& g, std::span<const VertexId> removed);
inline Digraph delete_vertices(const Digraph& g,
                               std::initializer_list<VertexId> removed) {
  return delete_vertices(g,
                         std::span<const VertexId>(removed.begin(), removed.size()));
}

/// All elementary cycles in ascending (length, canonical rotation) order.
/// Enumeration stops once more than `cap` cycles were found; the result then
/// holds the first `cap` of those found, sorted, with `truncated` set.
CycleList enumerate_cycles(const Digraph& g, std::size_t cap = kDefaultCycleCap);

/// Maximal strongly connected components, each sorted, ordered by minimum id.
std::vector<std::vector<VertexId>> strongly_connected_components(
    const Digraph& g);

/// Throws PreconditionError if the cycle is not present in g.
void check_cycle_in(const Digraph& g, const Cycle& c);
/// Throws PreconditionError if the path is not present in g.
void check_path_in(const Digraph& g, const Path& p);

/// Arc union of the given cycles over the vertex universe of `host`.
Digraph union_of_cycles(const Digraph& host, std::span<const Cycle> cycles);

/// Graph on universe n whose arcs are those of the given paths.
Digraph union_of_paths(int n, std::span<const Path> paths);

}  // namespace lindex

#endif  // LINDEX_GRAPH_HPP
