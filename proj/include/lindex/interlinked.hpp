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

// Interlinked nine-path configurations.
//
// A configuration has six junctions v1..v6 joined by nine paths:
//
//   C: v1->v5   F: v1->v4   B: v2->v6   D: v2->v4   I: v4->v3
//   E: v3->v5   H: v3->v6   W: v5->v2   U: v6->v1
//
// The paths meet only at junctions. I, U and W may be zero-arc, in which
// case v4=v3, v6=v1 and v5=v2 respectively. The three cycles F.I.H.U,
// D.I.E.W and C.W.B.U pairwise intersect and share no common vertex, so the
// configuration needs two deletions yet holds no two disjoint cycles. Every
// graph with removal number 2 and no disjoint pair of cycles contains one;
// build_config() finds it.

#ifndef LINDEX_INTERLINKED_HPP
#define LINDEX_INTERLINKED_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lindex/graph.hpp"

namespace lindex {

/// Path leaving the center cycle and returning to it, with every arc and
/// inner vertex off the center.
struct OuterPath {
  Path path;
  VertexId origin = 0;
  VertexId terminus = 0;
  /// Center vertices strictly between origin and terminus in arc direction;
  /// for a looping path, every center vertex except the origin.
  std::vector<VertexId> coverage;

  bool looping() const noexcept { return origin == terminus; }
  /// Vertices other than the two ends, in traversal order.
  std::vector<VertexId> inner() const;
};

/// Builds an OuterPath against `center`. Throws PreconditionError when the
/// ends are off the center, an inner vertex is on it, or an arc belongs to it.
OuterPath make_outer_path(const Cycle& center, Path path);

enum class PathRole { kB, kC, kD, kE, kF, kH, kI, kU, kW };

inline constexpr std::array<PathRole, 9> kAllRoles = {
    PathRole::kB, PathRole::kC, PathRole::kD, PathRole::kE, PathRole::kF,
    PathRole::kH, PathRole::kI, PathRole::kU, PathRole::kW};

struct RoleSpec {
  std::string_view name;
  int from;  // junction index 1..6
  int to;
  bool may_be_empty;
};

const RoleSpec& role_spec(PathRole role);

struct InterlinkedConfig {
  std::array<VertexId, 6> junctions{};  // v1..v6
  std::array<Path, 9> paths;            // indexed by PathRole

  VertexId v(int k) const { return junctions[static_cast<std::size_t>(k - 1)]; }
  const Path& path(PathRole role) const {
    return paths[static_cast<std::size_t>(role)];
  }
  Path& path(PathRole role) { return paths[static_cast<std::size_t>(role)]; }

  /// Sorted vertex set.
  std::vector<VertexId> vertices() const;
  /// Arc union of the nine paths over the universe 1..n.
  Digraph graph(int n) const;
  /// F.I.H.U, D.I.E.W and C.W.B.U as vertex sequences starting at v1, v2, v1.
  std::array<std::vector<VertexId>, 3> cycle_walks() const;

  friend bool operator==(const InterlinkedConfig&,
                         const InterlinkedConfig&) = default;
};

enum class ConfigCase { kLooping = 1, kDisjointCover = 2, kSharedInner = 3 };

std::string_view to_string(ConfigCase c);

/// (C', C1, C2): C' is the first enumerated cycle that admits a pair whose
/// intersections with it are disjoint, and (C1, C2) the first such pair.
/// Throws PreconditionError unless r = 2 with no disjoint cycle pair.
std::array<Cycle, 3> find_three_cycles(const Digraph& g,
                                       std::size_t cap = kDefaultCycleCap);

/// Every outer path of `g_sub` relative to `center`, sorted by vertex
/// sequence. Throws StructuralError if a cycle avoids the center.
std::vector<OuterPath> outer_paths(const Digraph& g_sub, const Cycle& center);

/// Keeps, for each origin and then each terminus, the path of largest
/// coverage (ties: smallest vertex sequence). Rejects looping input.
std::vector<OuterPath> largest_coverage_filter(
    const std::vector<OuterPath>& paths);

ConfigCase classify_case(const std::vector<OuterPath>& paths);

/// Assigns the three covering paths to roles C, D, H by trying the six
/// permutations in order, and cuts the center into F, I, E, W, B, U.
InterlinkedConfig assemble_from_cover(const Cycle& center,
                                      const std::vector<OuterPath>& three);

/// Case-1 bookkeeping: the loop at `loop_vertex`, the outer path from b to c
/// and where that path first (d) and last (e) touches the loop.
struct LoopTrace {
  VertexId loop_vertex = 0;
  VertexId b = 0, c = 0, d = 0, e = 0;
  int rank_b = 0;  // positions on the center counted from loop_vertex
  int rank_c = 0;
};

/// Everything build_config() decided on the way to its result.
struct ConfigDerivation {
  InterlinkedConfig config;
  ConfigCase kind = ConfigCase::kLooping;
  std::array<Cycle, 3> three_cycles;
  Cycle center;
  std::vector<OuterPath> outer;
  std::optional<LoopTrace> loop;
  int merges = 0;  // cover reductions performed in the disjoint-cover case
};

/// The part of the pipeline after the three cycles are chosen: outer paths of
/// `g_sub` relative to `center`, case split and construction. `g_sub` must
/// hold no cycle avoiding the center. `three_cycles` is left empty.
ConfigDerivation derive_from_center(const Digraph& g_sub, const Cycle& center);

ConfigDerivation derive_config(const Digraph& g,
                               std::size_t cap = kDefaultCycleCap);

/// Requires r = 2 and no two disjoint cycles. The result always passes
/// validate_config(); a failure there surfaces as StructuralError.
InterlinkedConfig build_config(const Digraph& g,
                               std::size_t cap = kDefaultCycleCap);

struct ValidationReport {
  bool ok = true;
  std::string clause;  // first violated clause, empty when ok
  std::string detail;

  explicit operator bool() const noexcept { return ok; }
};

ValidationReport validate_config(const InterlinkedConfig& cfg,
                                 const Digraph& g);

inline constexpr int kConfigSearchMaxVertices = 10;

/// Exhaustive search for any valid configuration inside g. Test oracle only.
std::optional<InterlinkedConfig> config_search_oracle(const Digraph& g);

}  // namespace lindex

#endif  // LINDEX_INTERLINKED_HPP
