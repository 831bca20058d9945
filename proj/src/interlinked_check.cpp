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

// Configuration validation and the brute-force configuration search.

#include <algorithm>
#include <map>
#include <set>

#include "lindex/error.hpp"
#include "lindex/interlinked.hpp"
#include "lindex/mais.hpp"

namespace lindex {
namespace {

ValidationReport fail(std::string clause, std::string detail) {
  return {false, std::move(clause), std::move(detail)};
}

std::string role_name(PathRole r) { return std::string(role_spec(r).name); }

}  // namespace

ValidationReport validate_config(const InterlinkedConfig& cfg,
                                 const Digraph& g) {
  for (PathRole r : kAllRoles) {
    const RoleSpec& spec = role_spec(r);
    const Path& p = cfg.path(r);
    if (p.vertices.empty() || p.front() != cfg.v(spec.from) ||
        p.back() != cfg.v(spec.to)) {
      return fail("endpoints", "path " + role_name(r) + " must run from v" +
                                   std::to_string(spec.from) + " to v" +
                                   std::to_string(spec.to));
    }
    if (!spec.may_be_empty && p.arc_count() == 0) {
      return fail("arc-count", "path " + role_name(r) + " needs an arc");
    }
    auto sorted = p.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return fail("simple-path", "path " + role_name(r) + " repeats a vertex");
    }
    for (VertexId v : p.vertices) {
      if (!g.contains(v)) {
        return fail("host-arcs", "vertex " + std::to_string(v) +
                                     " of path " + role_name(r) +
                                     " not in graph");
      }
    }
    for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
      if (!g.has_arc(p.vertices[k], p.vertices[k + 1])) {
        return fail("host-arcs", "arc " + std::to_string(p.vertices[k]) +
                                     "->" + std::to_string(p.vertices[k + 1]) +
                                     " of path " + role_name(r) +
                                     " not in graph");
      }
    }
  }

  // Junctions coincide only through a zero-arc I, W or U.
  static const std::set<std::pair<int, int>> kMergeable = {{3, 4}, {2, 5}, {1, 6}};
  for (int a = 1; a <= 6; ++a) {
    for (int b = a + 1; b <= 6; ++b) {
      if (cfg.v(a) == cfg.v(b) && !kMergeable.count({a, b})) {
        return fail("disjointness", "junctions v" + std::to_string(a) +
                                        " and v" + std::to_string(b) +
                                        " coincide");
      }
    }
  }
  const std::set<VertexId> junctions(cfg.junctions.begin(), cfg.junctions.end());
  std::map<VertexId, int> owner;  // inner vertex -> role index
  for (PathRole r : kAllRoles) {
    const auto& vs = cfg.path(r).vertices;
    for (std::size_t k = 1; k + 1 < vs.size(); ++k) {
      if (junctions.count(vs[k])) {
        return fail("disjointness", "junction " + std::to_string(vs[k]) +
                                        " is inside path " + role_name(r));
      }
      if (!owner.emplace(vs[k], static_cast<int>(r)).second) {
        return fail("disjointness",
                    "vertex " + std::to_string(vs[k]) + " is inside paths " +
                        role_name(static_cast<PathRole>(owner[vs[k]])) +
                        " and " + role_name(r));
      }
    }
  }

  std::vector<std::vector<VertexId>> walks;
  for (auto& walk : cfg.cycle_walks()) {
    try {
      Cycle c(walk);
      check_cycle_in(g, c);
    } catch (const PreconditionError& e) {
      return fail("cycles", e.what());
    }
    std::sort(walk.begin(), walk.end());
    walks.push_back(std::move(walk));
  }
  auto meet = [](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
  };
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (meet(walks[i], walks[j]).empty()) {
        return fail("pairwise-intersection",
                    "cycles " + std::to_string(i + 1) + " and " +
                        std::to_string(j + 1) + " are disjoint");
      }
    }
  }
  if (!meet(meet(walks[0], walks[1]), walks[2]).empty()) {
    return fail("triple-intersection", "the three cycles share a vertex");
  }

  const Digraph sub = cfg.graph(g.order());
  const RemovalResult removal = removal_number(sub);
  if (removal.at_least_three || removal.r != 2) {
    return fail("removal-number",
                "configuration needs " +
                    (removal.at_least_three ? std::string(">=3")
                                            : std::to_string(removal.r)) +
                    " deletions, expected 2");
  }
  if (find_disjoint_cycle_pair(sub)) {
    return fail("disjoint-cycles", "configuration holds two disjoint cycles");
  }
  return {};
}

// ---------------------------------------------------------------------------

namespace {

// Backtracking over the nine paths in an order where every path starts at an
// already placed junction: F I H U close the first cycle, E W D the second,
// C and B the third.
class ConfigSearch {
 public:
  explicit ConfigSearch(const Digraph& g)
      : g_(g), used_(static_cast<std::size_t>(g.order()) + 1, 0) {}

  std::optional<InterlinkedConfig> run() {
    for (VertexId v1 : g_.vertices()) {
      cfg_.junctions.fill(0);
      cfg_.junctions[0] = v1;
      used_[v1] = 1;
      if (place(0)) return cfg_;
      used_[v1] = 0;
    }
    return std::nullopt;
  }

 private:
  static constexpr std::array<PathRole, 9> kOrder = {
      PathRole::kF, PathRole::kI, PathRole::kH, PathRole::kU, PathRole::kE,
      PathRole::kW, PathRole::kD, PathRole::kC, PathRole::kB};

  // Junction a may share a vertex with partner(a) only through an empty path.
  static int partner(int j) {
    switch (j) {
      case 1: return 6;
      case 6: return 1;
      case 2: return 5;
      case 5: return 2;
      case 3: return 4;
      case 4: return 3;
    }
    return 0;
  }

  bool place(std::size_t step) {
    if (step == kOrder.size()) {
      return static_cast<bool>(validate_config(cfg_, g_));
    }
    const PathRole role = kOrder[step];
    const RoleSpec& spec = role_spec(role);
    const VertexId from = cfg_.v(spec.from);
    const VertexId to = cfg_.v(spec.to);
    if (to != 0 && to == from) {
      if (!spec.may_be_empty) return false;
      cfg_.path(role) = Path{{from}};
      return place(step + 1);
    }
    if (to == 0 && spec.may_be_empty) {
      cfg_.junctions[static_cast<std::size_t>(spec.to - 1)] = from;
      cfg_.path(role) = Path{{from}};
      if (place(step + 1)) return true;
      cfg_.junctions[static_cast<std::size_t>(spec.to - 1)] = 0;
    }
    trail_.assign(1, from);
    return extend(step, role, spec);
  }

  bool extend(std::size_t step, PathRole role, const RoleSpec& spec) {
    const VertexId tip = trail_.back();
    const VertexId to = cfg_.v(spec.to);
    for (VertexId w : g_.successors(tip)) {
      if (to != 0) {
        if (w == to) {
          if (finish(step, role)) return true;
          continue;
        }
      } else {
        // Free endpoint: a new junction, or the partner junction when the
        // two may coincide.
        const VertexId mate = cfg_.v(partner(spec.to));
        if (!used_[w] || (mate != 0 && mate != trail_.front() && w == mate)) {
          const bool fresh = !used_[w];
          cfg_.junctions[static_cast<std::size_t>(spec.to - 1)] = w;
          if (fresh) used_[w] = 1;
          trail_.push_back(w);
          const bool done = finish(step, role);
          trail_.pop_back();
          if (done) return true;
          if (fresh) used_[w] = 0;
          cfg_.junctions[static_cast<std::size_t>(spec.to - 1)] = 0;
          if (!fresh) continue;
        }
      }
      if (used_[w]) continue;
      used_[w] = 1;
      trail_.push_back(w);
      const bool done = extend(step, role, spec);
      trail_.pop_back();
      used_[w] = 0;
      if (done) return true;
    }
    return false;
  }

  // Closes the current trail at the role's end junction and moves on.
  bool finish(std::size_t step, PathRole role) {
    Path saved = cfg_.path(role);
    Path p{trail_};
    const VertexId to = cfg_.v(role_spec(role).to);
    if (p.back() != to) p.vertices.push_back(to);
    cfg_.path(role) = std::move(p);
    auto saved_trail = trail_;
    const bool ok = place(step + 1);
    trail_ = std::move(saved_trail);
    if (!ok) cfg_.path(role) = std::move(saved);
    return ok;
  }

  const Digraph& g_;
  InterlinkedConfig cfg_;
  std::vector<char> used_;
  std::vector<VertexId> trail_;
};

}  // namespace

std::optional<InterlinkedConfig> config_search_oracle(const Digraph& g) {
  if (g.present_count() > kConfigSearchMaxVertices) {
    throw GuardError("configuration search limited to " +
                     std::to_string(kConfigSearchMaxVertices) + " vertices");
  }
  return ConfigSearch(g).run();
}

}  // namespace lindex
