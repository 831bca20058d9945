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

#include "lindex/interlinked.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "lindex/error.hpp"
#include "lindex/mais.hpp"

namespace lindex {
namespace {

std::string path_string(const std::vector<VertexId>& vs) {
  std::string s;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (k) s += "->";
    s += std::to_string(vs[k]);
  }
  return s;
}

// Positions of the center vertices in traversal order.
class CenterIndex {
 public:
  explicit CenterIndex(const Cycle& center) : order_(center.vertices()) {
    for (std::size_t k = 0; k < order_.size(); ++k) pos_[order_[k]] = static_cast<int>(k);
  }

  int size() const { return static_cast<int>(order_.size()); }
  bool on(VertexId v) const { return pos_.count(v) != 0; }
  int pos(VertexId v) const { return pos_.at(v); }

  /// Steps needed to walk from `from` to `v` along the center.
  int rel(VertexId v, VertexId from) const {
    return (pos(v) - pos(from) + size()) % size();
  }

  bool is_center_arc(VertexId u, VertexId v) const {
    auto it = pos_.find(u);
    if (it == pos_.end() || !on(v)) return false;
    return order_[static_cast<std::size_t>((it->second + 1) % size())] == v;
  }

  /// Center vertices from x forward to y, both included; [x] when x == y.
  std::vector<VertexId> segment(VertexId x, VertexId y) const {
    std::vector<VertexId> seg{x};
    for (int k = pos(x); order_[static_cast<std::size_t>(k)] != y;) {
      k = (k + 1) % size();
      seg.push_back(order_[static_cast<std::size_t>(k)]);
    }
    return seg;
  }

  std::vector<VertexId> coverage(VertexId origin, VertexId terminus) const {
    std::vector<VertexId> cov;
    if (origin == terminus) {
      for (VertexId v : order_) {
        if (v != origin) cov.push_back(v);
      }
      return cov;
    }
    auto seg = segment(origin, terminus);
    cov.assign(seg.begin() + 1, seg.end() - 1);
    return cov;
  }

 private:
  std::vector<VertexId> order_;
  std::map<VertexId, int> pos_;
};

std::vector<VertexId> slice(const std::vector<VertexId>& vs, std::size_t from,
                            std::size_t to_inclusive) {
  return {vs.begin() + static_cast<std::ptrdiff_t>(from),
          vs.begin() + static_cast<std::ptrdiff_t>(to_inclusive) + 1};
}

std::size_t index_of(const std::vector<VertexId>& vs, VertexId v) {
  return static_cast<std::size_t>(std::find(vs.begin(), vs.end(), v) - vs.begin());
}

// Appends `tail` to `head`, dropping tail's first vertex (the shared joint).
std::vector<VertexId> join(std::vector<VertexId> head,
                           const std::vector<VertexId>& tail) {
  head.insert(head.end(), tail.begin() + 1, tail.end());
  return head;
}

bool sorted_disjoint(const std::vector<VertexId>& a,
                     const std::vector<VertexId>& b) {
  std::vector<VertexId> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  return common.empty();
}

std::vector<VertexId> sorted_copy(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  return vs;
}

bool covers_all(const CenterIndex& idx, const std::vector<OuterPath>& paths) {
  std::vector<char> hit(static_cast<std::size_t>(idx.size()), 0);
  for (const auto& p : paths) {
    for (VertexId v : p.coverage) hit[static_cast<std::size_t>(idx.pos(v))] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<VertexId> OuterPath::inner() const {
  const auto& vs = path.vertices;
  if (vs.size() <= 2) return {};
  return {vs.begin() + 1, vs.end() - 1};
}

OuterPath make_outer_path(const Cycle& center, Path path) {
  CenterIndex idx(center);
  const auto& vs = path.vertices;
  if (vs.size() < 2) throw PreconditionError("outer path needs an arc");
  if (!idx.on(vs.front()) || !idx.on(vs.back())) {
    throw PreconditionError("outer path " + path_string(vs) +
                            " does not start and end on the center");
  }
  for (std::size_t k = 1; k + 1 < vs.size(); ++k) {
    if (idx.on(vs[k])) {
      throw PreconditionError("outer path " + path_string(vs) +
                              " has an inner vertex on the center");
    }
  }
  if (vs.size() == 2 && idx.is_center_arc(vs[0], vs[1])) {
    throw PreconditionError("outer path uses a center arc");
  }
  OuterPath op;
  op.origin = vs.front();
  op.terminus = vs.back();
  op.coverage = idx.coverage(op.origin, op.terminus);
  op.path = std::move(path);
  return op;
}

const RoleSpec& role_spec(PathRole role) {
  static const std::array<RoleSpec, 9> kSpecs = {{
      {"B", 2, 6, false},
      {"C", 1, 5, false},
      {"D", 2, 4, false},
      {"E", 3, 5, false},
      {"F", 1, 4, false},
      {"H", 3, 6, false},
      {"I", 4, 3, true},
      {"U", 6, 1, true},
      {"W", 5, 2, true},
  }};
  return kSpecs[static_cast<std::size_t>(role)];
}

std::vector<VertexId> InterlinkedConfig::vertices() const {
  std::set<VertexId> vs(junctions.begin(), junctions.end());
  for (const Path& p : paths) vs.insert(p.vertices.begin(), p.vertices.end());
  return {vs.begin(), vs.end()};
}

Digraph InterlinkedConfig::graph(int n) const {
  return union_of_paths(n, paths);
}

std::array<std::vector<VertexId>, 3> InterlinkedConfig::cycle_walks() const {
  auto walk = [this](std::initializer_list<PathRole> roles) {
    std::vector<VertexId> vs = path(*roles.begin()).vertices;
    for (auto it = roles.begin() + 1; it != roles.end(); ++it) {
      vs = join(std::move(vs), path(*it).vertices);
    }
    vs.pop_back();  // closing vertex repeats the start
    return vs;
  };
  using R = PathRole;
  return {walk({R::kF, R::kI, R::kH, R::kU}), walk({R::kD, R::kI, R::kE, R::kW}),
          walk({R::kC, R::kW, R::kB, R::kU})};
}

std::string_view to_string(ConfigCase c) {
  switch (c) {
    case ConfigCase::kLooping:
      return "looping";
    case ConfigCase::kDisjointCover:
      return "disjoint-cover";
    case ConfigCase::kSharedInner:
      return "shared-inner";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Pipeline steps

std::array<Cycle, 3> find_three_cycles(const Digraph& g, std::size_t cap) {
  const RemovalResult removal = removal_number(g);
  if (removal.at_least_three || removal.r != 2) {
    throw PreconditionError("three interlinked cycles need removal number 2");
  }
  if (find_disjoint_cycle_pair(g, cap)) {
    throw PreconditionError("graph has two vertex-disjoint cycles");
  }
  const CycleList list = enumerate_cycles(g, cap);
  if (list.truncated) {
    throw TruncatedEnumeration("cycle enumeration truncated; raise the cap");
  }
  const auto& cycles = list.cycles;
  std::vector<std::vector<VertexId>> sorted;
  sorted.reserve(cycles.size());
  for (const Cycle& c : cycles) sorted.push_back(c.sorted_vertices());
  // The first cycle does not always admit a pair whose intersections with it
  // are disjoint, so later cycles are tried as C' in enumeration order.
  std::vector<std::vector<VertexId>> common(cycles.size());
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    for (std::size_t m = 0; m < cycles.size(); ++m) {
      common[m].clear();
      std::set_intersection(sorted[m].begin(), sorted[m].end(),
                            sorted[k].begin(), sorted[k].end(),
                            std::back_inserter(common[m]));
    }
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (i == k) continue;
      for (std::size_t j = i + 1; j < cycles.size(); ++j) {
        if (j != k && sorted_disjoint(common[i], common[j])) {
          return {cycles[k], cycles[i], cycles[j]};
        }
      }
    }
  }
  throw StructuralError("no cycle pair with disjoint intersections found");
}

std::vector<OuterPath> outer_paths(const Digraph& g_sub, const Cycle& center) {
  check_cycle_in(g_sub, center);
  CenterIndex idx(center);
  if (!is_acyclic(delete_vertices(g_sub, center.vertices()))) {
    throw StructuralError("a cycle avoids the center cycle");
  }
  std::vector<Path> found;
  std::vector<VertexId> trail;
  std::vector<char> on_trail(static_cast<std::size_t>(g_sub.order()) + 1, 0);
  auto dfs = [&](auto&& self, VertexId v) -> void {
    for (VertexId w : g_sub.successors(v)) {
      if (idx.is_center_arc(v, w)) continue;
      if (idx.on(w)) {
        Path p{trail};
        p.vertices.push_back(w);
        found.push_back(std::move(p));
      } else if (!on_trail[w]) {
        on_trail[w] = 1;
        trail.push_back(w);
        self(self, w);
        trail.pop_back();
        on_trail[w] = 0;
      }
    }
  };
  for (VertexId s : center.sorted_vertices()) {
    trail.assign(1, s);
    dfs(dfs, s);
  }
  std::sort(found.begin(), found.end());
  std::vector<OuterPath> result;
  result.reserve(found.size());
  for (auto& p : found) result.push_back(make_outer_path(center, std::move(p)));
  return result;
}

std::vector<OuterPath> largest_coverage_filter(
    const std::vector<OuterPath>& paths) {
  for (const auto& p : paths) {
    if (p.looping()) {
      throw PreconditionError("largest-coverage filter got a looping path");
    }
  }
  auto better = [](const OuterPath& a, const OuterPath& b) {
    if (a.coverage.size() != b.coverage.size()) {
      return a.coverage.size() > b.coverage.size();
    }
    return a.path < b.path;
  };
  auto best_by = [&](const std::vector<OuterPath>& in, auto key) {
    std::map<VertexId, const OuterPath*> best;
    for (const auto& p : in) {
      auto [it, inserted] = best.try_emplace(key(p), &p);
      if (!inserted && better(p, *it->second)) it->second = &p;
    }
    std::vector<OuterPath> out;
    for (const auto& [k, p] : best) out.push_back(*p);
    return out;
  };
  auto by_origin = best_by(paths, [](const OuterPath& p) { return p.origin; });
  auto result =
      best_by(by_origin, [](const OuterPath& p) { return p.terminus; });
  std::sort(result.begin(), result.end(),
            [](const OuterPath& a, const OuterPath& b) { return a.path < b.path; });
  return result;
}

namespace {

// First pair (i < j) of paths sharing an inner vertex.
std::optional<std::pair<std::size_t, std::size_t>> first_sharing_pair(
    const std::vector<OuterPath>& paths) {
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto a = sorted_copy(paths[i].inner());
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      if (!sorted_disjoint(a, sorted_copy(paths[j].inner()))) {
        return std::make_pair(i, j);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ConfigCase classify_case(const std::vector<OuterPath>& paths) {
  if (std::any_of(paths.begin(), paths.end(),
                  [](const OuterPath& p) { return p.looping(); })) {
    return ConfigCase::kLooping;
  }
  return first_sharing_pair(largest_coverage_filter(paths))
             ? ConfigCase::kSharedInner
             : ConfigCase::kDisjointCover;
}

InterlinkedConfig assemble_from_cover(const Cycle& center,
                                      const std::vector<OuterPath>& three) {
  if (three.size() != 3) {
    throw PreconditionError("assemble_from_cover needs exactly three paths");
  }
  CenterIndex idx(center);
  if (!covers_all(idx, three)) {
    throw PreconditionError("outer paths do not cover the center");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (three[i].origin == three[j].origin ||
          three[i].terminus == three[j].terminus) {
        throw PreconditionError("outer paths must have distinct ends");
      }
    }
  }
  const int len = idx.size();
  std::array<std::size_t, 3> perm{0, 1, 2};
  do {
    const OuterPath& c = three[perm[0]];
    const OuterPath& d = three[perm[1]];
    const OuterPath& h = three[perm[2]];
    const VertexId v1 = c.origin, v5 = c.terminus;
    const VertexId v2 = d.origin, v4 = d.terminus;
    const VertexId v3 = h.origin, v6 = h.terminus;
    const int r4 = idx.rel(v4, v1);
    const int r3 = idx.rel(v3, v1);
    const int r5 = idx.rel(v5, v1);
    const int r2 = idx.rel(v2, v1);
    const int r6 = v6 == v1 ? len : idx.rel(v6, v1);
    if (!(1 <= r4 && r4 <= r3 && r3 < r5 && r5 <= r2 && r2 < r6 && r6 <= len)) {
      continue;
    }
    InterlinkedConfig cfg;
    cfg.junctions = {v1, v2, v3, v4, v5, v6};
    cfg.path(PathRole::kC) = c.path;
    cfg.path(PathRole::kD) = d.path;
    cfg.path(PathRole::kH) = h.path;
    cfg.path(PathRole::kF) = Path{idx.segment(v1, v4)};
    cfg.path(PathRole::kI) = Path{idx.segment(v4, v3)};
    cfg.path(PathRole::kE) = Path{idx.segment(v3, v5)};
    cfg.path(PathRole::kW) = Path{idx.segment(v5, v2)};
    cfg.path(PathRole::kB) = Path{idx.segment(v2, v6)};
    cfg.path(PathRole::kU) = Path{idx.segment(v6, v1)};
    return cfg;
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw StructuralError("no role assignment fits the center order");
}

// ---------------------------------------------------------------------------
// Case handlers

namespace {

InterlinkedConfig build_looping(const Cycle& center,
                                const std::vector<OuterPath>& outer,
                                LoopTrace& trace) {
  CenterIndex idx(center);
  const OuterPath* loop = nullptr;
  for (const auto& p : outer) {
    if (p.looping() && (loop == nullptr || p.origin < loop->origin)) loop = &p;
  }
  const VertexId a = loop->origin;
  // Deleting a leaves another cycle, hence an outer path b->c with b at or
  // after c once the center is counted from a.
  const OuterPath* through = nullptr;
  for (const auto& p : outer) {
    if (p.origin == a || p.terminus == a) continue;
    if (idx.rel(p.origin, a) >= idx.rel(p.terminus, a)) {
      through = &p;
      break;
    }
  }
  if (through == nullptr) {
    throw StructuralError("no outer path closes a cycle without vertex " +
                          std::to_string(a));
  }
  const auto& lv = loop->path.vertices;
  const auto& pv = through->path.vertices;
  const std::set<VertexId> loop_inner(lv.begin() + 1, lv.end() - 1);
  std::size_t first = pv.size(), last = pv.size();
  for (std::size_t k = 0; k < pv.size(); ++k) {
    if (loop_inner.count(pv[k])) {
      if (first == pv.size()) first = k;
      last = k;
    }
  }
  if (first == pv.size()) {
    throw StructuralError("outer path " + path_string(pv) +
                          " misses the loop, giving two disjoint cycles");
  }
  const VertexId b = through->origin, c = through->terminus;
  const VertexId d = pv[first], e = pv[last];
  const std::size_t ld = index_of(lv, d), le = index_of(lv, e);
  if (ld > le) {
    throw StructuralError("outer path meets the loop out of order");
  }
  trace = {a, b, c, d, e, idx.rel(b, a), idx.rel(c, a)};

  InterlinkedConfig cfg;
  cfg.junctions = {b, e, a, a, d, c};
  cfg.path(PathRole::kC) = Path{slice(pv, 0, first)};
  cfg.path(PathRole::kF) = Path{idx.segment(b, a)};
  cfg.path(PathRole::kD) = Path{slice(lv, le, lv.size() - 1)};
  cfg.path(PathRole::kB) = Path{slice(pv, last, pv.size() - 1)};
  cfg.path(PathRole::kE) = Path{slice(lv, 0, ld)};
  cfg.path(PathRole::kH) = Path{idx.segment(a, c)};
  cfg.path(PathRole::kW) = Path{slice(lv, ld, le)};
  cfg.path(PathRole::kU) = Path{idx.segment(c, b)};
  cfg.path(PathRole::kI) = Path{{a}};
  return cfg;
}

// Drops paths (in sequence order) whose coverage the others already provide.
std::vector<OuterPath> minimal_cover(const CenterIndex& idx,
                                     std::vector<OuterPath> paths) {
  std::sort(paths.begin(), paths.end(),
            [](const OuterPath& a, const OuterPath& b) { return a.path < b.path; });
  for (std::size_t k = 0; k < paths.size();) {
    auto rest = paths;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    if (covers_all(idx, rest)) {
      paths = std::move(rest);
    } else {
      ++k;
    }
  }
  return paths;
}

InterlinkedConfig build_disjoint_cover(Cycle center,
                                       const std::vector<OuterPath>& filtered,
                                       int& merges) {
  std::vector<OuterPath> cover = filtered;
  while (true) {
    CenterIndex idx(center);
    if (!covers_all(idx, cover)) {
      throw StructuralError("largest-coverage paths leave a center vertex "
                            "uncovered");
    }
    cover = minimal_cover(idx, std::move(cover));
    if (cover.size() == 3) return assemble_from_cover(center, cover);
    if (cover.size() < 3) {
      throw StructuralError("center covered by " + std::to_string(cover.size()) +
                            " outer paths");
    }
    // Cyclic order by origin, starting from the smallest path.
    const VertexId o0 = cover.front().origin;
    std::sort(cover.begin(), cover.end(),
              [&](const OuterPath& x, const OuterPath& y) {
                return idx.rel(x.origin, o0) < idx.rel(y.origin, o0);
              });
    const OuterPath& p0 = cover[0];
    const OuterPath& p1 = cover[1];
    const OuterPath& p2 = cover[2];
    const int o1 = idx.rel(p1.origin, o0), t0 = idx.rel(p0.terminus, o0);
    const int o2 = idx.rel(p2.origin, o0), t1 = idx.rel(p1.terminus, o0);
    const int t2 = idx.rel(p2.terminus, o0);
    if (!(0 < o1 && o1 < t0 && t0 <= o2 && o2 < t1 && t1 < t2)) {
      throw StructuralError("minimal cover is not in interleaved order");
    }
    // p0, the center run between them, and p2 become one outer path; p1 and
    // the center from its terminus back to its origin become the new center.
    auto merged = join(join(p0.path.vertices,
                            idx.segment(p0.terminus, p2.origin)),
                       p2.path.vertices);
    auto next_center = idx.segment(p1.terminus, p1.origin);
    const auto p1_inner = p1.inner();
    next_center.insert(next_center.end(), p1_inner.begin(), p1_inner.end());
    Cycle new_center(std::move(next_center));
    std::vector<OuterPath> next;
    next.push_back(make_outer_path(new_center, Path{std::move(merged)}));
    for (std::size_t k = 3; k < cover.size(); ++k) {
      next.push_back(make_outer_path(new_center, cover[k].path));
    }
    center = std::move(new_center);
    cover = std::move(next);
    ++merges;
  }
}

InterlinkedConfig build_shared_inner(const Cycle& center,
                                     const std::vector<OuterPath>& filtered) {
  CenterIndex idx(center);
  const auto [i, j] = *first_sharing_pair(filtered);
  const OuterPath* q = &filtered[i];
  const OuterPath* p = &filtered[j];
  auto twice_overlap = [&](const OuterPath& pp, const OuterPath& qq) {
    const int ql = idx.rel(qq.terminus, pp.origin);
    const int q1 = idx.rel(qq.origin, pp.origin);
    const int pl = idx.rel(pp.terminus, pp.origin);
    return 0 < ql && ql < q1 && q1 < pl;
  };
  if (!twice_overlap(*p, *q)) {
    std::swap(p, q);
    if (!twice_overlap(*p, *q)) {
      throw StructuralError("sharing outer paths do not overlap twice");
    }
  }
  const auto& pv = p->path.vertices;
  const auto& qv = q->path.vertices;
  const auto p_inner = sorted_copy(p->inner());
  VertexId z = 0;
  for (VertexId v : q->inner()) {
    if (std::binary_search(p_inner.begin(), p_inner.end(), v)) {
      z = v;
      break;
    }
  }
  const std::size_t zp = index_of(pv, z), zq = index_of(qv, z);
  // Z: p1 -> z along P, then z -> q_last along Q.
  const auto zpath = join(slice(pv, 0, zp), slice(qv, zq, qv.size() - 1));
  const auto zset = sorted_copy(zpath);
  if (std::adjacent_find(zset.begin(), zset.end()) != zset.end()) {
    throw StructuralError("P and Q form a cycle off the center");
  }
  auto on_z = [&](VertexId v) {
    return std::binary_search(zset.begin(), zset.end(), v);
  };
  std::size_t qmeet = 0;
  while (qmeet <= zq && !on_z(qv[qmeet])) ++qmeet;
  std::size_t pmeet = pv.size() - 1;
  while (pmeet > zp && !on_z(pv[pmeet])) --pmeet;

  auto next_center = idx.segment(q->terminus, p->origin);
  next_center.insert(next_center.end(), zpath.begin() + 1, zpath.end() - 1);
  Cycle new_center(std::move(next_center));
  // Old center run p1 -> q_last, P from p' onwards, Q up to q'.
  std::vector<OuterPath> three;
  three.push_back(make_outer_path(
      new_center, Path{idx.segment(p->origin, q->terminus)}));
  three.push_back(
      make_outer_path(new_center, Path{slice(pv, pmeet, pv.size() - 1)}));
  three.push_back(make_outer_path(new_center, Path{slice(qv, 0, qmeet)}));
  std::sort(three.begin(), three.end(),
            [](const OuterPath& a, const OuterPath& b) { return a.path < b.path; });
  return assemble_from_cover(new_center, three);
}

}  // namespace

ConfigDerivation derive_from_center(const Digraph& g_sub, const Cycle& center) {
  ConfigDerivation out;
  out.center = center;
  out.outer = outer_paths(g_sub, center);
  out.kind = classify_case(out.outer);
  switch (out.kind) {
    case ConfigCase::kLooping: {
      LoopTrace trace;
      out.config = build_looping(center, out.outer, trace);
      out.loop = trace;
      break;
    }
    case ConfigCase::kDisjointCover:
      out.config = build_disjoint_cover(
          center, largest_coverage_filter(out.outer), out.merges);
      break;
    case ConfigCase::kSharedInner:
      out.config = build_shared_inner(center, largest_coverage_filter(out.outer));
      break;
  }
  if (auto report = validate_config(out.config, g_sub); !report) {
    throw StructuralError("constructed configuration fails " + report.clause +
                          ": " + report.detail);
  }
  return out;
}

ConfigDerivation derive_config(const Digraph& g, std::size_t cap) {
  const auto three = find_three_cycles(g, cap);
  ConfigDerivation out = derive_from_center(union_of_cycles(g, three), three[0]);
  out.three_cycles = three;
  if (auto report = validate_config(out.config, g); !report) {
    throw StructuralError("constructed configuration fails " + report.clause +
                          ": " + report.detail);
  }
  return out;
}

InterlinkedConfig build_config(const Digraph& g, std::size_t cap) {
  return derive_config(g, cap).config;
}

}  // namespace lindex
