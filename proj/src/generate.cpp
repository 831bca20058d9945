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

#include "lindex/generate.hpp"

#include <numeric>

#include "lindex/error.hpp"
#include "lindex/mais.hpp"

namespace lindex {

double Rng::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("Rng::below needs a positive bound");
  // Largest multiple of bound that fits; draws at or above it are rejected.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

int Rng::between(int lo, int hi) {
  if (hi < lo) throw PreconditionError("Rng::between needs lo <= hi");
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Digraph random_digraph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw PreconditionError("vertex count must be >= 0");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw PreconditionError("arc probability must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<Arc> arcs;
  for (VertexId i = 1; i <= n; ++i) {
    for (VertexId j = 1; j <= n; ++j) {
      if (i != j && rng.uniform() < p) arcs.push_back({i, j});
    }
  }
  return Digraph(n, arcs);
}

StructuredInstance structured_instance(const PathLengths& lengths,
                                       std::uint64_t seed, bool shuffle) {
  for (PathRole r : kAllRoles) {
    const RoleSpec& spec = role_spec(r);
    const int len = lengths[static_cast<std::size_t>(r)];
    if (len < (spec.may_be_empty ? 0 : 1)) {
      throw PreconditionError("path " + std::string(spec.name) + " needs " +
                              (spec.may_be_empty ? ">= 0" : ">= 1") + " arcs");
    }
  }
  auto len = [&](PathRole r) { return lengths[static_cast<std::size_t>(r)]; };

  InterlinkedConfig cfg;
  VertexId next = 1;
  auto& v = cfg.junctions;
  v[0] = next++;
  v[1] = next++;
  v[2] = next++;
  v[3] = len(PathRole::kI) == 0 ? v[2] : next++;
  v[4] = len(PathRole::kW) == 0 ? v[1] : next++;
  v[5] = len(PathRole::kU) == 0 ? v[0] : next++;
  for (PathRole r : kAllRoles) {
    const RoleSpec& spec = role_spec(r);
    Path& p = cfg.path(r);
    p.vertices.push_back(cfg.v(spec.from));
    for (int k = 1; k < len(r); ++k) p.vertices.push_back(next++);
    if (len(r) > 0) p.vertices.push_back(cfg.v(spec.to));
  }
  const int n = next - 1;

  if (shuffle) {
    Rng rng(seed);
    std::vector<VertexId> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    rng.shuffle(perm);
    auto relabel = [&](VertexId x) { return perm[static_cast<std::size_t>(x - 1)]; };
    for (auto& j : cfg.junctions) j = relabel(j);
    for (auto& p : cfg.paths) {
      for (auto& x : p.vertices) x = relabel(x);
    }
  }

  StructuredInstance out{cfg.graph(n), cfg};
  if (auto report = validate_config(cfg, out.graph); !report) {
    throw StructuralError("generated configuration fails " + report.clause +
                          ": " + report.detail);
  }
  const RemovalResult removal = removal_number(out.graph);
  if (removal.at_least_three || removal.r != 2 ||
      find_disjoint_cycle_pair(out.graph)) {
    throw StructuralError("generated graph is not a two-removal instance");
  }
  return out;
}

RingInstance ring_instance(int k, int max_extra, std::uint64_t seed) {
  if (k < 3 || k % 2 == 0) {
    throw PreconditionError("ring instances need an odd number >= 3 of paths");
  }
  if (max_extra < 0) throw PreconditionError("max_extra must be >= 0");
  Rng rng(seed);
  std::vector<VertexId> ring;
  std::vector<VertexId> anchors;
  VertexId next = 1;
  for (int a = 0; a < 2 * k; ++a) {
    anchors.push_back(next);
    ring.push_back(next++);
    for (int e = rng.between(0, max_extra); e > 0; --e) ring.push_back(next++);
  }
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    arcs.push_back({ring[i], ring[(i + 1) % ring.size()]});
  }
  for (int i = 0; i < k; ++i) {
    VertexId at = anchors[static_cast<std::size_t>(2 * i)];
    for (int e = rng.between(0, max_extra); e > 0; --e) {
      arcs.push_back({at, next});
      at = next++;
    }
    arcs.push_back({at, anchors[static_cast<std::size_t>((2 * i + 3) % (2 * k))]});
  }
  RingInstance out{Digraph(next - 1, arcs), Cycle(ring)};
  const RemovalResult removal = removal_number(out.graph);
  if (removal.at_least_three || removal.r != 2 ||
      find_disjoint_cycle_pair(out.graph)) {
    throw StructuralError("ring graph is not a two-removal instance");
  }
  return out;
}

Digraph generate(const GenSpec& spec) {
  if (spec.mode == GenSpec::Mode::kRandom) {
    return random_digraph(spec.n, spec.p, spec.seed);
  }
  return structured_instance(spec.lengths, spec.seed, spec.shuffle).graph;
}

}  // namespace lindex
