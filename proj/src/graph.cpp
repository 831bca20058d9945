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

#include "lindex/graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>

#include "lindex/error.hpp"

namespace lindex {

Digraph::Digraph(int n)
    : n_(n),
      present_(static_cast<std::size_t>(n) + 1, 1),
      out_(static_cast<std::size_t>(n) + 1) {
  if (n < 0) throw PreconditionError("negative vertex count");
  present_[0] = 0;
  if (n <= 64) rows_.assign(static_cast<std::size_t>(n) + 1, 0);
}

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
  for (const Arc& a : arcs) {
    if (a.tail < 1 || a.tail > n || a.head < 1 || a.head > n) {
      throw PreconditionError("arc " + std::to_string(a.tail) + "->" +
                              std::to_string(a.head) + " outside 1.." +
                              std::to_string(n));
    }
    if (a.tail == a.head) {
      throw PreconditionError("self-loop at vertex " + std::to_string(a.tail));
    }
    out_[a.tail].push_back(a.head);
  }
  for (auto& succ : out_) {
    std::sort(succ.begin(), succ.end());
    if (std::adjacent_find(succ.begin(), succ.end()) != succ.end()) {
      throw PreconditionError("duplicate arc");
    }
    arc_count_ += succ.size();
  }
  if (!rows_.empty()) {
    for (VertexId v = 1; v <= n; ++v) {
      for (VertexId w : out_[v]) rows_[v] |= std::uint64_t{1} << (w - 1);
    }
  }
}

int Digraph::present_count() const noexcept {
  return static_cast<int>(std::count(present_.begin(), present_.end(), 1));
}

std::vector<VertexId> Digraph::vertices() const {
  std::vector<VertexId> vs;
  for (VertexId v = 1; v <= n_; ++v) {
    if (present_[v]) vs.push_back(v);
  }
  return vs;
}

bool Digraph::has_arc(VertexId tail, VertexId head) const noexcept {
  if (tail < 1 || tail > n_ || head < 1 || head > n_) return false;
  if (!rows_.empty()) return (rows_[tail] >> (head - 1)) & 1u;
  return std::binary_search(out_[tail].begin(), out_[tail].end(), head);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (VertexId v = 1; v <= n_; ++v) {
    for (VertexId w : out_[v]) result.push_back({v, w});
  }
  return result;
}

std::uint64_t Digraph::present_mask() const noexcept {
  std::uint64_t mask = 0;
  for (VertexId v = 1; v <= n_ && v <= 64; ++v) {
    if (present_[v]) mask |= std::uint64_t{1} << (v - 1);
  }
  return mask;
}

bool operator==(const Digraph& a, const Digraph& b) {
  return a.n_ == b.n_ && a.present_ == b.present_ && a.out_ == b.out_;
}

// ---------------------------------------------------------------------------
// Paths and cycles

Cycle::Cycle(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw PreconditionError("cycle needs >= 2 vertices");
  auto sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("cycle repeats a vertex");
  }
  std::rotate(vertices_.begin(),
              std::min_element(vertices_.begin(), vertices_.end()),
              vertices_.end());
}

bool Cycle::contains(VertexId v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::vector<Arc> Cycle::arcs() const {
  std::vector<Arc> result;
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    result.push_back({vertices_[k], vertices_[(k + 1) % vertices_.size()]});
  }
  return result;
}

std::vector<VertexId> Cycle::sorted_vertices() const {
  auto vs = vertices_;
  std::sort(vs.begin(), vs.end());
  return vs;
}

std::strong_ordering operator<=>(const Cycle& a, const Cycle& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return a.vertices_ <=> b.vertices_;
}

void check_cycle_in(const Digraph& g, const Cycle& c) {
  for (const Arc& a : c.arcs()) {
    if (!g.contains(a.tail) || !g.has_arc(a.tail, a.head)) {
      throw PreconditionError("cycle arc " + std::to_string(a.tail) + "->" +
                              std::to_string(a.head) + " not in graph");
    }
  }
}

void check_path_in(const Digraph& g, const Path& p) {
  if (p.vertices.empty()) throw PreconditionError("empty path");
  auto sorted = p.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("path repeats a vertex");
  }
  for (VertexId v : p.vertices) {
    if (!g.contains(v)) {
      throw PreconditionError("path vertex " + std::to_string(v) +
                              " not in graph");
    }
  }
  for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
    if (!g.has_arc(p.vertices[k], p.vertices[k + 1])) {
      throw PreconditionError("path arc " + std::to_string(p.vertices[k]) +
                              "->" + std::to_string(p.vertices[k + 1]) +
                              " not in graph");
    }
  }
}

// ---------------------------------------------------------------------------
// Text format

namespace {

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

// Splits into whitespace-separated base-10 integers; false on any junk.
bool parse_ints(std::string_view line, std::vector<long long>& out) {
  out.clear();
  std::size_t pos = 0;
  while (true) {
    pos = line.find_first_not_of(" \t\r", pos);
    if (pos == std::string_view::npos) return true;
    std::size_t end = line.find_first_of(" \t\r", pos);
    if (end == std::string_view::npos) end = line.size();
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
    if (ec != std::errc() || ptr != line.data() + end) return false;
    out.push_back(value);
    pos = end;
  }
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  using Kind = ParseError::Kind;
  std::vector<long long> ints;
  long long n = -1;
  long long m = -1;
  std::vector<Arc> arcs;
  std::set<Arc> seen;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (is_blank(line) || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (n < 0) {
      if (!parse_ints(line, ints) || ints.size() != 2 || ints[0] < 0 ||
          ints[1] < 0 || ints[0] > 1'000'000) {
        throw ParseError(Kind::kMalformedHeader, line_no,
                         "expected header \"n m\"");
      }
      n = ints[0];
      m = ints[1];
    } else {
      if (!parse_ints(line, ints) || ints.size() != 2) {
        throw ParseError(Kind::kMalformedArc, line_no, "expected arc \"i j\"");
      }
      if (static_cast<long long>(arcs.size()) >= m) {
        throw ParseError(Kind::kArcCountMismatch, line_no,
                         "more arcs than the header declares");
      }
      for (long long v : ints) {
        if (v < 1 || v > n) {
          throw ParseError(Kind::kEndpointOutOfRange, line_no,
                           "endpoint " + std::to_string(v) + " outside 1.." +
                               std::to_string(n));
        }
      }
      Arc arc{static_cast<VertexId>(ints[0]), static_cast<VertexId>(ints[1])};
      if (arc.tail == arc.head) {
        throw ParseError(Kind::kSelfLoop, line_no,
                         "self-loop at vertex " + std::to_string(arc.tail));
      }
      if (!seen.insert(arc).second) {
        throw ParseError(Kind::kDuplicateArc, line_no,
                         "duplicate arc " + std::to_string(arc.tail) + " " +
                             std::to_string(arc.head));
      }
      arcs.push_back(arc);
    }
    if (end == text.size()) break;
  }
  if (n < 0) throw ParseError(Kind::kMalformedHeader, 0, "missing header");
  if (static_cast<long long>(arcs.size()) != m) {
    throw ParseError(Kind::kArcCountMismatch, line_no,
                     "header declares " + std::to_string(m) + " arcs, found " +
                         std::to_string(arcs.size()));
  }
  return Digraph(static_cast<int>(n), arcs);
}

std::string serialize_digraph(const Digraph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.arc_count();
  for (const Arc& a : g.arcs()) out << '\n' << a.tail << ' ' << a.head;
  return out.str();
}

// ---------------------------------------------------------------------------
// Structure

bool is_acyclic(const Digraph& g) {
  const int n = g.order();
  if (g.has_bit_rows()) {
    // Peel sinks until nothing changes.
    std::uint64_t alive = g.present_mask();
    bool progress = true;
    while (alive != 0 && progress) {
      progress = false;
      for (std::uint64_t rest = alive; rest != 0; rest &= rest - 1) {
        const int bit = __builtin_ctzll(rest);
        if ((g.bit_row(bit + 1) & alive) == 0) {
          alive &= ~(std::uint64_t{1} << bit);
          progress = true;
        }
      }
    }
    return alive == 0;
  }
  std::vector<int> indegree(static_cast<std::size_t>(n) + 1, 0);
  for (const Arc& a : g.arcs()) ++indegree[a.head];
  std::vector<VertexId> ready;
  int remaining = 0;
  for (VertexId v : g.vertices()) {
    ++remaining;
    if (indegree[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    --remaining;
    for (VertexId w : g.successors(v)) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return remaining == 0;
}

Digraph delete_vertices(const Digraph& g, std::span<const VertexId> removed) {
  Digraph result = g;
  for (VertexId v : removed) {
    if (!g.contains(v)) {
      throw PreconditionError("cannot delete unknown vertex " +
                              std::to_string(v));
    }
    result.present_[v] = 0;
  }
  result.arc_count_ = 0;
  for (VertexId v = 1; v <= g.order(); ++v) {
    auto& succ = result.out_[v];
    if (!result.present_[v]) {
      succ.clear();
    } else {
      std::erase_if(succ, [&](VertexId w) { return !result.present_[w]; });
    }
    result.arc_count_ += succ.size();
    if (result.has_bit_rows()) {
      result.rows_[v] = 0;
      for (VertexId w : succ) result.rows_[v] |= std::uint64_t{1} << (w - 1);
    }
  }
  return result;
}

std::vector<std::vector<VertexId>> strongly_connected_components(
    const Digraph& g) {
  const int n = g.order();
  std::vector<int> index(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> low(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n) + 1, 0);
  std::vector<VertexId> stack;
  std::vector<std::vector<VertexId>> components;
  int counter = 0;

  // Iterative Tarjan; each frame is (vertex, next successor position).
  std::vector<std::pair<VertexId, std::size_t>> frames;
  for (VertexId root : g.vertices()) {
    if (index[root] != -1) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto& succ = g.successors(v);
      if (pos < succ.size()) {
        VertexId w = succ[pos++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<VertexId> component;
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
      const VertexId done = v;
      frames.pop_back();
      if (!frames.empty()) {
        VertexId parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

namespace {

// Johnson's elementary-circuit search, one start vertex at a time, over the
// SCC of the start vertex restricted to ids >= start.
class CircuitSearch {
 public:
  CircuitSearch(const Digraph& g, std::size_t limit)
      : g_(g),
        limit_(limit),
        blocked_(static_cast<std::size_t>(g.order()) + 1, 0),
        blocked_by_(static_cast<std::size_t>(g.order()) + 1),
        allowed_(static_cast<std::size_t>(g.order()) + 1, 0) {}

  bool run(std::vector<Cycle>& out) {
    out_ = &out;
    for (const auto& component : strongly_connected_components(g_)) {
      if (component.size() < 2) continue;
      for (VertexId v : component) allowed_[v] = 1;
      for (VertexId start : component) {
        for (VertexId v : component) {
          blocked_[v] = 0;
          blocked_by_[v].clear();
        }
        start_ = start;
        circuit(start);
        allowed_[start] = 0;  // later starts only use larger ids
        if (stopped_) return false;
      }
      for (VertexId v : component) allowed_[v] = 0;
    }
    return true;
  }

 private:
  bool circuit(VertexId v) {
    bool found = false;
    path_.push_back(v);
    blocked_[v] = 1;
    for (VertexId w : g_.successors(v)) {
      if (stopped_) break;
      if (!allowed_[w]) continue;
      if (w == start_) {
        out_->emplace_back(path_);
        if (out_->size() > limit_) stopped_ = true;
        found = true;
      } else if (!blocked_[w] && circuit(w)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (VertexId w : g_.successors(v)) {
        if (!allowed_[w]) continue;
        auto& list = blocked_by_[w];
        if (std::find(list.begin(), list.end(), v) == list.end()) {
          list.push_back(v);
        }
      }
    }
    path_.pop_back();
    return found;
  }

  void unblock(VertexId v) {
    std::vector<VertexId> work{v};
    while (!work.empty()) {
      VertexId u = work.back();
      work.pop_back();
      blocked_[u] = 0;
      for (VertexId w : blocked_by_[u]) {
        if (blocked_[w]) work.push_back(w);
      }
      blocked_by_[u].clear();
    }
  }

  const Digraph& g_;
  std::size_t limit_;
  std::vector<char> blocked_;
  std::vector<std::vector<VertexId>> blocked_by_;
  std::vector<char> allowed_;
  std::vector<VertexId> path_;
  std::vector<Cycle>* out_ = nullptr;
  VertexId start_ = 0;
  bool stopped_ = false;
};

}  // namespace

CycleList enumerate_cycles(const Digraph& g, std::size_t cap) {
  CycleList result;
  CircuitSearch search(g, cap);
  result.truncated = !search.run(result.cycles);
  std::sort(result.cycles.begin(), result.cycles.end());
  if (result.cycles.size() > cap) result.cycles.resize(cap);
  return result;
}

Digraph union_of_cycles(const Digraph& host, std::span<const Cycle> cycles) {
  std::set<Arc> arcs;
  for (const Cycle& c : cycles) {
    check_cycle_in(host, c);
    for (const Arc& a : c.arcs()) arcs.insert(a);
  }
  std::vector<Arc> list(arcs.begin(), arcs.end());
  Digraph result(host.order(), list);
  std::vector<VertexId> absent;
  for (VertexId v = 1; v <= host.order(); ++v) {
    if (!host.contains(v)) absent.push_back(v);
  }
  return absent.empty() ? result : delete_vertices(result, absent);
}

Digraph union_of_paths(int n, std::span<const Path> paths) {
  std::set<Arc> arcs;
  for (const Path& p : paths) {
    for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
      arcs.insert({p.vertices[k], p.vertices[k + 1]});
    }
  }
  std::vector<Arc> list(arcs.begin(), arcs.end());
  return Digraph(n, list);
}

}  // namespace lindex
