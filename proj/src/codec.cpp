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

#include "lindex/codec.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lindex/error.hpp"
#include "lindex/mais.hpp"

namespace lindex {
namespace {

int mod(long long v, int q) {
  long long r = v % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

// Inverse of a modulo q, or 0 when a is not a unit.
int inverse_mod(int a, int q) {
  for (int b = 1; b < q; ++b) {
    if (mod(static_cast<long long>(a) * b, q) == 1) return b;
  }
  return 0;
}

void check_modulus(int q) {
  if (q < 2) throw PreconditionError("alphabet size q must be >= 2");
}

std::vector<int> unit_row(int n, VertexId v) {
  std::vector<int> row(static_cast<std::size_t>(n), 0);
  row[static_cast<std::size_t>(v - 1)] = 1;
  return row;
}

void append_uncoded(LinearCode& code, const Digraph& g,
                    const std::set<VertexId>& covered) {
  for (VertexId v : g.vertices()) {
    if (covered.count(v)) continue;
    code.rows.push_back(unit_row(code.n, v));
    code.labels.push_back({RowLabel::Kind::kUncoded, v, 0});
  }
}

void append_cyclic(LinearCode& code, const Cycle& cycle,
                   std::set<VertexId>& covered) {
  const auto& vs = cycle.vertices();
  for (auto& row : encode_cyclic(cycle, code.n, code.q)) {
    code.rows.push_back(std::move(row));
  }
  for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
    code.labels.push_back({RowLabel::Kind::kCyclicPair, vs[k], vs[k + 1]});
  }
  covered.insert(vs.begin(), vs.end());
}

}  // namespace

std::vector<std::string> LinearCode::exprs() const {
  std::vector<std::string> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    std::string s;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0) continue;
      if (!s.empty()) s += '+';
      if (row[j] != 1) s += std::to_string(row[j]) + '*';
      s += 'x' + std::to_string(j + 1);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::optional<std::size_t> LinearCode::find_row(const RowLabel& label) const {
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] == label) return k;
  }
  return std::nullopt;
}

void check_code(const LinearCode& code) {
  check_modulus(code.q);
  if (code.n < 0) throw PreconditionError("negative message count");
  if (!code.labels.empty() && code.labels.size() != code.rows.size()) {
    throw PreconditionError("row labels do not match rows");
  }
  for (std::size_t k = 0; k < code.rows.size(); ++k) {
    const auto& row = code.rows[k];
    if (row.size() != static_cast<std::size_t>(code.n)) {
      throw PreconditionError("row " + std::to_string(k + 1) + " has " +
                              std::to_string(row.size()) +
                              " coefficients, expected " +
                              std::to_string(code.n));
    }
    if (std::any_of(row.begin(), row.end(),
                    [&](int c) { return c < 0 || c >= code.q; })) {
      throw PreconditionError("row " + std::to_string(k + 1) +
                              " has a coefficient outside [0, q)");
    }
    if (std::all_of(row.begin(), row.end(), [](int c) { return c == 0; })) {
      throw PreconditionError("row " + std::to_string(k + 1) + " is zero");
    }
  }
}

LinearCode encode_uncoded(const Digraph& g, int q) {
  check_modulus(q);
  LinearCode code{q, g.order(), {}, {}};
  append_uncoded(code, g, {});
  return code;
}

std::vector<std::vector<int>> encode_cyclic(const Cycle& cycle, int n, int q) {
  check_modulus(q);
  const auto& vs = cycle.vertices();
  if (vs.size() < 2) throw PreconditionError("cyclic code needs a cycle");
  std::vector<std::vector<int>> rows;
  for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
    auto row = unit_row(n, vs[k]);
    row[static_cast<std::size_t>(vs[k + 1] - 1)] = 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<int>> encode_interlinked(const InterlinkedConfig& cfg,
                                                 const Digraph& g, int q) {
  check_modulus(q);
  if (auto report = validate_config(cfg, g); !report) {
    throw PreconditionError("invalid configuration (" + report.clause +
                            "): " + report.detail);
  }
  const Digraph sub = cfg.graph(g.order());
  std::vector<std::vector<int>> rows;
  for (VertexId a : cfg.vertices()) {
    if (a == cfg.v(1) || a == cfg.v(2)) continue;
    auto row = unit_row(g.order(), a);
    for (VertexId w : sub.successors(a)) row[static_cast<std::size_t>(w - 1)] = 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

CodeConstruction construct_code(const Digraph& g, int q, std::size_t cap) {
  check_modulus(q);
  CodeConstruction out;
  const RemovalResult removal = removal_number(g);
  if (removal.at_least_three) {
    throw UnsupportedRemovalNumber("unsupported removal number >= 3");
  }
  out.r = removal.r;
  out.witness = removal.witness;
  out.code = LinearCode{q, g.order(), {}, {}};
  std::set<VertexId> covered;
  if (removal.r == 0) {
    out.scheme = "uncoded";
  } else if (removal.r == 1) {
    out.scheme = "one-cycle";
    const CycleList list = enumerate_cycles(g, cap);
    append_cyclic(out.code, list.cycles.front(), covered);
  } else if (auto pair = find_disjoint_cycle_pair(g, cap)) {
    out.scheme = "disjoint-pair";
    append_cyclic(out.code, pair->first, covered);
    append_cyclic(out.code, pair->second, covered);
  } else {
    out.scheme = "interlinked";
    out.derivation = derive_config(g, cap);
    const InterlinkedConfig& cfg = out.derivation->config;
    const auto vs = cfg.vertices();
    auto rows = encode_interlinked(cfg, g, q);
    std::size_t k = 0;
    for (VertexId a : vs) {
      if (a == cfg.v(1) || a == cfg.v(2)) continue;
      out.code.rows.push_back(std::move(rows[k++]));
      out.code.labels.push_back({RowLabel::Kind::kConfigVertex, a, 0});
    }
    covered.insert(vs.begin(), vs.end());
  }
  append_uncoded(out.code, g, covered);
  return out;
}

LinearCode build_code(const Digraph& g, int q, std::size_t cap) {
  return construct_code(g, q, cap).code;
}

Codeword apply_code(const LinearCode& code, const std::vector<int>& x) {
  if (x.size() != static_cast<std::size_t>(code.n)) {
    throw PreconditionError("message vector has " + std::to_string(x.size()) +
                            " entries, code expects " + std::to_string(code.n));
  }
  for (int v : x) {
    if (v < 0 || v >= code.q) {
      throw PreconditionError("message value " + std::to_string(v) +
                              " outside Z_" + std::to_string(code.q));
    }
  }
  Codeword y;
  y.symbols.reserve(code.rows.size());
  for (const auto& row : code.rows) {
    long long acc = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      acc += static_cast<long long>(row[j]) * x[j];
    }
    y.symbols.push_back(mod(acc, code.q));
  }
  return y;
}

// ---------------------------------------------------------------------------
// Decoding chains

namespace {

class ChainDecoder {
 public:
  ChainDecoder(const LinearCode& code, const Codeword& y, const SideInfo& side)
      : code_(code), y_(y), known_(side) {
    if (y.symbols.size() != code.rows.size()) {
      throw PreconditionError("codeword length does not match the code");
    }
  }

  int get(VertexId v) const {
    auto it = known_.find(v);
    if (it == known_.end()) {
      throw PreconditionError("missing side information x" + std::to_string(v));
    }
    return it->second;
  }

  // Solves the row labelled `label` for x_target; every other symbol in the
  // row must already be known. Subtraction order matters for q > 2.
  void solve(const RowLabel& label, VertexId target) {
    auto k = code_.find_row(label);
    if (!k) {
      throw PreconditionError("code has no row for vertex " +
                              std::to_string(label.vertex));
    }
    const auto& row = code_.rows[*k];
    long long acc = y_.symbols[*k];
    for (std::size_t j = 0; j < row.size(); ++j) {
      const VertexId v = static_cast<VertexId>(j + 1);
      if (row[j] == 0 || v == target) continue;
      acc -= static_cast<long long>(row[j]) * get(v);
    }
    const int inv = inverse_mod(row[static_cast<std::size_t>(target - 1)], code_.q);
    if (inv == 0) {
      throw PreconditionError("row of vertex " + std::to_string(label.vertex) +
                              " cannot be solved for x" +
                              std::to_string(target));
    }
    known_[target] = mod(mod(acc, code_.q) * static_cast<long long>(inv), code_.q);
  }

  void solve_vertex(VertexId a, VertexId target) {
    solve({RowLabel::Kind::kConfigVertex, a, 0}, target);
  }

  // Walks a path forwards from position `from`: each vertex's row gives its
  // successor.
  void forward(const Path& p, std::size_t from) {
    for (std::size_t k = from; k + 1 < p.vertices.size(); ++k) {
      solve_vertex(p.vertices[k], p.vertices[k + 1]);
    }
  }

  // Walks a path backwards down to position 1, starting from its known end.
  void backward(const Path& p) {
    for (std::size_t k = p.vertices.size() - 1; k-- > 1;) {
      solve_vertex(p.vertices[k], p.vertices[k]);
    }
  }

 private:
  const LinearCode& code_;
  const Codeword& y_;
  SideInfo known_;
};

}  // namespace

int decode_receiver(const InterlinkedConfig& cfg, const LinearCode& code,
                    const Codeword& y, VertexId i, const SideInfo& side) {
  check_code(code);
  ChainDecoder dec(code, y, side);
  const auto vs = cfg.vertices();
  if (!std::binary_search(vs.begin(), vs.end(), i)) {
    dec.solve({RowLabel::Kind::kUncoded, i, 0}, i);
    return dec.get(i);
  }
  using R = PathRole;
  const Path& b = cfg.path(R::kB);
  const Path& c = cfg.path(R::kC);
  const Path& d = cfg.path(R::kD);
  const Path& e = cfg.path(R::kE);
  const Path& f = cfg.path(R::kF);
  const Path& h = cfg.path(R::kH);
  const VertexId hub = cfg.v(3);
  if (i == cfg.v(1)) {
    dec.get(f.vertices[1]);
    dec.forward(f, 1);                // x_{v4}
    dec.forward(cfg.path(R::kI), 0);  // x_{v3} = x_{e1}
    dec.get(c.vertices[1]);
    dec.forward(c, 1);                // x_{v5} = x_{e_last}
    dec.backward(e);                  // x_{e2}
    dec.solve_vertex(hub, h.vertices[1]);
    dec.forward(h, 1);                // x_{v6}
    dec.forward(cfg.path(R::kU), 0);  // x_{v1}
  } else if (i == cfg.v(2)) {
    dec.get(b.vertices[1]);
    dec.forward(b, 1);                // x_{v6} = x_{h_last}
    dec.backward(h);                  // x_{h2}
    dec.get(d.vertices[1]);
    dec.forward(d, 1);                // x_{v4}
    dec.forward(cfg.path(R::kI), 0);  // x_{v3} = x_{h1}
    dec.solve_vertex(hub, e.vertices[1]);
    dec.forward(e, 1);                // x_{v5}
    dec.forward(cfg.path(R::kW), 0);  // x_{v2}
  } else {
    dec.solve_vertex(i, i);
  }
  return dec.get(i);
}

}  // namespace lindex
