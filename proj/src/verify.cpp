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

#include "lindex/verify.hpp"

#include <algorithm>
#include <array>

#include "lindex/error.hpp"

namespace lindex {
namespace {

int mod(long long v, int q) {
  long long r = v % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

// q^n, or nothing when it exceeds `limit`.
std::optional<std::uint64_t> vector_count(int q, int n, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > limit / static_cast<std::uint64_t>(q)) return std::nullopt;
    total *= static_cast<std::uint64_t>(q);
  }
  return total <= limit ? std::optional(total) : std::nullopt;
}

void check_inputs(const Digraph& g, const LinearCode& code, int q) {
  if (q < 2) throw PreconditionError("alphabet size q must be >= 2");
  if (code.q != q) {
    throw PreconditionError("code is over Z_" + std::to_string(code.q) +
                            ", check requested Z_" + std::to_string(q));
  }
  if (code.n != g.order()) {
    throw PreconditionError("code has " + std::to_string(code.n) +
                            " columns, graph has " + std::to_string(g.order()) +
                            " vertices");
  }
  check_code(code);
}

std::uint64_t bit(VertexId v) { return std::uint64_t{1} << (v - 1); }

}  // namespace

bool DecodabilityReport::all_decodable() const {
  return std::all_of(receivers.begin(), receivers.end(),
                     [](const ReceiverVerdict& r) { return r.decodable; });
}

std::vector<VertexId> DecodabilityReport::failing() const {
  std::vector<VertexId> out;
  for (const auto& r : receivers) {
    if (!r.decodable) out.push_back(r.receiver);
  }
  return out;
}

DecodabilityReport decodability_check(const Digraph& g, const LinearCode& code,
                                      int q, std::uint64_t guard) {
  check_inputs(g, code, q);
  const int n = g.order();
  if (!vector_count(q, n, guard)) {
    throw GuardError("decodability check needs q^n <= " + std::to_string(guard) +
                     " (q=" + std::to_string(q) + ", n=" + std::to_string(n) + ")");
  }

  DecodabilityReport report;
  std::vector<std::uint64_t> side(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::size_t> pending;  // indices into report.receivers
  for (VertexId v : g.vertices()) {
    for (VertexId w : g.successors(v)) side[v] |= bit(w);
    pending.push_back(report.receivers.size());
    report.receivers.push_back({v, true, std::nullopt});
  }

  // A receiver fails iff some nonzero d with code*d = 0 vanishes on its side
  // information but not at its own coordinate; (0, d) is then the first
  // violating pair. Walk d in lexicographic order with an odometer, keeping
  // the syndrome current one column at a time.
  const std::size_t len = code.rows.size();
  std::vector<std::vector<std::pair<std::size_t, int>>> column(
      static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < len; ++k) {
    for (int j = 0; j < n; ++j) {
      if (const int c = code.rows[k][j]; c != 0) column[j].push_back({k, c});
    }
  }
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  std::vector<int> syndrome(len, 0);
  std::size_t nonzero = 0;
  std::uint64_t support = 0;

  auto shift = [&](int j, int delta) {
    for (const auto& [k, c] : column[j]) {
      const int before = syndrome[k];
      const int after = mod(before + static_cast<long long>(c) * delta, q);
      syndrome[k] = after;
      nonzero += (after != 0) - (before != 0);
    }
  };

  while (!pending.empty()) {
    int j = n - 1;
    while (j >= 0 && d[j] == q - 1) {
      shift(j, -(q - 1));
      d[j] = 0;
      support &= ~bit(j + 1);
      --j;
    }
    if (j < 0) break;
    ++d[j];
    shift(j, 1);
    support |= bit(j + 1);
    if (nonzero != 0) continue;

    for (auto it = pending.begin(); it != pending.end();) {
      ReceiverVerdict& verdict = report.receivers[*it];
      const VertexId i = verdict.receiver;
      if ((support & bit(i)) && !(support & side[i])) {
        verdict.decodable = false;
        verdict.counterexample.emplace(std::vector<int>(d.size(), 0), d);
        it = pending.erase(it);
      } else {
        ++it;
      }
    }
  }
  return report;
}

DecodabilityReport decodability_oracle(const Digraph& g, const LinearCode& code,
                                       int q) {
  check_inputs(g, code, q);
  const int n = g.order();
  const auto count = vector_count(q, n, kPairwiseOracleMaxVectors);
  if (!count) {
    throw GuardError("pairwise oracle limited to " +
                     std::to_string(kPairwiseOracleMaxVectors) + " vectors");
  }
  std::vector<std::vector<int>> xs;
  std::vector<Codeword> ys;
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  for (std::uint64_t t = 0; t < *count; ++t) {
    xs.push_back(x);
    ys.push_back(apply_code(code, x));
    for (int j = n - 1; j >= 0; --j) {
      if (++x[j] < q) break;
      x[j] = 0;
    }
  }

  DecodabilityReport report;
  for (VertexId i : g.vertices()) {
    ReceiverVerdict verdict{i, true, std::nullopt};
    const auto& known = g.successors(i);
    auto agree = [&](std::size_t a, std::size_t b) {
      if (ys[a] != ys[b]) return false;
      return std::all_of(known.begin(), known.end(), [&](VertexId j) {
        return xs[a][j - 1] == xs[b][j - 1];
      });
    };
    for (std::size_t a = 0; a < xs.size() && verdict.decodable; ++a) {
      for (std::size_t b = 0; b < xs.size(); ++b) {
        if (xs[a][i - 1] != xs[b][i - 1] && agree(a, b)) {
          verdict.decodable = false;
          verdict.counterexample.emplace(xs[a], xs[b]);
          break;
        }
      }
    }
    report.receivers.push_back(std::move(verdict));
  }
  return report;
}

int gf2_rank(const std::vector<std::vector<int>>& matrix) {
  std::vector<std::vector<char>> m;
  std::size_t width = 0;
  for (const auto& row : matrix) {
    width = std::max(width, row.size());
    std::vector<char> r(row.size());
    std::transform(row.begin(), row.end(), r.begin(),
                   [](int v) { return static_cast<char>(v % 2 != 0); });
    m.push_back(std::move(r));
  }
  for (auto& row : m) row.resize(width, 0);
  int rank = 0;
  for (std::size_t col = 0; col < width && rank < static_cast<int>(m.size());
       ++col) {
    auto pivot = std::find_if(m.begin() + rank, m.end(),
                              [&](const auto& row) { return row[col] != 0; });
    if (pivot == m.end()) continue;
    std::iter_swap(m.begin() + rank, pivot);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != static_cast<std::size_t>(rank) && m[r][col]) {
        for (std::size_t c = col; c < width; ++c) m[r][c] ^= m[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

// Depth-first search over the free entries row by row, with an incremental
// xor basis. A branch stops once its partial rank reaches the best found.
class MinrankSearch {
 public:
  explicit MinrankSearch(const Digraph& g) : vs_(g.vertices()) {
    for (VertexId v : vs_) free_.push_back(g.successors(v));
    best_ = static_cast<int>(vs_.size()) + 1;
    rows_.resize(vs_.size());
  }

  MinrankResult run(int n) {
    descend(0, 0);
    MinrankResult result{best_, {}};
    for (std::uint64_t row : best_rows_) {
      std::vector<int> r(static_cast<std::size_t>(n), 0);
      for (int j = 0; j < n; ++j) r[j] = static_cast<int>((row >> j) & 1);
      result.witness.push_back(std::move(r));
    }
    return result;
  }

 private:
  // Reduces `row` against the basis; returns the pivot bit it adds, or -1.
  int insert(std::uint64_t row) {
    for (int b = 63; b >= 0 && row != 0; --b) {
      if (!((row >> b) & 1)) continue;
      if (basis_[b] == 0) {
        basis_[b] = row;
        return b;
      }
      row ^= basis_[b];
    }
    return -1;
  }

  void descend(std::size_t t, int rank) {
    if (rank >= best_) return;
    if (t == vs_.size()) {
      best_ = rank;
      best_rows_ = rows_;
      return;
    }
    const auto& cols = free_[t];
    const std::size_t k = cols.size();
    for (std::uint64_t value = 0; value < (std::uint64_t{1} << k); ++value) {
      std::uint64_t row = bit(vs_[t]);
      for (std::size_t m = 0; m < k; ++m) {
        if ((value >> (k - 1 - m)) & 1) row |= bit(cols[m]);
      }
      rows_[t] = row;
      const int pivot = insert(row);
      descend(t + 1, rank + (pivot >= 0));
      if (pivot >= 0) basis_[pivot] = 0;
    }
  }

  std::vector<VertexId> vs_;
  std::vector<std::vector<VertexId>> free_;
  std::array<std::uint64_t, 64> basis_{};
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> best_rows_;
  int best_ = 0;
};

}  // namespace

MinrankResult minrank_gf2(const Digraph& g) {
  if (g.arc_count() > kMinrankMaxArcs) {
    throw GuardError("minrank enumeration limited to " +
                     std::to_string(kMinrankMaxArcs) + " arcs, got " +
                     std::to_string(g.arc_count()));
  }
  if (g.order() > 64) throw GuardError("minrank limited to 64 vertices");
  return MinrankSearch(g).run(g.order());
}

AnalysisReport check_theorem(const Digraph& g, int q,
                             const AnalysisOptions& options) {
  if (q < 2) throw PreconditionError("alphabet size q must be >= 2");
  AnalysisReport report;
  report.n = g.order();
  report.q = q;
  report.removal = removal_number(g);
  if (g.present_count() <= kMaisOracleMaxVertices && g.has_bit_rows()) {
    report.mais = mais_oracle(g).size;
  } else if (report.removal.supported()) {
    report.mais = g.present_count() - report.removal.r;
  }
  if (!report.removal.supported()) {
    report.case_label = "unsupported";
  } else {
    CodeConstruction built = construct_code(g, q, options.cap);
    report.case_label = built.scheme;
    report.code_length = static_cast<int>(built.code.length());
    if (vector_count(q, g.order(), options.max_bruteforce)) {
      report.decodable =
          decodability_check(g, built.code, q, options.max_bruteforce)
              .all_decodable();
    }
    report.code = std::move(built.code);
  }
  if (g.arc_count() <= kMinrankMaxArcs && g.order() <= 64) {
    report.minrank = minrank_gf2(g).value;
    if (report.mais) report.minrank_equals_mais = *report.minrank == *report.mais;
  }
  return report;
}

}  // namespace lindex
