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

#include "lindex/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "lindex/error.hpp"
#include "lindex/generate.hpp"
#include "lindex/json_io.hpp"
#include "lindex/mais.hpp"
#include "lindex/verify.hpp"

namespace lindex {
namespace {

using Status = CriterionResult::Status;

// Collects failures, keeping the first few messages for the report line.
class Tally {
 public:
  void fail(const std::string& what) {
    if (++failures_ <= 3) messages_.push_back(what);
  }
  int failures() const { return failures_; }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::string s = std::to_string(failures_) + " failure(s)";
    for (const auto& m : messages_) s += "; " + m;
    return s;
  }

 private:
  int failures_ = 0;
  std::vector<std::string> messages_;
};

std::string label(const Digraph& g) {
  std::string s = serialize_digraph(g);
  std::replace(s.begin(), s.end(), '\n', ';');
  return "[" + s + "]";
}

// All labeled digraphs on n vertices, in order of the arc bitmask over the
// ordered pairs (i, j), i != j, taken lexicographically.
std::vector<Digraph> all_digraphs(int n) {
  std::vector<Arc> pairs;
  for (VertexId i = 1; i <= n; ++i) {
    for (VertexId j = 1; j <= n; ++j) {
      if (i != j) pairs.push_back({i, j});
    }
  }
  std::vector<Digraph> out;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Arc> arcs;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1) arcs.push_back(pairs[k]);
    }
    out.emplace_back(n, arcs);
  }
  return out;
}

struct Corpus {
  std::vector<Digraph> interlinked;  // r = 2 without a disjoint cycle pair
  std::vector<std::pair<Digraph, int>> small_arcs;  // r <= 2, |A| <= 20, MAIS
};

// The criterion-1 checks on one graph: length n - r = MAIS and full
// decodability. Returns false when r >= 3.
bool theorem_checks(const Digraph& g, int q, const CodeBuilder& builder,
                    Corpus& corpus, Tally& tally, bool record) {
  const RemovalResult removal = removal_number(g);
  if (!removal.supported()) return false;
  const int mais = mais_oracle(g).size;
  const int n = g.present_count();
  if (record) {
    if (removal.r == 2 && !find_disjoint_cycle_pair(g)) {
      corpus.interlinked.push_back(g);
    }
    if (g.arc_count() <= kMinrankMaxArcs) corpus.small_arcs.push_back({g, mais});
  }
  try {
    const LinearCode code = builder(g, q);
    const DecodabilityReport report = decodability_check(g, code, q);
    if (!report.all_decodable()) {
      tally.fail("decodability q=" + std::to_string(q) + " " + label(g));
    }
    const int len = static_cast<int>(code.length());
    if (len != n - removal.r || len != mais) {
      tally.fail("length " + std::to_string(len) + " vs n-r=" +
                 std::to_string(n - removal.r) + " MAIS=" +
                 std::to_string(mais) + " " + label(g));
    }
  } catch (const Error& e) {
    tally.fail(std::string(e.what()) + " " + label(g));
  }
  return true;
}

CriterionResult timed(int id, std::string title,
                      const std::function<void(CriterionResult&)>& body) {
  CriterionResult result;
  result.id = id;
  result.title = std::move(title);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(result);
  } catch (const std::exception& e) {
    result.status = Status::kFail;
    result.detail = std::string("aborted: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

void settle(CriterionResult& out, const Tally& tally, const std::string& info) {
  out.status = tally.ok() ? Status::kPass : Status::kFail;
  out.detail = tally.ok() ? info : info + ", " + tally.summary();
}

// --- criterion 1 ------------------------------------------------------------

void exhaustive_sweep(CriterionResult& out, const CodeBuilder& builder,
                      Corpus& corpus) {
  Tally tally;
  int graphs = 0;
  int supported = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const Digraph& g : all_digraphs(n)) {
      ++graphs;
      bool counted = false;
      for (int q : {2, 3}) {
        counted = theorem_checks(g, q, builder, corpus, tally, q == 2);
      }
      supported += counted;
    }
  }
  settle(out, tally,
         std::to_string(graphs) + " graphs, " + std::to_string(supported) +
             " with r<=2 checked for q=2,3");
}

// --- criterion 2 ------------------------------------------------------------

void random_sweep(CriterionResult& out, const AcceptanceOptions& options,
                  const CodeBuilder& builder, Corpus& corpus) {
  static constexpr double kDensities[] = {0.06, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35};
  Tally tally;
  Rng master(options.seed);
  int supported = 0;
  int with_q3 = 0;
  for (int t = 0; t < options.random_graphs; ++t) {
    const int n = master.between(5, 12);
    const double p = kDensities[master.below(std::size(kDensities))];
    const Digraph g = random_digraph(n, p, master.next());
    if (!theorem_checks(g, 2, builder, corpus, tally, true)) continue;
    ++supported;
    std::uint64_t vectors = 1;
    for (int i = 0; i < n; ++i) vectors *= 3;
    if (vectors <= kDefaultBruteforceGuard) {
      theorem_checks(g, 3, builder, corpus, tally, false);
      ++with_q3;
    }
  }
  if (with_q3 < 100) {
    tally.fail("only " + std::to_string(with_q3) + " instances checked for q=3");
  }
  settle(out, tally,
         std::to_string(options.random_graphs) + " graphs, " +
             std::to_string(supported) + " with r<=2 (q=2), " +
             std::to_string(with_q3) + " also q=3");
}

// --- criterion 3 ------------------------------------------------------------

void structural_suite(CriterionResult& out, const AcceptanceOptions& options,
                      const Corpus& corpus) {
  Tally tally;
  std::map<ConfigCase, int> cases;
  int merged = 0;
  auto check = [&](const Digraph& g) {
    try {
      const ConfigDerivation d = derive_config(g);
      if (auto report = validate_config(d.config, g); !report) {
        tally.fail(report.clause + ": " + report.detail + " " + label(g));
      }
      ++cases[d.kind];
      merged += d.merges > 0;
    } catch (const Error& e) {
      tally.fail(std::string(e.what()) + " " + label(g));
    }
  };

  Rng rng(options.seed ^ 0x5eedULL);
  std::set<int> patterns;
  for (int t = 0; t < options.structured_graphs; ++t) {
    PathLengths lengths{};
    const int pattern = t % 8;  // zero/nonzero choice for I, U, W
    for (PathRole r : kAllRoles) {
      lengths[static_cast<std::size_t>(r)] = rng.between(1, 3);
    }
    const PathRole optional[] = {PathRole::kI, PathRole::kU, PathRole::kW};
    for (int k = 0; k < 3; ++k) {
      if (!((pattern >> k) & 1)) lengths[static_cast<std::size_t>(optional[k])] = 0;
    }
    patterns.insert(pattern);
    try {
      check(structured_instance(lengths, rng.next(), true).graph);
    } catch (const Error& e) {
      tally.fail(std::string("generator: ") + e.what());
    }
  }
  if (patterns.size() < 8 && options.structured_graphs >= 8) {
    tally.fail("not every I/U/W pattern was generated");
  }
  for (const Digraph& g : corpus.interlinked) check(g);

  // Disjoint covers only arise around a chosen center, so ring instances are
  // also derived from their own center.
  int rings = 0;
  for (int t = 0; t < options.structured_graphs / 8; ++t) {
    const int k = 3 + 2 * (t % 3);
    try {
      const RingInstance ring = ring_instance(k, 2, rng.next());
      check(ring.graph);
      const ConfigDerivation d = derive_from_center(ring.graph, ring.center);
      ++rings;
      ++cases[d.kind];
      merged += d.merges > 0;
      if (d.kind != ConfigCase::kDisjointCover || d.merges != (k - 3) / 2) {
        tally.fail("ring with " + std::to_string(k) + " paths classified as " +
                   std::string(to_string(d.kind)) + " " + label(ring.graph));
      }
    } catch (const Error& e) {
      tally.fail(std::string("ring: ") + e.what());
    }
  }
  settle(out, tally,
         std::to_string(options.structured_graphs) + " structured + " +
             std::to_string(corpus.interlinked.size()) + " sweep + " +
             std::to_string(rings) + " ring instances; cases 1/2/3 = " +
             std::to_string(cases[ConfigCase::kLooping]) + "/" +
             std::to_string(cases[ConfigCase::kDisjointCover]) + "/" +
             std::to_string(cases[ConfigCase::kSharedInner]) + ", " +
             std::to_string(merged) + " with merges");
}

// --- criterion 4 ------------------------------------------------------------

void minrank_equality(CriterionResult& out, const Corpus& corpus) {
  Tally tally;
  for (const auto& [g, mais] : corpus.small_arcs) {
    const int value = minrank_gf2(g).value;
    if (value != mais) {
      tally.fail("minrank " + std::to_string(value) + " vs MAIS " +
                 std::to_string(mais) + " " + label(g));
    }
  }
  settle(out, tally, std::to_string(corpus.small_arcs.size()) + " graphs");
}

// --- criterion 5 ------------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void named_fixtures(CriterionResult& out, const AcceptanceOptions& options,
                    const CodeBuilder& builder) {
  struct Fixture {
    const char* name;
    std::size_t length;
    std::vector<std::string> exprs;  // expected set, empty when unchecked
  };
  const Fixture fixtures[] = {
      {"c3", 2, {"x1+x2", "x2+x3"}},
      {"k3", 1, {"x1+x2+x3"}},
      {"theta6", 4, {"x3+x5+x6", "x3+x4", "x2+x5", "x1+x6"}},
      {"2c3", 4, {"x1+x2", "x2+x3", "x4+x5", "x5+x6"}},
      {"p3", 3, {"x1", "x2", "x3"}},
  };
  Tally tally;
  for (const Fixture& f : fixtures) {
    const std::string base = options.fixture_dir + "/" + f.name;
    try {
      const Digraph g = parse_digraph(read_file(base + ".graph"));
      const LinearCode code = builder(g, 2);
      if (code.length() != f.length) {
        tally.fail(std::string(f.name) + " length " +
                   std::to_string(code.length()));
      }
      auto got = code.exprs();
      auto want = f.exprs;
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      if (got != want) tally.fail(std::string(f.name) + " rows differ");
      if (code_to_json(code) != read_file(base + ".code.json")) {
        tally.fail(std::string(f.name) + " JSON bytes differ from fixture");
      }
    } catch (const Error& e) {
      tally.fail(std::string(f.name) + ": " + e.what());
    }
  }
  settle(out, tally, "c3, k3, theta6, 2c3, p3");
}

// --- criterion 6 ------------------------------------------------------------

const char* const kK3 = "3 6\n1 2\n1 3\n2 1\n2 3\n3 1\n3 2";
const char* const kTheta6 =
    "6 9\n1 4\n1 5\n2 4\n2 6\n3 5\n3 6\n4 3\n5 2\n6 1";

void decoding_chains(CriterionResult& out) {
  Tally tally;
  long long decodes = 0;
  for (const char* text : {kK3, kTheta6}) {
    const Digraph g = parse_digraph(text);
    const int n = g.order();
    for (int q : {2, 3}) {
      const CodeConstruction built = construct_code(g, q);
      if (!built.derivation) {
        tally.fail("no configuration for " + label(g));
        continue;
      }
      std::vector<std::vector<int>> xs;
      std::vector<Codeword> ys;
      std::vector<int> x(static_cast<std::size_t>(n), 0);
      while (true) {
        xs.push_back(x);
        ys.push_back(apply_code(built.code, x));
        int j = n - 1;
        while (j >= 0 && ++x[j] == q) x[j--] = 0;
        if (j < 0) break;
      }
      for (std::size_t a = 0; a < xs.size(); ++a) {
        for (VertexId i = 1; i <= n; ++i) {
          SideInfo side;
          for (VertexId j : g.successors(i)) side[j] = xs[a][j - 1];
          // The brute-force answer: every x' consistent with what receiver i
          // holds must agree at i.
          std::set<int> candidates;
          for (std::size_t b = 0; b < xs.size(); ++b) {
            if (ys[b] != ys[a]) continue;
            bool same = true;
            for (const auto& [j, value] : side) same &= xs[b][j - 1] == value;
            if (same) candidates.insert(xs[b][i - 1]);
          }
          int chain = -1;
          try {
            chain = decode_receiver(built.derivation->config, built.code, ys[a],
                                    i, side);
          } catch (const Error& e) {
            tally.fail(e.what());
          }
          ++decodes;
          if (candidates.size() != 1 || *candidates.begin() != chain ||
              chain != xs[a][i - 1]) {
            tally.fail("receiver " + std::to_string(i) + " q=" +
                       std::to_string(q) + " " + label(g));
          }
        }
      }
    }
  }
  settle(out, tally, std::to_string(decodes) + " receiver decodes on K3, THETA6");
}

// --- criterion 7 ------------------------------------------------------------

bool parity(std::uint32_t v) { return __builtin_popcount(v) & 1; }

// Every 0/1 code of `len` rows on n messages, as sorted row multisets. Rows
// may be zero, so shorter codes appear padded.
void for_each_code(int n, int len,
                   const std::function<void(const std::vector<std::uint32_t>&)>& f) {
  const std::uint32_t top = 1u << n;
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(len), 0);
  while (true) {
    f(rows);
    int k = len - 1;
    while (k >= 0 && rows[k] == top - 1) --k;
    if (k < 0) return;
    ++rows[k];
    for (int m = k + 1; m < len; ++m) rows[m] = rows[k];
  }
}

void converse_check(CriterionResult& out) {
  Tally tally;
  long long codes = 0;
  int graphs = 0;
  for (int n = 1; n <= 4; ++n) {
    // Bucket graphs by MAIS - 1, the length to rule out.
    std::map<int, std::vector<std::vector<std::uint32_t>>> by_len;  // side masks
    std::map<int, std::vector<Digraph>> originals;
    for (const Digraph& g : all_digraphs(n)) {
      ++graphs;
      const int len = mais_oracle(g).size - 1;
      std::vector<std::uint32_t> side(static_cast<std::size_t>(n));
      for (VertexId i = 1; i <= n; ++i) {
        side[i - 1] = static_cast<std::uint32_t>(g.bit_row(i));
      }
      by_len[len].push_back(std::move(side));
      originals[len].push_back(g);
    }
    for (auto& [len, sides] : by_len) {
      std::vector<char> beaten(sides.size(), 0);
      for_each_code(n, len, [&](const std::vector<std::uint32_t>& rows) {
        ++codes;
        std::vector<std::uint32_t> kernel;
        for (std::uint32_t d = 1; d < (1u << n); ++d) {
          if (std::none_of(rows.begin(), rows.end(),
                           [&](std::uint32_t r) { return parity(r & d); })) {
            kernel.push_back(d);
          }
        }
        for (std::size_t s = 0; s < sides.size(); ++s) {
          bool decodable = true;
          for (int i = 0; i < n && decodable; ++i) {
            for (std::uint32_t d : kernel) {
              if (((d >> i) & 1) && !(d & sides[s][i])) {
                decodable = false;
                break;
              }
            }
          }
          if (decodable && !beaten[s]) {
            beaten[s] = 1;
            tally.fail("length-" + std::to_string(len) + " code decodes " +
                       label(originals[len][s]));
          }
        }
      });
    }
  }
  settle(out, tally,
         std::to_string(graphs) + " graphs, " + std::to_string(codes) +
             " codes of length MAIS-1 over GF(2)");
}

}  // namespace

std::string CriterionResult::line() const {
  const char* tag = status == Status::kPass   ? "PASS"
                    : status == Status::kFail ? "FAIL"
                                              : "SKIP";
  std::ostringstream ss;
  ss.setf(std::ios::fixed);
  ss.precision(1);
  ss << "[" << tag << "] " << id << " " << title << ": " << detail << " ("
     << seconds << " s)";
  return ss.str();
}

bool AcceptanceSummary::passed() const {
  return std::none_of(criteria.begin(), criteria.end(), [](const auto& c) {
    return c.status == CriterionResult::Status::kFail;
  });
}

LinearCode build_code_without_hub(const Digraph& g, int q) {
  CodeConstruction built = construct_code(g, q);
  if (!built.derivation) return built.code;
  const RowLabel hub{RowLabel::Kind::kConfigVertex, built.derivation->config.v(3), 0};
  if (auto k = built.code.find_row(hub)) {
    built.code.rows.erase(built.code.rows.begin() + static_cast<long>(*k));
    built.code.labels.erase(built.code.labels.begin() + static_cast<long>(*k));
  }
  return built.code;
}

AcceptanceSummary run_acceptance(
    const AcceptanceOptions& options,
    const std::function<void(const CriterionResult&)>& on_result) {
  const CodeBuilder builder =
      options.code_builder
          ? options.code_builder
          : CodeBuilder([](const Digraph& g, int q) { return build_code(g, q); });
  const bool full = options.level == AcceptanceLevel::kFull;
  Corpus corpus;
  AcceptanceSummary summary;
  auto record = [&](CriterionResult r) {
    if (on_result) on_result(r);
    summary.criteria.push_back(std::move(r));
  };
  auto skipped = [](int id, std::string title) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    r.detail = "skipped at quick level";
    return r;
  };

  record(timed(1, "exhaustive sweep n<=4", [&](CriterionResult& out) {
    exhaustive_sweep(out, builder, corpus);
  }));
  if (full) {
    record(timed(2, "randomized sweep n in [5,12]", [&](CriterionResult& out) {
      random_sweep(out, options, builder, corpus);
    }));
  } else {
    record(skipped(2, "randomized sweep n in [5,12]"));
  }
  record(timed(3, "configuration structure", [&](CriterionResult& out) {
    structural_suite(out, options, corpus);
  }));
  if (full) {
    record(timed(4, "minrank equals MAIS", [&](CriterionResult& out) {
      minrank_equality(out, corpus);
    }));
  } else {
    record(skipped(4, "minrank equals MAIS"));
  }
  record(timed(5, "named fixtures", [&](CriterionResult& out) {
    named_fixtures(out, options, builder);
  }));
  record(timed(6, "decoding chains", [&](CriterionResult& out) {
    decoding_chains(out);
  }));
  record(timed(7, "converse n<=4", [&](CriterionResult& out) {
    converse_check(out);
  }));
  return summary;
}

}  // namespace lindex
