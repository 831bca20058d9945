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

// Brute-force decodability, GF(2) minrank and the end-to-end analysis.

#ifndef LINDEX_VERIFY_HPP
#define LINDEX_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lindex/codec.hpp"
#include "lindex/graph.hpp"
#include "lindex/mais.hpp"

namespace lindex {

inline constexpr std::uint64_t kDefaultBruteforceGuard = std::uint64_t{1} << 24;

struct ReceiverVerdict {
  VertexId receiver = 0;
  bool decodable = true;
  /// Lexicographically first pair of message vectors that agree on the
  /// receiver's side information and on the codeword but differ at x_i.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> counterexample;

  friend bool operator==(const ReceiverVerdict&, const ReceiverVerdict&) = default;
};

struct DecodabilityReport {
  std::vector<ReceiverVerdict> receivers;  // ascending id

  bool all_decodable() const;
  std::vector<VertexId> failing() const;

  friend bool operator==(const DecodabilityReport&,
                         const DecodabilityReport&) = default;
};

/// Exhaustive over Z_q^n, via the kernel of the code restricted to the
/// vectors that vanish on each receiver's side information.
/// Throws GuardError when q^n > guard.
DecodabilityReport decodability_check(const Digraph& g, const LinearCode& code,
                                      int q,
                                      std::uint64_t guard = kDefaultBruteforceGuard);

inline constexpr std::uint64_t kPairwiseOracleMaxVectors = 4096;

/// Literal pairwise comparison of all message vectors. Test oracle for
/// decodability_check(); limited to q^n <= kPairwiseOracleMaxVectors.
DecodabilityReport decodability_oracle(const Digraph& g, const LinearCode& code,
                                       int q);

/// Rank over GF(2) of the entries reduced mod 2.
int gf2_rank(const std::vector<std::vector<int>>& matrix);

inline constexpr std::size_t kMinrankMaxArcs = 20;

struct MinrankResult {
  int value = 0;
  /// Fitting matrix, one row per present vertex in id order, n columns.
  std::vector<std::vector<int>> witness;
};

/// Exact minrank over GF(2). The witness is the first minimiser when free
/// entries are read in arc order. Throws GuardError above kMinrankMaxArcs
/// arcs or 64 vertices.
MinrankResult minrank_gf2(const Digraph& g);

struct AnalysisOptions {
  std::size_t cap = kDefaultCycleCap;
  std::uint64_t max_bruteforce = kDefaultBruteforceGuard;
};

struct AnalysisReport {
  int n = 0;
  int q = 2;
  RemovalResult removal;
  std::optional<int> mais;
  std::string case_label;  // uncoded | one-cycle | disjoint-pair | interlinked | unsupported
  std::optional<int> code_length;
  std::optional<bool> decodable;
  std::optional<int> minrank;
  std::optional<bool> minrank_equals_mais;
  std::optional<LinearCode> code;
};

/// Runs every construction and oracle that fits within the guards. Guarded
/// fields stay empty instead of throwing.
AnalysisReport check_theorem(const Digraph& g, int q,
                             const AnalysisOptions& options = {});

}  // namespace lindex

#endif  // LINDEX_VERIFY_HPP
