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

// Scalar linear index codes over Z_q and the decoding chains of the
// interlinked scheme.

#ifndef LINDEX_CODEC_HPP
#define LINDEX_CODEC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lindex/graph.hpp"
#include "lindex/interlinked.hpp"

namespace lindex {

/// Where a row came from.
struct RowLabel {
  enum class Kind { kUncoded, kCyclicPair, kConfigVertex, kExternal };
  Kind kind = Kind::kExternal;
  VertexId vertex = 0;   // uncoded message, config vertex, or first of a pair
  VertexId partner = 0;  // second vertex of a cyclic pair

  friend bool operator==(const RowLabel&, const RowLabel&) = default;
};

/// l x n coefficient matrix over Z_q; row k produces broadcast symbol k.
struct LinearCode {
  int q = 2;
  int n = 0;
  std::vector<std::vector<int>> rows;
  std::vector<RowLabel> labels;  // parallel to rows

  std::size_t length() const noexcept { return rows.size(); }
  /// Human-readable rows, e.g. "x1+x2" or "2*x1+x3".
  std::vector<std::string> exprs() const;
  /// Index of the row with the given label.
  std::optional<std::size_t> find_row(const RowLabel& label) const;

  friend bool operator==(const LinearCode&, const LinearCode&) = default;
};

/// Throws PreconditionError unless coefficients lie in [0, q), rows have
/// length n and are nonzero, and q >= 2.
void check_code(const LinearCode& code);

struct Codeword {
  std::vector<int> symbols;

  friend bool operator==(const Codeword&, const Codeword&) = default;
};

/// Receiver -> known message value.
using SideInfo = std::map<VertexId, int>;

LinearCode encode_uncoded(const Digraph& g, int q);

/// The L-1 rows x_c[k] + x_c[k+1] of a cycle of length L.
std::vector<std::vector<int>> encode_cyclic(const Cycle& cycle, int n, int q);

/// One row per configuration vertex except v1 and v2, in id order: the vertex
/// plus the heads of its arcs inside the configuration.
std::vector<std::vector<int>> encode_interlinked(const InterlinkedConfig& cfg,
                                                 const Digraph& g, int q);

/// Length n - r code for r <= 2. Throws UnsupportedRemovalNumber for r >= 3.
LinearCode build_code(const Digraph& g, int q,
                      std::size_t cap = kDefaultCycleCap);

/// build_code() plus the configuration it used when the interlinked scheme
/// applies.
struct CodeConstruction {
  LinearCode code;
  std::string scheme;  // uncoded | one-cycle | disjoint-pair | interlinked
  int r = 0;
  std::vector<VertexId> witness;
  std::optional<ConfigDerivation> derivation;
};

CodeConstruction construct_code(const Digraph& g, int q,
                                std::size_t cap = kDefaultCycleCap);

/// Symbol k = sum_i row_k[i] * x_i mod q. Requires n entries in [0, q).
Codeword apply_code(const LinearCode& code, const std::vector<int>& x);

/// Recovers x_i at receiver i from the codeword and its side information,
/// following the explicit chains of the interlinked scheme (v1 walks F, I, C,
/// back along E, the hub row, then H and U; v2 walks B, back along H, D, I,
/// the hub row, then E and W). Other configuration vertices subtract their
/// known out-neighbours; vertices outside the configuration read their
/// uncoded row. Throws PreconditionError when a needed value is missing.
int decode_receiver(const InterlinkedConfig& cfg, const LinearCode& code,
                    const Codeword& y, VertexId i, const SideInfo& side);

}  // namespace lindex

#endif  // LINDEX_CODEC_HPP
