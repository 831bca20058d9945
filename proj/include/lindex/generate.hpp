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

// Seeded instance generators.
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by
// the standard. Doubles take the top 53 bits of one draw; bounded integers
// use rejection on the raw draws. Neither depends on the standard library's
// distributions, so a seed gives the same graph on every platform.

#ifndef LINDEX_GENERATE_HPP
#define LINDEX_GENERATE_HPP

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "lindex/graph.hpp"
#include "lindex/interlinked.hpp"

namespace lindex {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [0, bound). Requires bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi);
  /// Fisher-Yates on `values`.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Path lengths in role order B, C, D, E, F, H, I, U, W.
using PathLengths = std::array<int, 9>;

struct GenSpec {
  enum class Mode { kRandom, kStructured };
  Mode mode = Mode::kRandom;
  int n = 0;         // random mode
  double p = 0.0;    // random mode arc probability
  PathLengths lengths{};
  bool shuffle = false;  // structured mode: permute vertex ids
  std::uint64_t seed = 0;
};

/// Each ordered pair (i, j), i != j, taken in lexicographic order, becomes an
/// arc when the next uniform draw is below p.
Digraph random_digraph(int n, double p, std::uint64_t seed);

struct StructuredInstance {
  Digraph graph;
  InterlinkedConfig config;
};

/// Lays out the nine paths with the given arc counts on fresh vertices and
/// keeps exactly their arcs. Junctions are numbered first (v1 = 1, v2 = 2,
/// then v3, v4, v5, v6 as far as they are distinct), inner vertices follow
/// in role order. Throws PreconditionError for lengths below the minimums
/// and StructuralError if the result fails its own checks.
StructuredInstance structured_instance(const PathLengths& lengths,
                                       std::uint64_t seed = 0,
                                       bool shuffle = false);

struct RingInstance {
  Digraph graph;
  Cycle center;
};

/// A center cycle with k >= 3 (odd) outer paths, none sharing an inner vertex:
/// the center passes 2k anchors a_0..a_{2k-1} and path i runs from a_{2i} to
/// a_{2i+3}. Center gaps and outer paths get 0..max_extra extra vertices.
/// Relative to `center` the outer paths form a disjoint cover that needs
/// (k - 3) / 2 merges. Throws PreconditionError for even or small k.
RingInstance ring_instance(int k, int max_extra, std::uint64_t seed);

/// Dispatches on spec.mode.
Digraph generate(const GenSpec& spec);

}  // namespace lindex

#endif  // LINDEX_GENERATE_HPP
