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

// The acceptance suite shared by the test binary and `lindex selftest`.

#ifndef LINDEX_ACCEPTANCE_HPP
#define LINDEX_ACCEPTANCE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lindex/codec.hpp"

namespace lindex {

enum class AcceptanceLevel { kQuick, kFull };

using CodeBuilder = std::function<LinearCode(const Digraph&, int q)>;

struct AcceptanceOptions {
  /// Quick runs criteria 1, 3, 5, 6 and 7; full adds the randomized sweep (2)
  /// and minrank equality (4).
  AcceptanceLevel level = AcceptanceLevel::kFull;
  std::string fixture_dir;
  /// Replaces build_code() in criteria 1, 2 and 5. Used to check that the
  /// suite catches a broken encoder.
  CodeBuilder code_builder;
  std::uint64_t seed = 1;
  int random_graphs = 3000;
  int structured_graphs = 240;
};

struct CriterionResult {
  enum class Status { kPass, kFail, kSkip };
  int id = 0;
  std::string title;
  Status status = Status::kSkip;
  std::string detail;
  double seconds = 0.0;

  /// "[PASS] 1 <title>: <detail> (0.4 s)"
  std::string line() const;
};

struct AcceptanceSummary {
  std::vector<CriterionResult> criteria;

  bool passed() const;
};

/// Runs the criteria in order. `on_result` sees each result as it finishes.
AcceptanceSummary run_acceptance(
    const AcceptanceOptions& options,
    const std::function<void(const CriterionResult&)>& on_result = {});

/// Builds the code as usual but drops the hub row of the interlinked scheme.
LinearCode build_code_without_hub(const Digraph& g, int q);

}  // namespace lindex

#endif  // LINDEX_ACCEPTANCE_HPP
