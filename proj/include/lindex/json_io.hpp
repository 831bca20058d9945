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

// JSON documents for codes, configurations and reports. Every writer emits
// compact JSON with a fixed key order followed by a single newline, so output
// bytes are reproducible.

#ifndef LINDEX_JSON_IO_HPP
#define LINDEX_JSON_IO_HPP

#include <string>
#include <string_view>

#include "lindex/codec.hpp"
#include "lindex/interlinked.hpp"
#include "lindex/verify.hpp"

namespace lindex {

/// {"q":..,"n":..,"rows":[[..],..],"exprs":[..]}
std::string code_to_json(const LinearCode& code);
/// Inverse of code_to_json(). "exprs" is optional and ignored. Row labels come
/// back as external. Throws ParseError (kMalformedDocument).
LinearCode code_from_json(std::string_view text);

/// {"junctions":{"v1":..,..,"v6":..},"B":[..],..,"W":[..]}
std::string config_to_json(const InterlinkedConfig& cfg);
InterlinkedConfig config_from_json(std::string_view text);

/// {"n","r","witness","mais","case","code_length","decodable","minrank",
/// "minrank_equals_mais"}; r is ">=3" when unsupported, guarded fields null.
std::string report_to_json(const AnalysisReport& report);

/// {"decodable":bool,"receivers":[{"receiver":i,"decodable":b,
/// "counterexample":[[..],[..]] or null},..]}
std::string decodability_to_json(const DecodabilityReport& report);

/// {"minrank":..,"witness":[[..],..]}
std::string minrank_to_json(const MinrankResult& result);

}  // namespace lindex

#endif  // LINDEX_JSON_IO_HPP
