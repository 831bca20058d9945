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

#include "lindex/json_io.hpp"

#include "json.hpp"
#include "lindex/error.hpp"

namespace lindex {
namespace {

using Json = nlohmann::ordered_json;

std::string finish(const Json& j) { return j.dump() + "\n"; }

[[noreturn]] void malformed(const std::string& what) {
  throw ParseError(ParseError::Kind::kMalformedDocument, 0, what);
}

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    malformed(std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    malformed(std::string("field \"") + key + "\" has the wrong type");
  }
}

template <typename T>
Json nullable(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

std::string code_to_json(const LinearCode& code) {
  Json j;
  j["q"] = code.q;
  j["n"] = code.n;
  j["rows"] = code.rows;
  j["exprs"] = code.exprs();
  return finish(j);
}

LinearCode code_from_json(std::string_view text) {
  const Json j = parse_document(text);
  LinearCode code;
  code.q = field<int>(j, "q");
  code.n = field<int>(j, "n");
  code.rows = field<std::vector<std::vector<int>>>(j, "rows");
  code.labels.assign(code.rows.size(), RowLabel{});
  try {
    check_code(code);
  } catch (const PreconditionError& e) {
    malformed(e.what());
  }
  return code;
}

std::string config_to_json(const InterlinkedConfig& cfg) {
  Json j;
  Json junctions = Json::object();
  for (int k = 1; k <= 6; ++k) junctions["v" + std::to_string(k)] = cfg.v(k);
  j["junctions"] = junctions;
  for (PathRole r : kAllRoles) {
    j[std::string(role_spec(r).name)] = cfg.path(r).vertices;
  }
  return finish(j);
}

InterlinkedConfig config_from_json(std::string_view text) {
  const Json j = parse_document(text);
  InterlinkedConfig cfg;
  const Json junctions = field<Json>(j, "junctions");
  for (int k = 1; k <= 6; ++k) {
    const std::string key = "v" + std::to_string(k);
    cfg.junctions[static_cast<std::size_t>(k - 1)] =
        field<VertexId>(junctions, key.c_str());
  }
  for (PathRole r : kAllRoles) {
    const std::string key(role_spec(r).name);
    cfg.path(r).vertices = field<std::vector<VertexId>>(j, key.c_str());
    if (cfg.path(r).vertices.empty()) malformed("path " + key + " is empty");
  }
  return cfg;
}

std::string report_to_json(const AnalysisReport& report) {
  Json j;
  j["n"] = report.n;
  if (report.removal.supported()) {
    j["r"] = report.removal.r;
    j["witness"] = report.removal.witness;
  } else {
    j["r"] = ">=3";
    j["witness"] = nullptr;
  }
  j["mais"] = nullable(report.mais);
  j["case"] = report.case_label;
  j["code_length"] = nullable(report.code_length);
  j["decodable"] = nullable(report.decodable);
  j["minrank"] = nullable(report.minrank);
  j["minrank_equals_mais"] = nullable(report.minrank_equals_mais);
  return finish(j);
}

std::string decodability_to_json(const DecodabilityReport& report) {
  Json j;
  j["decodable"] = report.all_decodable();
  Json receivers = Json::array();
  for (const auto& v : report.receivers) {
    Json r;
    r["receiver"] = v.receiver;
    r["decodable"] = v.decodable;
    if (v.counterexample) {
      r["counterexample"] = {v.counterexample->first, v.counterexample->second};
    } else {
      r["counterexample"] = nullptr;
    }
    receivers.push_back(std::move(r));
  }
  j["receivers"] = std::move(receivers);
  return finish(j);
}

std::string minrank_to_json(const MinrankResult& result) {
  Json j;
  j["minrank"] = result.value;
  j["witness"] = result.witness;
  return finish(j);
}

}  // namespace lindex
