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

#include "lindex/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lindex/acceptance.hpp"
#include "lindex/error.hpp"
#include "lindex/generate.hpp"
#include "lindex/json_io.hpp"
#include "lindex/mais.hpp"
#include "lindex/verify.hpp"

#ifndef LINDEX_FIXTURE_DIR
#define LINDEX_FIXTURE_DIR "tests/fixtures"
#endif

namespace lindex {
namespace {

struct Flags {
  int q = 2;
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultCycleCap;
  std::uint64_t max_bruteforce = kDefaultBruteforceGuard;
  std::string out;
  std::string level = "quick";
  std::string fixtures = LINDEX_FIXTURE_DIR;
  std::string graph_path;
  std::string code_path;
  bool random = false;
  std::string structured;
  int n = 0;
  double p = 0.0;
  bool shuffle = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Flags& flags, const std::string& text, std::ostream& out) {
  if (flags.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(flags.out, std::ios::binary);
  if (!file || !(file << text)) throw Error("cannot write " + flags.out);
}

Digraph load_graph(const Flags& flags) {
  return parse_digraph(read_file(flags.graph_path));
}

PathLengths parse_lengths(const std::string& text) {
  PathLengths lengths{};
  std::stringstream ss(text);
  std::string item;
  std::size_t k = 0;
  while (std::getline(ss, item, ',')) {
    if (k == lengths.size()) throw PreconditionError("expected nine path lengths");
    try {
      std::size_t used = 0;
      lengths[k++] = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw PreconditionError("bad path length '" + item + "'");
    }
  }
  if (k != lengths.size()) throw PreconditionError("expected nine path lengths");
  return lengths;
}

int cmd_analyze(const Flags& flags, std::ostream& out) {
  const AnalysisReport report =
      check_theorem(load_graph(flags), flags.q, {flags.cap, flags.max_bruteforce});
  emit(flags, report_to_json(report), out);
  return report.removal.supported() ? kExitOk : kExitUnsupported;
}

int cmd_encode(const Flags& flags, std::ostream& out) {
  emit(flags, code_to_json(build_code(load_graph(flags), flags.q, flags.cap)), out);
  return kExitOk;
}

int cmd_config(const Flags& flags, std::ostream& out) {
  emit(flags, config_to_json(build_config(load_graph(flags), flags.cap)), out);
  return kExitOk;
}

int cmd_verify(const Flags& flags, std::ostream& out) {
  const Digraph g = load_graph(flags);
  const LinearCode code = code_from_json(read_file(flags.code_path));
  const DecodabilityReport report =
      decodability_check(g, code, flags.q, flags.max_bruteforce);
  emit(flags, decodability_to_json(report), out);
  return report.all_decodable() ? kExitOk : kExitVerificationFailed;
}

int cmd_minrank(const Flags& flags, std::ostream& out) {
  emit(flags, minrank_to_json(minrank_gf2(load_graph(flags))), out);
  return kExitOk;
}

int cmd_gen(const Flags& flags, std::ostream& out) {
  GenSpec spec;
  spec.seed = flags.seed;
  if (flags.random == !flags.structured.empty()) {
    throw PreconditionError("gen needs exactly one of --random or --structured");
  }
  if (flags.random) {
    spec.mode = GenSpec::Mode::kRandom;
    spec.n = flags.n;
    spec.p = flags.p;
  } else {
    spec.mode = GenSpec::Mode::kStructured;
    spec.lengths = parse_lengths(flags.structured);
    spec.shuffle = flags.shuffle;
  }
  emit(flags, serialize_digraph(generate(spec)) + "\n", out);
  return kExitOk;
}

int cmd_selftest(const Flags& flags, std::ostream& out) {
  AcceptanceOptions options;
  options.level = flags.level == "full" ? AcceptanceLevel::kFull
                                        : AcceptanceLevel::kQuick;
  options.fixture_dir = flags.fixtures;
  options.seed = flags.seed;
  const AcceptanceSummary summary = run_acceptance(
      options, [&](const CriterionResult& r) { out << r.line() << std::endl; });
  out << (summary.passed() ? "selftest passed" : "selftest FAILED") << "\n";
  return summary.passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Optimal linear index codes for graphs with removal number <= 2",
               "lindex"};
  app.require_subcommand(1);
  Flags flags;

  auto add_q = [&](CLI::App* sub) {
    sub->add_option("--q", flags.q, "Alphabet size")
        ->check(CLI::Range(2, 1 << 16))
        ->capture_default_str();
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap-cycles", flags.cap, "Cycle enumeration cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto add_guard = [&](CLI::App* sub) {
    sub->add_option("--max-bruteforce", flags.max_bruteforce,
                    "Largest q^n enumerated by decodability checks")
        ->capture_default_str();
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", flags.out, "Write output to a file");
  };
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", flags.graph_path, "Graph file")->required();
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Report r, MAIS, code and oracles");
  add_graph(analyze);
  add_q(analyze);
  add_cap(analyze);
  add_guard(analyze);
  add_out(analyze);

  CLI::App* encode = app.add_subcommand("encode", "Emit the constructed code");
  add_graph(encode);
  add_q(encode);
  add_cap(encode);
  add_out(encode);

  CLI::App* config = app.add_subcommand("config", "Emit the interlinked configuration");
  add_graph(config);
  add_cap(config);
  add_out(config);

  CLI::App* verify = app.add_subcommand("verify", "Check a code for decodability");
  add_graph(verify);
  verify->add_option("code", flags.code_path, "Code JSON file")->required();
  add_q(verify);
  add_guard(verify);
  add_out(verify);

  CLI::App* minrank = app.add_subcommand("minrank", "Exact GF(2) minrank");
  add_graph(minrank);
  add_out(minrank);

  CLI::App* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_flag("--random", flags.random, "Random digraph");
  gen->add_option("--structured", flags.structured,
                  "Nine path lengths B,C,D,E,F,H,I,U,W");
  gen->add_option("--n", flags.n, "Vertex count (random)");
  gen->add_option("--p", flags.p, "Arc probability (random)");
  gen->add_flag("--shuffle", flags.shuffle, "Permute vertex ids (structured)");
  gen->add_option("--seed", flags.seed, "Seed")->capture_default_str();
  add_out(gen);

  CLI::App* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--level", flags.level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  selftest->add_option("--fixtures", flags.fixtures, "Fixture directory")
      ->capture_default_str();
  selftest->add_option("--seed", flags.seed, "Seed")->capture_default_str();

  std::vector<std::string> storage{"lindex"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(flags, out);
    if (encode->parsed()) return cmd_encode(flags, out);
    if (config->parsed()) return cmd_config(flags, out);
    if (verify->parsed()) return cmd_verify(flags, out);
    if (minrank->parsed()) return cmd_minrank(flags, out);
    if (gen->parsed()) return cmd_gen(flags, out);
    if (selftest->parsed()) return cmd_selftest(flags, out);
  } catch (const UnsupportedRemovalNumber&) {
    err << "lindex: unsupported removal number >= 3\n";
    return kExitUnsupported;
  } catch (const Error& e) {
    err << "lindex: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace lindex
