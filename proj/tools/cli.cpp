// Copyright 2026 The kpvcr Authors
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "kpvcr/cover.hpp"
#include "kpvcr/oracle.hpp"
#include "kpvcr/planner.hpp"
#include "kpvcr/rigidity.hpp"

namespace kpvcr::cli {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteFile(path, text);
  }
}

void RefuseSmallK(const Instance& instance) {
  if (instance.k <= 3) {
    throw UnsupportedParameter(
        "k = " + std::to_string(instance.k) +
        " is not supported: the k = 3 case is open and only k >= 4 is "
        "decided (use `oracle` for small instances)");
  }
}

// Index and reason of the first broken step, if any.
std::optional<std::string> FirstViolation(const CaterpillarForest& forest,
                                          const TsSequence& seq,
                                          const TokenSet& target) {
  const int k = seq.start.k;
  if (!is_kpvc(forest, seq.start)) return "start is not a k-PVC";
  std::vector<char> occ = Occupancy(forest, seq.start.occupied);
  for (std::size_t i = 0; i < seq.moves.size(); ++i) {
    const Move& m = seq.moves[i];
    std::string where = "slide " + std::to_string(i + 1) + " (" +
                        m.from.str() + " -> " + m.to.str() + ")";
    auto a = forest.find(m.from);
    auto b = forest.find(m.to);
    if (!a || !b) return where + ": unknown vertex";
    auto nb = forest.neighbors(*a);
    if (std::find(nb.begin(), nb.end(), *b) == nb.end()) {
      return where + ": vertices are not adjacent";
    }
    if (!occ[*a]) return where + ": no token on " + m.from.str();
    if (occ[*b]) return where + ": " + m.to.str() + " already occupied";
    occ[*a] = 0;
    occ[*b] = 1;
    if (!is_kpvc(forest, occ, k)) return where + ": leaves a k-path uncovered";
  }
  if (Labels(forest, occ) != target.occupied) {
    return std::string("sequence does not end at the target");
  }
  return std::nullopt;
}

std::vector<VertexId> RandomWalk(const CaterpillarForest& forest, int k,
                                 std::vector<char> occ, std::size_t steps,
                                 std::mt19937_64& rng) {
  std::vector<int> tokens;
  for (int v = 0; v < static_cast<int>(forest.size()); ++v) {
    if (occ[v]) tokens.push_back(v);
  }
  for (std::size_t step = 0; step < steps && !tokens.empty(); ++step) {
    std::size_t t = std::uniform_int_distribution<std::size_t>(
        0, tokens.size() - 1)(rng);
    int from = tokens[t];
    auto nb = forest.neighbors(from);
    if (nb.empty()) continue;
    int to = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(
        rng)];
    if (occ[to]) continue;
    occ[from] = 0;
    occ[to] = 1;
    if (is_kpvc(forest, occ, k)) {
      tokens[t] = to;
    } else {
      occ[from] = 1;
      occ[to] = 0;
    }
  }
  std::set<VertexId> ids = Labels(forest, occ);
  return {ids.begin(), ids.end()};
}

}  // namespace

Instance generate(const GenOptions& options) {
  if (options.spine < 2) throw InputError("--spine must be at least 2");
  if (options.k < 3) throw InputError("--k must be at least 3");
  if (!(options.leaf_prob >= 0.0 && options.leaf_prob <= 1.0)) {
    throw InputError("--leaf-prob must lie in [0, 1]");
  }
  std::mt19937_64 rng(options.seed);
  std::bernoulli_distribution coin(options.leaf_prob);
  Instance out;
  out.k = options.k;
  out.spine = options.spine;
  // Each spine vertex gets up to three leaves, each present independently.
  for (std::uint32_t pos = 1; pos <= options.spine; ++pos) {
    std::uint32_t count = 0;
    for (int slot = 0; slot < 3; ++slot) count += coin(rng) ? 1 : 0;
    if (count > 0) out.leaves[pos] = count;
  }
  CaterpillarForest forest = out.forest();
  auto cover_from = [&](VertexId root) {
    std::vector<char> occ(forest.size(), 0);
    for (VertexId v : partition(forest, options.k, root).representatives) {
      occ[forest.index_of(v)] = 1;
    }
    std::vector<int> free;
    for (int v = 0; v < static_cast<int>(forest.size()); ++v) {
      if (!occ[v]) free.push_back(v);
    }
    std::shuffle(free.begin(), free.end(), rng);
    for (std::size_t i = 0; i < options.extra && i < free.size(); ++i) {
      occ[free[i]] = 1;
    }
    return occ;
  };
  const std::size_t steps = 2 * forest.size();
  std::vector<char> base = cover_from(VertexId::Spine(1));
  out.start = RandomWalk(forest, options.k, base, steps, rng);
  if (options.scramble) {
    int root = std::uniform_int_distribution<int>(
        0, static_cast<int>(forest.size()) - 1)(rng);
    base = cover_from(forest.id(root));
  }
  out.target = RandomWalk(forest, options.k, base, steps, rng);
  return out;
}

std::string export_dot(const Instance& instance) {
  CaterpillarForest forest = instance.forest();
  std::set<VertexId> start(instance.start.begin(), instance.start.end());
  std::ostringstream os;
  os << "graph kpvcr {\n  node [shape=circle];\n";
  os << "  { rank=same;";
  for (std::uint32_t i = 1; i <= instance.spine; ++i) os << " \"s" << i << "\";";
  os << " }\n";
  for (VertexId v : forest.vertices()) {
    os << "  \"" << v << "\"";
    if (start.contains(v)) os << " [style=filled, fillcolor=gray60]";
    os << ";\n";
  }
  for (std::uint32_t i = 1; i < instance.spine; ++i) {
    os << "  \"s" << i << "\" -- \"s" << i + 1 << "\" [weight=10];\n";
  }
  for (VertexId v : forest.vertices()) {
    if (!v.is_spine_label()) {
      os << "  \"s" << v.spine << "\" -- \"" << v << "\";\n";
    }
  }
  os << "}\n";
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Token sliding reconfiguration of k-path vertex covers on "
               "caterpillars"};
  app.name("kpvcr");
  app.require_subcommand(1);

  std::string file, witness_file, output;
  std::size_t max_states = kDefaultStateCap;
  GenOptions gen;

  auto* decide = app.add_subcommand("decide", "Print YES or NO");
  decide->add_option("file", file, "Instance file")->required();
  auto* witness = app.add_subcommand("witness", "Print a slide sequence");
  witness->add_option("file", file, "Instance file")->required();
  witness->add_option("-o,--output", output, "Write the witness here");
  auto* check = app.add_subcommand("check", "Validate a witness file");
  check->add_option("file", file, "Instance file")->required();
  check->add_option("witness", witness_file, "Witness file")->required();
  auto* rigid = app.add_subcommand("rigid", "Print rigid tokens of start");
  rigid->add_option("file", file, "Instance file")->required();
  auto* oracle = app.add_subcommand("oracle", "Brute-force reachability");
  oracle->add_option("file", file, "Instance file")->required();
  oracle->add_option("--max-states", max_states, "State cap")
      ->check(CLI::PositiveNumber);
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--spine", gen.spine, "Spine length")->required();
  gen_cmd->add_option("--leaf-prob", gen.leaf_prob, "Leaf probability")
      ->required();
  gen_cmd->add_option("--k", gen.k, "Path length k")->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->required();
  gen_cmd->add_flag("--scramble", gen.scramble,
                    "Sample the target independently");
  gen_cmd->add_option("--extra", gen.extra,
                      "Tokens added to the minimum cover before walking");
  gen_cmd->add_option("-o,--output", output, "Write the instance here");
  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering");
  dot->add_option("file", file, "Instance file")->required();
  dot->add_option("-o,--output", output, "Write the DOT file here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kYes : kInputError;
  }

  try {
    if (*gen_cmd) {
      Emit(print_instance(generate(gen)), output, out);
      return kYes;
    }
    const Instance instance = parse_instance(ReadFile(file));
    const CaterpillarForest forest = instance.forest();
    const TokenSet start = instance.start_set();
    const TokenSet target = instance.target_set();
    if (*decide) {
      RefuseSmallK(instance);
      bool yes = is_ts_reachable(forest, start, target);
      out << (yes ? "YES" : "NO") << "\n";
      return yes ? kYes : kNo;
    }
    if (*witness) {
      RefuseSmallK(instance);
      auto seq = build_sequence(forest, start, target);
      if (!seq) {
        out << "NO\n";
        return kNo;
      }
      Emit(print_witness(seq->moves), output, out);
      return kYes;
    }
    if (*check) {
      TsSequence seq{start, parse_witness(ReadFile(witness_file))};
      if (auto problem = FirstViolation(forest, seq, target)) {
        out << "INVALID: " << *problem << "\n";
        return kNo;
      }
      out << "VALID\n";
      return kYes;
    }
    if (*rigid) {
      RefuseSmallK(instance);
      for (VertexId v : rigid_set(forest, start).rigid) out << v << "\n";
      return kYes;
    }
    if (*oracle) {
      bool yes = start.size() == target.size() &&
                 oracle_reachable(forest, start, target, max_states);
      out << (yes ? "YES" : "NO") << "\n";
      return yes ? kYes : kNo;
    }
    if (*dot) {
      Emit(export_dot(instance), output, out);
      return kYes;
    }
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << " (" << e.states() << " states)\n";
    return kResourceError;
  } catch (const UnsupportedParameter& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace kpvcr::cli
