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

#include "kpvcr/instance.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>

namespace kpvcr {

std::string_view Name(ParseErrorCode code) {
  switch (code) {
    case ParseErrorCode::kSyntax:
      return "syntax";
    case ParseErrorCode::kUnknownVertex:
      return "unknown_vertex";
    case ParseErrorCode::kDuplicateDirective:
      return "duplicate_directive";
    case ParseErrorCode::kDuplicateVertex:
      return "duplicate_vertex";
    case ParseErrorCode::kInvalidCover:
      return "invalid_cover";
  }
  return "syntax";
}

namespace {

std::string Describe(ParseErrorCode code, std::size_t line,
                     const std::string& detail) {
  std::string out(Name(code));
  if (line > 0) out += " error at line " + std::to_string(line);
  else out += " error";
  return out + ": " + detail;
}

using Tokens = std::vector<std::string_view>;

// Splits text into (line number, words) pairs, dropping comments and
// blank lines.
std::vector<std::pair<std::size_t, Tokens>> Lines(std::string_view text) {
  std::vector<std::pair<std::size_t, Tokens>> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{}
                                          : text.substr(end + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    Tokens words;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      std::size_t start = pos;
      while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos > start) words.push_back(line.substr(start, pos - start));
    }
    if (!words.empty()) out.emplace_back(number, std::move(words));
  }
  return out;
}

std::optional<long long> Integer(std::string_view s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

[[noreturn]] void Fail(ParseErrorCode code, std::size_t line,
                       const std::string& detail) {
  throw ParseError(code, line, detail);
}

long long Number(const Tokens& words, std::size_t line, long long lo,
                 long long hi) {
  if (words.size() != 2) {
    Fail(ParseErrorCode::kSyntax, line,
         "`" + std::string(words[0]) + "` takes exactly one value");
  }
  auto value = Integer(words[1]);
  if (!value || *value < lo || *value > hi) {
    Fail(ParseErrorCode::kSyntax, line,
         "bad value `" + std::string(words[1]) + "` for `" +
             std::string(words[0]) + "`");
  }
  return *value;
}

std::vector<VertexId> Ids(const Tokens& words, std::size_t line) {
  std::vector<VertexId> out;
  std::set<VertexId> seen;
  for (std::size_t i = 1; i < words.size(); ++i) {
    VertexId v;
    try {
      v = VertexId::parse(words[i]);
    } catch (const InputError&) {
      Fail(ParseErrorCode::kSyntax, line,
           "bad vertex id `" + std::string(words[i]) + "`");
    }
    if (!seen.insert(v).second) {
      Fail(ParseErrorCode::kDuplicateVertex, line,
           "vertex " + v.str() + " listed twice");
    }
    out.push_back(v);
  }
  return out;
}

std::string Join(const std::vector<VertexId>& ids) {
  std::string out;
  for (VertexId v : ids) out += " " + v.str();
  return out;
}

}  // namespace

ParseError::ParseError(ParseErrorCode code, std::size_t line,
                       const std::string& detail)
    : InputError(Describe(code, line, detail)), code_(code), line_(line) {}

CaterpillarForest Instance::forest() const {
  return CaterpillarForest::Build(spine, leaves);
}

TokenSet Instance::start_set() const {
  return TokenSet{{start.begin(), start.end()}, k};
}

TokenSet Instance::target_set() const {
  return TokenSet{{target.begin(), target.end()}, k};
}

Instance parse_instance(std::string_view text, bool validate_covers) {
  Instance out;
  std::map<std::string, std::size_t> seen;  // directive -> line
  auto lines = Lines(text);
  if (lines.empty()) Fail(ParseErrorCode::kSyntax, 0, "empty input");
  for (const auto& [line, words] : lines) {
    std::string name(words[0]);
    if (seen.empty() && name != "kpvcr") {
      Fail(ParseErrorCode::kSyntax, line, "expected header `kpvcr 1`");
    }
    if (auto it = seen.find(name); it != seen.end()) {
      Fail(ParseErrorCode::kDuplicateDirective, line,
           "`" + name + "` already given at line " +
               std::to_string(it->second));
    }
    if (name == "kpvcr") {
      if (words.size() != 2 || words[1] != "1") {
        Fail(ParseErrorCode::kSyntax, line, "unsupported format version");
      }
    } else if (name == "k") {
      out.k = static_cast<int>(Number(words, line, 2, 1 << 20));
    } else if (name == "spine") {
      out.spine = static_cast<std::uint32_t>(Number(words, line, 2, 1 << 24));
    } else if (name == "leaves") {
      for (std::size_t i = 1; i < words.size(); ++i) {
        std::string_view w = words[i];
        auto eq = w.find('=');
        auto pos = eq == std::string_view::npos ? std::nullopt
                                                : Integer(w.substr(0, eq));
        auto count = eq == std::string_view::npos ? std::nullopt
                                                  : Integer(w.substr(eq + 1));
        if (!pos || !count || *pos < 1 || *count < 0 || *pos > (1 << 24) ||
            *count > (1 << 24)) {
          Fail(ParseErrorCode::kSyntax, line,
               "bad leaf entry `" + std::string(w) + "`");
        }
        if (!out.leaves.emplace(*pos, *count).second) {
          Fail(ParseErrorCode::kSyntax, line,
               "spine position " + std::to_string(*pos) + " listed twice");
        }
      }
    } else if (name == "start") {
      out.start = Ids(words, line);
    } else if (name == "target") {
      out.target = Ids(words, line);
    } else {
      Fail(ParseErrorCode::kSyntax, line, "unknown directive `" + name + "`");
    }
    seen.emplace(name, line);
  }
  for (const char* required : {"k", "spine", "start", "target"}) {
    if (!seen.contains(required)) {
      Fail(ParseErrorCode::kSyntax, 0,
           std::string("missing directive `") + required + "`");
    }
  }
  if (seen.contains("leaves")) {
    for (auto [pos, count] : out.leaves) {
      if (pos > out.spine) {
        Fail(ParseErrorCode::kSyntax, seen["leaves"],
             "leaves on s" + std::to_string(pos) + " beyond the spine");
      }
    }
  }
  CaterpillarForest forest = out.forest();
  for (const char* side : {"start", "target"}) {
    const auto& ids = std::string(side) == "start" ? out.start : out.target;
    for (VertexId v : ids) {
      if (!forest.contains(v)) {
        Fail(ParseErrorCode::kUnknownVertex, seen[side],
             "no vertex " + v.str() + " in this caterpillar");
      }
    }
  }
  if (validate_covers) {
    if (!is_kpvc(forest, out.start_set())) {
      Fail(ParseErrorCode::kInvalidCover, seen["start"],
           "start is not a " + std::to_string(out.k) + "-path vertex cover");
    }
    if (!is_kpvc(forest, out.target_set())) {
      Fail(ParseErrorCode::kInvalidCover, seen["target"],
           "target is not a " + std::to_string(out.k) +
               "-path vertex cover");
    }
  }
  return out;
}

std::string print_instance(const Instance& instance) {
  std::ostringstream os;
  os << "kpvcr 1\nk " << instance.k << "\nspine " << instance.spine << "\n";
  if (!instance.leaves.empty()) {
    os << "leaves";
    for (auto [pos, count] : instance.leaves) os << " " << pos << "=" << count;
    os << "\n";
  }
  os << "start" << Join(instance.start) << "\n";
  os << "target" << Join(instance.target) << "\n";
  return os.str();
}

std::vector<Move> parse_witness(std::string_view text) {
  auto lines = Lines(text);
  if (lines.empty() || lines[0].second[0] != "witness") {
    Fail(ParseErrorCode::kSyntax, lines.empty() ? 0 : lines[0].first,
         "expected `witness <m>`");
  }
  const std::size_t m = static_cast<std::size_t>(
      Number(lines[0].second, lines[0].first, 0, 1LL << 40));
  std::vector<Move> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [line, words] = lines[i];
    if (words.size() != 3 || words[0] != "slide") {
      Fail(ParseErrorCode::kSyntax, line, "expected `slide <from> <to>`");
    }
    try {
      out.push_back({VertexId::parse(words[1]), VertexId::parse(words[2])});
    } catch (const InputError&) {
      Fail(ParseErrorCode::kSyntax, line, "bad vertex id in slide");
    }
  }
  if (out.size() != m) {
    Fail(ParseErrorCode::kSyntax, 0,
         "header announces " + std::to_string(m) + " slides, found " +
             std::to_string(out.size()));
  }
  return out;
}

std::string print_witness(const std::vector<Move>& moves) {
  std::ostringstream os;
  os << "witness " << moves.size() << "\n";
  for (const Move& m : moves) os << "slide " << m.from << " " << m.to << "\n";
  return os.str();
}

}  // namespace kpvcr
