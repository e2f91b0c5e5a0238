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


#include <gtest/gtest.h>

#include "kpvcr/instance.hpp"
#include "test_support.hpp"

namespace kpvcr {
namespace {

using testing::L;
using testing::S;

constexpr const char* kHub = R"(kpvcr 1
# two open sides around s3
k 3
spine 5
leaves 1=2 3=3 5=2
start s1 s3 s5 l3.1 l5.1 l5.2
target s1 s3 s5 l3.1 l5.1 l5.2
)";

ParseErrorCode CodeOf(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ParseErrorCode::kSyntax;
}

std::size_t LineOf(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 9999;
}

TEST(ParseInstanceTest, HubExample) {
  Instance in = parse_instance(kHub);
  EXPECT_EQ(in.k, 3);
  EXPECT_EQ(in.spine, 5u);
  EXPECT_EQ(in.start.size(), 6u);
  EXPECT_EQ(in.leaves.at(3), 3u);
  EXPECT_EQ(in.forest().size(), 12u);
  EXPECT_TRUE(in.start_set().contains(L(5, 2)));
}

TEST(ParseInstanceTest, MissingDirective) {
  const char* text = "kpvcr 1\nspine 5\nstart s3\ntarget s3\n";
  EXPECT_EQ(CodeOf(text), ParseErrorCode::kSyntax);
  EXPECT_EQ(LineOf(text), 0u);
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("`k`"), std::string::npos);
  }
}

TEST(ParseInstanceTest, UnknownVertex) {
  const char* text = "kpvcr 1\nk 4\nspine 5\nstart s9\ntarget s3\n";
  EXPECT_EQ(CodeOf(text), ParseErrorCode::kUnknownVertex);
  EXPECT_EQ(LineOf(text), 4u);
}

TEST(ParseInstanceTest, DistinctErrorCodes) {
  EXPECT_EQ(CodeOf("kpvcr 1\nk 4\nk 5\nspine 5\nstart s3\ntarget s3\n"),
            ParseErrorCode::kDuplicateDirective);
  EXPECT_EQ(CodeOf("kpvcr 1\nk 4\nspine 5\nstart s3 s3\ntarget s3 s2\n"),
            ParseErrorCode::kDuplicateVertex);
  EXPECT_EQ(CodeOf("kpvcr 1\nk 4\nspine 6\nstart s1\ntarget s1\n"),
            ParseErrorCode::kInvalidCover);
  EXPECT_EQ(CodeOf("k 4\nkpvcr 1\nspine 5\nstart s3\ntarget s3\n"),
            ParseErrorCode::kSyntax);
  EXPECT_EQ(CodeOf("kpvcr 1\nk 4\nspine 1\nstart s1\ntarget s1\n"),
            ParseErrorCode::kSyntax);
  EXPECT_EQ(CodeOf("kpvcr 1\nk 4\nspine 5\nleaves 2=x\nstart s3\ntarget s3\n"),
            ParseErrorCode::kSyntax);
  EXPECT_EQ(CodeOf("kpvcr 1\nk 4\nspine 5\nleaves 7=1\nstart s3\ntarget s3\n"),
            ParseErrorCode::kSyntax);
  EXPECT_EQ(CodeOf("kpvcr 1\nk 4\nspine 5\nstart q3\ntarget s3\n"),
            ParseErrorCode::kSyntax);
  EXPECT_EQ(CodeOf("kpvcr 1\nk 4\nspine 5\nfoo 1\nstart s3\ntarget s3\n"),
            ParseErrorCode::kSyntax);
  EXPECT_EQ(CodeOf(""), ParseErrorCode::kSyntax);
}

TEST(ParseInstanceTest, CoverCheckCanBeSkipped) {
  auto in = parse_instance("kpvcr 1\nk 4\nspine 6\nstart s1\ntarget s1\n",
                           false);
  EXPECT_EQ(in.start, (std::vector<VertexId>{S(1)}));
}

TEST(ParseInstanceTest, ErrorNamesLine) {
  try {
    parse_instance("kpvcr 1\nk 4\nspine 5\nstart s9\ntarget s3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("unknown_vertex error at line 4", 0),
              0u);
  }
}

TEST(PrintInstanceTest, RoundTrip) {
  Instance in = parse_instance(kHub);
  std::string canonical = print_instance(in);
  EXPECT_EQ(print_instance(parse_instance(canonical)), canonical);
  EXPECT_EQ(parse_instance(canonical), in);
  EXPECT_EQ(canonical.rfind("kpvcr 1\nk 3\nspine 5\nleaves 1=2 3=3 5=2\n", 0),
            0u);
}

TEST(WitnessFormatTest, RoundTrip) {
  std::vector<Move> moves{{S(4), S(5)}, {L(5, 1), S(5)}};
  std::string text = print_witness(moves);
  EXPECT_EQ(text, "witness 2\nslide s4 s5\nslide l5.1 s5\n");
  EXPECT_EQ(parse_witness(text), moves);
  EXPECT_EQ(parse_witness("witness 0\n"), std::vector<Move>{});
}

TEST(WitnessFormatTest, Errors) {
  EXPECT_THROW(parse_witness(""), ParseError);
  EXPECT_THROW(parse_witness("witness 2\nslide s1 s2\n"), ParseError);
  EXPECT_THROW(parse_witness("witness 1\nmove s1 s2\n"), ParseError);
  EXPECT_THROW(parse_witness("witness 1\nslide s1 x2\n"), ParseError);
}

}  // namespace
}  // namespace kpvcr
