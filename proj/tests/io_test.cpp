// Copyright 2026 The fairdom Authors
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

#include <string>

#include "fairdom/generators.hpp"
#include "fairdom/io.hpp"
#include "oracle.hpp"

namespace fairdom {
namespace {

errc code_of(std::string_view text) {
  try {
    parse_graph6(text);
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return errc::parse_error;
}

TEST(Graph6, GoldenPairs) {
  EXPECT_EQ(parse_graph6("Bw"), complete_graph(3));
  EXPECT_EQ(write_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(parse_graph6("Bg"), path_graph(3));
  EXPECT_EQ(parse_graph6("A?"), Graph::empty(2));
  EXPECT_EQ(parse_graph6("A_"), complete_graph(2));
  EXPECT_EQ(write_graph6(Graph::empty(0)), "?");
  EXPECT_EQ(parse_graph6("?"), Graph::empty(0));
  EXPECT_EQ(write_graph6(Graph::empty(1)), "@");
  EXPECT_EQ(write_graph6(petersen_graph()).size(), 9U);
}

TEST(Graph6, HeaderAndWhitespace) {
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), complete_graph(3));
  EXPECT_EQ(parse_graph6("  Bw \r\n"), complete_graph(3));
}

TEST(Graph6, Errors) {
  EXPECT_EQ(code_of("B!"), errc::bad_char);
  EXPECT_EQ(code_of("B\x7f"), errc::bad_char);
  EXPECT_EQ(code_of("D"), errc::truncated);
  EXPECT_EQ(code_of(""), errc::truncated);
  EXPECT_EQ(code_of("~?@?"), errc::unsupported_order);
  EXPECT_EQ(code_of("BwA"), errc::parse_error);
}

TEST(Graph6, LinesCarryLineNumber) {
  const auto gs = parse_graph6_lines("Bw\n\nBg\n");
  ASSERT_EQ(gs.size(), 2U);
  try {
    parse_graph6_lines("Bw\nBg\nD\n");
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Graph6, DecoderOracleAgrees) {
  for (int n = 1; n <= 5; ++n) {
    auto stream = graphs_exhaustive(n);
    while (auto g = stream.next()) {
      const std::string text = write_graph6(*g);
      EXPECT_EQ(oracle::decode_graph6(text), oracle::matrix_of(*g));
      EXPECT_EQ(parse_graph6(text), *g);
    }
  }
}

TEST(EdgeList, RoundTrip) {
  const Graph g = petersen_graph();
  EXPECT_EQ(parse_edge_list(write_edge_list(g)), g);
  EXPECT_EQ(parse_edge_list("# comment\n3 2\n\n0 1\n1 2\n"), path_graph(3));
  EXPECT_EQ(parse_edge_list("0 0\n"), Graph::empty(0));
}

TEST(EdgeList, Errors) {
  auto code = [](std::string_view text) {
    try {
      parse_edge_list(text);
    } catch (const error& e) {
      return std::pair{e.code(), e.line()};
    }
    return std::pair{errc::bad_char, -1};
  };
  EXPECT_EQ(code("3 1\n0 x\n"), (std::pair{errc::parse_error, 2}));
  EXPECT_EQ(code("3 1\n0 3\n"), (std::pair{errc::index_out_of_range, 2}));
  EXPECT_EQ(code("3 1\n2 2\n"), (std::pair{errc::self_loop, 2}));
  EXPECT_EQ(code("3 2\n0 1\n").first, errc::parse_error);
  EXPECT_EQ(code("63 0\n").first, errc::too_large);
  EXPECT_EQ(code("").first, errc::parse_error);
}

TEST(Dot, Shape) {
  const std::string dot = write_dot(path_graph(3), "P");
  EXPECT_EQ(dot, "graph P {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n");
}

}  // namespace
}  // namespace fairdom
