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

#include <set>
#include <string>

#include "fairdom/generators.hpp"
#include "fairdom/io.hpp"

namespace fairdom {
namespace {

errc code_of(std::string_view spec) {
  try {
    make_family(spec);
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << spec;
  return errc::parse_error;
}

std::uint64_t catalan(int k) {
  // C(2k, k) / (k + 1)
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * (2 * k - i) / (i + 1);
  return c / (k + 1);
}

template <class Stream>
std::size_t drain(Stream s, std::set<std::string>* seen = nullptr) {
  std::size_t count = 0;
  while (auto g = s.next()) {
    ++count;
    if (seen) seen->insert(write_graph6(*g));
  }
  return count;
}

TEST(Families, ClassicShapes) {
  EXPECT_EQ(make_family("path:5").size(), 4);
  EXPECT_EQ(make_family("cycle:8").size(), 8);
  EXPECT_EQ(make_family("complete:6").size(), 15);
  EXPECT_EQ(make_family("empty:4").size(), 0);
  EXPECT_EQ(make_family("complete_bipartite:3,2").size(), 6);
  EXPECT_EQ(make_family("complete_multipartite:2,2,2").size(), 12);
  EXPECT_EQ(make_family("star:6").size(), 5);
  EXPECT_EQ(make_family("star:6").degree(0), 5);
  EXPECT_EQ(make_family("corona_of:Bw"), corona(complete_graph(3)));
  EXPECT_EQ(corona(path_graph(4)).order(), 8);
}

TEST(Families, Petersen) {
  const Graph p = petersen_graph();
  EXPECT_EQ(p.order(), 10);
  EXPECT_EQ(p.size(), 15);
  EXPECT_EQ(regular_degree(p), 3);
  // Girth 5: no triangles, no 4-cycles (adjacent pairs share nothing,
  // non-adjacent pairs share exactly one neighbour).
  for (int u = 0; u < 10; ++u) {
    for (int v = u + 1; v < 10; ++v) {
      const int common = (p.neighbors(u) & p.neighbors(v)).size();
      EXPECT_EQ(common, p.adjacent(u, v) ? 0 : 1);
    }
  }
}

TEST(Families, ExtremalConstructions) {
  const Graph h4 = extremal_H(4);
  EXPECT_EQ(h4.order(), 8);
  EXPECT_TRUE(is_connected(h4));
  // x_i ~ y_j iff i >= j; x_2..x_n a clique.
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) EXPECT_EQ(h4.adjacent(i - 1, 4 + j - 1), i >= j);
  }
  EXPECT_FALSE(h4.adjacent(0, 1));
  EXPECT_TRUE(h4.adjacent(1, 3));
  const Graph f3 = extremal_F(3);
  EXPECT_EQ(f3.order(), 7);
  EXPECT_EQ(f3.neighbors(6), (VertexSet{1, 2}));
}

TEST(Families, SpecErrors) {
  EXPECT_EQ(code_of("hypercube:3"), errc::unknown_family);
  EXPECT_EQ(code_of("cycle"), errc::bad_arity);
  EXPECT_EQ(code_of("cycle:3,4"), errc::bad_arity);
  EXPECT_EQ(code_of("cycle:2"), errc::bad_range);
  EXPECT_EQ(code_of("path:0"), errc::bad_range);
  EXPECT_EQ(code_of("path:63"), errc::bad_range);
  EXPECT_EQ(code_of("cycle:x"), errc::parse_error);
  EXPECT_EQ(code_of("extremal_H:2"), errc::bad_range);
  EXPECT_EQ(code_of("petersen:1"), errc::bad_arity);
}

TEST(Families, SpecRoundTrip) {
  for (std::string s : {"cycle:8", "complete_multipartite:1,2,3", "petersen", "corona_of:Bw"}) {
    EXPECT_EQ(parse_family_spec(s).to_string(), s);
  }
}

TEST(Streams, Counts) {
  EXPECT_EQ(drain(trees_exhaustive(1)), 1U);
  EXPECT_EQ(drain(trees_exhaustive(2)), 1U);
  EXPECT_EQ(drain(trees_exhaustive(4)), 16U);
  EXPECT_EQ(drain(trees_exhaustive(6)), 1296U);
  for (int n = 3; n <= 10; ++n) {
    EXPECT_EQ(mops_exhaustive(n).count(), catalan(n - 2)) << n;
    EXPECT_EQ(drain(mops_exhaustive(n)), catalan(n - 2)) << n;
  }
  EXPECT_EQ(mops_exhaustive(6).count(), 14U);
  EXPECT_EQ(drain(graphs_exhaustive(5)), 1024U);
  EXPECT_EQ(graphs_exhaustive(6).count(), 32768U);
}

TEST(Streams, DistinctAndValid) {
  std::set<std::string> trees;
  drain(trees_exhaustive(6), &trees);
  EXPECT_EQ(trees.size(), 1296U);
  for (const auto& t : trees) EXPECT_TRUE(is_tree(parse_graph6(t)));

  std::set<std::string> mops;
  drain(mops_exhaustive(8), &mops);
  EXPECT_EQ(mops.size(), 132U);
  for (const auto& text : mops) {
    const Graph g = parse_graph6(text);
    EXPECT_EQ(g.size(), 2 * 8 - 3);
    for (int v = 0; v < 8; ++v) EXPECT_TRUE(g.adjacent(v, (v + 1) % 8));
  }
  std::set<std::string> graphs;
  drain(graphs_exhaustive(4), &graphs);
  EXPECT_EQ(graphs.size(), 64U);
}

TEST(Streams, RangeErrors) {
  EXPECT_THROW(trees_exhaustive(10), error);
  EXPECT_THROW(mops_exhaustive(2), error);
  EXPECT_THROW(mops_exhaustive(13), error);
  EXPECT_THROW(graphs_exhaustive(8), error);
}

TEST(Random, Deterministic) {
  EXPECT_EQ(random_tree(20, 7), random_tree(20, 7));
  EXPECT_EQ(random_mop(15, 7), random_mop(15, 7));
  EXPECT_EQ(random_graph(15, 7), random_graph(15, 7));
  EXPECT_EQ(random_regular(14, 5, 7), random_regular(14, 5, 7));
}

TEST(Random, TreesAndMops) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    EXPECT_TRUE(is_tree(random_tree(static_cast<int>(s % 30) + 1, s)));
  }
  std::set<std::string> all;
  drain(mops_exhaustive(7), &all);
  std::set<std::string> hit;
  for (std::uint64_t s = 0; s < 2000; ++s) {
    const std::string g = write_graph6(random_mop(7, s));
    EXPECT_TRUE(all.count(g)) << g;
    hit.insert(g);
  }
  // 42 triangulations; 2000 uniform draws miss one with probability ~1e-19.
  EXPECT_EQ(hit.size(), 42U);
}

TEST(Random, RegularGraphs) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const int n = 3 + static_cast<int>(s % 12);
    const int r = 1 + static_cast<int>(s % static_cast<std::uint64_t>(n - 1));
    if ((n * r) % 2 != 0) continue;
    EXPECT_EQ(regular_degree(random_regular(n, r, s)), r) << n << " " << r;
  }
  EXPECT_THROW(random_regular(5, 3, 0), error);
  EXPECT_THROW(random_regular(5, 5, 0), error);
}

}  // namespace
}  // namespace fairdom
