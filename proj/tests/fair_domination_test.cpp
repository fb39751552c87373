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

#include <bit>
#include <vector>

#include "fairdom/fair_domination.hpp"
#include "fairdom/generators.hpp"
#include "oracle.hpp"

namespace fairdom {
namespace {

const Graph kSpider = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});

TEST(Predicates, FairDominating) {
  const Graph p = petersen_graph();
  EXPECT_EQ(is_fair_dominating(p, p.closed_neighbors(0)), Fairness::level(1));
  EXPECT_EQ(is_fair_dominating(p, p.neighbors(0)), std::nullopt);
  EXPECT_EQ(is_fair_dominating(p, p.vertices()), Fairness::vacuous());
  EXPECT_EQ(is_fair_dominating(Graph::empty(0), VertexSet{}), Fairness::vacuous());
  EXPECT_EQ(is_fair_dominating(cycle_graph(4), VertexSet{0, 2}), Fairness::level(2));
  EXPECT_EQ(is_fair_dominating(cycle_graph(4), VertexSet{}), std::nullopt);
  EXPECT_TRUE(Fairness::vacuous().admits(7));
  EXPECT_FALSE(Fairness::level(2).admits(1));
  EXPECT_EQ(Fairness::vacuous().to_string(), "vacuous");
}

TEST(Predicates, OutRegular) {
  const Graph p = petersen_graph();
  EXPECT_EQ(is_out_regular(p, VertexSet{3}), 3);
  EXPECT_EQ(is_out_regular(empty_graph(3), VertexSet{0}), std::nullopt);
  EXPECT_EQ(is_out_regular(cycle_graph(6), VertexSet{0, 3}), 2);
  try {
    is_out_regular(p, VertexSet{});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::empty_set);
  }
}

TEST(Solvers, NamedValues) {
  const FDResult p = fd_exact(petersen_graph());
  EXPECT_EQ(p.value, 4);
  EXPECT_EQ(p.witness.bits(), 51U);  // oracle tie-break winner
  EXPECT_EQ(p.fairness, Fairness::level(1));
  EXPECT_EQ(fd_exact(cycle_graph(8)).value, 4);
  EXPECT_EQ(fd_exact(empty_graph(5)).value, 5);
  EXPECT_EQ(fd_exact(empty_graph(5)).fairness, Fairness::vacuous());
  EXPECT_EQ(fd_exact(Graph::empty(0)).value, 0);
  const Graph k5e = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
                                          {1, 4}, {2, 3}, {2, 4}});
  EXPECT_EQ(fd_exact(k5e).value, 1);
  EXPECT_EQ(fd_exact(complement(k5e)).value, 4);
}

TEST(Solvers, KFair) {
  EXPECT_EQ(kfd_exact(corona(path_graph(4)), 1).value, 4);
  EXPECT_EQ(kfd_exact(empty_graph(3), 1).value, 3);
  const FDResult c4 = kfd_exact(cycle_graph(4), 2);
  EXPECT_EQ(c4.value, 2);
  EXPECT_EQ(c4.witness, (VertexSet{0, 2}));
  // kfd reports its own k, including for the fallback V.
  const FDResult star = kfd_exact(star_graph(6), 2);
  EXPECT_EQ(star.value, 6);
  EXPECT_EQ(star.fairness, Fairness::level(2));
  EXPECT_EQ(star.mode, FDMode::kfd);
  EXPECT_EQ(to_string(star.mode, star.mode_k), "kfd(2)");
  EXPECT_THROW(kfd_exact(cycle_graph(4), 0), error);
  // Octahedron: fd_1 only via V; fd_2 = 2.
  const Graph oct = complete_multipartite(std::vector<int>{2, 2, 2});
  EXPECT_EQ(kfd_exact(oct, 1).value, 6);
  EXPECT_EQ(kfd_exact(oct, 2).value, 2);
  EXPECT_EQ(kfd_exact(oct, 4).value, 4);
}

TEST(Solvers, OutRegularNumber) {
  const FDResult p = outr_exact(petersen_graph());
  EXPECT_EQ(p.value, 6);
  EXPECT_EQ(p.witness.bits(), 189U);
  EXPECT_EQ(outr_exact(empty_graph(4)).value, 0);
  EXPECT_TRUE(outr_exact(empty_graph(4)).witness.empty());
  EXPECT_EQ(outr_exact(empty_graph(4)).fairness, std::nullopt);
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(outr_exact(complete_graph(n)).value, n - 1);
}

TEST(Solvers, MatchOracleOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_graph(1 + static_cast<int>(seed % 10), seed * 7919);
    const auto a = oracle::matrix_of(g);
    SCOPED_TRACE(seed);
    const FDResult fd = fd_exact(g);
    const auto want = oracle::fd(a);
    EXPECT_EQ(fd.value, want.value);
    EXPECT_EQ(fd.witness.bits(), want.mask);
    EXPECT_EQ(is_fair_dominating(g, fd.witness), fd.fairness);
    for (int k = 1; k <= 3; ++k) {
      const FDResult kr = kfd_exact(g, k);
      EXPECT_EQ(kr.witness.bits(), oracle::kfd(a, k).mask);
      EXPECT_LE(fd.value, kr.value);
      EXPECT_TRUE(is_fair_dominating(g, kr.witness)->admits(k));
    }
    const auto o = oracle::outr(a);
    EXPECT_EQ(outr_exact(g).value, o.value);
    EXPECT_EQ(outr_exact(g).witness.bits(), o.mask);
  }
}

TEST(Solvers, AllMinimumSetsMatchOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(7, seed);
    const auto a = oracle::matrix_of(g);
    const int c = oracle::fd(a).value;
    std::vector<VertexSet> want;
    for (std::uint64_t s = 0; s < 128; ++s) {
      if (std::popcount(s) == c && oracle::fairness(a, s) >= 0) want.emplace_back(s);
    }
    EXPECT_EQ(all_minimum_fd_sets(g), want);
  }
  EXPECT_THROW(all_minimum_fd_sets(cycle_graph(17)), error);
}

TEST(Trees, SupportVertices) {
  EXPECT_EQ(leaves(kSpider), (VertexSet{2, 4, 6}));
  EXPECT_EQ(support_vertices(kSpider), (VertexSet{1, 3, 5}));
  EXPECT_TRUE(strong_support_vertices(kSpider).empty());
  EXPECT_EQ(strong_support_vertices(star_graph(5)), VertexSet{0});
}

TEST(Trees, TreeSolver) {
  EXPECT_EQ(fd_tree(star_graph(8)).value, 1);
  EXPECT_EQ(fd_tree(corona(path_graph(4))).value, 4);
  EXPECT_EQ(fd_tree(path_graph(1)).value, 1);
  EXPECT_EQ(fd_tree(kSpider).value, 3);
  try {
    fd_tree(cycle_graph(5));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_a_tree);
  }
}

TEST(Trees, TreeSolverAgreesUpToEight) {
  for (int n = 1; n <= 8; ++n) {
    auto stream = trees_exhaustive(n);
    while (auto t = stream.next()) {
      const FDResult a = fd_exact(*t);
      const FDResult b = fd_tree(*t);
      ASSERT_EQ(a.value, b.value);
      ASSERT_EQ(a.witness, b.witness);
      ASSERT_TRUE(a.fairness->admits(1));
    }
  }
}

TEST(Trees, Corona) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph t = corona(random_tree(5, s));
    const auto pairing = is_corona_of_tree(t);
    ASSERT_TRUE(pairing.has_value());
    EXPECT_EQ(pairing->size(), 5U);
  }
  EXPECT_TRUE(is_corona_of_tree(path_graph(4)).has_value());
  EXPECT_TRUE(is_corona_of_tree(path_graph(2)).has_value());
  EXPECT_FALSE(is_corona_of_tree(path_graph(5)).has_value());
  EXPECT_FALSE(is_corona_of_tree(path_graph(6)).has_value());
  EXPECT_FALSE(is_corona_of_tree(path_graph(1)).has_value());
  EXPECT_THROW(is_corona_of_tree(cycle_graph(4)), error);
}

TEST(Trees, SpecialCoronaSubtree) {
  const auto h = find_special_corona_subtree(kSpider);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->size(), 6);
  EXPECT_FALSE(find_special_corona_subtree(star_graph(5)).has_value());
  EXPECT_THROW(find_special_corona_subtree(path_graph(2)), error);
  EXPECT_THROW(find_special_corona_subtree(path_graph(17)), error);
}

TEST(Trees, SpecialSubtreeIffBelowLeafBound) {
  for (int n = 3; n <= 8; ++n) {
    auto stream = trees_exhaustive(n);
    while (auto t = stream.next()) {
      const int gap = n - leaves(*t).size() - fd_exact(*t).value;
      ASSERT_GE(gap, 0);
      ASSERT_EQ(gap > 0, find_special_corona_subtree(*t).has_value());
    }
  }
}

TEST(Regular, Witness) {
  const RegularWitness c6 = regular_fd_witness(cycle_graph(6));
  EXPECT_LE(c6.witness.size(), 3);
  EXPECT_FALSE(c6.homogeneous_is_clique);
  const RegularWitness k4 = regular_fd_witness(complete_graph(4));
  EXPECT_EQ(k4.witness, VertexSet{0});
  EXPECT_TRUE(k4.homogeneous_is_clique);
  const RegularWitness p = regular_fd_witness(petersen_graph());
  EXPECT_EQ(p.witness.size(), 6);
  EXPECT_TRUE(is_fair_dominating(petersen_graph(), p.witness).has_value());
  EXPECT_THROW(regular_fd_witness(path_graph(4)), error);
  EXPECT_THROW(regular_fd_witness(empty_graph(4)), error);
}

TEST(Regular, WitnessAlwaysFair) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const int n = 3 + static_cast<int>(s % 10);
    const int r = 1 + static_cast<int>((s / 10) % static_cast<std::uint64_t>(n - 1));
    if ((n * r) % 2 != 0) continue;
    const Graph g = random_regular(n, r, s);
    const RegularWitness w = regular_fd_witness(g);
    EXPECT_TRUE(is_fair_dominating(g, w.witness).has_value());
    EXPECT_LE(w.witness.size(), n - w.homogeneous.size() + 1);
  }
}

TEST(LineGraph, Witnesses) {
  const Graph p = petersen_graph();
  const std::vector<Edge> spokes{{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}};
  const LineGraphWitness w = line_graph_fd_witness(p, spokes);
  EXPECT_EQ(w.witness.size(), 5);
  EXPECT_EQ(w.r, 1);
  EXPECT_EQ(is_fair_dominating(w.line.graph, w.witness), Fairness::level(2));

  const Graph c6 = cycle_graph(6);
  const LineGraphWitness all = line_graph_fd_witness(c6, c6.edges());
  EXPECT_EQ(is_fair_dominating(all.line.graph, all.witness), Fairness::vacuous());

  const Graph k4 = complete_graph(4);
  const std::vector<Edge> pm{{0, 1}, {2, 3}};
  const LineGraphWitness kw = line_graph_fd_witness(k4, pm);
  EXPECT_EQ(is_fair_dominating(kw.line.graph, kw.witness), Fairness::level(2));
  EXPECT_LE(fd_exact(kw.line.graph).value, 2);

  auto code = [&](std::vector<Edge> h) {
    try {
      line_graph_fd_witness(k4, h);
    } catch (const error& e) {
      return e.code();
    }
    return errc::parse_error;
  };
  EXPECT_EQ(code({{0, 1}}), errc::not_spanning_regular);
  EXPECT_EQ(code({{0, 1}, {1, 2}, {2, 3}}), errc::not_spanning_regular);
  EXPECT_EQ(code({}), errc::not_spanning_regular);
  EXPECT_EQ(code({{0, 4}, {2, 3}}), errc::edge_not_in_graph);
}

}  // namespace
}  // namespace fairdom
