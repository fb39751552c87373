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

#include "fairdom/verification.hpp"

namespace fairdom::verify {
namespace {

Limits up_to(int n) {
  Limits l;
  l.max_n = n;
  return l;
}

CorpusStream order_graphs(int n) { return detail::labeled(graphs_exhaustive(n), "graph"); }

const CheckSummary& summary(const Report& r, const std::string& id) {
  for (const CheckSummary& c : r.checks) {
    if (c.id == id) return c;
  }
  throw std::runtime_error("no check " + id);
}

TEST(Registry, IdsAreUnique) {
  std::set<std::string> suites;
  for (const Suite& s : registry()) {
    EXPECT_TRUE(suites.insert(s.id).second) << s.id;
    std::set<std::string> checks;
    for (const Check& c : s.checks) EXPECT_TRUE(checks.insert(c.id).second) << c.id;
    EXPECT_LE(s.default_max_n, s.max_supported_n);
  }
  for (const char* id : {"basic", "duality", "upper_bounds", "extremal", "trees", "mop",
                         "nordhaus_gaddum", "unions", "line_graph", "caro_wei", "regular"}) {
    EXPECT_TRUE(suites.count(id)) << id;
  }
}

TEST(Runner, DualityOnOrderFive) {
  const Report r = run_suite(find_suite("duality"), order_graphs(5), "order 5", {}, kMaxOrder);
  EXPECT_EQ(r.instances_checked, 1024U);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(summary(r, "prop1_duality").passed, 1024U);
}

TEST(Runner, Errors) {
  try {
    run_suite("no_such_suite");
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::unknown_suite);
  }
  try {
    run_suite("duality", up_to(9));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::instance_too_large);
  }
  try {
    run_suite("duality", up_to(4), 3);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::instance_too_large);
  }
}

TEST(Runner, MaxInstances) {
  Limits limits;
  limits.max_instances = 10;
  EXPECT_EQ(run_suite("basic", limits).instances_checked, 10U);
}

TEST(Runner, Deterministic) {
  Limits limits;
  limits.seed = 11;
  auto a = to_json(run_suite("unions", limits));
  auto b = to_json(run_suite("unions", limits));
  a.erase("wall_time_seconds");
  b.erase("wall_time_seconds");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Runner, SmallSuitesPass) {
  const std::vector<std::pair<std::string, int>> runs{
      {"basic", 4},    {"duality", 4},         {"upper_bounds", 5}, {"extremal", 10},
      {"trees", 6},    {"mop", 8},             {"nordhaus_gaddum", 5},
      {"line_graph", 8}, {"regular", 10},      {"caro_wei", 4}};
  for (const auto& [id, n] : runs) {
    const Report r = run_suite(id, up_to(n));
    EXPECT_TRUE(r.passed()) << id << "\n" << to_text(r);
    EXPECT_GT(r.instances_checked, 0U) << id;
  }
}

TEST(Runner, ConditionalChecksRecordNotApplicable) {
  const Suite& s = find_suite("upper_bounds");
  // C_5 plus two isolated vertices: fd = 5 = n - 2 but disconnected.
  const Graph g = disjoint_union({cycle_graph(5), empty_graph(2)});
  const Report r = run_suite(s, detail::from_vector({{"graph", g}}), "one", {}, kMaxOrder);
  EXPECT_EQ(summary(r, "prop5_rep").not_applicable, 1U);
  EXPECT_EQ(summary(r, "prop2a").not_applicable, 1U);
  EXPECT_EQ(summary(r, "prop2b").not_applicable, 1U);
  EXPECT_EQ(summary(r, "c_bound").passed, 1U);
}

TEST(Runner, UnionSharpnessFailureIsReproducible) {
  const Report r = run_suite("unions");
  ASSERT_EQ(r.failures.size(), 1U);
  const Failure& f = r.failures.front();
  EXPECT_EQ(f.check, "union_sharp_equality");
  EXPECT_EQ(f.witness, "gap=4 bound=10/2");
  EXPECT_EQ(summary(r, "union_sharp_values").passed, 1U);
  EXPECT_EQ(summary(r, "sensitivity").passed, 1U);
  EXPECT_EQ(summary(r, "union_bound").failed, 0U);
  const Outcome again = rerun_check("unions", f.check, f.graph6, f.label);
  EXPECT_EQ(again.status, Status::fail);
  EXPECT_EQ(again.witness, f.witness);
}

TEST(Runner, RerunPassingInstance) {
  EXPECT_EQ(rerun_check("basic", "ob4_closed_forms", "GhCGKC", "cycle:8").status, Status::pass);
  EXPECT_EQ(rerun_check("basic", "ob4_closed_forms", "GhCGKC", "graph").status,
            Status::not_applicable);
  EXPECT_THROW(rerun_check("basic", "nope", "Bw", "graph"), error);
}

TEST(Serialization, JsonFields) {
  const Report r = run_suite("extremal");
  const auto j = to_json(r);
  for (const char* key : {"suite", "corpus", "instances_checked", "passed", "checks",
                          "failures", "wall_time_seconds"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["suite"], "extremal");
  EXPECT_EQ(j["checks"].size(), r.checks.size());
  EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(Serialization, TextTable) {
  const std::string text = to_text(run_suite("unions"));
  EXPECT_NE(text.find("result      FAIL"), std::string::npos);
  EXPECT_NE(text.find("union_sharp_equality"), std::string::npos);
  EXPECT_NE(text.find("failures (graph6, check, label, witness):"), std::string::npos);
}

TEST(Labels, Helpers) {
  EXPECT_EQ(detail::label_payload("union:Bw;Bg", "union"), "Bw;Bg");
  EXPECT_EQ(detail::label_payload("union_sharp:Bw", "union"), std::nullopt);
  const auto edges = detail::parse_edge_text("0-5,12-3");
  ASSERT_EQ(edges.size(), 2U);
  EXPECT_EQ(edges[1], (Edge{12, 3}));
  EXPECT_EQ(detail::edge_list_text(edges), "0-5,12-3");
}

}  // namespace
}  // namespace fairdom::verify
