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

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fairdom/fair_domination.hpp"
#include "fairdom/generators.hpp"
#include "fairdom/graph.hpp"
#include "fairdom/invariants.hpp"
#include "fairdom/io.hpp"
#include "json.hpp"

// Suite runner: each registered suite pairs a default corpus with a list of
// named checks. A check sees one corpus item (graph plus a label that
// carries any extra structure the check needs, e.g. the parts of a disjoint
// union) and reports pass, fail with a witness payload, or not applicable.
// Both sides of every inequality come from exact solvers.

namespace fairdom::verify {

/// One corpus instance. The label is self-contained: together with the
/// graph6 text it reproduces any check outcome.
///   "graph", "tree", "mop", "regular"       plain corpus graphs
///   "<family spec>"                         e.g. "cycle:8", "extremal_H:4"
///   "union:<g6>;<g6>[;...]"                 disjoint union of the parts
///   "union_sharp:<g6>;<g6>"                 the k = 2 sharpness instance
///   "spanning:u-v,u-v,..."                  spanning regular subgraph edges
struct CorpusItem {
  std::string label;
  Graph graph;
};

/// Single-consumer instance source.
using CorpusStream = std::function<std::optional<CorpusItem>()>;

struct Limits {
  int max_n = 0;                            // 0: suite default
  std::optional<std::uint64_t> max_instances;
  std::uint64_t seed = 0;
};

enum class Status { pass, fail, not_applicable };

struct Outcome {
  Status status = Status::pass;
  std::string witness;

  static Outcome pass() { return {Status::pass, {}}; }
  static Outcome fail(std::string witness) { return {Status::fail, std::move(witness)}; }
  static Outcome not_applicable() { return {Status::not_applicable, {}}; }
  static Outcome require(bool ok, std::string witness) {
    return ok ? pass() : fail(std::move(witness));
  }
};

/// Per-instance cache of exact values, so several checks can share solver
/// runs on one graph.
class Instance {
 public:
  explicit Instance(const CorpusItem& item) : item_(item) {}

  const Graph& graph() const { return item_.graph; }
  const std::string& label() const { return item_.label; }
  int n() const { return item_.graph.order(); }
  int m() const { return item_.graph.size(); }

  const FDResult& fd() { return cached(fd_, [&] { return fd_exact(graph()); }); }
  const FDResult& outr() { return cached(outr_, [&] { return outr_exact(graph()); }); }
  const Graph& complement_graph() {
    return cached(complement_, [&] { return complement(graph()); });
  }
  const FDResult& fd_complement() {
    return cached(fd_complement_, [&] { return fd_exact(complement_graph()); });
  }
  const InvariantResult& gamma() {
    return cached(gamma_, [&] { return domination_number(graph()); });
  }
  const InvariantResult& alpha() {
    return cached(alpha_, [&] { return independence_number(graph()); });
  }
  const InvariantResult& chi() {
    return cached(chi_, [&] { return chromatic_number(graph()); });
  }
  const DegreeProfile& profile() {
    return cached(profile_, [&] { return degree_profile(graph()); });
  }
  bool connected() { return cached(connected_, [&] { return is_connected(graph()); }); }
  const std::vector<VertexSet>& minimum_fd_sets() {
    return cached(min_sets_, [&] { return all_minimum_fd_sets(graph()); });
  }

 private:
  template <class T, class Fn>
  const T& cached(std::optional<T>& slot, Fn&& fn) {
    if (!slot) slot.emplace(fn());
    return *slot;
  }

  const CorpusItem& item_;
  std::optional<FDResult> fd_;
  std::optional<FDResult> outr_;
  std::optional<Graph> complement_;
  std::optional<FDResult> fd_complement_;
  std::optional<InvariantResult> gamma_;
  std::optional<InvariantResult> alpha_;
  std::optional<InvariantResult> chi_;
  std::optional<DegreeProfile> profile_;
  std::optional<bool> connected_;
  std::optional<std::vector<VertexSet>> min_sets_;
};

struct Check {
  std::string id;
  std::string description;
  std::function<Outcome(Instance&)> evaluate;
};

struct Suite {
  std::string id;
  std::string description;
  int default_max_n = 0;
  int max_supported_n = 0;  // largest corpus order the suite's solvers accept
  std::function<CorpusStream(const Limits&, int max_n)> corpus;
  std::function<std::string(const Limits&, int max_n)> corpus_description;
  std::vector<Check> checks;
};

struct CheckSummary {
  std::string id;
  std::string description;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t not_applicable = 0;
};

struct Failure {
  std::string graph6;
  std::string label;
  std::string check;
  std::string witness;
};

struct Report {
  std::string suite;
  std::string corpus;
  std::uint64_t instances_checked = 0;
  std::vector<CheckSummary> checks;
  std::vector<Failure> failures;
  double wall_seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

// ---------------------------------------------------------------------------
// Corpus helpers

namespace detail {

inline CorpusStream from_vector(std::vector<CorpusItem> items) {
  auto shared = std::make_shared<std::vector<CorpusItem>>(std::move(items));
  auto index = std::make_shared<std::size_t>(0);
  return [shared, index]() -> std::optional<CorpusItem> {
    if (*index >= shared->size()) return std::nullopt;
    return (*shared)[(*index)++];
  };
}

inline CorpusStream concat(std::vector<CorpusStream> parts) {
  auto shared = std::make_shared<std::vector<CorpusStream>>(std::move(parts));
  auto index = std::make_shared<std::size_t>(0);
  return [shared, index]() -> std::optional<CorpusItem> {
    while (*index < shared->size()) {
      if (auto item = (*shared)[*index]()) return item;
      ++*index;
    }
    return std::nullopt;
  };
}

template <class Stream>
CorpusStream labeled(Stream stream, std::string label) {
  auto shared = std::make_shared<Stream>(std::move(stream));
  return [shared, label]() -> std::optional<CorpusItem> {
    if (auto g = shared->next()) return CorpusItem{label, std::move(*g)};
    return std::nullopt;
  };
}

/// Exhaustive labeled graphs for orders lo..hi.
inline CorpusStream all_graphs(int lo, int hi) {
  std::vector<CorpusStream> parts;
  for (int n = lo; n <= hi; ++n) parts.push_back(labeled(graphs_exhaustive(n), "graph"));
  return concat(std::move(parts));
}

inline CorpusItem family_item(const std::string& spec) { return {spec, make_family(spec)}; }

inline std::string edge_list_text(std::span<const Edge> edges) {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(edges[i].u) + "-" + std::to_string(edges[i].v);
  }
  return out;
}

inline std::vector<Edge> parse_edge_text(std::string_view text) {
  std::vector<Edge> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view field = text.substr(pos, comma - pos);
    const std::size_t dash = field.find('-');
    Edge e;
    std::from_chars(field.data(), field.data() + dash, e.u);
    std::from_chars(field.data() + dash + 1, field.data() + field.size(), e.v);
    out.push_back(e);
    pos = comma + 1;
  }
  return out;
}

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t next = text.find(sep, pos);
    out.emplace_back(text.substr(pos, next == std::string_view::npos ? text.npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

/// Label "prefix:payload" -> payload when the prefix matches.
inline std::optional<std::string_view> label_payload(std::string_view label,
                                                     std::string_view prefix) {
  if (label.size() > prefix.size() && label.starts_with(prefix) &&
      label[prefix.size()] == ':') {
    return label.substr(prefix.size() + 1);
  }
  return std::nullopt;
}

inline std::optional<FamilySpec> family_of(std::string_view label) {
  try {
    return parse_family_spec(label);
  } catch (const error&) {
    return std::nullopt;
  }
}

inline CorpusItem union_item(std::string_view prefix, std::span<const Graph> parts) {
  std::string label(prefix);
  label += ':';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) label += ';';
    label += write_graph6(parts[i]);
  }
  return {label, disjoint_union(parts)};
}

inline std::vector<Graph> union_parts(std::string_view payload) {
  std::vector<Graph> parts;
  for (const std::string& g6 : split(payload, ';')) parts.push_back(parse_graph6(g6));
  return parts;
}

inline std::string kv(std::initializer_list<std::pair<std::string_view, long long>> fields) {
  std::string out;
  for (const auto& [key, value] : fields) {
    if (!out.empty()) out += ' ';
    out += std::string(key) + "=" + std::to_string(value);
  }
  return out;
}

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Suites

namespace detail {

inline Suite basic_suite() {
  Suite s;
  s.id = "basic";
  s.description = "definitional facts and closed forms for classic families";
  s.default_max_n = 5;
  s.max_supported_n = 7;
  s.corpus = [](const Limits&, int max_n) {
    std::vector<CorpusItem> fam;
    for (int n = 1; n <= 12; ++n) fam.push_back(family_item("path:" + std::to_string(n)));
    for (int n = 3; n <= 12; ++n) fam.push_back(family_item("cycle:" + std::to_string(n)));
    for (int n = 1; n <= 8; ++n) fam.push_back(family_item("complete:" + std::to_string(n)));
    for (int n = 1; n <= 8; ++n) fam.push_back(family_item("empty:" + std::to_string(n)));
    for (int a = 1; a <= 5; ++a) {
      for (int b = 1; b <= a; ++b) {
        fam.push_back(family_item("complete_bipartite:" + std::to_string(a) + "," +
                                  std::to_string(b)));
      }
    }
    fam.push_back(family_item("petersen"));
    return concat({all_graphs(1, max_n), from_vector(std::move(fam))});
  };
  s.corpus_description = [](const Limits&, int max_n) {
    return "all labeled graphs n=1.." + std::to_string(max_n) +
           "; P_1..P_12, C_3..C_12, K_1..K_8, empty_1..empty_8, K_{a,b} 1<=b<=a<=5, Petersen";
  };
  s.checks = {
      {"ob1a_gamma_le_fd", "domination number is at most fd",
       [](Instance& I) {
         return Outcome::require(I.gamma().value <= I.fd().value,
                                 kv({{"gamma", I.gamma().value}, {"fd", I.fd().value}}));
       }},
      {"ob1b_fd_le_n", "fd <= n with equality iff the graph has no edges",
       [](Instance& I) {
         const int fd = I.fd().value;
         return Outcome::require(fd <= I.n() && ((fd == I.n()) == (I.m() == 0)),
                                 kv({{"fd", fd}, {"n", I.n()}, {"m", I.m()}}));
       }},
      {"ob2_outr_zero_iff_edgeless", "outr >= 0 with equality iff the graph has no edges",
       [](Instance& I) {
         const int outr = I.outr().value;
         return Outcome::require(outr >= 0 && ((outr == 0) == (I.m() == 0)),
                                 kv({{"outr", outr}, {"m", I.m()}}));
       }},
      {"ob3_pd_set", "a perfect dominating set forces gamma = fd_1 = fd",
       [](Instance& I) {
         if (!find_perfect_dominating_set(I.graph())) return Outcome::not_applicable();
         const int fd1 = kfd_exact(I.graph(), 1).value;
         return Outcome::require(I.gamma().value == fd1 && fd1 == I.fd().value,
                                 kv({{"gamma", I.gamma().value}, {"fd1", fd1},
                                     {"fd", I.fd().value}}));
       }},
      {"ob4_closed_forms", "fd of paths, cycles, complete, edgeless and complete bipartite graphs",
       [](Instance& I) {
         const auto fam = family_of(I.label());
         if (!fam) return Outcome::not_applicable();
         const int n = I.n();
         const int fd = I.fd().value;
         const int gamma = I.gamma().value;
         const std::string w = kv({{"n", n}, {"fd", fd}, {"gamma", gamma}});
         switch (fam->family) {
           case Family::path:
             return Outcome::require(fd == gamma && gamma == ceil_div(n, 3), w);
           case Family::cycle: {
             const int bump = (n % 3 == 2 && n >= 5) ? 1 : 0;
             return Outcome::require(gamma == ceil_div(n, 3) && fd == gamma + bump, w);
           }
           case Family::complete:
             return Outcome::require(fd == 1 && gamma == 1, w);
           case Family::empty:
             return Outcome::require(fd == n && gamma == n, w);
           case Family::complete_bipartite: {
             const bool both_big = std::min(fam->params[0], fam->params[1]) >= 2;
             return Outcome::require(fd == gamma && (!both_big || gamma == 2), w);
           }
           default:
             return Outcome::not_applicable();
         }
       }},
  };
  return s;
}

inline Suite duality_suite() {
  Suite s;
  s.id = "duality";
  s.description = "fd + outr = n and complement bounds";
  s.default_max_n = 6;
  s.max_supported_n = 7;
  s.corpus = [](const Limits&, int max_n) { return all_graphs(2, max_n); };
  s.corpus_description = [](const Limits&, int max_n) {
    return "all labeled graphs n=2.." + std::to_string(max_n);
  };
  s.checks = {
      {"prop1_duality", "fd + outr = n for n >= 2",
       [](Instance& I) {
         if (I.n() < 2) return Outcome::not_applicable();
         return Outcome::require(I.fd().value + I.outr().value == I.n(),
                                 kv({{"fd", I.fd().value}, {"outr", I.outr().value},
                                     {"n", I.n()}}));
       }},
      {"thm_gbar_a", "connected G with connected complement: fd(G) = fd(complement)",
       [](Instance& I) {
         if (I.n() < 2 || !I.connected() || !is_connected(I.complement_graph())) {
           return Outcome::not_applicable();
         }
         return Outcome::require(I.fd().value == I.fd_complement().value,
                                 kv({{"fd", I.fd().value}, {"fd_bar", I.fd_complement().value}}));
       }},
      {"thm_gbar_b", "connected G whose complement has q >= 2 components: fd <= n/q",
       [](Instance& I) {
         if (I.n() < 2 || !I.connected()) return Outcome::not_applicable();
         const int q = static_cast<int>(components(I.complement_graph()).size());
         if (q < 2) return Outcome::not_applicable();
         return Outcome::require(q * I.fd().value <= I.n(),
                                 kv({{"fd", I.fd().value}, {"q", q}, {"n", I.n()}}));
       }},
  };
  return s;
}

inline CorpusStream random_regular_items(std::uint64_t seed, int count, int lo, int hi,
                                         int min_degree) {
  std::vector<CorpusItem> items;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  while (static_cast<int>(items.size()) < count) {
    const int n = std::uniform_int_distribution<int>(lo, hi)(rng);
    const int r = std::uniform_int_distribution<int>(min_degree, n - 1)(rng);
    if ((n * r) % 2 != 0) continue;
    items.push_back({"regular", random_regular(n, r, rng())});
  }
  return from_vector(std::move(items));
}

inline Suite upper_bounds_suite() {
  Suite s;
  s.id = "upper_bounds";
  s.description = "fd <= n-2 and the degree/chromatic upper bounds";
  s.default_max_n = 6;
  s.max_supported_n = 7;
  s.corpus = [](const Limits& limits, int max_n) {
    return concat({all_graphs(1, max_n), random_regular_items(limits.seed, 60, 4, 12, 1),
                   from_vector({family_item("extremal_H:3"), family_item("extremal_F:3"),
                                family_item("petersen")})});
  };
  s.corpus_description = [](const Limits& limits, int max_n) {
    return "all labeled graphs n=1.." + std::to_string(max_n) +
           "; 60 random regular graphs n=4..12 (seed " + std::to_string(limits.seed) +
           "); extremal_H:3, extremal_F:3, Petersen";
  };
  s.checks = {
      {"thm_n2_upper", "n >= 3 and no isolated vertex: fd <= n - 2",
       [](Instance& I) {
         if (I.n() < 3 || I.profile().min_degree < 1) return Outcome::not_applicable();
         return Outcome::require(I.fd().value <= I.n() - 2,
                                 kv({{"fd", I.fd().value}, {"n", I.n()}}));
       }},
      {"c_bound", "size >= 2: fd <= n - 2; size 1: fd = n - 1",
       [](Instance& I) {
         const std::string w = kv({{"fd", I.fd().value}, {"n", I.n()}, {"m", I.m()}});
         if (I.m() >= 2) return Outcome::require(I.fd().value <= I.n() - 2, w);
         if (I.m() == 1) return Outcome::require(I.fd().value == I.n() - 1, w);
         return Outcome::not_applicable();
       }},
      {"prop2a", "n >= 2, no isolated vertex: fd <= n - n/((avg+1) max_degree)",
       [](Instance& I) {
         if (I.n() < 2 || I.profile().min_degree < 1) return Outcome::not_applicable();
         const long long n = I.n();
         const long long m = I.m();
         const long long big = I.profile().max_degree;
         const long long fd = I.fd().value;
         // fd <= n - n^2 / ((2m + n) * max_degree)
         const long long den = (2 * m + n) * big;
         return Outcome::require(fd * den <= n * den - n * n,
                                 kv({{"fd", fd}, {"n", n}, {"m", m}, {"max_degree", big}}));
       }},
      {"prop2b", "no isolated vertex: fd <= n - n/((2 avg - 2 min_degree + 1) chi)",
       [](Instance& I) {
         if (I.n() < 1 || I.profile().min_degree < 1) return Outcome::not_applicable();
         const long long n = I.n();
         const long long m = I.m();
         const long long delta = I.profile().min_degree;
         const long long chi = I.chi().value;
         const long long fd = I.fd().value;
         // fd <= n - n^2 / ((4m - 2 delta n + n) * chi)
         const long long den = (4 * m - 2 * delta * n + n) * chi;
         return Outcome::require(fd * den <= n * den - n * n,
                                 kv({{"fd", fd}, {"n", n}, {"m", m}, {"min_degree", delta},
                                     {"chi", chi}}));
       }},
      {"prop2c", "r-regular with r >= 2: fd <= rn/(r+1)",
       [](Instance& I) {
         const auto r = regular_degree(I.graph());
         if (!r || *r < 2) return Outcome::not_applicable();
         return Outcome::require(I.fd().value * (*r + 1) <= *r * I.n(),
                                 kv({{"fd", I.fd().value}, {"r", *r}, {"n", I.n()}}));
       }},
      {"prop5_rep", "connected, n >= 6, fd = n - 2: 2 <= rep <= 4",
       [](Instance& I) {
         if (I.n() < 6 || !I.connected() || I.fd().value != I.n() - 2) {
           return Outcome::not_applicable();
         }
         const int rep = I.profile().rep;
         return Outcome::require(rep >= 2 && rep <= 4, kv({{"rep", rep}, {"n", I.n()}}));
       }},
  };
  return s;
}

inline Suite extremal_suite() {
  Suite s;
  s.id = "extremal";
  s.description = "graphs attaining fd = n - 2";
  s.default_max_n = 10;
  s.max_supported_n = 24;
  s.corpus = [](const Limits&, int max_n) {
    std::vector<CorpusItem> items;
    for (int k = 3; 2 * k <= max_n && k <= 31; ++k) {
      items.push_back(family_item("extremal_H:" + std::to_string(k)));
    }
    for (int k = 3; 2 * k + 1 <= max_n && k <= 30; ++k) {
      items.push_back(family_item("extremal_F:" + std::to_string(k)));
    }
    for (int n = 3; n <= 5; ++n) items.push_back(family_item("cycle:" + std::to_string(n)));
    return from_vector(std::move(items));
  };
  s.corpus_description = [](const Limits&, int max_n) {
    return "extremal_H:k, extremal_F:k of order <= " + std::to_string(max_n) +
           "; C_3, C_4, C_5";
  };
  s.checks = {
      {"extremal_H_value", "fd(H_k) = 2k - 2 and the stated degrees",
       [](Instance& I) {
         const auto fam = family_of(I.label());
         if (!fam || fam->family != Family::extremal_H) return Outcome::not_applicable();
         const int k = fam->params[0];
         bool degrees_ok = I.graph().degree(0) == 1;
         for (int i = 2; i <= k; ++i) degrees_ok &= I.graph().degree(i - 1) == i + k - 2;
         for (int i = 1; i <= k; ++i) degrees_ok &= I.graph().degree(k + i - 1) == k - i + 1;
         return Outcome::require(degrees_ok && I.fd().value == 2 * k - 2 && I.connected(),
                                 kv({{"k", k}, {"fd", I.fd().value},
                                     {"degrees_ok", degrees_ok}}));
       }},
      {"extremal_F_value", "fd(F_k) = 2k - 1",
       [](Instance& I) {
         const auto fam = family_of(I.label());
         if (!fam || fam->family != Family::extremal_F) return Outcome::not_applicable();
         const int k = fam->params[0];
         return Outcome::require(I.fd().value == 2 * k - 1 && I.connected(),
                                 kv({{"k", k}, {"fd", I.fd().value}}));
       }},
      {"small_cycles_sharp", "C_n attains n - 2 for n = 3, 4, 5",
       [](Instance& I) {
         const auto fam = family_of(I.label());
         if (!fam || fam->family != Family::cycle) return Outcome::not_applicable();
         return Outcome::require(I.fd().value == I.n() - 2,
                                 kv({{"n", I.n()}, {"fd", I.fd().value}}));
       }},
  };
  return s;
}

inline Suite trees_suite() {
  Suite s;
  s.id = "trees";
  s.description = "fd of trees: n/2 bound, corona equality, leaf bound, characterization";
  s.default_max_n = 8;
  s.max_supported_n = 9;
  s.corpus = [](const Limits&, int max_n) {
    std::vector<CorpusStream> parts;
    for (int n = 2; n <= max_n; ++n) parts.push_back(labeled(trees_exhaustive(n), "tree"));
    return concat(std::move(parts));
  };
  s.corpus_description = [](const Limits&, int max_n) {
    return "all labeled trees n=2.." + std::to_string(max_n);
  };
  s.checks = {
      {"thm_half", "fd(T) <= n/2 with equality iff T is the corona of a tree",
       [](Instance& I) {
         const bool corona = is_corona_of_tree(I.graph()).has_value();
         const int fd = I.fd().value;
         return Outcome::require(2 * fd <= I.n() && ((2 * fd == I.n()) == corona),
                                 kv({{"fd", fd}, {"n", I.n()}, {"corona", corona}}));
       }},
      {"fd_tree_agrees", "the tree solver matches the general solver (value and witness)",
       [](Instance& I) {
         const FDResult t = fd_tree(I.graph());
         return Outcome::require(t.value == I.fd().value && t.witness == I.fd().witness,
                                 "fd=" + std::to_string(I.fd().value) + " fd_tree=" +
                                     std::to_string(t.value) + " " + t.witness.to_string());
       }},
      {"min_fd_sets_are_1fd", "every minimum FD-set of a tree is a 1FD-set",
       [](Instance& I) {
         for (VertexSet d : I.minimum_fd_sets()) {
           const auto f = is_fair_dominating(I.graph(), d);
           if (!f || !f->admits(1)) return Outcome::fail(d.to_string());
         }
         return Outcome::pass();
       }},
      {"strong_supports_forced", "minimum 1FD-sets contain every strong support vertex",
       [](Instance& I) {
         const VertexSet strong = strong_support_vertices(I.graph());
         for (VertexSet d : I.minimum_fd_sets()) {
           if (!strong.is_subset_of(d)) {
             return Outcome::fail(d.to_string() + " misses " + (strong - d).to_string());
           }
         }
         return Outcome::pass();
       }},
      {"leaf_bound", "n >= 3: fd <= n - leaves",
       [](Instance& I) {
         if (I.n() < 3) return Outcome::not_applicable();
         const int l = leaves(I.graph()).size();
         return Outcome::require(I.fd().value <= I.n() - l,
                                 kv({{"fd", I.fd().value}, {"n", I.n()}, {"leaves", l}}));
       }},
      {"char_tree_equiv", "fd < n - leaves <=> every fd-set leaves an adjacent pair outside <=> a "
                    "special corona-subtree exists",
       [](Instance& I) {
         if (I.n() < 3) return Outcome::not_applicable();
         const Graph& t = I.graph();
         const bool c1 = I.fd().value < I.n() - leaves(t).size();
         bool c2 = true;
         for (VertexSet d : I.minimum_fd_sets()) {
           c2 &= !is_independent(t, d.complement_in(I.n()));
         }
         const auto special = find_special_corona_subtree(t);
         const bool c3 = special.has_value();
         return Outcome::require(c1 == c2 && c2 == c3,
                                 kv({{"i", c1}, {"ii", c2}, {"iii", c3}}) +
                                     (special ? " H=" + special->to_string() : ""));
       }},
      {"char_treec", "fd = n - leaves <=> some fd-set has independent complement <=> no "
                     "special corona-subtree",
       [](Instance& I) {
         if (I.n() < 3) return Outcome::not_applicable();
         const Graph& t = I.graph();
         const bool c1 = I.fd().value == I.n() - leaves(t).size();
         bool c2 = false;
         for (VertexSet d : I.minimum_fd_sets()) {
           c2 |= is_independent(t, d.complement_in(I.n()));
         }
         const bool c3 = !find_special_corona_subtree(t).has_value();
         return Outcome::require(c1 == c2 && c2 == c3, kv({{"i", c1}, {"ii", c2}, {"iii", c3}}));
       }},
      {"corona_partition", "coronas: supports and leaves are both 1FD-sets of size n/2",
       [](Instance& I) {
         const auto pairing = is_corona_of_tree(I.graph());
         if (!pairing) return Outcome::not_applicable();
         VertexSet supports;
         VertexSet leafs;
         for (const auto& [s, l] : *pairing) {
           supports = supports.with(s);
           leafs = leafs.with(l);
         }
         const auto fs = is_fair_dominating(I.graph(), supports);
         const auto fl = is_fair_dominating(I.graph(), leafs);
         const bool ok = fs && fl && fs->admits(1) && fl->admits(1) &&
                         2 * supports.size() == I.n() && 2 * leafs.size() == I.n() &&
                         2 * I.fd().value == I.n();
         return Outcome::require(ok, supports.to_string() + " " + leafs.to_string());
       }},
      {"gamma2_bound", "2-domination number of a tree is at least ceil((n+1)/2)",
       [](Instance& I) {
         const int g2 = k_domination_number(I.graph(), 2).value;
         return Outcome::require(2 * g2 >= I.n() + 1, kv({{"gamma2", g2}, {"n", I.n()}}));
       }},
  };
  return s;
}

/// Every vertex neighbourhood induces a path.
inline bool neighborhoods_are_paths(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    const Graph h = induced_subgraph(g, g.neighbors(v)).graph;
    if (!is_tree(h)) return false;
    for (int u = 0; u < h.order(); ++u) {
      if (h.degree(u) > 2) return false;
    }
  }
  return true;
}

inline bool is_two_degenerate(const Graph& g) {
  VertexSet alive = g.vertices();
  while (!alive.empty()) {
    bool removed = false;
    for (int v : alive) {
      if ((g.neighbors(v) & alive).size() <= 2) {
        alive = alive.without(v);
        removed = true;
        break;
      }
    }
    if (!removed) return false;
  }
  return true;
}

inline Suite mop_suite() {
  Suite s;
  s.id = "mop";
  s.description = "maximal outerplanar graphs: degree-3 bipartiteness and fd < 17n/19";
  s.default_max_n = 10;
  s.max_supported_n = 12;
  s.corpus = [](const Limits&, int max_n) {
    std::vector<CorpusStream> parts;
    for (int n = 3; n <= max_n; ++n) parts.push_back(labeled(mops_exhaustive(n), "mop"));
    return concat(std::move(parts));
  };
  s.corpus_description = [](const Limits&, int max_n) {
    return "all triangulations of the convex n-gon, n=3.." + std::to_string(max_n);
  };
  s.checks = {
      {"lemma_bip", "degree-3 vertices induce a bipartite graph",
       [](Instance& I) {
         VertexSet three;
         for (int v = 0; v < I.n(); ++v) {
           if (I.graph().degree(v) == 3) three = three.with(v);
         }
         return Outcome::require(is_bipartite(induced_subgraph(I.graph(), three).graph),
                                 "degree3=" + three.to_string());
       }},
      {"fd_17_19", "fd < 17n/19",
       [](Instance& I) {
         return Outcome::require(19 * I.fd().value < 17 * I.n(),
                                 kv({{"fd", I.fd().value}, {"n", I.n()}}));
       }},
      {"mop_structure", "2n-3 edges, min degree 2, independent degree-2 vertices (n >= 4), "
                        "path neighbourhoods, 2-degenerate",
       [](Instance& I) {
         const Graph& g = I.graph();
         VertexSet two;
         for (int v = 0; v < I.n(); ++v) {
           if (g.degree(v) == 2) two = two.with(v);
         }
         const bool edges_ok = I.m() == 2 * I.n() - 3;
         const bool delta_ok = I.profile().min_degree == 2;
         const bool indep_ok = I.n() < 4 || is_independent(g, two);
         const bool nbhd_ok = neighborhoods_are_paths(g);
         const bool degen_ok = is_two_degenerate(g);
         return Outcome::require(edges_ok && delta_ok && indep_ok && nbhd_ok && degen_ok,
                                 kv({{"edges", edges_ok}, {"min_degree", delta_ok},
                                     {"deg2_independent", indep_ok},
                                     {"path_nbhds", nbhd_ok}, {"2_degenerate", degen_ok}}));
       }},
      {"mop_3_colorable", "chi <= 3",
       [](Instance& I) {
         return Outcome::require(I.chi().value <= 3, kv({{"chi", I.chi().value}}));
       }},
  };
  return s;
}

inline bool is_complete(const Graph& g) { return g.size() * 2 == g.order() * (g.order() - 1); }

inline Suite nordhaus_gaddum_suite() {
  Suite s;
  s.id = "nordhaus_gaddum";
  s.description = "joint bounds on fd(G) and fd(complement)";
  s.default_max_n = 6;
  s.max_supported_n = 7;
  s.corpus = [](const Limits&, int max_n) { return all_graphs(3, max_n); };
  s.corpus_description = [](const Limits&, int max_n) {
    return "all labeled graphs n=3.." + std::to_string(max_n);
  };
  s.checks = {
      {"ng_sum", "n >= 5: 3 <= fd + fd(complement) <= 2n - 4",
       [](Instance& I) {
         if (I.n() < 5) return Outcome::not_applicable();
         const int sum = I.fd().value + I.fd_complement().value;
         return Outcome::require(sum >= 3 && sum <= 2 * I.n() - 4,
                                 kv({{"fd", I.fd().value}, {"fd_bar", I.fd_complement().value}}));
       }},
      {"ng_product", "n >= 4: 2 <= fd * fd(complement) <= (n-2)^2",
       [](Instance& I) {
         if (I.n() < 4) return Outcome::not_applicable();
         const int prod = I.fd().value * I.fd_complement().value;
         return Outcome::require(prod >= 2 && prod <= (I.n() - 2) * (I.n() - 2),
                                 kv({{"fd", I.fd().value}, {"fd_bar", I.fd_complement().value}}));
       }},
      {"ng_sum_boundary_K4", "K_4: fd + fd(complement) = 5 > 2n - 4",
       [](Instance& I) {
         if (I.n() != 4 || !is_complete(I.graph())) return Outcome::not_applicable();
         const int sum = I.fd().value + I.fd_complement().value;
         return Outcome::require(sum == 5 && sum > 2 * I.n() - 4, kv({{"sum", sum}}));
       }},
      {"ng_product_boundary_K3", "K_3: fd * fd(complement) = 3 > (n-2)^2",
       [](Instance& I) {
         if (I.n() != 3 || !is_complete(I.graph())) return Outcome::not_applicable();
         const int prod = I.fd().value * I.fd_complement().value;
         return Outcome::require(prod == 3 && prod > 1, kv({{"product", prod}}));
       }},
  };
  return s;
}

/// Vertices u2, v2 of the size-2 part of K_{2,n-1,n-1} inside the sharpness
/// instance: the second block starts after the star.
inline Edge sharpness_edge(const std::vector<Graph>& parts) {
  const int offset = parts.at(0).order();
  return {offset, offset + 1};
}

inline Suite unions_suite() {
  Suite s;
  s.id = "unions";
  s.description = "fd of disjoint unions: upper bound, k = 2 sharpness, edge sensitivity";
  s.default_max_n = 12;
  s.max_supported_n = 16;
  s.corpus = [](const Limits& limits, int max_n) {
    std::vector<CorpusItem> items;
    std::mt19937_64 rng(limits.seed ^ 0x5851f42d4c957f2dULL);
    while (items.size() < 200) {
      const int k = std::uniform_int_distribution<int>(2, 3)(rng);
      std::vector<Graph> parts;
      int total = 0;
      for (int i = 0; i < k; ++i) {
        const int n = std::uniform_int_distribution<int>(1, 4)(rng);
        parts.push_back(random_graph(n, rng()));
        total += n;
      }
      if (total > max_n) continue;
      items.push_back(union_item("union", parts));
    }
    if (max_n >= 12) {
      const std::vector<Graph> sharp{star_graph(6),
                                     complete_multipartite(std::vector<int>{2, 2, 2})};
      items.push_back(union_item("union_sharp", sharp));
    }
    return from_vector(std::move(items));
  };
  s.corpus_description = [](const Limits& limits, int max_n) {
    return "200 random unions of 2-3 G(n,1/2) parts of order 1..4, total <= " +
           std::to_string(max_n) + " (seed " + std::to_string(limits.seed) +
           "); K_{1,5} + K_{2,2,2}";
  };
  s.checks = {
      {"union_bound", "k(fd(H) - sum fd(G_i)) <= (k-1)(n-k)",
       [](Instance& I) {
         auto payload = label_payload(I.label(), "union");
         if (!payload) payload = label_payload(I.label(), "union_sharp");
         if (!payload) return Outcome::not_applicable();
         const auto parts = union_parts(*payload);
         int sum = 0;
         for (const Graph& p : parts) sum += fd_exact(p).value;
         const int k = static_cast<int>(parts.size());
         const int gap = I.fd().value - sum;
         return Outcome::require(k * gap <= (k - 1) * (I.n() - k),
                                 kv({{"fd", I.fd().value}, {"sum_parts", sum}, {"k", k},
                                     {"n", I.n()}}));
       }},
      {"union_sharp_values", "fd(K_{1,5}) = 1, fd(K_{2,2,2}) = 2, fd(union) = 7",
       [](Instance& I) {
         const auto payload = label_payload(I.label(), "union_sharp");
         if (!payload) return Outcome::not_applicable();
         const auto parts = union_parts(*payload);
         const int f1 = fd_exact(parts[0]).value;
         const int f2 = fd_exact(parts[1]).value;
         const int quarter = I.n() / 4;  // order is 4n' for the parameter n'
         return Outcome::require(f1 == 1 && f2 == 2 && I.fd().value == 2 * quarter + 1,
                                 kv({{"fd_G1", f1}, {"fd_G2", f2}, {"fd_H", I.fd().value}}));
       }},
      {"union_sharp_equality", "the k = 2 instance attains (k-1)(n-k)/k exactly",
       [](Instance& I) {
         const auto payload = label_payload(I.label(), "union_sharp");
         if (!payload) return Outcome::not_applicable();
         const auto parts = union_parts(*payload);
         const int sum = fd_exact(parts[0]).value + fd_exact(parts[1]).value;
         const int gap = I.fd().value - sum;
         // bound is (k-1)(n-k)/k with k = 2
         return Outcome::require(2 * gap == I.n() - 2,
                                 "gap=" + std::to_string(gap) + " bound=" +
                                     std::to_string(I.n() - 2) + "/2");
       }},
      {"sensitivity", "adding u2v2 to the k = 2 instance drops fd to 2, a change >= n/2 - 1",
       [](Instance& I) {
         const auto payload = label_payload(I.label(), "union_sharp");
         if (!payload) return Outcome::not_applicable();
         const Edge e = sharpness_edge(union_parts(*payload));
         const int after = fd_exact(add_edge(I.graph(), e)).value;
         const int change = I.fd().value - after;
         return Outcome::require(after == 2 && 2 * change >= I.n() - 2,
                                 kv({{"fd_before", I.fd().value}, {"fd_after", after}}));
       }},
  };
  return s;
}

inline CorpusItem spanning_item(const Graph& g, const std::vector<Edge>& h) {
  return {"spanning:" + edge_list_text(h), g};
}

inline Suite line_graph_suite() {
  Suite s;
  s.id = "line_graph";
  s.description = "spanning r-regular subgraphs give 2r-fair dominating sets of line graphs";
  s.default_max_n = 10;
  s.max_supported_n = 62;
  s.corpus = [](const Limits&, int max_n) {
    std::vector<CorpusItem> items;
    const Graph petersen = petersen_graph();
    std::vector<Edge> spokes;
    std::vector<Edge> two_factor;
    for (int i = 0; i < 5; ++i) {
      spokes.push_back({i, i + 5});
      two_factor.push_back({i, (i + 1) % 5});
      two_factor.push_back({5 + i, 5 + (i + 2) % 5});
    }
    items.push_back(spanning_item(petersen, spokes));
    items.push_back(spanning_item(petersen, two_factor));
    items.push_back(spanning_item(complete_graph(4), {{0, 1}, {2, 3}}));
    items.push_back(spanning_item(complete_graph(5), {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}));
    items.push_back(spanning_item(complete_bipartite(3, 3), {{0, 3}, {1, 4}, {2, 5}}));
    for (int n = 4; n <= max_n; n += 2) {
      std::vector<Edge> matching;
      for (int i = 0; i < n; i += 2) matching.push_back({i, i + 1});
      items.push_back(spanning_item(cycle_graph(n), matching));
    }
    for (int n = 3; n <= max_n; ++n) {
      const Graph c = cycle_graph(n);
      items.push_back(spanning_item(c, c.edges()));
    }
    return from_vector(std::move(items));
  };
  s.corpus_description = [](const Limits&, int max_n) {
    return "Petersen (perfect matching, 2-factor), K_4, K_5, K_{3,3}, C_4..C_" +
           std::to_string(max_n) + " perfect matchings, C_3..C_" + std::to_string(max_n) +
           " as 2-factors";
  };
  s.checks = {
      {"line_witness_fair", "E(H) is a 2r-fair dominating set of L(G) (vacuous when H = G)",
       [](Instance& I) {
         const auto payload = label_payload(I.label(), "spanning");
         if (!payload) return Outcome::not_applicable();
         const auto h = parse_edge_text(*payload);
         const LineGraphWitness w = line_graph_fd_witness(I.graph(), h);
         const auto f = is_fair_dominating(w.line.graph, w.witness);
         const bool whole = w.witness == w.line.graph.vertices();
         const bool ok = f && (whole ? f->is_vacuous() : f->k() == 2 * w.r);
         return Outcome::require(ok, "r=" + std::to_string(w.r) + " fairness=" +
                                         (f ? f->to_string() : "none"));
       }},
      {"line_fd_bound", "fd(L(G)) <= |E(H)|",
       [](Instance& I) {
         const auto payload = label_payload(I.label(), "spanning");
         if (!payload) return Outcome::not_applicable();
         const auto h = parse_edge_text(*payload);
         const LineGraphWitness w = line_graph_fd_witness(I.graph(), h);
         const int fd = fd_exact(w.line.graph).value;
         return Outcome::require(fd <= w.witness.size(),
                                 kv({{"fd_line", fd}, {"size_H", w.witness.size()}}));
       }},
  };
  return s;
}

inline Suite regular_suite() {
  Suite s;
  s.id = "regular";
  s.description = "FD-sets of regular graphs from a largest independent set or clique";
  s.default_max_n = 14;
  s.max_supported_n = 30;
  s.corpus = [](const Limits& limits, int max_n) {
    return concat({random_regular_items(limits.seed, 200, 3, max_n, 1),
                   from_vector({family_item("petersen"), family_item("complete:4"),
                                family_item("cycle:6")})});
  };
  s.corpus_description = [](const Limits& limits, int max_n) {
    return "200 random r-regular graphs (r >= 1) n=3.." + std::to_string(max_n) + " (seed " +
           std::to_string(limits.seed) + "); Petersen, K_4, C_6";
  };
  s.checks = {
      {"prop4_witness", "construction yields an FD-set of size <= n - |X| + 1",
       [](Instance& I) {
         const RegularWitness w = regular_fd_witness(I.graph());
         const auto f = is_fair_dominating(I.graph(), w.witness);
         return Outcome::require(f && w.witness.size() <= I.n() - w.homogeneous.size() + 1,
                                 "witness=" + w.witness.to_string() +
                                     " X=" + w.homogeneous.to_string());
       }},
      {"prop2c", "r >= 2: fd <= rn/(r+1)",
       [](Instance& I) {
         const auto r = regular_degree(I.graph());
         if (!r || *r < 2) return Outcome::not_applicable();
         return Outcome::require(I.fd().value * (*r + 1) <= *r * I.n(),
                                 kv({{"fd", I.fd().value}, {"r", *r}, {"n", I.n()}}));
       }},
  };
  return s;
}

inline std::vector<Check> caro_checks() {
  return {
      {"caro_wei", "independence number >= n/(avg+1)",
       [](Instance& I) {
         if (I.n() < 1) return Outcome::not_applicable();
         const long long n = I.n();
         const long long alpha = I.alpha().value;
         return Outcome::require(alpha * (2LL * I.m() + n) >= n * n,
                                 kv({{"alpha", alpha}, {"n", n}, {"m", I.m()}}));
       }},
      {"caro_west", "rep >= n/(2 avg - 2 min_degree + 1)",
       [](Instance& I) {
         if (I.n() < 1) return Outcome::not_applicable();
         const long long n = I.n();
         const long long rep = I.profile().rep;
         const long long den = 4LL * I.m() - 2LL * I.profile().min_degree * n + n;
         return Outcome::require(rep * den >= n * n, kv({{"rep", rep}, {"n", n}, {"m", I.m()}}));
       }},
      {"degree_profile_bounds", "span <= max - min + 1 and span + rep <= n + 1",
       [](Instance& I) {
         if (I.n() < 1) return Outcome::not_applicable();
         const DegreeProfile& p = I.profile();
         return Outcome::require(
             p.span <= p.max_degree - p.min_degree + 1 && p.span + p.rep <= I.n() + 1,
             kv({{"span", p.span}, {"rep", p.rep}}));
       }},
  };
}

inline Suite caro_wei_suite() {
  Suite s;
  s.id = "caro_wei";
  s.description = "imported lemmas: Caro-Wei and Caro-West bounds";
  s.default_max_n = 6;
  s.max_supported_n = 7;
  s.corpus = [](const Limits& limits, int max_n) {
    std::vector<CorpusStream> parts{all_graphs(1, max_n)};
    for (int n = 3; n <= 9; ++n) parts.push_back(labeled(mops_exhaustive(n), "mop"));
    for (int n = 1; n <= 7; ++n) parts.push_back(labeled(trees_exhaustive(n), "tree"));
    parts.push_back(random_regular_items(limits.seed, 60, 4, 14, 1));
    parts.push_back(from_vector({family_item("petersen"), family_item("extremal_H:4"),
                                 family_item("extremal_F:4")}));
    return concat(std::move(parts));
  };
  s.corpus_description = [](const Limits& limits, int max_n) {
    return "all labeled graphs n=1.." + std::to_string(max_n) +
           "; MOPs n=3..9; labeled trees n=1..7; 60 random regular graphs (seed " +
           std::to_string(limits.seed) + "); Petersen, extremal_H:4, extremal_F:4";
  };
  s.checks = caro_checks();
  return s;
}

}  // namespace detail

/// All registered suites, in a fixed order.
inline const std::vector<Suite>& registry() {
  static const std::vector<Suite> suites = {
      detail::basic_suite(),        detail::duality_suite(),  detail::upper_bounds_suite(),
      detail::extremal_suite(),     detail::trees_suite(),    detail::mop_suite(),
      detail::nordhaus_gaddum_suite(), detail::unions_suite(), detail::line_graph_suite(),
      detail::regular_suite(),      detail::caro_wei_suite(),
  };
  return suites;
}

inline const Suite& find_suite(std::string_view id) {
  for (const Suite& s : registry()) {
    if (s.id == id) return s;
  }
  throw error(errc::unknown_suite, "no suite named \"" + std::string(id) + "\"");
}

inline int effective_max_n(const Suite& suite, const Limits& limits) {
  const int max_n = limits.max_n > 0 ? limits.max_n : suite.default_max_n;
  if (max_n > suite.max_supported_n) {
    throw error(errc::instance_too_large, "suite " + suite.id + " supports max-n <= " +
                                              std::to_string(suite.max_supported_n));
  }
  return max_n;
}

/// Runs every check of `suite` on every instance of `corpus`.
inline Report run_suite(const Suite& suite, CorpusStream corpus, std::string corpus_description,
                        const Limits& limits, int solver_cap) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.suite = suite.id;
  report.corpus = std::move(corpus_description);
  for (const Check& c : suite.checks) report.checks.push_back({c.id, c.description});

  while (!limits.max_instances || report.instances_checked < *limits.max_instances) {
    const std::optional<CorpusItem> item = corpus();
    if (!item) break;
    if (item->graph.order() > solver_cap) {
      throw error(errc::instance_too_large,
                  "instance of order " + std::to_string(item->graph.order()) +
                      " exceeds solver cap " + std::to_string(solver_cap));
    }
    Instance instance(*item);
    std::optional<std::string> g6;
    for (std::size_t i = 0; i < suite.checks.size(); ++i) {
      const Outcome o = suite.checks[i].evaluate(instance);
      switch (o.status) {
        case Status::pass: ++report.checks[i].passed; break;
        case Status::not_applicable: ++report.checks[i].not_applicable; break;
        case Status::fail:
          ++report.checks[i].failed;
          if (!g6) g6 = write_graph6(item->graph);
          report.failures.push_back({*g6, item->label, suite.checks[i].id, o.witness});
          break;
      }
    }
    ++report.instances_checked;
  }
  std::sort(report.failures.begin(), report.failures.end(), [](const Failure& a, const Failure& b) {
    return std::tie(a.graph6, a.check, a.label) < std::tie(b.graph6, b.check, b.label);
  });
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// Runs a registered suite on its default corpus.
inline Report run_suite(std::string_view suite_id, const Limits& limits = {},
                        int solver_cap = kMaxOrder) {
  const Suite& suite = find_suite(suite_id);
  const int max_n = effective_max_n(suite, limits);
  return run_suite(suite, suite.corpus(limits, max_n), suite.corpus_description(limits, max_n),
                   limits, solver_cap);
}

/// Re-evaluates one check on one recorded instance.
inline Outcome rerun_check(std::string_view suite_id, std::string_view check_id,
                           std::string_view graph6, std::string label) {
  const Suite& suite = find_suite(suite_id);
  for (const Check& c : suite.checks) {
    if (c.id == check_id) {
      const CorpusItem item{std::move(label), parse_graph6(graph6)};
      Instance instance(item);
      return c.evaluate(instance);
    }
  }
  throw error(errc::unknown_suite, "suite " + suite.id + " has no check " + std::string(check_id));
}

// ---------------------------------------------------------------------------
// Serialization
//
// JSON: {"suite", "corpus", "instances_checked", "passed",
//        "checks": [{"id", "description", "passed", "failed", "not_applicable"}],
//        "failures": [{"graph6", "label", "check", "witness"}],
//        "wall_time_seconds"}

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["corpus"] = r.corpus;
  j["instances_checked"] = r.instances_checked;
  j["passed"] = r.passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckSummary& c : r.checks) {
    j["checks"].push_back({{"id", c.id},
                           {"description", c.description},
                           {"passed", c.passed},
                           {"failed", c.failed},
                           {"not_applicable", c.not_applicable}});
  }
  j["failures"] = nlohmann::ordered_json::array();
  for (const Failure& f : r.failures) {
    j["failures"].push_back(
        {{"graph6", f.graph6}, {"label", f.label}, {"check", f.check}, {"witness", f.witness}});
  }
  j["wall_time_seconds"] = r.wall_seconds;
  return j;
}

inline std::string to_text(const Report& r) {
  std::ostringstream out;
  out << std::left;
  out << std::setw(12) << "suite" << r.suite << '\n';
  out << std::setw(12) << "corpus" << r.corpus << '\n';
  out << std::setw(12) << "instances" << r.instances_checked << '\n';
  out << std::setw(12) << "result" << (r.passed() ? "PASS" : "FAIL") << '\n';
  out << std::setw(12) << "wall_time" << std::fixed << std::setprecision(3) << r.wall_seconds
      << "s\n\n";
  std::size_t width = 5;
  for (const CheckSummary& c : r.checks) width = std::max(width, c.id.size());
  out << std::setw(static_cast<int>(width) + 2) << "check" << std::right << std::setw(10)
      << "passed" << std::setw(8) << "failed" << std::setw(10) << "n/a" << std::left << '\n';
  for (const CheckSummary& c : r.checks) {
    out << std::setw(static_cast<int>(width) + 2) << c.id << std::right << std::setw(10)
        << c.passed << std::setw(8) << c.failed << std::setw(10) << c.not_applicable
        << std::left << '\n';
  }
  if (!r.failures.empty()) {
    out << "\nfailures (graph6, check, label, witness):\n";
    for (const Failure& f : r.failures) {
      out << f.graph6 << '\t' << f.check << '\t' << f.label << '\t' << f.witness << '\n';
    }
  }
  return out.str();
}

}  // namespace fairdom::verify
