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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairdom/graph.hpp"
#include "fairdom/invariants.hpp"

// Fair domination.
//
// A set D is a k-fair dominating set (kFD-set) when every vertex outside D
// has exactly k >= 1 neighbours in D; D = V qualifies vacuously for every k.
// fd(G) is the least size of a kFD-set over all k, which is n exactly when G
// has no edges. An out-regular set (OR-set) Q is one whose members all have
// the same positive number of neighbours outside Q; outr(G) is the largest
// size of one (0 when G has no edges). The complement of an FD-set other
// than V is an OR-set and vice versa.
//
// All minimum-set searches follow the (cardinality, mask) ascending order, so
// witnesses are deterministic.

namespace fairdom {

/// Fairness level certified by an FD-set: a positive k, or vacuous for D = V
/// (no outside vertex, so no k is fixed).
class Fairness {
 public:
  static constexpr Fairness vacuous() { return Fairness(0); }
  static constexpr Fairness level(int k) { return Fairness(k); }

  constexpr bool is_vacuous() const { return k_ == 0; }
  /// k for a proper FD-set; 0 when vacuous.
  constexpr int k() const { return k_; }
  /// True if a set with this fairness is a kFD-set for the given k.
  constexpr bool admits(int k) const { return is_vacuous() || k_ == k; }

  constexpr bool operator==(const Fairness&) const = default;

  std::string to_string() const { return is_vacuous() ? "vacuous" : std::to_string(k_); }

 private:
  constexpr explicit Fairness(int k) : k_(k) {}
  int k_;
};

/// nullopt if d is not an FD-set.
inline std::optional<Fairness> is_fair_dominating(const Graph& g, VertexSet d) {
  const VertexSet outside = d.complement_in(g.order());
  if (outside.empty()) return Fairness::vacuous();
  const int k = (g.neighbors(outside.min()) & d).size();
  if (k == 0) return std::nullopt;
  for (int v : outside) {
    if ((g.neighbors(v) & d).size() != k) return std::nullopt;
  }
  return Fairness::level(k);
}

/// Common positive number of neighbours outside q, or nullopt.
inline std::optional<int> is_out_regular(const Graph& g, VertexSet q) {
  if (q.empty()) throw error(errc::empty_set, "out-regularity of the empty set");
  const VertexSet outside = q.complement_in(g.order());
  const int d = (g.neighbors(q.min()) & outside).size();
  if (d == 0) return std::nullopt;
  for (int v : q) {
    if ((g.neighbors(v) & outside).size() != d) return std::nullopt;
  }
  return d;
}

enum class FDMode { fd, kfd, outr, fd_tree };

struct FDResult {
  int value = 0;
  VertexSet witness;
  /// For fd/kfd/fd_tree the certified fairness of the witness (kfd reports
  /// its own k even for the witness V). For outr the common outward degree
  /// of the witness, or nullopt for the edgeless convention outr = 0.
  std::optional<Fairness> fairness;
  FDMode mode = FDMode::fd;
  int mode_k = 0;  // kfd only
};

inline std::string to_string(FDMode mode, int k = 0) {
  switch (mode) {
    case FDMode::fd: return "fd";
    case FDMode::kfd: return "kfd(" + std::to_string(k) + ")";
    case FDMode::outr: return "outr";
    case FDMode::fd_tree: return "fd_tree";
  }
  return "?";
}

namespace detail {

/// Least (size, mask) set containing `forced` and accepted by `accept`.
/// Non-dominating candidates are rejected by the closed-neighbourhood union
/// before `accept` runs.
template <class Accept>
std::optional<std::pair<VertexSet, Fairness>> least_fd_set(const Graph& g, VertexSet forced,
                                                           Accept&& accept) {
  const VertexSet all = g.vertices();
  const VertexSet free = all - forced;
  for (int extra = 0; extra <= free.size(); ++extra) {
    std::optional<std::pair<VertexSet, Fairness>> hit;
    for_each_subset_of_size(free, extra, [&](VertexSet s) {
      const VertexSet d = s | forced;
      if (g.closed_neighbors(d) != all) return false;
      if (auto f = is_fair_dominating(g, d); f && accept(*f)) {
        hit.emplace(d, *f);
        return true;
      }
      return false;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

}  // namespace detail

/// fd(G). The order-0 graph gives 0; an edgeless graph gives n (witness V).
inline FDResult fd_exact(const Graph& g) {
  const auto hit = detail::least_fd_set(g, VertexSet{}, [](Fairness) { return true; });
  // V always qualifies, so a hit exists.
  return {hit->first.size(), hit->first, hit->second, FDMode::fd, 0};
}

/// Minimum kFD-set; V is the fallback for every k.
inline FDResult kfd_exact(const Graph& g, int k) {
  if (k < 1) throw error(errc::bad_range, "k must be >= 1");
  const auto hit =
      detail::least_fd_set(g, VertexSet{}, [k](Fairness f) { return f.admits(k); });
  return {hit->first.size(), hit->first, Fairness::level(k), FDMode::kfd, k};
}

/// outr(G): largest OR-set, searched directly (descending size, ascending
/// mask) rather than through fd.
inline FDResult outr_exact(const Graph& g) {
  for (int c = g.order() - 1; c >= 1; --c) {
    std::optional<std::pair<VertexSet, int>> hit;
    for_each_subset_of_size(g.vertices(), c, [&](VertexSet q) {
      if (auto d = is_out_regular(g, q)) {
        hit.emplace(q, *d);
        return true;
      }
      return false;
    });
    if (hit) return {c, hit->first, Fairness::level(hit->second), FDMode::outr, 0};
  }
  return {0, VertexSet{}, std::nullopt, FDMode::outr, 0};
}

/// Every minimum FD-set, in ascending mask order. Exhaustive; n <= 16.
inline std::vector<VertexSet> all_minimum_fd_sets(const Graph& g) {
  if (g.order() > 16) throw error(errc::too_large, "all minimum FD-sets refused above order 16");
  const int c = fd_exact(g).value;
  std::vector<VertexSet> out;
  for_each_subset_of_size(g.vertices(), c, [&](VertexSet d) {
    if (is_fair_dominating(g, d)) out.push_back(d);
    return false;
  });
  return out;
}

inline VertexSet leaves(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out = out.with(v);
  }
  return out;
}

/// Vertices adjacent to at least one leaf.
inline VertexSet support_vertices(const Graph& g) {
  VertexSet out;
  for (int v : leaves(g)) out |= g.neighbors(v);
  return out;
}

/// Vertices adjacent to at least two leaves.
inline VertexSet strong_support_vertices(const Graph& g) {
  const VertexSet l = leaves(g);
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if ((g.neighbors(v) & l).size() >= 2) out = out.with(v);
  }
  return out;
}

namespace detail {

inline void require_tree(const Graph& t) {
  if (!is_tree(t)) throw error(errc::not_a_tree, "graph is not a tree");
}

}  // namespace detail

/// fd of a tree, searching only 1FD-sets that contain every strong support
/// vertex (a minimum FD-set of a tree is always of this kind). Agrees with
/// fd_exact in value and witness.
inline FDResult fd_tree(const Graph& t) {
  detail::require_tree(t);
  const auto hit = detail::least_fd_set(t, strong_support_vertices(t),
                                        [](Fairness f) { return f.admits(1); });
  return {hit->first.size(), hit->first, hit->second, FDMode::fd_tree, 0};
}

/// (support, leaf) pairs, ascending by support.
using CoronaPairing = std::vector<std::pair<int, int>>;

/// Present iff t is the corona of a tree: every vertex is a leaf or a support
/// vertex with exactly one leaf neighbour. K_2 = corona(K_1) pairs (0, 1).
inline std::optional<CoronaPairing> is_corona_of_tree(const Graph& t) {
  detail::require_tree(t);
  const int n = t.order();
  if (n == 2) return CoronaPairing{{0, 1}};
  if (n < 4 || n % 2 != 0) return std::nullopt;
  const VertexSet l = leaves(t);
  CoronaPairing pairing;
  for (int v : t.vertices() - l) {
    const VertexSet own = t.neighbors(v) & l;
    if (own.size() != 1) return std::nullopt;
    pairing.emplace_back(v, own.min());
  }
  // Removing the leaves of a tree leaves a tree, so only the count remains.
  if (2 * static_cast<int>(pairing.size()) != n) return std::nullopt;
  return pairing;
}

/// A proper subtree H (as its vertex set) that is the corona of a tree and
/// whose support vertices have no neighbours outside H. Exhaustive over
/// connected even-size subsets in (size, mask) order, so this is a checking
/// oracle rather than a scalable algorithm. Requires 3 <= n <= 16.
inline std::optional<VertexSet> find_special_corona_subtree(const Graph& t) {
  detail::require_tree(t);
  const int n = t.order();
  if (n < 3) throw error(errc::bad_range, "special corona-subtree search needs n >= 3");
  if (n > 16) throw error(errc::too_large, "special corona-subtree search refused above 16");
  for (int c = 2; c < n; c += 2) {
    std::optional<VertexSet> found;
    for_each_subset_of_size(t.vertices(), c, [&](VertexSet h) {
      if (!is_connected_within(t, h)) return false;
      const InducedSubgraph sub = induced_subgraph(t, h);
      if (!is_corona_of_tree(sub.graph)) return false;
      const VertexSet supports = sub.lift(support_vertices(sub.graph));
      for (int s : supports) {
        if (!t.neighbors(s).is_subset_of(h)) return false;
      }
      found = h;
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

struct RegularWitness {
  VertexSet witness;
  /// The largest independent set or clique used by the construction.
  VertexSet homogeneous;
  bool homogeneous_is_clique = false;
};

/// FD-set of an r-regular graph (r >= 1) built from a largest independent
/// set or clique X (independent on ties): V \ X when G[X] is s-regular with
/// s < r, else (V \ X) plus the least vertex of X.
inline RegularWitness regular_fd_witness(const Graph& g) {
  const auto r = regular_degree(g);
  if (!r || *r < 1) throw error(errc::not_regular, "graph is not r-regular with r >= 1");
  const InvariantResult alpha = independence_number(g);
  const InvariantResult omega = clique_number(g);
  RegularWitness out;
  out.homogeneous_is_clique = omega.value > alpha.value;
  out.homogeneous = out.homogeneous_is_clique ? omega.witness : alpha.witness;
  const int s = out.homogeneous_is_clique ? out.homogeneous.size() - 1 : 0;
  out.witness = out.homogeneous.complement_in(g.order());
  if (s == *r) out.witness = out.witness.with(out.homogeneous.min());
  return out;
}

struct LineGraphWitness {
  LineGraph line;
  VertexSet witness;  // vertices of L(G) for the spanning subgraph's edges
  int r = 0;          // regularity of the spanning subgraph
};

/// Given a spanning r-regular subgraph H of g (r >= 1), the line-graph
/// vertices of E(H) form a 2r-fair dominating set of L(g), or all of V(L(g))
/// when H = g.
inline LineGraphWitness line_graph_fd_witness(const Graph& g, std::span<const Edge> h_edges) {
  LineGraphWitness out;
  out.line = line_graph(g);
  std::vector<int> degree(static_cast<std::size_t>(g.order()), 0);
  for (Edge e : h_edges) {
    const auto v = out.line.vertex_of(e);
    if (!v) {
      throw error(errc::edge_not_in_graph,
                  "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
    }
    if (out.witness.contains(*v)) continue;
    out.witness = out.witness.with(*v);
    ++degree[e.u];
    ++degree[e.v];
  }
  if (degree.empty() || degree[0] < 1 ||
      std::any_of(degree.begin(), degree.end(), [&](int d) { return d != degree[0]; })) {
    throw error(errc::not_spanning_regular, "edge subset is not a spanning r-regular subgraph");
  }
  out.r = degree[0];
  return out;
}

}  // namespace fairdom
