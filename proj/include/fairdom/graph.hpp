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
#include <cassert>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fairdom/error.hpp"
#include "fairdom/vertex_set.hpp"

namespace fairdom {

/// Unordered vertex pair; normalized so that `u < v` by Graph::edges().
struct Edge {
  int u = 0;
  int v = 0;

  constexpr bool operator==(const Edge&) const = default;
  constexpr auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on vertices 0..n-1 (n <= 62), stored as
/// one adjacency bit row per vertex.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list; duplicate edges collapse.
  static Graph from_edges(int n, std::span<const Edge> edges) {
    if (n < 0 || n > kMaxOrder) {
      throw error(errc::too_large,
                  "order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxOrder));
    }
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
        throw error(errc::index_out_of_range,
                    "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        ") in graph of order " + std::to_string(n));
      }
      if (e.u == e.v) {
        throw error(errc::self_loop, "self-loop at vertex " + std::to_string(e.u));
      }
      rows[e.u] = rows[e.u].with(e.v);
      rows[e.v] = rows[e.v].with(e.u);
    }
    return Graph(std::move(rows));
  }
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Builds directly from adjacency rows; rows must already be symmetric and
  /// irreflexive (checked).
  static Graph from_rows(std::vector<VertexSet> rows) {
    if (rows.size() > static_cast<std::size_t>(kMaxOrder)) {
      throw error(errc::too_large, "order " + std::to_string(rows.size()));
    }
    return Graph(std::move(rows));
  }

  static Graph empty(int n) { return from_edges(n, std::span<const Edge>{}); }

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const {
    int twice = 0;
    for (VertexSet r : rows_) twice += r.size();
    return twice / 2;
  }
  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet neighbors(int v) const { return rows_[v]; }
  VertexSet closed_neighbors(int v) const { return rows_[v].with(v); }
  int degree(int v) const { return rows_[v].size(); }
  bool adjacent(int u, int v) const { return rows_[u].contains(v); }

  /// Union of closed neighborhoods N[s] over s in `s`.
  VertexSet closed_neighbors(VertexSet s) const {
    VertexSet out = s;
    for (int v : s) out |= rows_[v];
    return out;
  }

  /// Edges in lexicographic order of (u, v) with u < v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u) {
      for (int v : rows_[u]) {
        if (v > u) out.push_back({u, v});
      }
    }
    return out;
  }

  std::span<const VertexSet> rows() const { return rows_; }

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(std::vector<VertexSet> rows) : rows_(std::move(rows)) {
    check_invariants();
  }

  void check_invariants() const {
    const VertexSet all = vertices();
    for (int v = 0; v < order(); ++v) {
      if (rows_[v].contains(v)) {
        throw error(errc::self_loop, "self-loop at vertex " + std::to_string(v));
      }
      if (!rows_[v].is_subset_of(all)) {
        throw error(errc::index_out_of_range, "row " + std::to_string(v) + " has bits >= n");
      }
      for (int u : rows_[v]) {
        if (!rows_[u].contains(v)) {
          throw error(errc::index_out_of_range, "asymmetric adjacency between " +
                                                    std::to_string(u) + " and " +
                                                    std::to_string(v));
        }
      }
    }
  }

  std::vector<VertexSet> rows_;
};

inline Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v).complement_in(n).without(v);
  return Graph::from_rows(std::move(rows));
}

inline Graph add_edge(const Graph& g, Edge e) {
  std::vector<Edge> edges = g.edges();
  edges.push_back(e);
  return Graph::from_edges(g.order(), edges);
}

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the vertex of the parent graph that became vertex i.
  std::vector<int> original;
  /// new_index[v] is the new label of parent vertex v, or -1 if v was dropped.
  std::vector<int> new_index;

  /// Translates a set of new labels back to parent labels.
  VertexSet lift(VertexSet s) const {
    VertexSet out;
    for (int v : s) out = out.with(original[v]);
    return out;
  }
};

/// G[S]; kept vertices are relabeled 0..|S|-1 in ascending original order.
inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) {
    throw error(errc::index_out_of_range, "vertex set " + s.to_string() +
                                              " not contained in graph of order " +
                                              std::to_string(g.order()));
  }
  InducedSubgraph out;
  out.new_index.assign(static_cast<std::size_t>(g.order()), -1);
  for (int v : s) {
    out.new_index[v] = static_cast<int>(out.original.size());
    out.original.push_back(v);
  }
  std::vector<VertexSet> rows(out.original.size());
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    for (int u : g.neighbors(out.original[i]) & s) rows[i] = rows[i].with(out.new_index[u]);
  }
  out.graph = Graph::from_rows(std::move(rows));
  return out;
}

/// Vertices reachable from `start` within `allowed` (start must be in allowed).
inline VertexSet reachable_within(const Graph& g, int start, VertexSet allowed) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next = (next & allowed) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Connected components, each as a vertex set, ordered by least vertex.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    VertexSet c = reachable_within(g, rest.min(), g.vertices());
    out.push_back(c);
    rest -= c;
  }
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

/// True iff G[s] is connected (the empty set counts as connected).
inline bool is_connected_within(const Graph& g, VertexSet s) {
  return s.empty() || reachable_within(g, s.min(), s) == s;
}

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

/// The common degree if g is regular (including the 0-regular case).
inline std::optional<int> regular_degree(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const int r = g.degree(0);
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != r) return std::nullopt;
  }
  return r;
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int u : g.neighbors(v)) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          queue.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

struct LineGraph {
  Graph graph;
  /// edge_of_vertex[i] is the edge of the parent graph represented by vertex i.
  std::vector<Edge> edge_of_vertex;

  /// Line-graph vertex for an edge of the parent graph, if present.
  std::optional<int> vertex_of(Edge e) const {
    if (e.u > e.v) std::swap(e.u, e.v);
    auto it = std::lower_bound(edge_of_vertex.begin(), edge_of_vertex.end(), e);
    if (it == edge_of_vertex.end() || *it != e) return std::nullopt;
    return static_cast<int>(it - edge_of_vertex.begin());
  }
};

/// L(G); vertices follow the lexicographic edge order of g.
inline LineGraph line_graph(const Graph& g) {
  LineGraph out;
  out.edge_of_vertex = g.edges();
  const int m = static_cast<int>(out.edge_of_vertex.size());
  if (m > kMaxOrder) {
    throw error(errc::too_large, "line graph would have " + std::to_string(m) + " vertices");
  }
  std::vector<Edge> ledges;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Edge a = out.edge_of_vertex[i];
      const Edge b = out.edge_of_vertex[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) ledges.push_back({i, j});
    }
  }
  out.graph = Graph::from_edges(m, ledges);
  return out;
}

/// Vertex blocks are concatenated in list order.
inline Graph disjoint_union(std::span<const Graph> gs) {
  int total = 0;
  for (const Graph& g : gs) total += g.order();
  if (total > kMaxOrder) {
    throw error(errc::too_large, "union would have " + std::to_string(total) + " vertices");
  }
  std::vector<Edge> edges;
  int offset = 0;
  for (const Graph& g : gs) {
    for (Edge e : g.edges()) edges.push_back({e.u + offset, e.v + offset});
    offset += g.order();
  }
  return Graph::from_edges(total, edges);
}
inline Graph disjoint_union(std::initializer_list<Graph> gs) {
  return disjoint_union(std::span<const Graph>(gs.begin(), gs.size()));
}

/// Exact non-negative rational; not normalized, compared by cross products.
struct Rational {
  long long num = 0;
  long long den = 1;

  friend bool operator==(Rational a, Rational b) { return a.num * b.den == b.num * a.den; }
  friend std::strong_ordering operator<=>(Rational a, Rational b) {
    return a.num * b.den <=> b.num * a.den;
  }
  std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
};

struct DegreeProfile {
  std::vector<int> degree_sequence;  // indexed by vertex
  int min_degree = 0;
  int max_degree = 0;
  Rational average_degree;           // 2m / n
  int span = 0;                      // number of distinct degrees
  int rep = 0;                       // largest multiplicity of one degree
};

inline DegreeProfile degree_profile(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw error(errc::empty_graph, "degree profile of the order-0 graph");
  DegreeProfile p;
  std::map<int, int> multiplicity;
  for (int v = 0; v < n; ++v) {
    p.degree_sequence.push_back(g.degree(v));
    ++multiplicity[g.degree(v)];
  }
  p.min_degree = multiplicity.begin()->first;
  p.max_degree = multiplicity.rbegin()->first;
  const int twice_m = std::accumulate(p.degree_sequence.begin(), p.degree_sequence.end(), 0);
  p.average_degree = Rational{twice_m, n};
  p.span = static_cast<int>(multiplicity.size());
  for (const auto& [deg, count] : multiplicity) p.rep = std::max(p.rep, count);
  return p;
}

/// Hop distance by breadth-first layering; nullopt when unreachable.
inline std::optional<int> distance(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
    throw error(errc::index_out_of_range, "distance query outside vertex range");
  }
  VertexSet seen = VertexSet::single(u);
  VertexSet layer = seen;
  for (int d = 0; !layer.empty(); ++d) {
    if (layer.contains(v)) return d;
    VertexSet next;
    for (int w : layer) next |= g.neighbors(w);
    layer = next - seen;
    seen |= layer;
  }
  return std::nullopt;
}

}  // namespace fairdom
