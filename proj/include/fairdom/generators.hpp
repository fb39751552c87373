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

#include <array>
#include <charconv>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fairdom/graph.hpp"
#include "fairdom/io.hpp"

namespace fairdom {

enum class Family {
  path,
  cycle,
  complete,
  empty,
  star,
  complete_bipartite,
  complete_multipartite,
  petersen,
  corona_of,
  extremal_H,
  extremal_F,
};

inline constexpr std::array<std::pair<Family, std::string_view>, 11> kFamilyNames{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::empty, "empty"},
    {Family::star, "star"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::complete_multipartite, "complete_multipartite"},
    {Family::petersen, "petersen"},
    {Family::corona_of, "corona_of"},
    {Family::extremal_H, "extremal_H"},
    {Family::extremal_F, "extremal_F"},
}};

constexpr std::string_view to_string(Family f) {
  for (const auto& [family, name] : kFamilyNames) {
    if (family == f) return name;
  }
  return "?";
}

/// Declarative description of one family member. Textual form is
/// "tag[:p1,p2,...]", e.g. "cycle:8", "complete_multipartite:2,2,2",
/// "corona_of:<graph6>", "petersen".
struct FamilySpec {
  Family family = Family::path;
  std::vector<int> params;
  std::string graph6;  // base graph, corona_of only
  std::optional<std::uint64_t> seed;

  std::string to_string() const {
    std::string out(fairdom::to_string(family));
    if (family == Family::corona_of) return out + ":" + graph6;
    for (std::size_t i = 0; i < params.size(); ++i) {
      out += (i == 0 ? ":" : ",") + std::to_string(params[i]);
    }
    return out;
  }
};

inline FamilySpec parse_family_spec(std::string_view text) {
  text = detail::trim(text);
  const auto colon = text.find(':');
  const std::string_view tag = text.substr(0, colon);
  const std::string_view rest =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  FamilySpec spec;
  bool known = false;
  for (const auto& [family, name] : kFamilyNames) {
    if (name == tag) {
      spec.family = family;
      known = true;
    }
  }
  if (!known) throw error(errc::unknown_family, "unknown family \"" + std::string(tag) + "\"");

  if (spec.family == Family::corona_of) {
    spec.graph6 = std::string(rest);
    return spec;
  }
  std::size_t pos = 0;
  while (pos < rest.size()) {
    const std::size_t comma = rest.find(',', pos);
    const std::string_view field =
        rest.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
      throw error(errc::parse_error, "bad family parameter \"" + std::string(field) + "\"");
    }
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return spec;
}

namespace detail {

inline void require_arity(const FamilySpec& spec, std::size_t arity) {
  if (spec.params.size() != arity) {
    throw error(errc::bad_arity, std::string(to_string(spec.family)) + " takes " +
                                     std::to_string(arity) + " parameter(s), got " +
                                     std::to_string(spec.params.size()));
  }
}

inline void require_range(bool ok, std::string_view what) {
  if (!ok) throw error(errc::bad_range, std::string(what));
}

}  // namespace detail

inline Graph path_graph(int n) {
  detail::require_range(n >= 1 && n <= kMaxOrder, "path needs 1 <= n <= 62");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
  detail::require_range(n >= 3 && n <= kMaxOrder, "cycle needs 3 <= n <= 62");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph::from_edges(n, edges);
}

inline Graph complete_graph(int n) {
  detail::require_range(n >= 1 && n <= kMaxOrder, "complete graph needs 1 <= n <= 62");
  return complement(Graph::empty(n));
}

inline Graph empty_graph(int n) {
  detail::require_range(n >= 1 && n <= kMaxOrder, "empty graph needs 1 <= n <= 62");
  return Graph::empty(n);
}

/// Parts occupy consecutive index blocks in the given order.
inline Graph complete_multipartite(std::span<const int> parts) {
  int n = 0;
  for (int p : parts) {
    detail::require_range(p >= 1, "part sizes must be >= 1");
    n += p;
  }
  detail::require_range(!parts.empty() && n <= kMaxOrder, "total order must be 1..62");
  std::vector<int> block;
  for (std::size_t i = 0; i < parts.size(); ++i) block.insert(block.end(), parts[i], int(i));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (block[u] != block[v]) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

inline Graph complete_bipartite(int m, int n) {
  detail::require_range(m >= 1 && n >= 1, "complete bipartite needs m, n >= 1");
  const std::array<int, 2> parts{m, n};
  return complete_multipartite(parts);
}

/// K_{1,n-1}: centre 0, leaves 1..n-1.
inline Graph star_graph(int n) {
  detail::require_range(n >= 2, "star needs n >= 2");
  return complete_bipartite(1, n - 1);
}

/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph::from_edges(10, edges);
}

/// Attaches private leaf n+v to every vertex v of h.
inline Graph corona(const Graph& h) {
  const int n = h.order();
  if (n < 1) throw error(errc::bad_range, "corona of the order-0 graph");
  if (2 * n > kMaxOrder) throw error(errc::too_large, "corona would exceed 62 vertices");
  std::vector<Edge> edges = h.edges();
  for (int v = 0; v < n; ++v) edges.push_back({v, n + v});
  return Graph::from_edges(2 * n, edges);
}

/// The even-order extremal graph H_n: x_1..x_n are vertices 0..n-1 and
/// y_1..y_n are n..2n-1. x_i ~ y_j iff i >= j, Y is independent, and
/// x_2..x_n form a clique (x_1 has no X-neighbours).
inline Graph extremal_H(int n) {
  detail::require_range(n >= 3 && n <= 31, "extremal_H needs 3 <= n <= 31");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) edges.push_back({i - 1, n + j - 1});
  }
  for (int i = 2; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.push_back({i - 1, j - 1});
  }
  return Graph::from_edges(2 * n, edges);
}

/// The odd-order extremal graph F_n: H_n plus vertex 2n joined to x_2..x_n.
inline Graph extremal_F(int n) {
  detail::require_range(n >= 3 && n <= 30, "extremal_F needs 3 <= n <= 30");
  std::vector<Edge> edges = extremal_H(n).edges();
  for (int i = 2; i <= n; ++i) edges.push_back({i - 1, 2 * n});
  return Graph::from_edges(2 * n + 1, edges);
}

inline Graph make_family(const FamilySpec& spec) {
  using detail::require_arity;
  switch (spec.family) {
    case Family::path:
      require_arity(spec, 1);
      return path_graph(spec.params[0]);
    case Family::cycle:
      require_arity(spec, 1);
      return cycle_graph(spec.params[0]);
    case Family::complete:
      require_arity(spec, 1);
      return complete_graph(spec.params[0]);
    case Family::empty:
      require_arity(spec, 1);
      return empty_graph(spec.params[0]);
    case Family::star:
      require_arity(spec, 1);
      return star_graph(spec.params[0]);
    case Family::complete_bipartite:
      require_arity(spec, 2);
      return complete_bipartite(spec.params[0], spec.params[1]);
    case Family::complete_multipartite:
      if (spec.params.empty()) throw error(errc::bad_arity, "complete_multipartite needs parts");
      return complete_multipartite(spec.params);
    case Family::petersen:
      require_arity(spec, 0);
      return petersen_graph();
    case Family::corona_of:
      if (!spec.params.empty() || spec.graph6.empty()) {
        throw error(errc::bad_arity, "corona_of takes one graph6 argument");
      }
      return corona(parse_graph6(spec.graph6));
    case Family::extremal_H:
      require_arity(spec, 1);
      return extremal_H(spec.params[0]);
    case Family::extremal_F:
      require_arity(spec, 1);
      return extremal_F(spec.params[0]);
  }
  throw error(errc::unknown_family, "unhandled family");
}

inline Graph make_family(std::string_view text) { return make_family(parse_family_spec(text)); }

/// Decodes a Prüfer sequence over 0..n-1 (length n-2) into a labeled tree.
inline Graph tree_from_pruefer(int n, std::span<const int> seq) {
  if (n <= 2) {
    return n == 2 ? Graph::from_edges(2, {{0, 1}}) : Graph::empty(n);
  }
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int v : seq) ++degree[v];
  std::vector<Edge> edges;
  for (int v : seq) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({leaf, v});
    --degree[leaf];
    --degree[v];
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.push_back({a, v});
      }
    }
  }
  return Graph::from_edges(n, edges);
}

/// All n^(n-2) labeled trees on n vertices, Prüfer sequences in
/// lexicographic order. Single-consumer.
class TreeStream {
 public:
  explicit TreeStream(int n) : n_(n) {
    detail::require_range(n >= 1 && n <= 9, "trees_exhaustive needs 1 <= n <= 9");
    seq_.assign(static_cast<std::size_t>(std::max(0, n - 2)), 0);
  }

  std::optional<Graph> next() {
    if (done_) return std::nullopt;
    Graph g = tree_from_pruefer(n_, seq_);
    // Odometer, last position fastest.
    int i = static_cast<int>(seq_.size()) - 1;
    while (i >= 0 && seq_[i] == n_ - 1) seq_[i--] = 0;
    if (i < 0) {
      done_ = true;
    } else {
      ++seq_[i];
    }
    return g;
  }

 private:
  int n_;
  std::vector<int> seq_;
  bool done_ = false;
};

inline TreeStream trees_exhaustive(int n) { return TreeStream(n); }

inline Graph random_tree(int n, std::uint64_t seed) {
  detail::require_range(n >= 1 && n <= kMaxOrder, "random_tree needs 1 <= n <= 62");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(static_cast<std::size_t>(std::max(0, n - 2)));
  for (int& v : seq) v = pick(rng);
  return tree_from_pruefer(n, seq);
}

namespace detail {

/// Triangulations of the convex polygon on the consecutive labels lo..hi,
/// as lists of chords. The side (lo, hi) lies in exactly one triangle
/// (lo, k, hi); recurse on both sides of it.
inline void polygon_triangulations(int lo, int hi, std::vector<std::vector<Edge>>& out) {
  out.clear();
  if (hi - lo < 2) {
    out.emplace_back();
    return;
  }
  std::vector<std::vector<Edge>> left;
  std::vector<std::vector<Edge>> right;
  for (int k = lo + 1; k < hi; ++k) {
    polygon_triangulations(lo, k, left);
    polygon_triangulations(k, hi, right);
    for (const auto& a : left) {
      for (const auto& b : right) {
        std::vector<Edge> chords = a;
        chords.insert(chords.end(), b.begin(), b.end());
        if (k - lo > 1) chords.push_back({lo, k});
        if (hi - k > 1) chords.push_back({k, hi});
        out.push_back(std::move(chords));
      }
    }
  }
}

inline Graph polygon_with_chords(int n, std::vector<Edge> chords) {
  for (int v = 0; v < n; ++v) chords.push_back({v, (v + 1) % n});
  return Graph::from_edges(n, chords);
}

}  // namespace detail

/// All triangulations of the convex n-gon with boundary cycle 0..n-1
/// (Catalan(n-2) graphs). Single-consumer.
class MopStream {
 public:
  explicit MopStream(int n) : n_(n) {
    detail::require_range(n >= 3 && n <= 12, "mops_exhaustive needs 3 <= n <= 12");
    detail::polygon_triangulations(0, n - 1, chords_);
  }

  std::optional<Graph> next() {
    if (index_ >= chords_.size()) return std::nullopt;
    return detail::polygon_with_chords(n_, chords_[index_++]);
  }

  std::size_t count() const { return chords_.size(); }

 private:
  int n_;
  std::vector<std::vector<Edge>> chords_;
  std::size_t index_ = 0;
};

inline MopStream mops_exhaustive(int n) { return MopStream(n); }

/// Uniform over the Catalan(n-2) triangulations of the labeled n-gon.
inline Graph random_mop(int n, std::uint64_t seed) {
  detail::require_range(n >= 3 && n <= kMaxOrder, "random_mop needs 3 <= n <= 62");
  using u128 = unsigned __int128;
  // count[m] = number of triangulations of a polygon on m consecutive labels
  // (m = 2 is a bare side).
  std::vector<u128> count(static_cast<std::size_t>(n + 1), 0);
  count[2] = 1;
  for (int m = 3; m <= n; ++m) {
    for (int k = 1; k < m - 1; ++k) count[m] += count[k + 1] * count[m - k];
  }
  std::mt19937_64 rng(seed);
  auto uniform_below = [&](u128 bound) {
    // Rejection sampling on 128-bit draws.
    const u128 limit = ~u128{0} - (~u128{0} % bound);
    for (;;) {
      const u128 x = (u128{rng()} << 64) | rng();
      if (x < limit) return x % bound;
    }
  };
  std::vector<Edge> chords;
  std::vector<std::pair<int, int>> todo{{0, n - 1}};
  while (!todo.empty()) {
    const auto [lo, hi] = todo.back();
    todo.pop_back();
    if (hi - lo < 2) continue;
    u128 r = uniform_below(count[hi - lo + 1]);
    int k = lo + 1;
    for (;; ++k) {
      const u128 w = count[k - lo + 1] * count[hi - k + 1];
      if (r < w) break;
      r -= w;
    }
    if (k - lo > 1) chords.push_back({lo, k});
    if (hi - k > 1) chords.push_back({k, hi});
    todo.emplace_back(lo, k);
    todo.emplace_back(k, hi);
  }
  return detail::polygon_with_chords(n, std::move(chords));
}

/// All 2^(n choose 2) labeled graphs on n vertices; bit b of the counter
/// selects the b-th pair in lexicographic order. Single-consumer.
class GraphStream {
 public:
  explicit GraphStream(int n) : n_(n) {
    detail::require_range(n >= 1 && n <= 7, "graphs_exhaustive needs 1 <= n <= 7");
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs_.push_back({u, v});
    }
    end_ = std::uint64_t{1} << pairs_.size();
  }

  std::optional<Graph> next() {
    if (mask_ >= end_) return std::nullopt;
    std::vector<VertexSet> rows(static_cast<std::size_t>(n_));
    for (std::size_t b = 0; b < pairs_.size(); ++b) {
      if ((mask_ >> b) & 1U) {
        rows[pairs_[b].u] = rows[pairs_[b].u].with(pairs_[b].v);
        rows[pairs_[b].v] = rows[pairs_[b].v].with(pairs_[b].u);
      }
    }
    ++mask_;
    return Graph::from_rows(std::move(rows));
  }

  std::uint64_t count() const { return end_; }

 private:
  int n_;
  std::vector<Edge> pairs_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_ = 0;
};

inline GraphStream graphs_exhaustive(int n) { return GraphStream(n); }

/// Random simple r-regular graph on n vertices. Points are paired one at a
/// time among the admissible pairs, restarting on a dead end; the
/// distribution is close to, but not exactly, uniform.
inline Graph random_regular(int n, int r, std::uint64_t seed) {
  detail::require_range(n >= 1 && n <= kMaxOrder && r >= 0 && r < n && (n * r) % 2 == 0,
                        "random_regular needs 0 <= r < n and n*r even");
  if (2 * r > n - 1) return complement(random_regular(n, n - 1 - r, seed));
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v) points.insert(points.end(), r, v);
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    bool stuck = false;
    while (!points.empty() && !stuck) {
      std::vector<std::pair<std::size_t, std::size_t>> admissible;
      for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
          const int a = points[i];
          const int b = points[j];
          if (a != b && !rows[a].contains(b)) admissible.emplace_back(i, j);
        }
      }
      if (admissible.empty()) {
        stuck = true;
        break;
      }
      std::uniform_int_distribution<std::size_t> pick(0, admissible.size() - 1);
      const auto [i, j] = admissible[pick(rng)];
      const int a = points[i];
      const int b = points[j];
      rows[a] = rows[a].with(b);
      rows[b] = rows[b].with(a);
      points.erase(points.begin() + static_cast<std::ptrdiff_t>(j));
      points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
    }
    if (!stuck) return Graph::from_rows(std::move(rows));
  }
}

/// Uniform G(n, 1/2) labeled graph.
inline Graph random_graph(int n, std::uint64_t seed) {
  detail::require_range(n >= 0 && n <= kMaxOrder, "random_graph needs 0 <= n <= 62");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng() & 1U) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace fairdom
