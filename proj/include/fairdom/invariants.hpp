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
#include <optional>
#include <vector>

#include "fairdom/graph.hpp"

// Exact classical invariants. Every search is exhaustive; minimum-set
// searches scan cardinalities upward and masks upward within a cardinality,
// so the witness is the least minimum set under (size, mask).

namespace fairdom {

struct InvariantResult {
  int value = 0;
  VertexSet witness;
  std::vector<int> coloring;  // chromatic_number only: color of each vertex
};

inline bool is_dominating(const Graph& g, VertexSet d) {
  return g.closed_neighbors(d) == g.vertices();
}

/// Every vertex outside d has at least k neighbours in d.
inline bool is_k_dominating(const Graph& g, VertexSet d, int k) {
  for (int v : d.complement_in(g.order())) {
    if ((g.neighbors(v) & d).size() < k) return false;
  }
  return true;
}

namespace detail {

template <class Pred>
InvariantResult least_minimum_set(const Graph& g, Pred&& accept) {
  InvariantResult out;
  for (int c = 0; c <= g.order(); ++c) {
    const bool found = for_each_subset_of_size(g.vertices(), c, [&](VertexSet s) {
      if (!accept(s)) return false;
      out.value = c;
      out.witness = s;
      return true;
    });
    if (found) return out;
  }
  // Unreachable: V satisfies every predicate used here.
  out.value = g.order();
  out.witness = g.vertices();
  return out;
}

}  // namespace detail

inline InvariantResult domination_number(const Graph& g) {
  return detail::least_minimum_set(g, [&](VertexSet d) { return is_dominating(g, d); });
}

inline InvariantResult k_domination_number(const Graph& g, int k) {
  return detail::least_minimum_set(g, [&](VertexSet d) { return is_k_dominating(g, d, k); });
}

inline bool is_independent(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

namespace detail {

class MaxIndependentSet {
 public:
  explicit MaxIndependentSet(const Graph& g) : g_(g) {}

  InvariantResult run() {
    expand(VertexSet{}, g_.vertices());
    return {best_.size(), best_, {}};
  }

 private:
  // Branch on the lowest candidate: take it, or drop it. Bound by the number
  // of remaining candidates.
  void expand(VertexSet chosen, VertexSet candidates) {
    if (candidates.empty()) {
      if (chosen.size() > best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + candidates.size() <= best_.size()) return;
    const int v = candidates.min();
    expand(chosen.with(v), candidates - g_.closed_neighbors(v));
    expand(chosen, candidates.without(v));
  }

  const Graph& g_;
  VertexSet best_;
};

class Colorer {
 public:
  Colorer(const Graph& g, int k) : g_(g), k_(k), color_(g.order(), -1) {}

  bool run() { return assign(0, -1); }
  const std::vector<int>& coloring() const { return color_; }

 private:
  // DSATUR order: most distinct neighbour colours first, then degree, then
  // lowest index. Colours are introduced in order (symmetry breaking).
  bool assign(int colored, int max_used) {
    const int n = g_.order();
    if (colored == n) return true;
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color_[v] >= 0) continue;
      const int sat = saturation(v);
      const int deg = g_.degree(v);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    std::uint64_t used = 0;
    for (int u : g_.neighbors(pick)) {
      if (color_[u] >= 0) used |= std::uint64_t{1} << color_[u];
    }
    const int limit = std::min(k_ - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
      if ((used >> c) & 1U) continue;
      color_[pick] = c;
      if (assign(colored + 1, std::max(max_used, c))) return true;
    }
    color_[pick] = -1;
    return false;
  }

  int saturation(int v) const {
    std::uint64_t used = 0;
    for (int u : g_.neighbors(v)) {
      if (color_[u] >= 0) used |= std::uint64_t{1} << color_[u];
    }
    return std::popcount(used);
  }

  const Graph& g_;
  int k_;
  std::vector<int> color_;
};

inline std::vector<int> greedy_coloring(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (int v = 0; v < g.order(); ++v) {
    std::uint64_t used = 0;
    for (int u : g.neighbors(v)) {
      if (color[u] >= 0) used |= std::uint64_t{1} << color[u];
    }
    color[v] = std::countr_one(used);
  }
  return color;
}

}  // namespace detail

/// Maximum independent set by branch and bound on candidate bit sets.
inline InvariantResult independence_number(const Graph& g) {
  return detail::MaxIndependentSet(g).run();
}

inline InvariantResult clique_number(const Graph& g) {
  return independence_number(complement(g));
}

inline bool is_proper_coloring(const Graph& g, const std::vector<int>& color) {
  if (color.size() != static_cast<std::size_t>(g.order())) return false;
  for (Edge e : g.edges()) {
    if (color[e.u] == color[e.v]) return false;
  }
  return true;
}

inline constexpr int kMaxChromaticOrder = 30;

/// Exact chromatic number: iterative deepening from the clique bound up to
/// one below the greedy bound. The witness coloring uses colors 0..value-1.
inline InvariantResult chromatic_number(const Graph& g) {
  if (g.order() > kMaxChromaticOrder) {
    throw error(errc::too_large, "chromatic number refused above order 30");
  }
  InvariantResult out;
  if (g.order() == 0) return out;
  std::vector<int> best = detail::greedy_coloring(g);
  int upper = *std::max_element(best.begin(), best.end()) + 1;
  const int lower = std::max(1, clique_number(g).value);
  for (int k = lower; k < upper; ++k) {
    detail::Colorer colorer(g, k);
    if (colorer.run()) {
      best = colorer.coloring();
      upper = k;
      break;
    }
  }
  out.value = upper;
  out.coloring = std::move(best);
  return out;
}

/// Pairwise distance >= 3: no two members adjacent or sharing a neighbour.
inline bool is_packing(const Graph& g, VertexSet s) {
  for (int v : s) {
    const VertexSet others = s.without(v);
    if (g.neighbors(v).intersects(others)) return false;
    for (int u : others) {
      if (u > v && g.neighbors(u).intersects(g.neighbors(v))) return false;
    }
  }
  return true;
}

/// Least minimum dominating packing, if any exists.
inline std::optional<VertexSet> find_perfect_dominating_set(const Graph& g) {
  for (int c = 0; c <= g.order(); ++c) {
    std::optional<VertexSet> found;
    for_each_subset_of_size(g.vertices(), c, [&](VertexSet s) {
      if (is_dominating(g, s) && is_packing(g, s)) {
        found = s;
        return true;
      }
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace fairdom
