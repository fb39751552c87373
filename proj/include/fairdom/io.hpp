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

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fairdom/graph.hpp"

namespace fairdom {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace detail

// graph6, short form only: one byte N(n) = 63 + n for n <= 62, followed by
// the upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per
// byte (most significant first), each byte offset by 63, zero padded.

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline Graph parse_graph6(std::string_view line) {
  line = detail::trim(line);
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  if (line.empty()) throw error(errc::truncated, "empty graph6 record");
  for (char c : line) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) {
      throw error(errc::bad_char, "byte " + std::to_string(b) + " outside 63..126");
    }
  }
  const int n = static_cast<unsigned char>(line[0]) - 63;
  if (n > kMaxOrder) throw error(errc::unsupported_order, "multi-byte order field");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  const std::string_view payload = line.substr(1);
  if (payload.size() < bytes) {
    throw error(errc::truncated, "expected " + std::to_string(bytes) + " payload bytes, got " +
                                     std::to_string(payload.size()));
  }
  if (payload.size() > bytes) {
    throw error(errc::parse_error, "trailing bytes after graph6 payload");
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int value = static_cast<unsigned char>(payload[k / 6]) - 63;
      if ((value >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(n, edges);
}

inline std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxOrder) throw error(errc::unsupported_order, "order above short-form limit");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(63 + (acc << (6 - filled)));
  return out;
}

/// One graph per non-blank line; an optional ">>graph6<<" header is accepted
/// on any line. Errors carry the 1-based line number.
inline std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    if (!detail::trim(line).empty()) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const error& e) {
        throw error(e.code(), "line " + std::to_string(line_no) + ": " + e.detail(), line_no);
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

/// Edge-list format: header "n m", then m lines "u v" with 0-based labels.
/// Blank lines and lines starting with '#' are skipped.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  int m = 0;
  std::vector<Edge> edges;

  auto parse_pair = [&](std::string_view s, int& a, int& b) {
    std::istringstream fields{std::string(s)};
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw error(errc::parse_error,
                  "line " + std::to_string(line_no) + ": expected two integers", line_no);
    }
  };

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    if (!have_header) {
      parse_pair(body, n, m);
      if (n < 0 || m < 0) {
        throw error(errc::parse_error, "line " + std::to_string(line_no) + ": negative count",
                    line_no);
      }
      if (n > kMaxOrder) {
        throw error(errc::too_large, "order " + std::to_string(n), line_no);
      }
      have_header = true;
      continue;
    }
    int u = 0;
    int v = 0;
    parse_pair(body, u, v);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw error(errc::index_out_of_range,
                  "line " + std::to_string(line_no) + ": endpoint outside 0.." +
                      std::to_string(n - 1),
                  line_no);
    }
    if (u == v) {
      throw error(errc::self_loop, "line " + std::to_string(line_no) + ": self-loop", line_no);
    }
    edges.push_back({u, v});
  }
  if (!have_header) throw error(errc::parse_error, "missing \"n m\" header", 1);
  if (static_cast<int>(edges.size()) != m) {
    throw error(errc::parse_error,
                "header announces " + std::to_string(m) + " edges, found " +
                    std::to_string(edges.size()),
                line_no);
  }
  return Graph::from_edges(n, edges);
}

inline std::string write_edge_list(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (Edge e : edges) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

inline std::string write_dot(const Graph& g, std::string_view name = "G") {
  std::string out = "graph " + std::string(name) + " {\n";
  for (int v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (Edge e : g.edges()) {
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  }
  return out + "}\n";
}

}  // namespace fairdom
