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

#include <stdexcept>
#include <string>
#include <string_view>

namespace fairdom {

enum class errc {
  index_out_of_range,
  self_loop,
  too_large,
  empty_graph,
  bad_char,
  truncated,
  unsupported_order,
  parse_error,
  bad_arity,
  bad_range,
  unknown_family,
  not_a_tree,
  not_regular,
  empty_set,
  not_spanning_regular,
  edge_not_in_graph,
  unknown_suite,
  instance_too_large,
};

constexpr std::string_view to_string(errc code) {
  switch (code) {
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::self_loop: return "SelfLoop";
    case errc::too_large: return "TooLarge";
    case errc::empty_graph: return "EmptyGraphOrderZero";
    case errc::bad_char: return "BadChar";
    case errc::truncated: return "Truncated";
    case errc::unsupported_order: return "UnsupportedOrder";
    case errc::parse_error: return "ParseError";
    case errc::bad_arity: return "BadArity";
    case errc::bad_range: return "BadRange";
    case errc::unknown_family: return "UnknownFamily";
    case errc::not_a_tree: return "NotATree";
    case errc::not_regular: return "NotRegular";
    case errc::empty_set: return "EmptySet";
    case errc::not_spanning_regular: return "NotSpanningRegular";
    case errc::edge_not_in_graph: return "EdgeNotInGraph";
    case errc::unknown_suite: return "UnknownSuite";
    case errc::instance_too_large: return "InstanceTooLarge";
  }
  return "Unknown";
}

/// The single exception type thrown by the library. `code()` identifies the
/// failure class; `line()` is set for text-format parse errors (1-based, 0 if
/// not applicable).
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what, int line = 0)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        detail_(what),
        line_(line) {}

  errc code() const noexcept { return code_; }
  /// Message without the error-name prefix.
  const std::string& detail() const noexcept { return detail_; }
  int line() const noexcept { return line_; }

 private:
  errc code_;
  std::string detail_;
  int line_;
};

}  // namespace fairdom
