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

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace fairdom {

inline constexpr int kMaxOrder = 62;

/// A subset of {0, ..., 63} stored in one machine word. Ordering compares the
/// raw mask, which together with size() gives the library-wide witness
/// tie-break (ascending cardinality, then ascending mask).
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) bits_ |= bit(v);
  }

  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(bit(v)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | bit(v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~bit(v)); }
  /// Complement relative to the vertex range 0..n-1.
  constexpr VertexSet complement_in(int n) const {
    return VertexSet(~bits_ & range(n).bits_);
  }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  /// "[0,3,5]"
  std::string to_string() const {
    std::string out = "[";
    bool first = true;
    for (int v : *this) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
    return out + "]";
  }

 private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  std::uint64_t bits_ = 0;
};

/// Next mask with the same popcount (Gosper's hack). Returns 0 once the
/// sequence would leave the low `n` bits.
constexpr std::uint64_t next_same_popcount(std::uint64_t x, int n) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  if (r == 0) return 0;
  const std::uint64_t next = (((r ^ x) >> 2) / c) | r;
  if (n < 64 && (next >> n) != 0) return 0;
  return next;
}

/// Calls `fn(VertexSet)` for every `size`-subset of `universe` in ascending
/// mask order; stops early and returns true when `fn` returns true.
template <class Fn>
bool for_each_subset_of_size(VertexSet universe, int size, Fn&& fn) {
  const int k = universe.size();
  if (size < 0 || size > k) return false;
  if (size == 0) return fn(VertexSet{});
  // Enumerate masks over the compressed index space, then scatter onto the
  // members of `universe`; the scatter preserves ordering.
  int members[64];
  int i = 0;
  for (int v : universe) members[i++] = v;
  std::uint64_t x = (size == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
  while (x != 0) {
    std::uint64_t s = 0;
    for (std::uint64_t r = x; r != 0; r &= r - 1) {
      s |= std::uint64_t{1} << members[std::countr_zero(r)];
    }
    if (fn(VertexSet(s))) return true;
    x = next_same_popcount(x, k);
  }
  return false;
}

}  // namespace fairdom
