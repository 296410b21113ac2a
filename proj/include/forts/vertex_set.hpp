#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace forts {

using Vertex = std::uint32_t;

/// Maximum number of vertices a Graph may hold; one machine word of bits.
inline constexpr std::size_t kMaxVertices = 64;

/// A set of vertices packed into a single 64-bit word.
///
/// Bit i is set iff vertex i is a member. Iteration is in ascending vertex
/// order, which is the order every algorithm in this library relies on for
/// deterministic tie-breaking.
class VertexSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Vertex;

    constexpr Iterator() = default;
    constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Vertex operator*() const { return static_cast<Vertex>(std::countr_zero(rest_)); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) bits_ |= bit(v);
  }

  static constexpr VertexSet singleton(Vertex v) { return VertexSet(bit(v)); }
  /// {0, 1, ..., n-1}
  static constexpr VertexSet first_n(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
  [[nodiscard]] constexpr bool contains(Vertex v) const { return v < 64 && (bits_ & bit(v)) != 0; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  /// Smallest member; undefined on an empty set.
  [[nodiscard]] constexpr Vertex lowest() const { return static_cast<Vertex>(std::countr_zero(bits_)); }

  constexpr void insert(Vertex v) { bits_ |= bit(v); }
  constexpr void erase(Vertex v) { bits_ &= ~bit(v); }
  [[nodiscard]] constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | bit(v)); }
  [[nodiscard]] constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~bit(v)); }

  [[nodiscard]] constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  [[nodiscard]] constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const VertexSet&) const = default;

  [[nodiscard]] constexpr Iterator begin() const { return Iterator(bits_); }
  [[nodiscard]] constexpr Iterator end() const { return Iterator(0); }

  [[nodiscard]] std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending member lists, e.g. {0,2} < {0,2,5} < {1}.
/// This is the canonical order of a FortCollection.
constexpr bool lex_less(VertexSet a, VertexSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int i = std::countr_zero(diff);
  // Both lists agree below i; the set holding i continues with i, the other
  // continues with something larger or ends.
  const std::uint64_t above = ~std::uint64_t{0} << i;
  if ((a.bits() >> i) & 1U) {
    return (b.bits() & above) != 0;
  }
  return (a.bits() & above) == 0;
}

}  // namespace forts
