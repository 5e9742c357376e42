#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace factorlab {

using Vertex = int;

/// Hard bound on graph order; one machine word per adjacency row.
inline constexpr int kMaxVertices = 64;

/// A set of vertices drawn from 0..63, stored as a single 64-bit word.
class VertexSet {
public:
  constexpr VertexSet() noexcept = default;
  constexpr explicit VertexSet(std::uint64_t bits) noexcept : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) noexcept {
    for (Vertex v : vs) insert(v);
  }

  static constexpr VertexSet full(int n) noexcept {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) noexcept {
    return VertexSet(std::uint64_t{1} << v);
  }
  static VertexSet of(const std::vector<Vertex>& vs) noexcept {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(Vertex v) const noexcept { return (bits_ >> v) & 1U; }
  constexpr void insert(Vertex v) noexcept { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) noexcept { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr Vertex first() const noexcept { return std::countr_zero(bits_); }
  constexpr bool intersects(VertexSet o) const noexcept { return (bits_ & o.bits_) != 0; }
  constexpr bool subset_of(VertexSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }

  constexpr VertexSet operator|(VertexSet o) const noexcept { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const noexcept { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const noexcept { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) noexcept { bits_ &= ~o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const noexcept = default;

  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() noexcept = default;
    constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}
    constexpr Vertex operator*() const noexcept { return std::countr_zero(rest_); }
    constexpr iterator& operator++() noexcept { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) noexcept { auto old = *this; ++*this; return old; }
    constexpr bool operator==(const iterator&) const noexcept = default;

  private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

  std::vector<Vertex> to_vector() const {
    return std::vector<Vertex>(begin(), end());
  }

  /// "{0,3,5}"
  std::string to_string() const;

private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on sorted member lists. For sets of equal size this is
/// decided by the lowest vertex in the symmetric difference.
bool lex_less(VertexSet a, VertexSet b) noexcept;

}  // namespace factorlab
