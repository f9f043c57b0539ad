#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace stratkit {

/// Maximum number of points (or elements) a single structure may carry.
inline constexpr std::size_t kMaxPoints = 64;

/// A subset of {0, ..., 63}, stored as a bit mask over point indices.
///
/// Indices refer to the insertion order of the owning structure's point
/// list. All operations are order-independent in their results.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr PointSet single(std::size_t i) { return PointSet{std::uint64_t{1} << i}; }
  static constexpr PointSet full(std::size_t n) {
    return PointSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(PointSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

  /// Complement relative to the universe {0, ..., n-1}.
  constexpr PointSet complement(std::size_t n) const { return PointSet{~bits_ & full(n).bits_}; }

  /// Smallest member; undefined on the empty set.
  constexpr std::size_t front() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }
  constexpr PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }
  constexpr PointSet& operator-=(PointSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet{a.bits_ | b.bits_}; }
  friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet{a.bits_ & b.bits_}; }
  friend constexpr PointSet operator-(PointSet a, PointSet b) { return PointSet{a.bits_ & ~b.bits_}; }
  friend constexpr bool operator==(PointSet, PointSet) = default;
  friend constexpr auto operator<=>(PointSet a, PointSet b) { return a.bits_ <=> b.bits_; }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{0}; }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace stratkit
