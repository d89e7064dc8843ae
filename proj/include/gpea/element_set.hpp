#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace gpea {

/// Element identifiers are dense: 0..n-1, with 0 the zero element.
using Element = unsigned;

/// Largest carrier supported by the bitmask representation.
inline constexpr std::size_t kMaxElements = 64;

/// A subset of the carrier of a fixed finite model, stored as a bitmask.
class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Element operator*() const { return static_cast<Element>(std::countr_zero(rest_)); }
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

  constexpr ElementSet() = default;
  constexpr ElementSet(std::initializer_list<Element> members) {
    for (Element e : members) insert(e);
  }

  static constexpr ElementSet from_bits(std::uint64_t bits) {
    ElementSet s;
    s.bits_ = bits;
    return s;
  }
  /// {0, ..., n-1}
  static constexpr ElementSet full(std::size_t n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr ElementSet single(Element e) { return from_bits(std::uint64_t{1} << e); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Element e) const { return (bits_ >> e) & 1u; }
  constexpr void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Element e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }
  /// Smallest identifier; undefined on the empty set.
  constexpr Element front() const { return static_cast<Element>(std::countr_zero(bits_)); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Element> elements() const { return {begin(), end()}; }

  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return a |= b; }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return a &= b; }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return a -= b; }

  constexpr bool operator==(const ElementSet&) const = default;
  /// Orders by bitmask value.
  constexpr auto operator<=>(const ElementSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace gpea
