#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace cutsetlab {

inline constexpr int kMaxVertices = 64;

/// A set of 1-based vertex labels packed into one machine word.
///
/// Vertex v occupies bit v-1, so iteration is always ascending. Every
/// small set in the library (removed sets, cut sets, transversals,
/// neighbourhoods) uses this type.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
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

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  /// The full vertex range [n] = {1..n}.
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet single(int v) {
    VertexSet s;
    s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(int v) const {
    return v >= 1 && v <= kMaxVertices && ((bits_ >> (v - 1)) & 1U) != 0;
  }
  void insert(int v) {
    check_label(v);
    bits_ |= std::uint64_t{1} << (v - 1);
  }
  void erase(int v) {
    check_label(v);
    bits_ &= ~(std::uint64_t{1} << (v - 1));
  }
  constexpr VertexSet with(int v) const {
    return VertexSet(bits_ | (std::uint64_t{1} << (v - 1)));
  }
  constexpr VertexSet without(int v) const {
    return VertexSet(bits_ & ~(std::uint64_t{1} << (v - 1)));
  }

  /// Smallest member; undefined for the empty set.
  constexpr int min() const { return std::countr_zero(bits_) + 1; }
  constexpr int max() const { return 64 - std::countl_zero(bits_); }

  constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  /// "{1,2,5}"; the empty set prints as "{}".
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : *this) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
    out += '}';
    return out;
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  static void check_label(int v) {
    if (v < 1 || v > kMaxVertices) {
      throw std::out_of_range("vertex label " + std::to_string(v) +
                              " outside 1.." + std::to_string(kMaxVertices));
    }
  }

  std::uint64_t bits_ = 0;
};

/// Canonical order: by cardinality, then lexicographically on the sorted
/// member lists. Among equal-size sets the one owning the smallest element
/// of the symmetric difference comes first.
constexpr bool canonical_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

/// canonical_less as a function object, usable with std::sort for any type
/// that provides the overload.
struct CanonicalLess {
  template <class T>
  bool operator()(const T& a, const T& b) const {
    return canonical_less(a, b);
  }
};

/// Plain lexicographic order on sorted member lists ({1,2,4,5} < {2,3}).
inline bool lex_less(VertexSet a, VertexSet b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

struct VertexSetHash {
  std::size_t operator()(VertexSet s) const noexcept {
    std::uint64_t x = s.bits();
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

}  // namespace cutsetlab
