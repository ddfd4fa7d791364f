#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mac {

/// Largest supported ambient vertex count.
inline constexpr int kMaxVertices = 63;

/// A subset of the 1-indexed vertex set {1,...,n}, stored as a 64-bit mask
/// with vertex v at bit v-1.
class VertexSet {
 public:
  constexpr VertexSet() noexcept = default;
  constexpr explicit VertexSet(std::uint64_t bits) noexcept : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices);

  static VertexSet from_vertices(const std::vector<int>& vertices);

  /// {1,...,n}.
  static constexpr VertexSet range(int n) noexcept {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet singleton(int v) noexcept {
    return VertexSet(std::uint64_t{1} << (v - 1));
  }

  [[nodiscard]] constexpr std::uint64_t bits() const noexcept { return bits_; }
  [[nodiscard]] constexpr int size() const noexcept { return std::popcount(bits_); }
  [[nodiscard]] constexpr bool empty() const noexcept { return bits_ == 0; }
  [[nodiscard]] constexpr bool contains(int v) const noexcept {
    return v >= 1 && v <= 64 && ((bits_ >> (v - 1)) & 1U) != 0;
  }
  [[nodiscard]] constexpr bool subset_of(VertexSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  [[nodiscard]] constexpr bool intersects(VertexSet other) const noexcept {
    return (bits_ & other.bits_) != 0;
  }
  /// Largest vertex, or 0 for the empty set.
  [[nodiscard]] constexpr int max_vertex() const noexcept {
    return 64 - std::countl_zero(bits_);
  }

  constexpr VertexSet& insert(int v) noexcept {
    bits_ |= std::uint64_t{1} << (v - 1);
    return *this;
  }
  constexpr VertexSet& erase(int v) noexcept {
    bits_ &= ~(std::uint64_t{1} << (v - 1));
    return *this;
  }

  /// Ascending list of vertices.
  [[nodiscard]] std::vector<int> vertices() const;

  /// "{1,3,4}"
  [[nodiscard]] std::string to_string() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept {
    return VertexSet(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(VertexSet a, VertexSet b) noexcept = default;
  /// Orders by mask value; used wherever a deterministic tie-break is needed.
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) noexcept {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Calls f(v) for each vertex of s in ascending order.
template <typename F>
constexpr void for_each_vertex(VertexSet s, F&& f) {
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) {
    f(std::countr_zero(b) + 1);
  }
}

/// Calls f(t) for every subset t of s, including the empty set and s itself.
template <typename F>
constexpr void for_each_subset(VertexSet s, F&& f) {
  const std::uint64_t full = s.bits();
  std::uint64_t sub = full;
  while (true) {
    f(VertexSet(sub));
    if (sub == 0) break;
    sub = (sub - 1) & full;
  }
}

/// Relabels the vertices of s lying in `support` onto 1..|support| by rank.
VertexSet compress(VertexSet s, VertexSet support);
/// Inverse of compress: vertex i goes to the i-th smallest vertex of `support`.
VertexSet expand(VertexSet s, VertexSet support);

}  // namespace mac
