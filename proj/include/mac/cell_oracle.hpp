#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mac/exact_linalg.hpp"
#include "mac/limits.hpp"
#include "mac/simplicial_complex.hpp"

namespace mac {

/// A product cell of (D²)ⁿ: coordinates in `disk` carry the 2-cell, those in
/// `circle` the 1-cell, the rest the 0-cell. It lies in Z(K) iff disk ∈ K.
struct Cell {
  VertexSet disk;
  VertexSet circle;

  [[nodiscard]] int dimension() const noexcept { return 2 * disk.size() + circle.size(); }
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Cellular chain complex of Z(K;(D²,S¹)) built straight from its definition
/// as the union of the products D(σ), σ ∈ K.
class MomentAngleCellComplex {
 public:
  /// Throws ResourceError when the cell count would exceed limits.max_cells.
  static MomentAngleCellComplex build(const SimplicialComplex& k, const Limits& limits = {});

  [[nodiscard]] int vertex_count() const noexcept { return n_; }
  [[nodiscard]] int max_dimension() const noexcept { return static_cast<int>(cells_.size()) - 1; }
  [[nodiscard]] std::size_t cell_count() const noexcept;
  /// Cells of one dimension, sorted.
  [[nodiscard]] const std::vector<Cell>& cells(int dimension) const;
  /// ∂ of the `index`-th cell of `dimension`, over cells(dimension - 1).
  [[nodiscard]] SparseVector boundary(int dimension, std::size_t index) const;
  [[nodiscard]] bool boundary_squares_to_zero() const;

 private:
  [[nodiscard]] std::size_t index_of(const Cell& cell) const;

  int n_ = 0;
  std::vector<std::vector<Cell>> cells_;
  std::vector<Cell> none_;
};

/// Σ_{σ∈K} 2^(n-|σ|), saturating at SIZE_MAX.
std::size_t moment_angle_cell_count(const SimplicialComplex& k);

/// Rational Betti numbers of the complex, trimmed after the last nonzero degree.
std::vector<std::int64_t> oracle_betti(const MomentAngleCellComplex& complex, unsigned threads = 0);

}  // namespace mac
