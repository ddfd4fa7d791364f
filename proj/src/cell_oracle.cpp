#include "mac/cell_oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "mac/errors.hpp"

namespace mac {

std::size_t moment_angle_cell_count(const SimplicialComplex& k) {
  const int n = k.vertex_count();
  if (n >= 63) return std::numeric_limits<std::size_t>::max();
  std::size_t total = 0;
  for (VertexSet face : k.faces()) {
    const std::size_t add = std::size_t{1} << (n - face.size());
    if (total > std::numeric_limits<std::size_t>::max() - add) {
      return std::numeric_limits<std::size_t>::max();
    }
    total += add;
  }
  return total;
}

MomentAngleCellComplex MomentAngleCellComplex::build(const SimplicialComplex& k, const Limits& limits) {
  const int n = k.vertex_count();
  // The empty face alone contributes 2^n cells.
  if (n >= 63 || (std::size_t{1} << n) > limits.max_cells) {
    throw ResourceError("cell complex of Z(K) needs at least 2^" + std::to_string(n) +
                        " cells; limit is " + std::to_string(limits.max_cells));
  }
  const std::size_t count = moment_angle_cell_count(k);
  if (count > limits.max_cells) {
    throw ResourceError("cell complex of Z(K) needs " + std::to_string(count) + " cells; limit is " +
                        std::to_string(limits.max_cells));
  }
  MomentAngleCellComplex out;
  out.n_ = n;
  const VertexSet ambient = VertexSet::range(n);
  for (VertexSet sigma : k.faces()) {
    for_each_subset(ambient - sigma, [&](VertexSet omega) {
      const Cell cell{sigma, omega};
      const auto dim = static_cast<std::size_t>(cell.dimension());
      if (out.cells_.size() <= dim) out.cells_.resize(dim + 1);
      out.cells_[dim].push_back(cell);
    });
  }
  for (auto& level : out.cells_) std::sort(level.begin(), level.end());
  return out;
}

std::size_t MomentAngleCellComplex::cell_count() const noexcept {
  std::size_t total = 0;
  for (const auto& level : cells_) total += level.size();
  return total;
}

const std::vector<Cell>& MomentAngleCellComplex::cells(int dimension) const {
  if (dimension < 0 || dimension > max_dimension()) return none_;
  return cells_[static_cast<std::size_t>(dimension)];
}

std::size_t MomentAngleCellComplex::index_of(const Cell& cell) const {
  const auto& level = cells(cell.dimension());
  auto it = std::lower_bound(level.begin(), level.end(), cell);
  if (it == level.end() || *it != cell) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(it - level.begin());
}

SparseVector MomentAngleCellComplex::boundary(int dimension, std::size_t index) const {
  const Cell cell = cells(dimension).at(index);
  std::vector<std::pair<std::size_t, int>> terms;
  // ∂(e²) = e¹ at coordinate i; the Koszul sign counts the odd (1-cell)
  // factors in coordinates before i.
  for_each_vertex(cell.disk, [&](int i) {
    const Cell face{VertexSet(cell.disk).erase(i), VertexSet(cell.circle).insert(i)};
    const int odd_before = std::popcount(cell.circle.bits() & ((std::uint64_t{1} << (i - 1)) - 1));
    terms.emplace_back(index_of(face), odd_before % 2 == 0 ? 1 : -1);
  });
  std::sort(terms.begin(), terms.end());
  SparseVector out;
  for (const auto& [i, s] : terms) out.push_back(i, Rational(s));
  return out;
}

bool MomentAngleCellComplex::boundary_squares_to_zero() const {
  for (int d = 2; d <= max_dimension(); ++d) {
    for (std::size_t i = 0; i < cells(d).size(); ++i) {
      SparseVector twice;
      const SparseVector once = boundary(d, i);
      for (const auto& e : once.entries()) {
        const SparseVector face = boundary(d - 1, e.index);
        for (const auto& t : face.entries()) twice.add(t.index, e.value * t.value);
      }
      if (!twice.empty()) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> oracle_betti(const MomentAngleCellComplex& complex, unsigned threads) {
  const int top = complex.max_dimension();
  // ranks[d] = rank of ∂_d : C_d -> C_(d-1)
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
  parallel_for(static_cast<std::size_t>(std::max(top, 0)), threads, [&](std::size_t slot) {
    const int d = static_cast<int>(slot) + 1;
    EchelonBasis basis;
    for (std::size_t i = 0; i < complex.cells(d).size(); ++i) basis.insert(complex.boundary(d, i));
    ranks[static_cast<std::size_t>(d)] = basis.rank();
  });
  std::vector<std::int64_t> betti(static_cast<std::size_t>(top + 1), 0);
  for (int d = 0; d <= top; ++d) {
    const auto slot = static_cast<std::size_t>(d);
    betti[slot] = static_cast<std::int64_t>(complex.cells(d).size() - ranks[slot] - ranks[slot + 1]);
  }
  while (!betti.empty() && betti.back() == 0) betti.pop_back();
  return betti;
}

}  // namespace mac
