#pragma once

#include <vector>

#include "mac/vertex_set.hpp"

namespace mac {

/// A finite abstract simplicial complex on the ambient vertex set {1,...,n},
/// stored by its facets.
///
/// The face family is the downward closure of the facets and always contains
/// the empty set; the minimal complex {∅} is stored as the single facet ∅.
/// A vertex of {1,...,n} lying in no facet is a "ghost": it belongs to the
/// ambient set but is not a face. Facets are kept in canonical order
/// (cardinality, then mask value), so `==` is structural equality.
class SimplicialComplex {
 public:
  /// Reduces `facets` to its maximal elements and sorts them canonically.
  /// Throws InputError if n is outside 0..63 or a facet leaves {1,...,n}.
  static SimplicialComplex from_facets(int n, std::vector<VertexSet> facets);

  /// The complex {∅} on n vertices.
  static SimplicialComplex empty(int n);

  [[nodiscard]] int vertex_count() const noexcept { return n_; }
  [[nodiscard]] const std::vector<VertexSet>& facets() const noexcept { return facets_; }

  [[nodiscard]] bool is_face(VertexSet sigma) const noexcept;

  /// max |facet| - 1; -1 for {∅}.
  [[nodiscard]] int dimension() const noexcept;

  /// Union of the facets, i.e. the vertices that are faces.
  [[nodiscard]] VertexSet vertex_support() const noexcept;

  /// Vertices of {1,...,n} that are not faces, ascending.
  [[nodiscard]] std::vector<int> ghost_vertices() const;

  /// Every face including ∅, sorted by (cardinality, mask).
  [[nodiscard]] std::vector<VertexSet> faces() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex(int n, std::vector<VertexSet> facets) : n_(n), facets_(std::move(facets)) {}

  int n_ = 0;
  std::vector<VertexSet> facets_;
};

/// Canonical facet order: cardinality first, then mask value.
bool canonical_less(VertexSet a, VertexSet b) noexcept;

/// The Δ^q simplex on q+1 vertices.
SimplicialComplex simplex(int q);

/// ∂Δ^q on q+1 vertices; boundary_simplex(0) is {∅} on one vertex.
SimplicialComplex boundary_simplex(int q);

/// K₁ * K₂ with K₂'s vertices shifted by K₁.vertex_count().
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// K_I = {σ ∩ I | σ ∈ K}, keeping the ambient labels 1..n.
SimplicialComplex full_subcomplex(const SimplicialComplex& k, VertexSet subset);

/// K_I relabeled onto 1..|I| in increasing vertex order.
SimplicialComplex induced_subcomplex(const SimplicialComplex& k, VertexSet subset);

/// Sends vertex i of `k` to the i-th smallest vertex of `targets`, inside an
/// ambient set of n vertices. Requires |targets| >= k.vertex_count().
SimplicialComplex relabel(const SimplicialComplex& k, VertexSet targets, int n);

}  // namespace mac
