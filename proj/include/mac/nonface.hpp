#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mac/simplicial_complex.hpp"
#include "mac/vertex_set.hpp"

namespace mac {

/// A family M of minimal non-faces on {1,...,n}: every member has at least two
/// vertices and no member contains another. Members are sorted by mask value.
class NonfaceFamily {
 public:
  NonfaceFamily() = default;

  /// Validates and canonicalizes (duplicates are dropped).
  /// Throws InputError on a member of size <= 1, a containment between
  /// members, or a vertex outside 1..n.
  static NonfaceFamily from_members(int n, std::vector<VertexSet> members);

  [[nodiscard]] int vertex_count() const noexcept { return n_; }
  [[nodiscard]] const std::vector<VertexSet>& members() const noexcept { return members_; }
  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] bool empty() const noexcept { return members_.empty(); }

  friend bool operator==(const NonfaceFamily&, const NonfaceFamily&) = default;

 private:
  NonfaceFamily(int n, std::vector<VertexSet> members) : n_(n), members_(std::move(members)) {}

  int n_ = 0;
  std::vector<VertexSet> members_;
};

/// G(M): one node per member, an edge wherever two members intersect.
struct NonfaceGraph {
  std::vector<VertexSet> nodes;
  /// (i, j) with i < j, lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Node indices per connected component; ordered by smallest node index.
  std::vector<std::vector<std::size_t>> components;

  [[nodiscard]] bool has_edges() const noexcept { return !edges.empty(); }
};

/// One connected component M_i of G(M) together with ν_i = ⋃ M_i.
struct FamilyComponent {
  NonfaceFamily family;
  VertexSet support;
};

/// K(M,[n]) split as K(M,ν) * Δ^(cone-1).
struct GhostSplit {
  /// K(M,ν), relabeled onto 1..|ν|.
  SimplicialComplex reduced;
  /// ν.
  VertexSet support;
  /// n - |ν|: vertices lying in every facet.
  int cone = 0;
};

/// Inclusion-minimal non-faces of K, computed as the minimal transversals of
/// the facet complements. Throws GhostVertexError if some vertex is not a face.
NonfaceFamily minimal_nonfaces(const SimplicialComplex& k);

/// Reference implementation by cardinality scan over subsets; n <= 24.
NonfaceFamily minimal_nonfaces_by_scan(const SimplicialComplex& k);

/// K(M,[n]): subsets of {1,...,n} containing no member of M.
SimplicialComplex reconstruct(const NonfaceFamily& family, int n);

/// ν = ⋃ M.
VertexSet support(const NonfaceFamily& family) noexcept;

GhostSplit ghost_split(const NonfaceFamily& family, int n);

NonfaceGraph intersection_graph(const NonfaceFamily& family);

std::vector<FamilyComponent> component_decomposition(const NonfaceFamily& family);

/// M_I = {m ∈ M | m ⊆ I}, same ambient labels.
NonfaceFamily restrict_family(const NonfaceFamily& family, VertexSet subset);

/// Members relabeled onto 1..|I|; every member must lie in I.
NonfaceFamily compress_family(const NonfaceFamily& family, VertexSet subset);

/// Minimal hitting sets of a hypergraph (Berge's algorithm). An empty edge
/// admits no transversal and yields an empty result.
std::vector<VertexSet> minimal_transversals(std::vector<VertexSet> edges);

}  // namespace mac
