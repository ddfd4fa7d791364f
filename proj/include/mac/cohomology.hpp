#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "mac/exact_linalg.hpp"
#include "mac/limits.hpp"
#include "mac/simplicial_complex.hpp"
#include "mac/vertex_set.hpp"

namespace mac {

/// Augmented simplicial cochain complex over Q. Degree j has as basis the faces
/// with j+1 vertices (degree -1 is the empty face), each oriented by the
/// ascending vertex order. (dφ)(τ) = Σ_i (-1)^i φ(τ minus its i-th vertex).
class CochainComplex {
 public:
  /// `faces` must be downward closed and contain ∅.
  explicit CochainComplex(std::vector<VertexSet> faces);

  [[nodiscard]] int max_degree() const noexcept { return static_cast<int>(by_degree_.size()) - 2; }
  /// Faces of degree j (j >= -1), sorted by mask; empty outside the range.
  [[nodiscard]] const std::vector<VertexSet>& basis(int degree) const;
  [[nodiscard]] std::size_t rank(int degree) const { return basis(degree).size(); }
  /// Position of sigma in basis(|sigma|-1), or npos.
  [[nodiscard]] std::size_t index_of(VertexSet sigma) const;

  /// d applied to a degree-j cochain.
  [[nodiscard]] SparseVector coboundary(int degree, const SparseVector& cochain) const;
  /// d(e_sigma) for the basis element at `index` of degree j.
  [[nodiscard]] SparseVector coboundary_of_basis(int degree, std::size_t index) const;

  /// True when d∘d vanishes on every basis element.
  [[nodiscard]] bool coboundary_squares_to_zero() const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::vector<VertexSet>> by_degree_;  // slot j+1 holds degree j
  VertexSet vertices_;
  std::vector<VertexSet> empty_;
};

/// Reduced rational cohomology H̃^j(K;Q) for -1 <= j <= dim K, with a fixed
/// basis of cocycle representatives per degree.
class ReducedCohomology {
 public:
  explicit ReducedCohomology(CochainComplex cochains);

  [[nodiscard]] const CochainComplex& cochains() const noexcept { return cochains_; }
  [[nodiscard]] int max_degree() const noexcept { return cochains_.max_degree(); }
  [[nodiscard]] std::size_t dimension(int degree) const;
  [[nodiscard]] bool is_zero() const;
  /// Cocycles whose classes form a basis of H̃^j.
  [[nodiscard]] const std::vector<SparseVector>& representatives(int degree) const;

  /// Coordinates of the class of `cocycle` in the representative basis.
  /// Throws InputError if `cocycle` is not a cocycle.
  [[nodiscard]] std::vector<Rational> coordinates(int degree, const SparseVector& cocycle) const;

 private:
  struct Degree {
    std::vector<SparseVector> representatives;
    EchelonBasis reducer;  // coboundaries (untracked) then representatives
  };

  CochainComplex cochains_;
  std::vector<Degree> degrees_;  // slot j+1
};

/// Reduced cohomology of K (all faces of K).
ReducedCohomology reduced_cohomology(const SimplicialComplex& k);

/// One nonzero summand H̃^j(K_I;Q) of the Hochster decomposition. It sits in
/// total degree j + |I| + 1 of H*(Z(K);Q).
struct HochsterEntry {
  VertexSet subset;
  int degree = 0;
  std::size_t dimension = 0;

  [[nodiscard]] int total_degree() const noexcept { return degree + subset.size() + 1; }
  friend bool operator==(const HochsterEntry&, const HochsterEntry&) = default;
};

/// A basis class of the table: the `index`-th representative of H̃^j(K_I).
struct ClassRef {
  VertexSet subset;
  int degree = 0;
  std::size_t index = 0;

  [[nodiscard]] int total_degree() const noexcept { return degree + subset.size() + 1; }
};

/// An element of one summand H̃^j(K_I), in coordinates over its representatives.
struct TableClass {
  VertexSet subset;
  int degree = 0;
  std::vector<Rational> coordinates;  ///< empty when the summand is zero

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] int total_degree() const noexcept { return degree + subset.size() + 1; }
};

/// The additive decomposition H*(Z(K);Q) ≅ ⊕_I H̃^(*-|I|-1)(K_I;Q) over all
/// I ⊆ {1,...,n}, with cocycle representatives kept for the star product.
class HochsterTable {
 public:
  /// Throws ResourceError if n exceeds limits.max_vertices.
  static HochsterTable build(const SimplicialComplex& k, const Limits& limits = {});

  [[nodiscard]] int vertex_count() const noexcept { return n_; }
  /// Nonzero entries sorted by (subset mask, degree); includes (∅, -1).
  [[nodiscard]] const std::vector<HochsterEntry>& entries() const noexcept { return entries_; }
  /// Betti numbers of Z(K), trimmed after the last nonzero degree.
  [[nodiscard]] const std::vector<std::int64_t>& betti() const noexcept { return betti_; }
  /// Cohomology of K_I, or nullptr when it vanishes.
  [[nodiscard]] const ReducedCohomology* cohomology(VertexSet subset) const;

  /// Every basis class (subset, degree, index), in entry order.
  [[nodiscard]] std::vector<ClassRef> basis_classes() const;

 private:
  int n_ = 0;
  std::vector<HochsterEntry> entries_;
  std::vector<std::int64_t> betti_;
  std::map<VertexSet, std::shared_ptr<const ReducedCohomology>> groups_;
};

/// Betti numbers of Z(K) from the Hochster decomposition (no representatives).
std::vector<std::int64_t> hochster_betti(const SimplicialComplex& k, const Limits& limits = {});

/// The join cross cochain α×β on the faces of `target` (a complex on J ∪ L):
/// (α×β)(σ) = ε·α(σ∩J)·β(σ∩L), ε the shuffle sign of (σ∩J, σ∩L) in sorted
/// order times (-1)^((p+1)q).
SparseVector cross_cochain(const CochainComplex& left, VertexSet left_subset, int left_degree,
                           const SparseVector& alpha, const CochainComplex& right,
                           VertexSet right_subset, int right_degree, const SparseVector& beta,
                           const CochainComplex& target);

/// α * β. Zero when the supports intersect; otherwise the class of α×β in
/// H̃^(p+q+1)(K_{J∪L}). Throws InputError for a reference not in the table.
TableClass star_product(const ClassRef& alpha, const ClassRef& beta, const HochsterTable& table);

struct RingCertificate {
  enum class Kind {
    NoDisjointSupport,   ///< no disjoint nonempty J, L both carry cohomology
    AllProductsVanish,   ///< such pairs exist, but every product of basis classes is zero
    NonzeroProduct,      ///< `left * right` = `product` ≠ 0
  };
  Kind kind = Kind::NoDisjointSupport;
  ClassRef left;
  ClassRef right;
  TableClass product;
};

struct TrivialRingResult {
  bool trivial = true;
  RingCertificate certificate;
};

/// Decides whether every product of two positive-degree classes vanishes.
TrivialRingResult is_trivial_ring(const HochsterTable& table);
TrivialRingResult is_trivial_ring(const SimplicialComplex& k, const Limits& limits = {});

/// Fast combinatorial check: true when no two disjoint nonempty subsets both
/// carry nonzero reduced cohomology (then the ring is trivial).
bool lacks_disjoint_support(const HochsterTable& table);

/// Evaluates star_product on every ordered pair of positive-degree basis
/// classes and returns the nonzero ones as (left, right) pairs.
std::vector<std::pair<ClassRef, ClassRef>> nonzero_products(const HochsterTable& table);

}  // namespace mac
