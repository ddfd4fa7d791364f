#pragma once

#include <variant>
#include <vector>

#include "mac/nonface.hpp"
#include "mac/simplicial_complex.hpp"

namespace mac {

/// Z(K) ≅ S^(d₁) × ... × S^(d_k) × D^(disk_dim), all dᵢ odd.
struct EllipticModel {
  std::vector<int> sphere_dims;  ///< ascending
  int disk_dim = 0;

  friend bool operator==(const EllipticModel&, const EllipticModel&) = default;
};

/// A full subcomplex K_I whose minimal non-faces M_I pairwise intersect.
struct HyperbolicWitness {
  VertexSet subset;
  NonfaceFamily family;

  friend bool operator==(const HyperbolicWitness&, const HyperbolicWitness&) = default;
};

using RationalTypeVerdict = std::variant<EllipticModel, HyperbolicWitness>;

[[nodiscard]] inline bool is_elliptic(const RationalTypeVerdict& v) noexcept {
  return std::holds_alternative<EllipticModel>(v);
}

/// Elliptic iff the minimal non-faces of K are pairwise disjoint.
/// Throws GhostVertexError when some vertex of K is not a face.
RationalTypeVerdict classify(const SimplicialComplex& k);

/// Picks an intersecting pair (m̄₀, m̄₁) minimizing |m̄₀ ∪ m̄₁|, ties broken by
/// the smallest (m̄₀, m̄₁) in member order, and returns I = m̄₀ ∪ m̄₁ with M_I.
/// Throws NotApplicableError if no two members intersect.
HyperbolicWitness find_witness(const NonfaceFamily& family);

/// Sphere and disk dimensions of Z(K(M,[n])) for pairwise disjoint M.
/// Throws NotApplicableError if two members intersect.
EllipticModel elliptic_model(const NonfaceFamily& family, int n);

}  // namespace mac
