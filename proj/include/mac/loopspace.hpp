#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "mac/classifier.hpp"
#include "mac/limits.hpp"
#include "mac/simplicial_complex.hpp"

namespace mac {

using BigInt = mpz_class;

/// A product or a wedge of spheres, as a rational homotopy model.
struct SphereModel {
  enum class Kind { Product, Wedge };
  Kind kind = Kind::Product;
  std::vector<int> dims;  ///< ascending

  friend bool operator==(const SphereModel&, const SphereModel&) = default;
};

/// l_k = dim π_(k+1)(model) ⊗ Q for k = 1..truncation.
struct HomotopyRankSeries {
  SphereModel model;
  std::vector<BigInt> ranks;  ///< ranks[k-1] = l_k

  [[nodiscard]] int truncation() const noexcept { return static_cast<int>(ranks.size()); }
  /// l_k, zero outside 1..truncation.
  [[nodiscard]] BigInt rank(int k) const;
  /// S_m = l_1 + ... + l_m.
  [[nodiscard]] BigInt partial_sum(int m) const;
};

struct GrowthCertificate {
  enum class Kind { Finite, Exponential };
  Kind kind = Kind::Finite;
  /// (S_N / S_(N/2))^(2/N); empty when S_(N/2) = 0.
  std::optional<double> ratio;
  /// Whether the numeric evidence agrees with `kind` at the given threshold.
  bool numeric_agrees = true;
};

/// Product model of an elliptic verdict (the disk factor contributes nothing).
SphereModel product_model(const EllipticModel& model);

/// Wedge of spheres with one S^d per unit of Betti_d(Z(K_I)), d > 0.
/// Throws NotApplicableError when H̃*(Z(K_I)) is not a trivial ring and
/// GhostVertexError when some vertex of K_I is not a face.
SphereModel wedge_model(const SimplicialComplex& witness, const Limits& limits = {});

/// Ranks of the free graded Lie algebra on generators of degrees dᵢ - 1, solved
/// from ∏_{k even}(1-t^k)^(-l_k) ∏_{k odd}(1+t^k)^(l_k) = 1/(1 - Σ t^(dᵢ-1)).
/// Throws InputError unless the model is a nonempty wedge, dᵢ >= 2, N >= 1.
HomotopyRankSeries free_lie_ranks(const SphereModel& wedge, int truncation);

/// l_(d-1) += 1 per odd sphere S^d. Throws InputError on an even dimension or
/// a wedge model.
HomotopyRankSeries product_ranks(const SphereModel& product, int truncation);

/// Coefficients of 1/(1 - Σ t^(dᵢ-1)) through t^truncation.
std::vector<BigInt> tensor_algebra_series(const std::vector<int>& dims, int truncation);

/// Coefficients of ∏_{k even}(1-t^k)^(-l_k) ∏_{k odd}(1+t^k)^(l_k) through t^truncation.
std::vector<BigInt> enveloping_series(const std::vector<BigInt>& ranks, int truncation);

/// Finite vs. exponential growth. The split follows the model (a wedge of at
/// least two spheres grows exponentially); the ratio is reported alongside.
/// Throws InputError if the truncation is below 12.
GrowthCertificate growth_certificate(const HomotopyRankSeries& series, double delta = 0.05);

}  // namespace mac
