#pragma once

#include <cstdint>
#include <string_view>

#include "mac/simplicial_complex.hpp"

namespace mac {

enum class Family { Simplex, Boundary, Cycle, CrossPolytope, Random };

/// "simplex", "boundary", "cycle", "cross_polytope", "random".
Family parse_family(std::string_view name);

/// The m-gon C_m on vertices 1..m, m >= 3.
SimplicialComplex cycle(int m);

/// Join of k copies of ∂Δ¹ (the boundary of the k-dimensional cross-polytope).
SimplicialComplex cross_polytope(int k);

/// A random complex on n vertices: a seeded random facet set, then every
/// uncovered vertex is added as a singleton facet. Same (n, seed) gives the
/// same complex on every platform.
SimplicialComplex random_complex(int n, std::uint64_t seed);

/// `size` is q for simplex/boundary, m for cycle, k for cross_polytope and n
/// for random. Throws InputError on an out-of-range size.
SimplicialComplex generate(Family family, int size, std::uint64_t seed = 0);

}  // namespace mac
