#include "mac/generate.hpp"

#include <random>
#include <string>
#include <vector>

#include "mac/errors.hpp"

namespace mac {

Family parse_family(std::string_view name) {
  if (name == "simplex") return Family::Simplex;
  if (name == "boundary") return Family::Boundary;
  if (name == "cycle") return Family::Cycle;
  if (name == "cross_polytope") return Family::CrossPolytope;
  if (name == "random") return Family::Random;
  throw InputError("unknown family '" + std::string(name) +
                   "' (expected simplex, boundary, cycle, cross_polytope or random)");
}

SimplicialComplex cycle(int m) {
  if (m < 3 || m > kMaxVertices) throw InputError("cycle length must be in 3.." + std::to_string(kMaxVertices));
  std::vector<VertexSet> facets;
  for (int v = 1; v <= m; ++v) facets.push_back(VertexSet{v, v % m + 1});
  return SimplicialComplex::from_facets(m, std::move(facets));
}

SimplicialComplex cross_polytope(int k) {
  if (k < 1 || 2 * k > kMaxVertices) throw InputError("cross-polytope dimension must be in 1..31");
  SimplicialComplex out = boundary_simplex(1);
  for (int i = 1; i < k; ++i) out = join(out, boundary_simplex(1));
  return out;
}

SimplicialComplex random_complex(int n, std::uint64_t seed) {
  if (n < 1 || n > kMaxVertices) throw InputError("random complex size must be in 1.." + std::to_string(kMaxVertices));
  std::mt19937_64 rng(seed);
  const std::uint64_t ambient = VertexSet::range(n).bits();
  const std::uint64_t facet_count = 1 + rng() % static_cast<std::uint64_t>(2 * n);
  std::vector<VertexSet> facets;
  VertexSet covered;
  for (std::uint64_t i = 0; i < facet_count; ++i) {
    const VertexSet f(rng() & ambient);
    facets.push_back(f);
    covered = covered | f;
  }
  for_each_vertex(VertexSet(ambient) - covered, [&](int v) { facets.push_back(VertexSet::singleton(v)); });
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex generate(Family family, int size, std::uint64_t seed) {
  switch (family) {
    case Family::Simplex:
      if (size < 0 || size >= kMaxVertices) throw InputError("simplex dimension must be in 0..62");
      return simplex(size);
    case Family::Boundary:
      if (size < 0 || size >= kMaxVertices) throw InputError("boundary dimension must be in 0..62");
      return boundary_simplex(size);
    case Family::Cycle:
      return cycle(size);
    case Family::CrossPolytope:
      return cross_polytope(size);
    case Family::Random:
      return random_complex(size, seed);
  }
  throw InputError("unknown family");
}

}  // namespace mac
