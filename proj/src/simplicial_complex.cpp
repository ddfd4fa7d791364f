#include "mac/simplicial_complex.hpp"

#include <algorithm>
#include <string>

#include "mac/errors.hpp"

namespace mac {

bool canonical_less(VertexSet a, VertexSet b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

void check_vertex_count(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("vertex count " + std::to_string(n) + " outside 0.." +
                     std::to_string(kMaxVertices));
  }
}

// Keeps the inclusion-maximal members, canonically ordered.
std::vector<VertexSet> maximal_elements(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    const bool covered =
        std::any_of(kept.begin(), kept.end(), [&](VertexSet f) { return s.subset_of(f); });
    if (!covered) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), canonical_less);
  return kept;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<VertexSet> facets) {
  check_vertex_count(n);
  const VertexSet ambient = VertexSet::range(n);
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (!facets[i].subset_of(ambient)) {
      throw InputError("facet " + std::to_string(i + 1) + " " + facets[i].to_string() +
                       " contains vertex " + std::to_string((facets[i] - ambient).max_vertex()) +
                       " outside 1.." + std::to_string(n));
    }
  }
  if (facets.empty()) facets.push_back(VertexSet{});
  return SimplicialComplex(n, maximal_elements(std::move(facets)));
}

SimplicialComplex SimplicialComplex::empty(int n) {
  check_vertex_count(n);
  return SimplicialComplex(n, {VertexSet{}});
}

bool SimplicialComplex::is_face(VertexSet sigma) const noexcept {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](VertexSet f) { return sigma.subset_of(f); });
}

int SimplicialComplex::dimension() const noexcept {
  int d = -1;
  for (VertexSet f : facets_) d = std::max(d, f.size() - 1);
  return d;
}

VertexSet SimplicialComplex::vertex_support() const noexcept {
  VertexSet s;
  for (VertexSet f : facets_) s = s | f;
  return s;
}

std::vector<int> SimplicialComplex::ghost_vertices() const {
  return (VertexSet::range(n_) - vertex_support()).vertices();
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::vector<VertexSet> out;
  for (VertexSet f : facets_) {
    for_each_subset(f, [&](VertexSet s) { out.push_back(s); });
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialComplex simplex(int q) {
  if (q < 0) throw InputError("simplex dimension must be >= 0");
  return SimplicialComplex::from_facets(q + 1, {VertexSet::range(q + 1)});
}

SimplicialComplex boundary_simplex(int q) {
  if (q < 0) throw InputError("boundary_simplex dimension must be >= 0");
  const int n = q + 1;
  if (q == 0) return SimplicialComplex::empty(1);
  std::vector<VertexSet> facets;
  for (int v = 1; v <= n; ++v) facets.push_back(VertexSet::range(n).erase(v));
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  const int n1 = k1.vertex_count();
  const int n = n1 + k2.vertex_count();
  if (n > kMaxVertices) throw InputError("join would exceed " + std::to_string(kMaxVertices) + " vertices");
  std::vector<VertexSet> facets;
  facets.reserve(k1.facets().size() * k2.facets().size());
  for (VertexSet a : k1.facets()) {
    for (VertexSet b : k2.facets()) {
      facets.push_back(a | VertexSet(b.bits() << n1));
    }
  }
  return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, VertexSet subset) {
  std::vector<VertexSet> facets;
  facets.reserve(k.facets().size());
  for (VertexSet f : k.facets()) facets.push_back(f & subset);
  return SimplicialComplex::from_facets(k.vertex_count(), std::move(facets));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& k, VertexSet subset) {
  subset = subset & VertexSet::range(k.vertex_count());
  std::vector<VertexSet> facets;
  facets.reserve(k.facets().size());
  for (VertexSet f : k.facets()) facets.push_back(compress(f & subset, subset));
  return SimplicialComplex::from_facets(subset.size(), std::move(facets));
}

SimplicialComplex relabel(const SimplicialComplex& k, VertexSet targets, int n) {
  if (targets.size() < k.vertex_count()) {
    throw InputError("relabel target set smaller than the complex's vertex count");
  }
  std::vector<VertexSet> facets;
  facets.reserve(k.facets().size());
  for (VertexSet f : k.facets()) facets.push_back(expand(f, targets));
  return SimplicialComplex::from_facets(n, std::move(facets));
}

}  // namespace mac
