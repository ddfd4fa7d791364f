#include "mac/nonface.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mac/errors.hpp"

namespace mac {

namespace {

void sort_by_mask(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

// Inclusion-minimal elements, sorted by mask.
std::vector<VertexSet> minimal_elements(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [&](VertexSet k) { return k.subset_of(s); });
    if (!dominated) kept.push_back(s);
  }
  sort_by_mask(kept);
  return kept;
}

}  // namespace

NonfaceFamily NonfaceFamily::from_members(int n, std::vector<VertexSet> members) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("vertex count " + std::to_string(n) + " outside 0.." +
                     std::to_string(kMaxVertices));
  }
  const VertexSet ambient = VertexSet::range(n);
  sort_by_mask(members);
  for (VertexSet m : members) {
    if (!m.subset_of(ambient)) {
      throw InputError("non-face " + m.to_string() + " contains vertex " +
                       std::to_string((m - ambient).max_vertex()) + " outside 1.." +
                       std::to_string(n));
    }
    if (m.size() <= 1) {
      throw InputError("non-face " + m.to_string() + " has fewer than two vertices");
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i != j && members[i].subset_of(members[j])) {
        throw InputError("non-face " + members[i].to_string() + " is contained in " +
                         members[j].to_string());
      }
    }
  }
  return NonfaceFamily(n, std::move(members));
}

std::vector<VertexSet> minimal_transversals(std::vector<VertexSet> edges) {
  std::sort(edges.begin(), edges.end(), canonical_less);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<VertexSet> current{VertexSet{}};
  for (VertexSet edge : edges) {
    if (edge.empty()) return {};
    std::vector<VertexSet> next;
    next.reserve(current.size() * 2);
    for (VertexSet t : current) {
      if (t.intersects(edge)) {
        next.push_back(t);
      } else {
        for_each_vertex(edge, [&](int v) { next.push_back(VertexSet(t).insert(v)); });
      }
    }
    current = minimal_elements(std::move(next));
  }
  return current;
}

NonfaceFamily minimal_nonfaces(const SimplicialComplex& k) {
  const auto ghosts = k.ghost_vertices();
  if (!ghosts.empty()) throw GhostVertexError(ghosts.front());
  const VertexSet ambient = VertexSet::range(k.vertex_count());
  // σ is a non-face iff it meets the complement of every facet.
  std::vector<VertexSet> complements;
  complements.reserve(k.facets().size());
  for (VertexSet f : k.facets()) complements.push_back(ambient - f);
  return NonfaceFamily::from_members(k.vertex_count(), minimal_transversals(std::move(complements)));
}

NonfaceFamily minimal_nonfaces_by_scan(const SimplicialComplex& k) {
  const int n = k.vertex_count();
  if (n > 24) throw ResourceError("subset scan is limited to n <= 24");
  const auto ghosts = k.ghost_vertices();
  if (!ghosts.empty()) throw GhostVertexError(ghosts.front());
  std::vector<VertexSet> found;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const VertexSet m(bits);
    if (m.size() < 2 || k.is_face(m)) continue;
    bool minimal = true;
    for_each_vertex(m, [&](int v) {
      if (minimal && !k.is_face(VertexSet(m).erase(v))) minimal = false;
    });
    if (minimal) found.push_back(m);
  }
  return NonfaceFamily::from_members(n, std::move(found));
}

SimplicialComplex reconstruct(const NonfaceFamily& family, int n) {
  const VertexSet ambient = VertexSet::range(n);
  if (!support(family).subset_of(ambient)) {
    throw InputError("non-face family does not fit in " + std::to_string(n) + " vertices");
  }
  // Faces are the complements of transversals of M; facets pair with the minimal ones.
  std::vector<VertexSet> facets;
  for (VertexSet t : minimal_transversals(family.members())) facets.push_back(ambient - t);
  return SimplicialComplex::from_facets(n, std::move(facets));
}

VertexSet support(const NonfaceFamily& family) noexcept {
  VertexSet s;
  for (VertexSet m : family.members()) s = s | m;
  return s;
}

GhostSplit ghost_split(const NonfaceFamily& family, int n) {
  const VertexSet nu = support(family);
  GhostSplit split{reconstruct(compress_family(family, nu), nu.size()), nu, n - nu.size()};
  return split;
}

NonfaceGraph intersection_graph(const NonfaceFamily& family) {
  NonfaceGraph g;
  g.nodes = family.members();
  const std::size_t count = g.nodes.size();
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (g.nodes[i].intersects(g.nodes[j])) {
        g.edges.emplace_back(i, j);
        const std::size_t a = find(i);
        const std::size_t b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<std::size_t> slot(count, count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t root = find(i);
    if (slot[root] == count) {
      slot[root] = g.components.size();
      g.components.emplace_back();
    }
    g.components[slot[root]].push_back(i);
  }
  return g;
}

std::vector<FamilyComponent> component_decomposition(const NonfaceFamily& family) {
  const NonfaceGraph g = intersection_graph(family);
  std::vector<FamilyComponent> out;
  out.reserve(g.components.size());
  for (const auto& comp : g.components) {
    std::vector<VertexSet> members;
    VertexSet nu;
    for (std::size_t idx : comp) {
      members.push_back(g.nodes[idx]);
      nu = nu | g.nodes[idx];
    }
    out.push_back({NonfaceFamily::from_members(family.vertex_count(), std::move(members)), nu});
  }
  return out;
}

NonfaceFamily restrict_family(const NonfaceFamily& family, VertexSet subset) {
  std::vector<VertexSet> kept;
  for (VertexSet m : family.members()) {
    if (m.subset_of(subset)) kept.push_back(m);
  }
  return NonfaceFamily::from_members(family.vertex_count(), std::move(kept));
}

NonfaceFamily compress_family(const NonfaceFamily& family, VertexSet subset) {
  std::vector<VertexSet> members;
  members.reserve(family.size());
  for (VertexSet m : family.members()) {
    if (!m.subset_of(subset)) {
      throw InputError("non-face " + m.to_string() + " is not contained in " + subset.to_string());
    }
    members.push_back(compress(m, subset));
  }
  return NonfaceFamily::from_members(subset.size(), std::move(members));
}

}  // namespace mac
