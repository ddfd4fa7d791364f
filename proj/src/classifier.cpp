#include "mac/classifier.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "mac/errors.hpp"

namespace mac {

RationalTypeVerdict classify(const SimplicialComplex& k) {
  const NonfaceFamily family = minimal_nonfaces(k);
  if (intersection_graph(family).has_edges()) return find_witness(family);
  return elliptic_model(family, k.vertex_count());
}

HyperbolicWitness find_witness(const NonfaceFamily& family) {
  const auto& members = family.members();
  using Key = std::tuple<int, VertexSet, VertexSet>;
  std::optional<Key> best;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!members[i].intersects(members[j])) continue;
      const Key key{(members[i] | members[j]).size(), members[i], members[j]};
      if (!best || key < *best) best = key;
    }
  }
  if (!best) throw NotApplicableError("no two minimal non-faces intersect; Z(K) is elliptic");
  const VertexSet subset = std::get<1>(*best) | std::get<2>(*best);
  return {subset, restrict_family(family, subset)};
}

EllipticModel elliptic_model(const NonfaceFamily& family, int n) {
  if (intersection_graph(family).has_edges()) {
    throw NotApplicableError("minimal non-faces intersect; Z(K) is hyperbolic");
  }
  EllipticModel model;
  for (VertexSet m : family.members()) model.sphere_dims.push_back(2 * m.size() - 1);
  std::sort(model.sphere_dims.begin(), model.sphere_dims.end());
  model.disk_dim = 2 * (n - support(family).size());
  return model;
}

}  // namespace mac
