#include <random>

#include "doctest.h"
#include "mac/errors.hpp"
#include "mac/nonface.hpp"
#include "oracles.hpp"

using mac::NonfaceFamily;
using mac::SimplicialComplex;
using mac::VertexSet;

namespace {

// Sends vertex i (1-based) of s to labels[i-1].
VertexSet map_vertices(VertexSet s, const std::vector<int>& labels) {
  VertexSet out;
  mac::for_each_vertex(s, [&](int v) { out.insert(labels[static_cast<std::size_t>(v - 1)]); });
  return out;
}

std::vector<VertexSet> sorted_facets(std::vector<VertexSet> facets) {
  std::sort(facets.begin(), facets.end(), mac::canonical_less);
  return facets;
}

// Joins the relabeled components and maps the result back onto ambient labels.
std::vector<VertexSet> join_in_ambient_labels(const std::vector<std::pair<SimplicialComplex, VertexSet>>& parts) {
  SimplicialComplex joined = SimplicialComplex::empty(0);
  std::vector<int> labels;
  for (const auto& [piece, support] : parts) {
    joined = mac::join(joined, piece);
    for (int v : support.vertices()) labels.push_back(v);
  }
  std::vector<VertexSet> facets;
  for (VertexSet f : joined.facets()) facets.push_back(map_vertices(f, labels));
  return sorted_facets(facets);
}

NonfaceFamily c5_family() {
  return NonfaceFamily::from_members(5, {{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}});
}

}  // namespace

TEST_SUITE("nonface_engine") {
  TEST_CASE("family validation") {
    CHECK_THROWS_AS(NonfaceFamily::from_members(3, {{1}}), mac::InputError);
    CHECK_THROWS_AS(NonfaceFamily::from_members(3, {{1, 2}, {1, 2, 3}}), mac::InputError);
    CHECK_THROWS_AS(NonfaceFamily::from_members(3, {{1, 4}}), mac::InputError);
    const auto m = NonfaceFamily::from_members(4, {{2, 4}, {1, 3}, {2, 4}});
    CHECK(m.members() == std::vector<VertexSet>{{1, 3}, {2, 4}});
  }

  TEST_CASE("minimal non-faces of standard complexes") {
    for (int n = 2; n <= 7; ++n) {
      const auto boundary = mac::boundary_simplex(n - 1);
      CHECK(mac::minimal_nonfaces(boundary).members() == std::vector<VertexSet>{VertexSet::range(n)});
      CHECK(mac::testing::brute_minimal_nonfaces(boundary) == std::vector<VertexSet>{VertexSet::range(n)});
      CHECK(mac::minimal_nonfaces(mac::simplex(n - 1)).empty());
    }
    const auto c4 = SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    const std::vector<VertexSet> expected{{1, 3}, {2, 4}};
    CHECK(mac::testing::brute_minimal_nonfaces(c4) == expected);
    CHECK(mac::minimal_nonfaces(c4).members() == expected);
  }

  TEST_CASE("ghost vertices are rejected") {
    const auto k = SimplicialComplex::from_facets(3, {{1, 2}});
    CHECK_THROWS_AS(mac::minimal_nonfaces(k), mac::GhostVertexError);
    try {
      (void)mac::minimal_nonfaces(k);
    } catch (const mac::GhostVertexError& e) {
      CHECK(e.vertex() == 3);
      CHECK(std::string(e.what()).find("vertex 3") != std::string::npos);
    }
  }

  TEST_CASE("minimal transversals") {
    CHECK(mac::minimal_transversals({}) == std::vector<VertexSet>{VertexSet{}});
    CHECK(mac::minimal_transversals({VertexSet{}}).empty());
    const auto t = mac::minimal_transversals({{1, 2}, {2, 3}});
    CHECK(sorted_facets(t) == sorted_facets({{2}, {1, 3}}));
  }

  TEST_CASE("reconstruct") {
    CHECK(mac::reconstruct(NonfaceFamily::from_members(2, {{1, 2}}), 2) == mac::boundary_simplex(1));
    CHECK(mac::reconstruct(NonfaceFamily::from_members(3, {}), 3) == mac::simplex(2));
    const auto c4 = SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK(mac::reconstruct(NonfaceFamily::from_members(4, {{1, 3}, {2, 4}}), 4) == c4);
  }

  TEST_CASE("reconstruct matches subset enumeration") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const auto members = mac::testing::random_antichain(rng, n, 6);
      const auto m = NonfaceFamily::from_members(n, members);
      const auto k = mac::reconstruct(m, n);
      REQUIRE(mac::testing::brute_faces(k) == mac::testing::brute_reconstruct_faces(members, n));
    }
  }

  TEST_CASE("round trip is exhaustive for n <= 5") {
    std::size_t count = 0;
    for (int n = 1; n <= 5; ++n) {
      for (const auto& k : mac::testing::all_complexes(n)) {
        const auto m = mac::minimal_nonfaces(k);
        REQUIRE(m.members() == mac::testing::brute_minimal_nonfaces(k));
        REQUIRE(mac::minimal_nonfaces_by_scan(k) == m);
        REQUIRE(mac::reconstruct(m, n) == k);
        ++count;
      }
    }
    // Labelled complexes with all singletons present: 1, 2, 9, 114, 6894.
    CHECK(count == 1 + 2 + 9 + 114 + 6894);
  }

  TEST_CASE("round trip on random complexes n <= 8") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 500; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 8);
      const auto k = mac::testing::random_test_complex(rng, n);
      const auto m = mac::minimal_nonfaces(k);
      REQUIRE(m.members() == mac::testing::brute_minimal_nonfaces(k));
      REQUIRE(mac::reconstruct(m, n) == k);
    }
  }

  TEST_CASE("dual round trip") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const auto m = NonfaceFamily::from_members(n, mac::testing::random_antichain(rng, n, 6));
      REQUIRE(mac::minimal_nonfaces(mac::reconstruct(m, n)) == m);
    }
  }

  TEST_CASE("support") {
    CHECK(mac::support(NonfaceFamily::from_members(4, {{1, 3}, {2, 4}})) == VertexSet{1, 2, 3, 4});
    CHECK(mac::support(NonfaceFamily::from_members(4, {})) == VertexSet{});
    CHECK(mac::support(NonfaceFamily::from_members(3, {{1, 2}, {2, 3}})) == VertexSet{1, 2, 3});
  }

  TEST_CASE("ghost split examples") {
    const auto split = mac::ghost_split(NonfaceFamily::from_members(3, {{1, 2}}), 3);
    CHECK(split.reduced == mac::boundary_simplex(1));
    CHECK(split.support == VertexSet{1, 2});
    CHECK(split.cone == 1);
    CHECK(mac::reconstruct(NonfaceFamily::from_members(3, {{1, 2}}), 3) ==
          mac::join(mac::boundary_simplex(1), mac::simplex(0)));

    const auto all_cone = mac::ghost_split(NonfaceFamily::from_members(2, {}), 2);
    CHECK(all_cone.reduced == SimplicialComplex::empty(0));
    CHECK(all_cone.cone == 2);

    const auto c4 = mac::ghost_split(NonfaceFamily::from_members(4, {{1, 3}, {2, 4}}), 4);
    CHECK(c4.cone == 0);
    CHECK(c4.reduced == SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  }

  TEST_CASE("ghost split is a join with a simplex") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const auto m = NonfaceFamily::from_members(n, mac::testing::random_antichain(rng, n, 4));
      const auto split = mac::ghost_split(m, n);
      const VertexSet nu = mac::support(m);
      REQUIRE(split.support == nu);
      REQUIRE(split.cone == n - nu.size());
      std::vector<std::pair<SimplicialComplex, VertexSet>> parts{{split.reduced, nu}};
      if (split.cone > 0) parts.emplace_back(mac::simplex(split.cone - 1), VertexSet::range(n) - nu);
      REQUIRE(join_in_ambient_labels(parts) == mac::reconstruct(m, n).facets());
    }
  }

  TEST_CASE("intersection graph") {
    const auto disjoint = mac::intersection_graph(NonfaceFamily::from_members(4, {{1, 3}, {2, 4}}));
    CHECK_FALSE(disjoint.has_edges());
    CHECK(disjoint.components.size() == 2);

    const auto path = mac::intersection_graph(NonfaceFamily::from_members(3, {{1, 2}, {2, 3}}));
    CHECK(path.edges.size() == 1);
    CHECK(path.components.size() == 1);

    // C5: members {1,3},{1,4},{2,4},{2,5},{3,5}; each meets exactly two others.
    const auto g = mac::intersection_graph(c5_family());
    std::vector<std::pair<std::size_t, std::size_t>> expected;
    const auto& nodes = g.nodes;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        if (nodes[i].intersects(nodes[j])) expected.emplace_back(i, j);
      }
    }
    CHECK(g.edges == expected);
    CHECK(g.edges.size() == 5);
    std::vector<int> degree(5, 0);
    for (auto [i, j] : g.edges) {
      ++degree[i];
      ++degree[j];
    }
    CHECK(degree == std::vector<int>(5, 2));
    CHECK(g.components.size() == 1);
  }

  TEST_CASE("component decomposition of C4") {
    const auto parts = mac::component_decomposition(NonfaceFamily::from_members(4, {{1, 3}, {2, 4}}));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].family.members() == std::vector<VertexSet>{{1, 3}});
    CHECK(parts[0].support == VertexSet{1, 3});
    CHECK(parts[1].family.members() == std::vector<VertexSet>{{2, 4}});
    CHECK(parts[1].support == VertexSet{2, 4});
    CHECK(mac::component_decomposition(NonfaceFamily::from_members(3, {})).empty());

    const auto single = mac::component_decomposition(NonfaceFamily::from_members(5, {{1, 2, 4, 5}}));
    REQUIRE(single.size() == 1);
    CHECK(mac::reconstruct(mac::compress_family(single[0].family, single[0].support), 4) ==
          mac::boundary_simplex(3));
  }

  TEST_CASE("components join back to the whole complex") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const auto m = NonfaceFamily::from_members(n, mac::testing::random_antichain(rng, n, 5));
      const VertexSet nu = mac::support(m);
      const auto parts = mac::component_decomposition(m);
      std::vector<std::pair<SimplicialComplex, VertexSet>> pieces;
      VertexSet seen;
      for (const auto& part : parts) {
        REQUIRE_FALSE(part.support.intersects(seen));
        seen = seen | part.support;
        REQUIRE(part.support == mac::support(part.family));
        pieces.emplace_back(mac::reconstruct(mac::compress_family(part.family, part.support), part.support.size()),
                            part.support);
      }
      REQUIRE(seen == nu);
      if (nu.empty()) continue;
      const auto whole = mac::full_subcomplex(mac::reconstruct(m, n), nu);
      REQUIRE(join_in_ambient_labels(pieces) == whole.facets());
    }
  }

  TEST_CASE("pairwise disjoint members give a join of simplex boundaries") {
    std::mt19937_64 rng(31);
    int checked = 0;
    while (checked < 150) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const auto members = mac::testing::random_antichain(rng, n, 4);
      if (mac::testing::has_intersecting_pair(members)) continue;
      const auto m = NonfaceFamily::from_members(n, members);
      REQUIRE_FALSE(mac::intersection_graph(m).has_edges());
      std::vector<std::pair<SimplicialComplex, VertexSet>> pieces;
      for (VertexSet member : m.members()) pieces.emplace_back(mac::boundary_simplex(member.size() - 1), member);
      const auto whole = mac::full_subcomplex(mac::reconstruct(m, n), mac::support(m));
      REQUIRE(join_in_ambient_labels(pieces) == whole.facets());
      ++checked;
    }
  }

  TEST_CASE("restrict family") {
    const auto c5 = c5_family();
    CHECK(mac::restrict_family(c5, VertexSet{1, 3, 4}).members() == std::vector<VertexSet>{{1, 3}, {1, 4}});
    CHECK(mac::restrict_family(c5, VertexSet::range(5)) == c5);
    const auto c4 = NonfaceFamily::from_members(4, {{1, 3}, {2, 4}});
    CHECK(mac::restrict_family(c4, VertexSet{1, 2, 3}).members() == std::vector<VertexSet>{{1, 3}});
  }

  TEST_CASE("full subcomplexes are reconstructed from restricted families") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const auto m = NonfaceFamily::from_members(n, mac::testing::random_antichain(rng, n, 6));
      const auto k = mac::reconstruct(m, n);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        const VertexSet i(bits);
        const auto restricted = mac::compress_family(mac::restrict_family(m, i), i);
        REQUIRE(mac::induced_subcomplex(k, i) == mac::reconstruct(restricted, i.size()));
      }
    }
  }
}
