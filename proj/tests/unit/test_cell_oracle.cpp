#include <random>

#include "doctest.h"
#include "mac/cell_oracle.hpp"
#include "mac/cohomology.hpp"
#include "mac/errors.hpp"
#include "mac/generate.hpp"
#include "oracles.hpp"

using mac::MomentAngleCellComplex;
using mac::SimplicialComplex;
using mac::VertexSet;

namespace {

std::vector<std::int64_t> oracle(const SimplicialComplex& k) {
  return mac::oracle_betti(MomentAngleCellComplex::build(k));
}

}  // namespace

TEST_SUITE("cell_oracle") {
  TEST_CASE("small moment-angle complexes") {
    const auto circle = MomentAngleCellComplex::build(SimplicialComplex::empty(1));
    CHECK(circle.cell_count() == 2);
    CHECK(mac::oracle_betti(circle) == std::vector<std::int64_t>{1, 1});

    const auto disk = MomentAngleCellComplex::build(mac::simplex(0));
    CHECK(disk.cell_count() == 3);
    CHECK(mac::oracle_betti(disk) == std::vector<std::int64_t>{1});

    const auto sphere = MomentAngleCellComplex::build(mac::boundary_simplex(1));
    CHECK(sphere.cell_count() == 8);
    CHECK(mac::oracle_betti(sphere) == std::vector<std::int64_t>{1, 0, 0, 1});
  }

  TEST_CASE("standard Betti vectors") {
    const auto c4 = SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK(oracle(c4) == std::vector<std::int64_t>{1, 0, 0, 2, 0, 0, 1});
    for (int k = 0; k <= 4; ++k) CHECK(oracle(mac::simplex(k)) == std::vector<std::int64_t>{1});
    CHECK(oracle(mac::boundary_simplex(2)) == std::vector<std::int64_t>{1, 0, 0, 0, 0, 1});
  }

  TEST_CASE("cells are indexed by (σ, ω) with σ a face") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 6);
      const auto k = mac::testing::random_test_complex(rng, n);
      const auto c = MomentAngleCellComplex::build(k);
      std::size_t expected = 0;
      for (std::uint64_t f : mac::testing::brute_faces(k)) expected += std::size_t{1} << (n - std::popcount(f));
      REQUIRE(c.cell_count() == expected);
      REQUIRE(mac::moment_angle_cell_count(k) == expected);
      REQUIRE(c.boundary_squares_to_zero());
      for (int d = 0; d <= c.max_dimension(); ++d) {
        for (const auto& cell : c.cells(d)) {
          REQUIRE(cell.dimension() == d);
          REQUIRE(k.is_face(cell.disk));
          REQUIRE_FALSE(cell.disk.intersects(cell.circle));
        }
      }
    }
  }

  TEST_CASE("boundary of a single disk cell") {
    // Z(Δ⁰) = D²: the 2-cell bounds the 1-cell once, the 1-cell is a cycle.
    const auto disk = MomentAngleCellComplex::build(mac::simplex(0));
    const auto& two_cells = disk.cells(2);
    REQUIRE(two_cells.size() == 1);
    const auto boundary = disk.boundary(2, 0);
    REQUIRE(boundary.nonzeros() == 1);
    CHECK(abs(boundary.entries().front().value) == 1);
    CHECK(disk.boundary(1, 0).empty());
  }

  TEST_CASE("cell limit") {
    mac::Limits limits;
    limits.max_cells = 100;
    CHECK_THROWS_AS(MomentAngleCellComplex::build(mac::cycle(5), limits), mac::ResourceError);
    limits.max_cells = 1000;
    CHECK_NOTHROW(MomentAngleCellComplex::build(mac::cycle(5), limits));
  }

  TEST_CASE("engines agree on C5") {
    const auto betti = oracle(mac::cycle(5));
    CHECK(betti == mac::hochster_betti(mac::cycle(5)));
    CHECK(betti == std::vector<std::int64_t>{1, 0, 0, 5, 5, 0, 0, 1});
  }

  TEST_CASE("product law for joins") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 40; ++trial) {
      const int n1 = 1 + static_cast<int>(rng() % 4);
      const int n2 = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(7 - n1));
      const auto a = mac::testing::random_test_complex(rng, n1);
      const auto b = mac::testing::random_test_complex(rng, n2);
      REQUIRE(oracle(mac::join(a, b)) == mac::testing::convolve(oracle(a), oracle(b)));
    }
  }

  TEST_CASE("full subcomplexes give retracts") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 5);
      const auto k = mac::testing::random_test_complex(rng, n);
      const auto whole = oracle(k);
      for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        const auto part = oracle(mac::induced_subcomplex(k, VertexSet(bits)));
        REQUIRE(part.size() <= whole.size());
        for (std::size_t d = 0; d < part.size(); ++d) REQUIRE(part[d] <= whole[d]);
      }
    }
  }

  TEST_CASE("2-connectivity when all vertices are faces") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 7);
      const auto betti = oracle(mac::testing::random_test_complex(rng, n));
      REQUIRE(betti.at(0) == 1);
      if (betti.size() > 1) REQUIRE(betti[1] == 0);
      if (betti.size() > 2) REQUIRE(betti[2] == 0);
    }
  }

  TEST_CASE("threaded and serial ranks agree") {
    const auto c = MomentAngleCellComplex::build(mac::cycle(6));
    CHECK(mac::oracle_betti(c, 1) == mac::oracle_betti(c, 4));
  }
}
