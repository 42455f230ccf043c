#include <doctest.h>

#include "oracles.hpp"
#include "scx/complex.hpp"
#include "scx/error.hpp"
#include "scx/generators.hpp"

using namespace scx;

TEST_CASE("closure counts") {
  CHECK(SimplicialComplex::from_maximal(std::vector<std::vector<Vertex>>{{0, 1, 2}}).counts() ==
        std::vector<std::size_t>{3, 3, 1});
  CHECK(SimplicialComplex::from_maximal(std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}}).counts() ==
        std::vector<std::size_t>{3, 2});
  const SimplicialComplex p = rp2();
  std::vector<oracle::Set> facets;
  for (const Simplex& s : p.maximal_simplices()) facets.push_back(s.vertices());
  CHECK(p.counts() == oracle::closure_counts(facets));
  CHECK(p.counts() == std::vector<std::size_t>{6, 15, 10});
  CHECK(p.euler_characteristic() == 1);
}

TEST_CASE("closure matches subset expansion on random inputs") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto facets = oracle::random_facets(rng, 7, 1 + rng.below(6), 3);
    std::vector<std::vector<Vertex>> input(facets.begin(), facets.end());
    CHECK(SimplicialComplex::from_maximal(input).counts() == oracle::closure_counts(facets));
  }
}

TEST_CASE("construction errors") {
  using V = std::vector<std::vector<Vertex>>;
  CHECK_THROWS_AS(SimplicialComplex::from_maximal(V{}), Error);
  try {
    SimplicialComplex::from_maximal(V{{0, 1, 1}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicateVertexInSimplex);
  }
  try {
    SimplicialComplex::from_maximal(V{{0, -1}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidVertex);
  }
  try {
    sigma(2).ordinal(Simplex{0, 5});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SimplexNotFound);
  }
}

TEST_CASE("ordinals follow lexicographic order and faces omit vertex i") {
  const SimplicialComplex x = sigma(3);
  const auto& tris = x.simplices(2);
  CHECK(std::is_sorted(tris.begin(), tris.end()));
  for (std::size_t i = 0; i < tris.size(); ++i) CHECK(x.ordinal(tris[i]) == i);
  const auto faces = x.faces(3, 0);
  REQUIRE(faces.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(x.simplex(2, faces[i]) == x.simplex(3, 0).face(i));
}

TEST_CASE("star") {
  const SimplicialComplex tri = sigma(2);
  CHECK(tri.star(Simplex{0, 1}) == std::vector<Simplex>{Simplex{0, 1, 2}});
  const SimplicialComplex two = SimplicialComplex::from_maximal(std::vector<std::vector<Vertex>>{{0, 1, 2}, {1, 2, 3}});
  CHECK(two.star(Simplex{1, 2}).size() == 2);
  const SimplicialComplex x2 = xk(2, 2);
  for (const Simplex& f : x2.boundary_faces()) CHECK(x2.star(f).size() == 1);
}

TEST_CASE("boundary faces") {
  CHECK(sigma(2).boundary_faces().size() == 3);
  CHECK(xk(2, 2).boundary_faces().size() == 6);
  CHECK(rp2().boundary_faces().empty());
}

TEST_CASE("non-branching") {
  for (int k = 1; k <= 4; ++k) CHECK(xk(2, k).is_non_branching());
  CHECK(xk(3, 3).is_non_branching());
  CHECK(rp2().is_non_branching());
  const auto book = SimplicialComplex::from_maximal(std::vector<std::vector<Vertex>>{{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
  CHECK_FALSE(book.is_non_branching());
}

TEST_CASE("coherent orientation") {
  CHECK(sigma(2).coherent_orientation().has_value());
  CHECK_FALSE(rp2().coherent_orientation().has_value());
  for (int k = 1; k <= 4; ++k) {
    const SimplicialComplex x = xk(2, k);
    const auto o = x.coherent_orientation();
    REQUIRE(o.has_value());
    // Adjacent facets induce opposite signs on the shared face.
    for (std::size_t f = 0; f < x.count(1); ++f) {
      const auto co = x.cofaces(1, f);
      if (co.size() != 2) continue;
      int induced[2];
      for (int side = 0; side < 2; ++side) {
        const auto faces = x.faces(2, co[static_cast<std::size_t>(side)]);
        const auto i = static_cast<std::size_t>(std::find(faces.begin(), faces.end(), f) - faces.begin());
        induced[side] = (*o)[co[static_cast<std::size_t>(side)]] * (i % 2 == 0 ? 1 : -1);
      }
      CHECK(induced[0] == -induced[1]);
    }
  }
}

TEST_CASE("components") {
  const auto two = SimplicialComplex::from_maximal(std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}, {4}});
  CHECK(two.component_count() == 3);
  CHECK(sigma(3).component_count() == 1);
}
