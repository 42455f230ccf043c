#include <doctest.h>

#include "scx/algebra.hpp"
#include "scx/error.hpp"
#include "scx/generators.hpp"

using namespace scx;

namespace {

std::size_t inner_count(const SimplicialComplex& y, int m) {
  std::size_t n = 0;
  for (const Simplex& s : y.simplices(m)) n += s.contains(yk_central_vertex(m)) ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("sigma") {
  CHECK(sigma(2).counts() == std::vector<std::size_t>{3, 3, 1});
  CHECK(sigma(3).counts() == std::vector<std::size_t>{4, 6, 4, 1});
  CHECK_THROWS_AS(sigma(-1), Error);
}

TEST_CASE("xk facet counts follow the boundary-face recurrence") {
  CHECK(xk(2, 1).count(2) == 1);
  CHECK(xk(2, 2).count(2) == 4);
  CHECK(xk(2, 3).count(2) == 10);
  CHECK(xk(2, 4).count(2) == 22);
  for (int m = 2; m <= 4; ++m)
    for (int k = 1; k < 4; ++k) {
      const SimplicialComplex a = xk(m, k), b = xk(m, k + 1);
      CHECK(b.count(m) == a.count(m) + a.boundary_faces().size());
      CHECK(b.is_non_branching());
      CHECK(betti_numbers(b, Field::Z2, true) == std::vector<std::size_t>(static_cast<std::size_t>(m) + 1, 0));
    }
}

TEST_CASE("xk is deterministic and labels fresh vertices in boundary-face order") {
  CHECK(xk(3, 3).maximal_simplices() == xk(3, 3).maximal_simplices());
  const SimplicialComplex x = xk(2, 2);
  // Boundary edges of the base triangle in ordinal order: {0,1}, {0,2}, {1,2}.
  CHECK(x.contains(Simplex{0, 1, 3}));
  CHECK(x.contains(Simplex{0, 2, 4}));
  CHECK(x.contains(Simplex{1, 2, 5}));
}

TEST_CASE("stellar subdivision") {
  const SimplicialComplex base = sigma(2);
  const SimplicialComplex s = stellar_subdivide(base, Simplex{0, 1, 2});
  CHECK(s.count(2) == 3);
  for (const Simplex& t : s.simplices(2)) CHECK(t.contains(3));
  for (const SimplicialComplex& x : {xk(2, 3), xk(3, 2), rp2()}) {
    const Simplex f = x.simplex(x.dimension(), 0);
    const SimplicialComplex y = stellar_subdivide(x, f);
    CHECK(y.count(x.dimension()) == x.count(x.dimension()) + static_cast<std::size_t>(x.dimension()));
    CHECK(y.euler_characteristic() == x.euler_characteristic());
  }
  CHECK_THROWS_AS(stellar_subdivide(base, Simplex{0, 1}), Error);
  CHECK_THROWS_AS(stellar_subdivide(base, Simplex{0, 1, 7}), Error);
}

TEST_CASE("yk counts inner and total facets") {
  // Inner facets, those through the central vertex, number (m+1) m^{k-1};
  // each subdivision also leaves one outer facet, so the total is
  // (m+1)(m^k - 1)/(m - 1).
  CHECK(inner_count(yk(2, 3), 2) == 12);
  CHECK(yk(2, 3).count(2) == 21);
  for (int m = 2; m <= 3; ++m) {
    std::size_t power = 1;
    for (int k = 1; k <= 4; ++k) {
      const SimplicialComplex y = yk(m, k);
      const auto mm = static_cast<std::size_t>(m);
      CHECK(inner_count(y, m) == (mm + 1) * power);
      CHECK(y.count(m) == (mm + 1) * (power * mm - 1) / (mm - 1));
      CHECK(y.boundary_faces().size() == mm + 1);
      CHECK(y.is_non_branching());
      power *= mm;
    }
  }
}

TEST_CASE("gk") {
  CHECK(gk(1).count(0) == 4);
  CHECK(gk(2).counts() == std::vector<std::size_t>{6, 5});
  CHECK(gk(4).count(0) == 10);
  CHECK(betti(gk(4), 1, Field::Z2) == 0);
  CHECK(gk(4).component_count() == 1);
}

TEST_CASE("rp2") {
  const SimplicialComplex p = rp2();
  CHECK(p.counts() == std::vector<std::size_t>{6, 15, 10});
  CHECK_FALSE(p.coherent_orientation());
  CHECK(betti(p, 1, Field::Z2) == 1);
  CHECK(betti(p, 1, Field::Rational) == 0);
}

TEST_CASE("random disks") {
  CHECK(random_disk(1, 9).maximal_simplices() == sigma(2).maximal_simplices());
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int t = 1 + static_cast<int>(seed % 15);
    const SimplicialComplex d = random_disk(t, seed);
    CHECK(d.count(2) == static_cast<std::size_t>(t));
    CHECK(d.is_non_branching());
    CHECK(d.coherent_orientation().has_value());
    CHECK(betti(d, 1, Field::Z2) == 0);
    CHECK(betti(d, 2, Field::Z2) == 0);
    CHECK(d.euler_characteristic() == 1);
  }
  CHECK(random_disk(10, 4).maximal_simplices() == random_disk(10, 4).maximal_simplices());
}

TEST_CASE("random trees") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const SimplicialComplex t = random_tree(2 + static_cast<int>(seed), seed);
    CHECK(t.count(1) + 1 == t.count(0));
    CHECK(t.component_count() == 1);
  }
}

TEST_CASE("families by name") {
  CHECK(generate({"xk", 2, 3}).count(2) == 10);
  CHECK(generate({"rp2"}).counts() == std::vector<std::size_t>{6, 15, 10});
  CHECK_THROWS_AS(generate({"torus"}), Error);
  CHECK_THROWS_AS(generate({"gk", 2, 0}), Error);
}
