#include <doctest.h>

#include "oracles.hpp"
#include "scx/algebra.hpp"
#include "scx/error.hpp"
#include "scx/generators.hpp"

using namespace scx;

namespace {

std::vector<std::vector<int>> dense(const Z2Matrix& m) {
  std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.test(r, c);
  return out;
}

SimplicialComplex random_complex(oracle::Rng& rng) {
  const auto facets = oracle::random_facets(rng, 6 + rng.below(3), 2 + rng.below(6), 3);
  return SimplicialComplex::from_maximal(std::vector<std::vector<Vertex>>(facets.begin(), facets.end()));
}

}  // namespace

TEST_CASE("signed boundary of a triangle") {
  const SignedBoundaryMatrix b = boundary_matrix(sigma(2), 2);
  // Edges in order {0,1}, {0,2}, {1,2}.
  CHECK(b(0, 0) == 1);
  CHECK(b(1, 0) == -1);
  CHECK(b(2, 0) == 1);
  const Z2Matrix e = z2_boundary_matrix(sigma(1), 1);
  CHECK(e.rows() == 2);
  CHECK(e.cols() == 1);
  CHECK(e.test(0, 0));
  CHECK(e.test(1, 0));
}

TEST_CASE("boundary matrices agree with the vertex-set construction") {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const SimplicialComplex x = random_complex(rng);
    for (int k = 1; k <= x.dimension(); ++k)
      CHECK(boundary_matrix(x, k).cast<double>() == oracle::signed_boundary(x, k));
  }
}

TEST_CASE("edge-case boundary maps") {
  const SimplicialComplex x = sigma(2);
  CHECK(boundary_matrix(x, 0).rows() == 0);
  CHECK(boundary_matrix(x, 0, true) == Eigen::MatrixXi::Ones(1, 3));
  CHECK(boundary_matrix(x, 3).rows() == 1);
  CHECK(boundary_matrix(x, 3).cols() == 0);
  CHECK_THROWS_AS(boundary_matrix(x, 4), Error);
  CHECK_THROWS_AS(boundary_matrix(x, -1), Error);
}

TEST_CASE("boundary of boundary vanishes over both fields") {
  for (const SimplicialComplex& x : {xk(2, 2), xk(3, 2), rp2(), yk(2, 3)}) {
    for (int k = 1; k < x.dimension(); ++k) {
      CHECK((boundary_matrix(x, k) * boundary_matrix(x, k + 1)).isZero());
      CHECK((z2_boundary_matrix(x, k) * z2_boundary_matrix(x, k + 1)).is_zero());
    }
  }
}

TEST_CASE("Z2 rank and membership") {
  const Z2Matrix zero(3, 3);
  BitVector probe = BitVector::from_indices(3, {1});
  auto r = z2_rank_and_membership(zero, &probe);
  CHECK(r.rank == 0);
  CHECK_FALSE(*r.probe_in_column_space);

  BitVector p101 = BitVector::from_indices(3, {0, 2});
  r = z2_rank_and_membership(Z2Matrix::identity(3), &p101);
  CHECK(r.rank == 3);
  CHECK(*r.probe_in_column_space);

  BitVector wrong(4);
  CHECK_THROWS_AS(z2_rank_and_membership(zero, &wrong), Error);
}

TEST_CASE("coboundary membership matches exhaustive enumeration") {
  const SimplicialComplex x = sigma(2);
  const Z2Matrix d1 = z2_coboundary_matrix(x, 1);  // edges to the triangle
  const auto image = oracle::span(oracle::transpose(oracle::incidence(oracle::sets(x, 1), oracle::sets(x, 2)), 3));
  for (std::uint64_t v = 0; v < 2; ++v) {
    BitVector probe = BitVector::from_word(1, v);
    CHECK(*z2_rank_and_membership(d1, &probe).probe_in_column_space == (image.count(v) == 1));
  }
  // Same on δ^0 of the 5-vertex tree and the 2-cochains of RP².
  for (const SimplicialComplex& y : {gk(2), rp2()}) {
    const int k = y.dimension() == 1 ? 0 : 1;
    const Z2Matrix d = z2_coboundary_matrix(y, k);
    const auto up = oracle::sets(y, k + 1);
    const auto here = oracle::sets(y, k);
    const auto im = oracle::span(oracle::transpose(oracle::incidence(here, up), here.size()));
    oracle::Rng rng(3);
    for (int t = 0; t < 200; ++t) {
      const std::uint64_t v = rng.next() & ((std::uint64_t{1} << up.size()) - 1);
      BitVector probe = BitVector::from_word(up.size(), v);
      CHECK(*z2_rank_and_membership(d, &probe).probe_in_column_space == (im.count(v) == 1));
    }
  }
}

TEST_CASE("ranks match reference elimination; rank is transpose invariant") {
  oracle::Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const SimplicialComplex x = random_complex(rng);
    for (int k = 1; k <= x.dimension(); ++k) {
      const Z2Matrix z = z2_boundary_matrix(x, k);
      CHECK(z2_rank(z) == oracle::z2_rank(dense(z)));
      CHECK(z2_rank(z) == z2_rank(z.transpose()));
      const Eigen::MatrixXi b = boundary_matrix(x, k);
      CHECK(rational_rank(b) == oracle::real_rank(b.cast<double>()));
      CHECK(rational_rank(b) == rational_rank(b.transpose()));
    }
  }
}

TEST_CASE("Betti numbers") {
  const SimplicialComplex p = rp2();
  CHECK(betti(p, 1, Field::Z2) == 1);
  CHECK(betti(p, 2, Field::Z2) == 1);
  CHECK(betti(p, 1, Field::Rational) == 0);
  CHECK(betti(p, 2, Field::Rational) == 0);
  for (int m = 1; m <= 4; ++m) {
    CHECK(betti_numbers(sigma(m), Field::Z2, true) == std::vector<std::size_t>(static_cast<std::size_t>(m) + 1, 0));
    CHECK(betti_numbers(sigma(m), Field::Rational, true) == std::vector<std::size_t>(static_cast<std::size_t>(m) + 1, 0));
  }
  const auto circle = SimplicialComplex::from_maximal(std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}, {0, 2}});
  CHECK(betti(circle, 1, Field::Z2) == 1);
  CHECK(betti(circle, 1, Field::Rational) == 1);
  CHECK_THROWS_AS(betti(circle, 2, Field::Z2), Error);
}

TEST_CASE("Euler characteristic equals the alternating Betti sum") {
  oracle::Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const SimplicialComplex x = random_complex(rng);
    for (Field f : {Field::Z2, Field::Rational}) {
      long chi = 0;
      const auto b = betti_numbers(x, f);
      for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long>(b[k]);
      CHECK(chi == x.euler_characteristic());
    }
  }
}

TEST_CASE("Smith normal form") {
  Eigen::MatrixXi two(1, 1);
  two << 2;
  CHECK(smith_normal_form(two).factors == std::vector<BigInt>{2});
  const SmithForm p = smith_normal_form(boundary_matrix(rp2(), 2));
  CHECK(p.torsion() == std::vector<BigInt>{2});
  CHECK(p.rank() == 10);
  const SmithForm s = smith_normal_form(boundary_matrix(sigma(2), 2));
  CHECK(s.torsion().empty());
  CHECK(torsion_coefficients(rp2(), 1) == std::vector<BigInt>{2});
  CHECK(torsion_coefficients(rp2(), 0).empty());

  Eigen::MatrixXi m(2, 2);
  m << 2, 4, 6, 8;  // invariant factors 2, 4
  CHECK(smith_normal_form(m).factors == std::vector<BigInt>{2, 4});
  Eigen::MatrixXi n(2, 2);
  n << 2, 0, 0, 3;  // 1, 6 by the divisibility chain
  CHECK(smith_normal_form(n).factors == std::vector<BigInt>{1, 6});
}

TEST_CASE("SNF rank equals rational rank") {
  oracle::Rng rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const SimplicialComplex x = random_complex(rng);
    for (int k = 1; k <= x.dimension(); ++k) {
      const Eigen::MatrixXi b = boundary_matrix(x, k);
      const SmithForm s = smith_normal_form(b);
      CHECK(s.rank() == rational_rank(b));
      for (std::size_t i = 1; i < s.factors.size(); ++i) CHECK(s.factors[i] % s.factors[i - 1] == 0);
    }
  }
}
