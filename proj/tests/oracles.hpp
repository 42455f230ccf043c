#pragma once

// Slow reference implementations used only to cross-check the library.
// They work from vertex sets directly and share no incidence tables or
// elimination code with the code under test.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <vector>

#include <Eigen/Dense>
#include <boost/rational.hpp>

#include "scx/complex.hpp"

namespace oracle {

using Set = std::vector<int>;
using Rational = boost::rational<std::int64_t>;

/// SplitMix64; enough for property-test inputs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

 private:
  std::uint64_t s_;
};

/// Simplex counts per dimension of the closure, by brute subset expansion.
inline std::vector<std::size_t> closure_counts(const std::vector<Set>& facets) {
  std::set<Set> all;
  for (const Set& f : facets)
    for (std::uint32_t mask = 1; mask < (1u << f.size()); ++mask) {
      Set s;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask >> i & 1u) s.push_back(f[i]);
      std::sort(s.begin(), s.end());
      all.insert(s);
    }
  std::vector<std::size_t> counts;
  for (const Set& s : all) {
    if (counts.size() < s.size()) counts.resize(s.size(), 0);
    ++counts[s.size() - 1];
  }
  return counts;
}

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline std::vector<Set> sets(const scx::SimplicialComplex& x, int k) {
  std::vector<Set> out;
  if (k < 0 || k > x.dimension()) return out;
  for (const auto& s : x.simplices(k)) out.push_back(s.vertices());
  return out;
}

/// Z2 incidence: column j of the result lists the rows i with rows[i] a
/// codimension-one face of cols[j].
inline std::vector<std::uint64_t> incidence(const std::vector<Set>& rows, const std::vector<Set>& cols) {
  std::vector<std::uint64_t> out(cols.size(), 0);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].size() + 1 == cols[j].size() && subset(rows[i], cols[j])) out[j] |= std::uint64_t{1} << i;
  return out;
}

/// Image of a linear map given by column words.
inline std::uint64_t map_vector(const std::vector<std::uint64_t>& columns, std::uint64_t v) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (v >> i & 1u) out ^= columns[i];
  return out;
}

/// Every vector in the span of the given columns, by enumerating all
/// coefficient vectors.
inline std::set<std::uint64_t> span(const std::vector<std::uint64_t>& columns) {
  std::set<std::uint64_t> out;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << columns.size()); ++c) out.insert(map_vector(columns, c));
  return out;
}

/// Transpose of a map from Z2^n to Z2^rows given as column words.
inline std::vector<std::uint64_t> transpose(const std::vector<std::uint64_t>& columns, std::size_t rows) {
  std::vector<std::uint64_t> out(rows, 0);
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i)
      if (columns[j] >> i & 1u) out[i] |= std::uint64_t{1} << j;
  return out;
}

struct CheegerValue {
  bool unbounded = true;
  Rational value{0};
};

/// Cheeger number straight from the definition: every chain outside the
/// image, its coset minimum found by scanning the whole image set.
inline CheegerValue cheeger(const scx::SimplicialComplex& x, int k, bool coboundary, bool reduced) {
  const std::vector<Set> here = sets(x, k);
  const std::size_t n = here.size();
  std::vector<std::uint64_t> op;     // numerator map, columns indexed by k-simplexes
  std::vector<std::uint64_t> image;  // generators of the image subspace of Z2^n
  if (coboundary) {
    const std::vector<Set> up = sets(x, k + 1);
    op = transpose(incidence(here, up), here.size());  // δ^k: column i = cofaces of simplex i
    if (k == 0 && reduced) {
      image.push_back((std::uint64_t{1} << n) - 1);
    } else if (k > 0) {
      const std::vector<Set> down = sets(x, k - 1);
      image = transpose(incidence(down, here), down.size());
    }
  } else {
    if (k == 0)
      op.assign(n, reduced ? 1u : 0u);
    else
      op = incidence(sets(x, k - 1), here);
    image = incidence(here, sets(x, k + 1));
  }
  const std::set<std::uint64_t> im = span(image);
  CheegerValue best;
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) {
    if (im.count(v)) continue;
    int coset = std::numeric_limits<int>::max();
    for (std::uint64_t y : im) coset = std::min(coset, std::popcount(v ^ y));
    const Rational r(static_cast<std::int64_t>(std::popcount(map_vector(op, v))), static_cast<std::int64_t>(coset));
    if (best.unbounded || r < best.value) best = {false, r};
  }
  return best;
}

/// All-pairs hop distances on the 1-skeleton by Floyd-Warshall; -1 when
/// unreachable.
inline std::vector<std::vector<int>> all_pairs(const scx::SimplicialComplex& x) {
  const std::vector<Set> verts = sets(x, 0);
  const std::size_t n = verts.size();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const Set& e : sets(x, 1)) {
    std::size_t a = 0, b = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (verts[i][0] == e[0]) a = i;
      if (verts[i][0] == e[1]) b = i;
    }
    d[a][b] = d[b][a] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& v : row)
      if (v == inf) v = -1;
  return d;
}

/// Depth of each top simplex: minimum weight of an (m-1)-cochain whose
/// coboundary is that simplex alone; -1 when none exists.
inline std::vector<int> depths(const scx::SimplicialComplex& x) {
  const int m = x.dimension();
  const std::vector<Set> faces = sets(x, m - 1);
  const std::vector<Set> tops = sets(x, m);
  const std::vector<std::uint64_t> delta = transpose(incidence(faces, tops), faces.size());
  std::vector<int> out(tops.size(), -1);
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << faces.size()); ++v) {
    const std::uint64_t image = map_vector(delta, v);
    if (std::popcount(image) != 1) continue;
    const auto t = static_cast<std::size_t>(std::countr_zero(image));
    const int w = std::popcount(v);
    if (out[t] < 0 || w < out[t]) out[t] = w;
  }
  return out;
}

/// Signed boundary matrix ∂_k built from vertex sets: the face omitting
/// the i-th vertex of a column gets (-1)^i.
inline Eigen::MatrixXd signed_boundary(const scx::SimplicialComplex& x, int k) {
  const std::vector<Set> rows = sets(x, k - 1), cols = sets(x, k);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) {
      Set f = cols[j];
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
      const auto r = std::find(rows.begin(), rows.end(), f) - rows.begin();
      b(r, static_cast<Eigen::Index>(j)) = (i % 2 == 0) ? 1.0 : -1.0;
    }
  return b;
}

/// Ascending eigenvalues from Eigen's self-adjoint solver.
inline std::vector<double> eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd v = solver.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

/// Rank over the reals via full-pivot LU (small integer matrices only).
inline std::size_t real_rank(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-9);
  return static_cast<std::size_t>(lu.rank());
}

/// Rank over Z2 by textbook elimination on 0/1 rows.
inline std::size_t z2_rank(std::vector<std::vector<int>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (std::size_t j = 0; j < cols; ++j) rows[r][j] ^= rows[rank][j];
    ++rank;
  }
  return rank;
}

/// A random pure or mixed complex on `vertices` vertices built from
/// `facets` random simplexes of dimension 1 to `max_dim`.
inline std::vector<Set> random_facets(Rng& rng, int vertices, int facets, int max_dim) {
  std::vector<Set> out;
  for (int f = 0; f < facets; ++f) {
    const int size = 2 + rng.below(max_dim);
    std::set<int> s;
    while (static_cast<int>(s.size()) < std::min(size, vertices)) s.insert(rng.below(vertices));
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

}  // namespace oracle
