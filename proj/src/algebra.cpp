#include "scx/algebra.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "scx/error.hpp"

namespace scx {

namespace {

void check_boundary_dim(const SimplicialComplex& x, int k) {
  if (k < 0 || k > x.dimension() + 1)
    throw Error(Errc::DimensionOutOfRange, "boundary map of dimension " + std::to_string(k));
}

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix to_big(const Eigen::MatrixXi& m) {
  BigMatrix out(static_cast<std::size_t>(m.rows()), std::vector<BigInt>(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m(r, c);
  return out;
}

}  // namespace

SignedBoundaryMatrix boundary_matrix(const SimplicialComplex& x, int k, bool reduced) {
  check_boundary_dim(x, k);
  const auto cols = static_cast<Eigen::Index>(x.count(k));
  if (k == 0) {
    if (!reduced) return SignedBoundaryMatrix::Zero(0, cols);
    return SignedBoundaryMatrix::Ones(1, cols);
  }
  SignedBoundaryMatrix b = SignedBoundaryMatrix::Zero(static_cast<Eigen::Index>(x.count(k - 1)), cols);
  if (k > x.dimension()) return b;
  for (Eigen::Index c = 0; c < cols; ++c) {
    const auto faces = x.faces(k, static_cast<std::size_t>(c));
    for (std::size_t i = 0; i < faces.size(); ++i)
      b(static_cast<Eigen::Index>(faces[i]), c) = (i % 2 == 0) ? 1 : -1;
  }
  return b;
}

Z2Matrix z2_boundary_matrix(const SimplicialComplex& x, int k, bool reduced) {
  check_boundary_dim(x, k);
  const std::size_t cols = x.count(k);
  if (k == 0) {
    Z2Matrix aug(reduced ? 1 : 0, cols);
    if (reduced)
      for (std::size_t c = 0; c < cols; ++c) aug.set(0, c);
    return aug;
  }
  Z2Matrix b(x.count(k - 1), cols);
  if (k > x.dimension()) return b;
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t f : x.faces(k, c)) b.set(f, c);
  return b;
}

Z2Matrix z2_coboundary_matrix(const SimplicialComplex& x, int k, bool reduced) {
  return z2_boundary_matrix(x, k + 1, reduced).transpose();
}

std::size_t rational_rank(const Eigen::MatrixXi& m) {
  BigMatrix a = to_big(m);
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    // Bareiss step: every update is an exact division by the previous pivot.
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t rank(const SimplicialComplex& x, int k, Field field, bool reduced) {
  if (field == Field::Z2) return z2_rank(z2_boundary_matrix(x, k, reduced));
  return rational_rank(boundary_matrix(x, k, reduced));
}

std::size_t betti(const SimplicialComplex& x, int k, Field field, bool reduced) {
  if (k < 0 || k > x.dimension())
    throw Error(Errc::DimensionOutOfRange, "betti number of dimension " + std::to_string(k));
  return x.count(k) - rank(x, k, field, reduced) - rank(x, k + 1, field, reduced);
}

std::vector<std::size_t> betti_numbers(const SimplicialComplex& x, Field field, bool reduced) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= x.dimension(); ++k) out.push_back(betti(x, k, field, reduced));
  return out;
}

std::vector<BigInt> SmithForm::torsion() const {
  std::vector<BigInt> out;
  for (const auto& d : factors)
    if (d > 1) out.push_back(d);
  return out;
}

SmithForm smith_normal_form(const Eigen::MatrixXi& m) {
  BigMatrix a = to_big(m);
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  SmithForm form;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Pivot: smallest nonzero magnitude in the trailing block.
      std::size_t pr = rows, pc = cols;
      BigInt best = 0;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a[r][c] != 0 && (best == 0 || abs(a[r][c]) < best)) {
            best = abs(a[r][c]);
            pr = r;
            pc = c;
          }
      if (pr == rows) break;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0) continue;
        const BigInt q = a[r][t] / a[t][t];
        for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        if (a[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a[t][c] == 0) continue;
        const BigInt q = a[t][c] / a[t][t];
        for (std::size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every remaining entry; otherwise fold the offending row in.
      std::size_t bad = rows;
      for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a[r][c] % a[t][t] != 0) {
            bad = r;
            break;
          }
      if (bad == rows) break;
      for (std::size_t c = t; c < cols; ++c) a[t][c] += a[bad][c];
    }
    if (a.size() > t && t < cols && a[t][t] != 0)
      form.factors.push_back(abs(a[t][t]));
    else
      break;
  }
  return form;
}

std::vector<BigInt> torsion_coefficients(const SimplicialComplex& x, int k) {
  if (k < 0 || k > x.dimension())
    throw Error(Errc::DimensionOutOfRange, "torsion of dimension " + std::to_string(k));
  return smith_normal_form(boundary_matrix(x, k + 1)).torsion();
}

}  // namespace scx
