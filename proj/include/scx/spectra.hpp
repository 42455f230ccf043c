#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include <Eigen/Core>

#include "scx/algebra.hpp"
#include "scx/complex.hpp"
#include "scx/error.hpp"

namespace scx {

enum class LaplacianKind { Up, Down, Full };

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Combinatorial Laplacian on k-(co)chains from the signed boundary
/// matrices: up = ∂_{k+1} ∂_{k+1}^T, down = ∂_k^T ∂_k, full = up + down.
/// The down part at k = 0 is zero unless `reduced`, in which case it is the
/// all-ones matrix coming from the augmentation.
template <typename Scalar = double>
DenseMatrix<Scalar> laplacian(const SimplicialComplex& x, int k, LaplacianKind kind, bool reduced = false) {
  if (k < 0 || k > x.dimension())
    throw Error(Errc::DimensionOutOfRange, "laplacian dimension " + std::to_string(k));
  const auto n = static_cast<Eigen::Index>(x.count(k));
  DenseMatrix<Scalar> result = DenseMatrix<Scalar>::Zero(n, n);
  if (kind != LaplacianKind::Down) {
    const DenseMatrix<Scalar> b = boundary_matrix(x, k + 1).template cast<Scalar>();
    result.noalias() += b * b.transpose();
  }
  if (kind != LaplacianKind::Up) {
    const DenseMatrix<Scalar> b = boundary_matrix(x, k, reduced).template cast<Scalar>();
    result.noalias() += b.transpose() * b;
  }
  return result;
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
///
/// Sweeps visit (p, q) pairs row by row. Iteration stops once every
/// off-diagonal magnitude is below tol * ||M||_F; more than `max_sweeps`
/// sweeps throws NoConvergence. Throws NonSymmetric when M differs from its
/// transpose by more than 1e-12 relative.
template <typename Scalar>
std::vector<Scalar> jacobi_eigenvalues(DenseMatrix<Scalar> a, Scalar tol = Scalar(1e-10), int max_sweeps = 100) {
  using std::abs;
  using std::sqrt;
  if (a.rows() != a.cols())
    throw Error(Errc::NonSymmetric, "matrix is not square");
  const Eigen::Index n = a.rows();
  const Scalar norm = a.norm();
  const Scalar asym = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (n > 0 && asym > Scalar(1e-12) * std::max(norm, Scalar(1)))
    throw Error(Errc::NonSymmetric, "asymmetry exceeds 1e-12 relative");

  const Scalar threshold = tol * norm;
  auto off_diagonal_max = [&] {
    Scalar worst(0);
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) worst = std::max(worst, abs(a(p, q)));
    return worst;
  };

  int sweep = 0;
  while (off_diagonal_max() >= threshold && threshold > Scalar(0)) {
    if (++sweep > max_sweeps)
      throw Error(Errc::NoConvergence, "Jacobi did not converge in " + std::to_string(max_sweeps) + " sweeps");
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
        const Scalar t = (theta >= Scalar(0) ? Scalar(1) : Scalar(-1)) /
                         (abs(theta) + sqrt(theta * theta + Scalar(1)));
        const Scalar c = Scalar(1) / sqrt(t * t + Scalar(1));
        const Scalar s = t * c;
        for (Eigen::Index r = 0; r < n; ++r) {
          const Scalar arp = a(r, p);
          const Scalar arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
        }
        for (Eigen::Index r = 0; r < n; ++r) {
          const Scalar apr = a(p, r);
          const Scalar aqr = a(q, r);
          a(p, r) = c * apr - s * aqr;
          a(q, r) = s * apr + c * aqr;
        }
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);
      }
    }
  }

  std::vector<Scalar> values(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(values.begin(), values.end());
  return values;
}

struct SpectralReport {
  std::vector<double> eigenvalues;  // ascending
  /// Size of the zero block. Exact (from rational ranks) when produced by
  /// laplacian_spectrum(); a |λ| < zero_band count from symmetric_spectrum().
  std::size_t zero_multiplicity = 0;
  bool exact_zero_count = false;
  /// Smallest eigenvalue past the zero block; +inf if there is none.
  double gap = std::numeric_limits<double>::infinity();
};

SpectralReport symmetric_spectrum(const Eigen::MatrixXd& m, double tol = 1e-10, double zero_band = 1e-8);

/// Spectrum of a Laplacian with the zero block sized by exact ranks:
/// |S_k| - rank ∂_{k+1} (up), |S_k| - rank ∂_k (down), betti_k (full).
SpectralReport laplacian_spectrum(const SimplicialComplex& x, int k, LaplacianKind kind, bool reduced = false,
                                  double tol = 1e-10);

/// λ^k (Coboundary, smallest nonzero eigenvalue of L_k^up) or λ_k (Boundary,
/// of L_k^down). Returns exactly 0 when the rational Betti number at k is
/// positive; otherwise the eigenvalue right after the exact kernel. Returns
/// +inf when every k-(co)chain lies in the image, so that no admissible
/// Rayleigh quotient exists.
double spectral_gap(const SimplicialComplex& x, int k, Direction direction, bool reduced = false,
                    double tol = 1e-10);

}  // namespace scx
