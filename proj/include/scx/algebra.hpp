#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include "scx/complex.hpp"
#include "scx/z2.hpp"

namespace scx {

using BigInt = boost::multiprecision::cpp_int;

/// Integer matrix of a boundary map; entries in {-1, 0, +1}.
using SignedBoundaryMatrix = Eigen::MatrixXi;

enum class Field { Z2, Rational };

/// Boundary (chain) or coboundary (cochain) side of the complex.
enum class Direction { Coboundary, Boundary };

/// Signed matrix of ∂_k under the ascending-vertex orientation: rows are
/// (k-1)-simplexes, columns k-simplexes, column σ carries (-1)^i on the face
/// omitting vertex i. δ^{k-1} is the transpose.
///
/// k = 0 yields the 0 x |S_0| zero map, or the 1 x |S_0| augmentation when
/// `reduced`. k = m+1 yields the |S_m| x 0 empty map. Any other k outside
/// [0, m] throws DimensionOutOfRange.
SignedBoundaryMatrix boundary_matrix(const SimplicialComplex& x, int k, bool reduced = false);

/// ∂_k over Z2, same conventions as boundary_matrix().
Z2Matrix z2_boundary_matrix(const SimplicialComplex& x, int k, bool reduced = false);

/// δ^k over Z2 (= transpose of ∂_{k+1}); `reduced` only changes k = -1,
/// which is the augmentation transpose.
Z2Matrix z2_coboundary_matrix(const SimplicialComplex& x, int k, bool reduced = false);

/// Exact rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t rational_rank(const Eigen::MatrixXi& m);

std::size_t rank(const SimplicialComplex& x, int k, Field field, bool reduced = false);

/// dim ker ∂_k - rank ∂_{k+1} over the field. Throws DimensionOutOfRange
/// for k outside [0, m].
std::size_t betti(const SimplicialComplex& x, int k, Field field, bool reduced = false);

std::vector<std::size_t> betti_numbers(const SimplicialComplex& x, Field field, bool reduced = false);

/// Invariant factors d_1 | d_2 | ... of an integer matrix (all positive).
struct SmithForm {
  std::vector<BigInt> factors;

  std::size_t rank() const noexcept { return factors.size(); }
  /// Factors greater than one.
  std::vector<BigInt> torsion() const;
};

SmithForm smith_normal_form(const Eigen::MatrixXi& m);

/// Torsion coefficients of H_k(X; Z), read off the Smith form of ∂_{k+1}.
std::vector<BigInt> torsion_coefficients(const SimplicialComplex& x, int k);

}  // namespace scx
