#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "scx/cheeger.hpp"
#include "scx/complex.hpp"

namespace scx {

struct BorderExtension {
  SimplicialComplex complex;
  /// Border facets, one per boundary face of the original complex, in
  /// boundary-face ordinal order.
  std::vector<Simplex> border_facets;
};

/// Glues a border facet through a fresh vertex onto every boundary face.
/// Throws Branching.
BorderExtension border_extension(const SimplicialComplex& x);

/// Facet-adjacency graph of the border extension. Graph vertices
/// 0..|S_m(X)|-1 are the facets of X by ordinal; the remaining vertices are
/// the border facets and form the set S.
struct DualGraph {
  std::vector<Simplex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
  std::vector<std::size_t> border;                         // ascending
  int dimension = 0;

  std::size_t interior_count() const noexcept { return vertices.size() - border.size(); }
  std::vector<std::size_t> degrees() const;
  /// Unnormalised graph Laplacian D - A.
  Eigen::MatrixXd laplacian() const;
  /// Rows and columns of laplacian() outside S.
  Eigen::MatrixXd dirichlet_laplacian() const;
};

/// Throws Branching.
DualGraph dual_graph(const SimplicialComplex& x);

struct DirichletPair {
  double lambda = 0.0;
  CheegerCertificate h;  // witness indexes the interior vertices
};

/// λ_S, the smallest eigenvalue of the Dirichlet Laplacian, and h_S, the
/// minimum of |edges leaving U| / |U| over nonempty interior sets U.
/// Throws EmptyInterior, BeyondBruteForceCap.
DirichletPair dirichlet_pair(const DualGraph& g, const SweepLimits& limits = {});

struct AgreementReport {
  bool orientable = false;
  bool matrices_equal = false;
  bool h_equal = false;
  Rational h_top{0};
  Rational h_dirichlet{0};
  /// First differing entry (row, col, L_m value, L_0^S value) when unequal.
  std::optional<std::pair<std::size_t, std::size_t>> mismatch;
  double mismatch_top = 0.0;
  double mismatch_dirichlet = 0.0;
};

/// Compares L_m(X), under a coherent orientation when one exists and the
/// reference orientation otherwise, with the Dirichlet Laplacian of the dual
/// graph, and h_m(X) with h_S. Throws Branching.
AgreementReport agreement_check(const SimplicialComplex& x, const SweepLimits& limits = {});

}  // namespace scx
