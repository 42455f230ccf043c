#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "scx/complex.hpp"
#include "scx/z2.hpp"

namespace scx {

struct Geodesic {
  std::size_t from = 0;  // vertex ordinals
  std::size_t to = 0;
  Z2Chain chain;         // 1-chain whose boundary is from + to
};

struct DiameterResult {
  /// Hop distance between vertex ordinals; 0 for pairs in different
  /// components.
  Eigen::MatrixXi distance;
  int diameter = 0;
  bool disconnected = false;
  /// One geodesic per diametral pair (from < to).
  std::vector<Geodesic> geodesics;
};

/// All-pairs breadth-first distances on the 1-skeleton.
DiameterResult distance_and_diameter(const SimplicialComplex& x);

struct DepthResult {
  /// Depth of each m-simplex, by ordinal.
  std::vector<int> depth;
  int radius = 0;
  /// A depth-attaining (m-1)-cochain per m-simplex.
  std::vector<Z2Chain> witness;
  bool used_fast_path = true;
};

/// Depth of every m-simplex and the radius.
///
/// Non-branching complexes take the fast path: multi-source BFS over the
/// facet-adjacency graph, seeded at depth 1 on every facet with a boundary
/// face; the witness is the chain of shared faces along the BFS path plus
/// the terminal boundary face. Other complexes fall back to enumerating all
/// (m-1)-cochains, limited to 2^cap_bits of them.
///
/// Throws NoBoundary when some m-simplex has no finite depth (H_m(Z2) != 0)
/// and BeyondBruteForceCap when the fallback is too large.
DepthResult depth_and_radius(const SimplicialComplex& x, int cap_bits = 24);

/// Depths by exhaustive enumeration of (m-1)-cochains. Entries are -1 for
/// facets that are not a coboundary.
std::vector<int> brute_force_depths(const SimplicialComplex& x, int cap_bits = 24,
                                    std::vector<Z2Chain>* witness = nullptr);

}  // namespace scx
