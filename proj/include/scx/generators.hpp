#pragma once

#include <cstdint>
#include <string>

#include "scx/complex.hpp"

namespace scx {

/// Closure of a single m-simplex on vertices 0..m.
SimplicialComplex sigma(int m);

/// X_1 = sigma(m); X_{j+1} glues one new m-simplex, through a fresh vertex,
/// onto every boundary face of X_j. Boundary faces are handled in ordinal
/// order and fresh ids count up from max_vertex() + 1.
SimplicialComplex xk(int m, int k);

/// Replaces the m-simplex `facet` by the cone over its boundary from a fresh
/// vertex (max_vertex() + 1). Throws SimplexNotFound.
SimplicialComplex stellar_subdivide(const SimplicialComplex& x, const Simplex& facet);

/// Id of the central vertex of every yk(m, k).
inline Vertex yk_central_vertex(int m) { return m + 1; }

/// Y_1 = stellar subdivision of sigma(m); Y_{j+1} subdivides every facet of
/// Y_j containing the central vertex, in ordinal order.
SimplicialComplex yk(int m, int k);

/// Central edge {0, 1}, leaves 2..k+1 on vertex 0 and k+2..2k+1 on vertex 1.
SimplicialComplex gk(int k);

/// Six-vertex minimal triangulation of the real projective plane.
SimplicialComplex rp2();

/// Seeded growth of a triangulated disk with `triangles` facets. Each step
/// either glues a triangle with a fresh apex onto a random boundary edge
/// (probability 0.85) or fills a random boundary wedge a-w-b whose chord
/// a-b is not yet an edge (probability 0.15, falling back to gluing when no
/// wedge qualifies). The result is orientable, non-branching and
/// contractible.
SimplicialComplex random_disk(int triangles, std::uint64_t seed);

/// Uniform random recursive tree on `vertices` vertices: vertex i attaches
/// to a uniformly chosen earlier vertex.
SimplicialComplex random_tree(int vertices, std::uint64_t seed);

struct FamilySpec {
  std::string family;  // sigma, xk, yk, gk, rp2, random_disk, random_tree
  int m = 2;
  int k = 1;
  int t = 1;           // triangle budget (random_disk), vertex count (random_tree)
  std::uint64_t seed = 0;
};

/// Throws ValidationError on an unknown family or out-of-range parameters.
SimplicialComplex generate(const FamilySpec& spec);

}  // namespace scx
