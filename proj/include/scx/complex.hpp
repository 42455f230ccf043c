#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "scx/simplex.hpp"

namespace scx {

/// Orientation sign (+1 or -1) of every top-dimensional simplex, relative to
/// the ascending-vertex reference orientation.
using OrientationAssignment = std::vector<int>;

/// Finite abstract simplicial complex, closed under inclusion.
///
/// Simplexes of each dimension are stored in lexicographic order of their
/// vertex lists; the position in that list is the simplex's ordinal and is
/// used as the row/column index of every matrix built from the complex.
/// Vertex ids need not be contiguous: the ordinal of a vertex is its rank
/// among S_0.
///
/// Instances are immutable after construction.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Inclusion-closure of the given simplexes. Throws EmptyInput,
  /// DuplicateVertexInSimplex or InvalidVertex.
  static SimplicialComplex from_maximal(const std::vector<std::vector<Vertex>>& maximal);
  static SimplicialComplex from_maximal(const std::vector<Simplex>& maximal);

  /// Top dimension m.
  int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }

  /// |S_k|; zero for k outside [0, m].
  std::size_t count(int k) const noexcept;
  std::vector<std::size_t> counts() const;
  long euler_characteristic() const;

  const std::vector<Simplex>& simplices(int k) const;
  const Simplex& simplex(int k, std::size_t ordinal) const;
  std::optional<std::size_t> find(const Simplex& s) const;
  /// Ordinal of `s`; throws SimplexNotFound.
  std::size_t ordinal(const Simplex& s) const;
  bool contains(const Simplex& s) const { return find(s).has_value(); }

  /// Ordinals (in S_{k-1}) of the faces of the k-simplex; entry i is the
  /// face that omits vertex i. Empty for k = 0.
  std::span<const std::size_t> faces(int k, std::size_t ordinal) const;
  /// Ordinals (in S_{k+1}) of the cofaces of the k-simplex, ascending.
  std::span<const std::size_t> cofaces(int k, std::size_t ordinal) const;

  /// All (dim(s)+1)-simplexes containing s. Throws SimplexNotFound.
  std::vector<Simplex> star(const Simplex& s) const;

  /// Ordinals in S_{m-1} of the (m-1)-simplexes with exactly one coface.
  std::vector<std::size_t> boundary_face_ordinals() const;
  std::vector<Simplex> boundary_faces() const;

  /// Every (m-1)-simplex has at most two cofaces.
  bool is_non_branching() const;

  /// Signs making every pair of m-simplexes that share an (m-1)-face
  /// similarly oriented, propagated from the lowest ordinal of each
  /// facet-adjacency component; nullopt when no such assignment exists.
  std::optional<OrientationAssignment> coherent_orientation() const;

  /// Simplexes that are not a face of any other simplex, sorted.
  std::vector<Simplex> maximal_simplices() const;

  /// Connected-component label per vertex ordinal (labels 0, 1, ...).
  std::vector<int> vertex_components() const;
  int component_count() const;

  /// Largest vertex id, or -1 for the empty complex.
  Vertex max_vertex() const;

 private:
  void check_dim(int k) const;

  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index_;
  // faces_[k] holds (k+1) entries per k-simplex.
  std::vector<std::vector<std::size_t>> faces_;
  std::vector<std::vector<std::vector<std::size_t>>> cofaces_;
};

}  // namespace scx
