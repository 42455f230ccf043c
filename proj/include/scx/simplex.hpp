#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace scx {

using Vertex = int;

/// A nonempty set of vertices stored as a strictly increasing list. The
/// ascending order doubles as the reference orientation.
class Simplex {
 public:
  Simplex() = default;

  /// Sorts `vertices`; throws DuplicateVertexInSimplex, EmptyInput or
  /// InvalidVertex (negative id).
  static Simplex from_vertices(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices);

  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }

  bool contains(Vertex v) const;
  bool is_face_of(const Simplex& other) const;

  /// The face obtained by deleting the i-th vertex; its coefficient in the
  /// signed boundary is (-1)^i.
  Simplex face(std::size_t i) const;

  /// Same simplex with vertex `from` replaced by `to` (re-sorted).
  Simplex replace(Vertex from, Vertex to) const;

  std::string to_string() const;

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

 private:
  explicit Simplex(std::vector<Vertex> sorted, int) : vertices_(std::move(sorted)) {}
  std::vector<Vertex> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace scx
