#include "scx/simplex.hpp"

#include <algorithm>

#include "scx/error.hpp"

namespace scx {

Simplex Simplex::from_vertices(std::vector<Vertex> vertices) {
  if (vertices.empty()) throw Error(Errc::EmptyInput, "simplex has no vertices");
  std::sort(vertices.begin(), vertices.end());
  if (vertices.front() < 0)
    throw Error(Errc::InvalidVertex, "negative vertex id " + std::to_string(vertices.front()));
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw Error(Errc::DuplicateVertexInSimplex, "repeated vertex in simplex");
  return Simplex(std::move(vertices), 0);
}

Simplex::Simplex(std::initializer_list<Vertex> vertices) : Simplex(from_vertices(vertices)) {}

bool Simplex::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

Simplex Simplex::face(std::size_t i) const {
  std::vector<Vertex> out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t j = 0; j < vertices_.size(); ++j)
    if (j != i) out.push_back(vertices_[j]);
  return Simplex(std::move(out), 0);
}

Simplex Simplex::replace(Vertex from, Vertex to) const {
  std::vector<Vertex> out = vertices_;
  std::replace(out.begin(), out.end(), from, to);
  return from_vertices(std::move(out));
}

std::string Simplex::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vertices_[i]);
  }
  return s + "}";
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = s.size();
  for (Vertex v : s.vertices()) h ^= std::hash<Vertex>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace scx
