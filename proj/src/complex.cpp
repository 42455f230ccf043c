#include "scx/complex.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>

#include "scx/error.hpp"

namespace scx {

namespace {

constexpr std::size_t kMaxSimplexSize = 24;

int face_sign(std::span<const std::size_t> faces, std::size_t face) {
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i] == face) return (i % 2 == 0) ? 1 : -1;
  return 0;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<std::vector<Vertex>>& maximal) {
  std::vector<Simplex> simplices;
  simplices.reserve(maximal.size());
  for (const auto& verts : maximal) simplices.push_back(Simplex::from_vertices(verts));
  return from_maximal(simplices);
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<Simplex>& maximal) {
  if (maximal.empty()) throw Error(Errc::EmptyInput, "no simplexes given");

  std::vector<std::set<Simplex>> closure;
  for (const Simplex& s : maximal) {
    if (s.size() == 0) throw Error(Errc::EmptyInput, "empty simplex");
    if (s.size() > kMaxSimplexSize)
      throw Error(Errc::ValidationError, "simplex with more than " + std::to_string(kMaxSimplexSize) + " vertices");
    if (closure.size() < s.size()) closure.resize(s.size());
    const std::size_t n = s.size();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
      std::vector<Vertex> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint32_t{1} << i)) sub.push_back(s[i]);
      closure[sub.size() - 1].insert(Simplex::from_vertices(std::move(sub)));
    }
  }

  SimplicialComplex x;
  const std::size_t dims = closure.size();
  x.by_dim_.resize(dims);
  x.index_.resize(dims);
  x.faces_.resize(dims);
  x.cofaces_.resize(dims);
  for (std::size_t k = 0; k < dims; ++k) {
    x.by_dim_[k].assign(closure[k].begin(), closure[k].end());
    auto& idx = x.index_[k];
    idx.reserve(x.by_dim_[k].size());
    for (std::size_t i = 0; i < x.by_dim_[k].size(); ++i) idx.emplace(x.by_dim_[k][i], i);
    x.cofaces_[k].resize(x.by_dim_[k].size());
  }
  for (std::size_t k = 1; k < dims; ++k) {
    auto& faces = x.faces_[k];
    faces.reserve(x.by_dim_[k].size() * (k + 1));
    for (std::size_t i = 0; i < x.by_dim_[k].size(); ++i) {
      const Simplex& s = x.by_dim_[k][i];
      for (std::size_t j = 0; j <= k; ++j) {
        const std::size_t f = x.index_[k - 1].at(s.face(j));
        faces.push_back(f);
        x.cofaces_[k - 1][f].push_back(i);
      }
    }
  }
  return x;
}

void SimplicialComplex::check_dim(int k) const {
  if (k < 0 || k > dimension())
    throw Error(Errc::DimensionOutOfRange, "dimension " + std::to_string(k) + " outside [0, " +
                                               std::to_string(dimension()) + "]");
}

std::size_t SimplicialComplex::count(int k) const noexcept {
  if (k < 0 || k > dimension()) return 0;
  return by_dim_[static_cast<std::size_t>(k)].size();
}

std::vector<std::size_t> SimplicialComplex::counts() const {
  std::vector<std::size_t> out;
  for (const auto& s : by_dim_) out.push_back(s.size());
  return out;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int k = 0; k <= dimension(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(count(k));
  return chi;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  check_dim(k);
  return by_dim_[static_cast<std::size_t>(k)];
}

const Simplex& SimplicialComplex::simplex(int k, std::size_t ordinal) const {
  return simplices(k).at(ordinal);
}

std::optional<std::size_t> SimplicialComplex::find(const Simplex& s) const {
  const int k = s.dimension();
  if (k < 0 || k > dimension()) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(k)];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::size_t SimplicialComplex::ordinal(const Simplex& s) const {
  auto i = find(s);
  if (!i) throw Error(Errc::SimplexNotFound, s.to_string());
  return *i;
}

std::span<const std::size_t> SimplicialComplex::faces(int k, std::size_t ordinal) const {
  check_dim(k);
  if (k == 0) return {};
  const auto& f = faces_[static_cast<std::size_t>(k)];
  const std::size_t width = static_cast<std::size_t>(k) + 1;
  return std::span<const std::size_t>(f).subspan(ordinal * width, width);
}

std::span<const std::size_t> SimplicialComplex::cofaces(int k, std::size_t ordinal) const {
  check_dim(k);
  return cofaces_[static_cast<std::size_t>(k)].at(ordinal);
}

std::vector<Simplex> SimplicialComplex::star(const Simplex& s) const {
  const std::size_t i = ordinal(s);
  std::vector<Simplex> out;
  const int k = s.dimension();
  if (k == dimension()) return out;
  for (std::size_t c : cofaces(k, i)) out.push_back(simplex(k + 1, c));
  return out;
}

std::vector<std::size_t> SimplicialComplex::boundary_face_ordinals() const {
  std::vector<std::size_t> out;
  const int m = dimension();
  if (m < 1) return out;
  const auto& co = cofaces_[static_cast<std::size_t>(m - 1)];
  for (std::size_t i = 0; i < co.size(); ++i)
    if (co[i].size() == 1) out.push_back(i);
  return out;
}

std::vector<Simplex> SimplicialComplex::boundary_faces() const {
  std::vector<Simplex> out;
  for (std::size_t i : boundary_face_ordinals()) out.push_back(simplex(dimension() - 1, i));
  return out;
}

bool SimplicialComplex::is_non_branching() const {
  const int m = dimension();
  if (m < 1) return true;
  const auto& co = cofaces_[static_cast<std::size_t>(m - 1)];
  return std::all_of(co.begin(), co.end(), [](const auto& c) { return c.size() <= 2; });
}

std::optional<OrientationAssignment> SimplicialComplex::coherent_orientation() const {
  const int m = dimension();
  if (m < 0) return std::nullopt;
  const std::size_t n = count(m);
  OrientationAssignment sign(n, 0);
  if (m == 0) {
    std::fill(sign.begin(), sign.end(), 1);
    return sign;
  }
  for (std::size_t root = 0; root < n; ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t a = queue.front();
      queue.pop_front();
      const auto faces_a = faces(m, a);
      for (std::size_t f : faces_a) {
        const int ca = face_sign(faces_a, f);
        for (std::size_t b : cofaces(m - 1, f)) {
          if (b == a) continue;
          // Similar orientation: opposite induced signs on the shared face.
          const int required = -sign[a] * ca * face_sign(faces(m, b), f);
          if (sign[b] == 0) {
            sign[b] = required;
            queue.push_back(b);
          } else if (sign[b] != required) {
            return std::nullopt;
          }
        }
      }
    }
  }
  return sign;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (int k = 0; k <= dimension(); ++k) {
    const auto& s = by_dim_[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < s.size(); ++i)
      if (k == dimension() || cofaces_[static_cast<std::size_t>(k)][i].empty()) out.push_back(s[i]);
  }
  std::sort(out.begin(), out.end(),
            [](const Simplex& a, const Simplex& b) { return a.vertices() < b.vertices(); });
  return out;
}

std::vector<int> SimplicialComplex::vertex_components() const {
  const std::size_t n = count(0);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  if (dimension() >= 1) {
    for (std::size_t e = 0; e < count(1); ++e) {
      const auto f = faces(1, e);
      const std::size_t a = root(f[0]), b = root(f[1]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<int> label(n, -1);
  int next = 0;
  std::vector<int> root_label(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = root(v);
    if (root_label[r] < 0) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return label;
}

int SimplicialComplex::component_count() const {
  const auto labels = vertex_components();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

Vertex SimplicialComplex::max_vertex() const {
  if (by_dim_.empty() || by_dim_[0].empty()) return -1;
  return by_dim_[0].back()[0];
}

}  // namespace scx
