#include "scx/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "scx/error.hpp"

namespace scx {

namespace {

std::vector<Simplex> coned(const Simplex& facet, Vertex apex) {
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < facet.size(); ++i) out.push_back(facet.replace(facet[i], apex));
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::ValidationError, what);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

SimplicialComplex sigma(int m) {
  require(m >= 0, "sigma needs m >= 0");
  std::vector<Vertex> v(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) v[static_cast<std::size_t>(i)] = i;
  return SimplicialComplex::from_maximal({v});
}

SimplicialComplex xk(int m, int k) {
  require(m >= 1 && k >= 1, "xk needs m >= 1 and k >= 1");
  SimplicialComplex x = sigma(m);
  for (int step = 1; step < k; ++step) {
    std::vector<Simplex> facets = x.maximal_simplices();
    Vertex next = x.max_vertex() + 1;
    for (const Simplex& face : x.boundary_faces()) {
      std::vector<Vertex> v = face.vertices();
      v.push_back(next++);
      facets.push_back(Simplex::from_vertices(std::move(v)));
    }
    x = SimplicialComplex::from_maximal(facets);
  }
  return x;
}

SimplicialComplex stellar_subdivide(const SimplicialComplex& x, const Simplex& facet) {
  if (facet.dimension() != x.dimension() || !x.contains(facet))
    throw Error(Errc::SimplexNotFound, facet.to_string() + " is not a top-dimensional simplex");
  std::vector<Simplex> facets;
  for (const Simplex& s : x.maximal_simplices())
    if (s != facet) facets.push_back(s);
  for (Simplex& s : coned(facet, x.max_vertex() + 1)) facets.push_back(std::move(s));
  return SimplicialComplex::from_maximal(facets);
}

SimplicialComplex yk(int m, int k) {
  require(m >= 1 && k >= 1, "yk needs m >= 1 and k >= 1");
  const SimplicialComplex base = sigma(m);
  SimplicialComplex y = stellar_subdivide(base, base.simplex(m, 0));
  const Vertex centre = yk_central_vertex(m);
  for (int step = 1; step < k; ++step) {
    std::vector<Simplex> facets;
    std::vector<Simplex> inner;
    for (const Simplex& s : y.maximal_simplices()) (s.contains(centre) ? inner : facets).push_back(s);
    // Same result as subdividing one inner facet at a time in ordinal order.
    Vertex next = y.max_vertex() + 1;
    for (const Simplex& s : inner)
      for (Simplex& t : coned(s, next++)) facets.push_back(std::move(t));
    y = SimplicialComplex::from_maximal(facets);
  }
  return y;
}

SimplicialComplex gk(int k) {
  require(k >= 1, "gk needs k >= 1");
  std::vector<std::vector<Vertex>> edges{{0, 1}};
  for (int i = 0; i < k; ++i) edges.push_back({0, 2 + i});
  for (int i = 0; i < k; ++i) edges.push_back({1, 2 + k + i});
  return SimplicialComplex::from_maximal(edges);
}

SimplicialComplex rp2() {
  return SimplicialComplex::from_maximal(std::vector<std::vector<Vertex>>{
      {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
      {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

SimplicialComplex random_disk(int triangles, std::uint64_t seed) {
  require(triangles >= 1, "random_disk needs at least one triangle");
  constexpr double kGlueProbability = 0.85;
  Rng rng(seed);
  std::vector<std::vector<Vertex>> facets{{0, 1, 2}};
  std::map<std::pair<Vertex, Vertex>, int> edge_cofaces{{{0, 1}, 1}, {{0, 2}, 1}, {{1, 2}, 1}};
  Vertex next = 3;

  auto add_triangle = [&](Vertex a, Vertex b, Vertex c) {
    std::vector<Vertex> t{a, b, c};
    std::sort(t.begin(), t.end());
    edge_cofaces[{t[0], t[1]}]++;
    edge_cofaces[{t[0], t[2]}]++;
    edge_cofaces[{t[1], t[2]}]++;
    facets.push_back(std::move(t));
  };

  while (static_cast<int>(facets.size()) < triangles) {
    std::vector<std::pair<Vertex, Vertex>> boundary;
    std::map<Vertex, std::vector<Vertex>> boundary_neighbours;
    for (const auto& [edge, n] : edge_cofaces)
      if (n == 1) {
        boundary.push_back(edge);
        boundary_neighbours[edge.first].push_back(edge.second);
        boundary_neighbours[edge.second].push_back(edge.first);
      }

    if (rng.uniform() >= kGlueProbability) {
      std::vector<std::pair<Vertex, std::pair<Vertex, Vertex>>> wedges;
      for (const auto& [w, nb] : boundary_neighbours) {
        if (nb.size() != 2) continue;
        const auto chord = std::minmax(nb[0], nb[1]);
        if (!edge_cofaces.count({chord.first, chord.second})) wedges.push_back({w, {chord.first, chord.second}});
      }
      if (!wedges.empty()) {
        const auto& [w, chord] = wedges[rng.index(wedges.size())];
        add_triangle(chord.first, w, chord.second);
        continue;
      }
    }
    const auto [a, b] = boundary[rng.index(boundary.size())];
    add_triangle(a, b, next++);
  }
  return SimplicialComplex::from_maximal(facets);
}

SimplicialComplex random_tree(int vertices, std::uint64_t seed) {
  require(vertices >= 1, "random_tree needs at least one vertex");
  if (vertices == 1) return SimplicialComplex::from_maximal(std::vector<std::vector<Vertex>>{{0}});
  Rng rng(seed);
  std::vector<std::vector<Vertex>> edges;
  for (Vertex v = 1; v < vertices; ++v) edges.push_back({static_cast<Vertex>(rng.index(static_cast<std::size_t>(v))), v});
  return SimplicialComplex::from_maximal(edges);
}

SimplicialComplex generate(const FamilySpec& spec) {
  if (spec.family == "sigma") return sigma(spec.m);
  if (spec.family == "xk") return xk(spec.m, spec.k);
  if (spec.family == "yk") return yk(spec.m, spec.k);
  if (spec.family == "gk") return gk(spec.k);
  if (spec.family == "rp2") return rp2();
  if (spec.family == "random_disk") return random_disk(spec.t, spec.seed);
  if (spec.family == "random_tree") return random_tree(spec.t, spec.seed);
  throw Error(Errc::ValidationError, "unknown family '" + spec.family + "'");
}

}  // namespace scx
