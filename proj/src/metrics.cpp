#include "scx/metrics.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "scx/algebra.hpp"
#include "scx/error.hpp"

namespace scx {

namespace {

constexpr int kUnreached = -1;

std::vector<std::vector<std::size_t>> vertex_adjacency(const SimplicialComplex& x) {
  std::vector<std::vector<std::size_t>> adj(x.count(0));
  for (std::size_t e = 0; e < x.count(1); ++e) {
    const auto f = x.faces(1, e);
    adj[f[0]].push_back(f[1]);
    adj[f[1]].push_back(f[0]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

}  // namespace

DiameterResult distance_and_diameter(const SimplicialComplex& x) {
  const std::size_t n = x.count(0);
  const auto adj = vertex_adjacency(x);
  DiameterResult result;
  result.distance = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  std::vector<std::vector<std::size_t>> parents(n);

  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> dist(n, kUnreached);
    std::vector<std::size_t> parent(n, n);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : adj[v])
        if (dist[w] == kUnreached) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        }
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (dist[t] == kUnreached) {
        result.disconnected = true;
        continue;
      }
      result.distance(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) = dist[t];
      result.diameter = std::max(result.diameter, dist[t]);
    }
    parents[s] = std::move(parent);
  }

  if (result.diameter == 0) return result;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (result.distance(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) != result.diameter) continue;
      Geodesic g{s, t, Z2Chain{1, BitVector(x.count(1))}};
      for (std::size_t v = t; v != s; v = parents[s][v]) {
        const std::size_t u = parents[s][v];
        const Simplex edge{x.simplex(0, u)[0], x.simplex(0, v)[0]};
        g.chain.bits.set(x.ordinal(edge));
      }
      result.geodesics.push_back(std::move(g));
    }
  }
  return result;
}

std::vector<int> brute_force_depths(const SimplicialComplex& x, int cap_bits, std::vector<Z2Chain>* witness) {
  const int m = x.dimension();
  if (m < 1) throw Error(Errc::DimensionOutOfRange, "depth needs a complex of dimension >= 1");
  const std::size_t n = x.count(m - 1);
  if (n > static_cast<std::size_t>(cap_bits) || n >= 63)
    throw Error(Errc::BeyondBruteForceCap,
                "2^" + std::to_string(n) + " cochains in dimension " + std::to_string(m - 1) + " exceed cap 2^" +
                    std::to_string(cap_bits));
  const Z2Matrix delta = z2_coboundary_matrix(x, m - 1);
  std::vector<BitVector> columns;
  for (std::size_t i = 0; i < n; ++i) columns.push_back(delta.column(i));

  const std::size_t facets = x.count(m);
  std::vector<int> depth(facets, kUnreached);
  std::vector<std::uint64_t> best(facets, 0);
  BitVector image(facets);
  std::uint64_t phi = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    phi ^= std::uint64_t{1} << bit;
    image ^= columns[bit];
    if (image.weight() != 1) continue;
    const std::size_t sigma = image.lowest();
    const int w = std::popcount(phi);
    if (depth[sigma] == kUnreached || w < depth[sigma] ||
        (w == depth[sigma] && support_less(phi, best[sigma]))) {
      depth[sigma] = w;
      best[sigma] = phi;
    }
  }
  if (witness) {
    witness->clear();
    for (std::size_t s = 0; s < facets; ++s) witness->push_back(Z2Chain{m - 1, BitVector::from_word(n, best[s])});
  }
  return depth;
}

DepthResult depth_and_radius(const SimplicialComplex& x, int cap_bits) {
  const int m = x.dimension();
  if (m < 1) throw Error(Errc::DimensionOutOfRange, "depth needs a complex of dimension >= 1");
  const std::size_t facets = x.count(m);
  const std::size_t faces = x.count(m - 1);
  DepthResult result;

  if (!x.is_non_branching()) {
    result.used_fast_path = false;
    result.depth = brute_force_depths(x, cap_bits, &result.witness);
  } else {
    result.depth.assign(facets, kUnreached);
    result.witness.assign(facets, Z2Chain{m - 1, BitVector(faces)});
    std::deque<std::size_t> queue;
    for (std::size_t f = 0; f < facets; ++f) {
      for (std::size_t face : x.faces(m, f)) {
        if (x.cofaces(m - 1, face).size() != 1) continue;
        if (result.depth[f] == kUnreached || face < result.witness[f].bits.lowest()) {
          result.witness[f].bits = BitVector(faces);
          result.witness[f].bits.set(face);
        }
        result.depth[f] = 1;
      }
      if (result.depth[f] == 1) queue.push_back(f);
    }
    while (!queue.empty()) {
      const std::size_t a = queue.front();
      queue.pop_front();
      auto shared = std::vector<std::size_t>(x.faces(m, a).begin(), x.faces(m, a).end());
      std::sort(shared.begin(), shared.end());
      for (std::size_t face : shared) {
        for (std::size_t b : x.cofaces(m - 1, face)) {
          if (b == a || result.depth[b] != kUnreached) continue;
          result.depth[b] = result.depth[a] + 1;
          result.witness[b].bits = result.witness[a].bits;
          result.witness[b].bits.set(face);
          queue.push_back(b);
        }
      }
    }
  }

  for (std::size_t f = 0; f < facets; ++f) {
    if (result.depth[f] == kUnreached)
      throw Error(Errc::NoBoundary, "facet " + x.simplex(m, f).to_string() + " is not a coboundary (H_m(Z2) != 0)");
    result.radius = std::max(result.radius, result.depth[f]);
  }
  return result;
}

}  // namespace scx
