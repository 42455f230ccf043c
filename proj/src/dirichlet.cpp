#include "scx/dirichlet.hpp"

#include <algorithm>

#include "scx/algebra.hpp"
#include "scx/error.hpp"
#include "scx/spectra.hpp"

namespace scx {

namespace {

void require_non_branching(const SimplicialComplex& x) {
  if (!x.is_non_branching()) throw Error(Errc::Branching, "some (m-1)-simplex has more than two cofaces");
}

}  // namespace

BorderExtension border_extension(const SimplicialComplex& x) {
  require_non_branching(x);
  BorderExtension ext;
  std::vector<Simplex> facets = x.maximal_simplices();
  Vertex next = x.max_vertex() + 1;
  for (const Simplex& face : x.boundary_faces()) {
    std::vector<Vertex> v = face.vertices();
    v.push_back(next++);
    ext.border_facets.push_back(Simplex::from_vertices(std::move(v)));
  }
  facets.insert(facets.end(), ext.border_facets.begin(), ext.border_facets.end());
  ext.complex = SimplicialComplex::from_maximal(facets);
  return ext;
}

std::vector<std::size_t> DualGraph::degrees() const {
  std::vector<std::size_t> deg(vertices.size(), 0);
  for (const auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

Eigen::MatrixXd DualGraph::laplacian() const {
  const auto n = static_cast<Eigen::Index>(vertices.size());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [a, b] : edges) {
    const auto i = static_cast<Eigen::Index>(a), j = static_cast<Eigen::Index>(b);
    l(i, i) += 1;
    l(j, j) += 1;
    l(i, j) -= 1;
    l(j, i) -= 1;
  }
  return l;
}

Eigen::MatrixXd DualGraph::dirichlet_laplacian() const {
  // Interior vertices come first by construction.
  const auto n = static_cast<Eigen::Index>(interior_count());
  return laplacian().topLeftCorner(n, n);
}

DualGraph dual_graph(const SimplicialComplex& x) {
  const BorderExtension ext = border_extension(x);
  const int m = x.dimension();
  DualGraph g;
  g.dimension = m;
  g.vertices = x.simplices(m);
  g.vertices.insert(g.vertices.end(), ext.border_facets.begin(), ext.border_facets.end());
  for (std::size_t i = x.count(m); i < g.vertices.size(); ++i) g.border.push_back(i);

  // Map ordinals in the extension back to graph vertex ids.
  const SimplicialComplex& xp = ext.complex;
  std::vector<std::size_t> node_of(xp.count(m));
  for (std::size_t i = 0; i < g.vertices.size(); ++i) node_of[xp.ordinal(g.vertices[i])] = i;
  if (m >= 1) {
    for (std::size_t f = 0; f < xp.count(m - 1); ++f) {
      const auto co = xp.cofaces(m - 1, f);
      for (std::size_t a = 0; a < co.size(); ++a)
        for (std::size_t b = a + 1; b < co.size(); ++b)
          g.edges.push_back(std::minmax(node_of[co[a]], node_of[co[b]]));
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

DirichletPair dirichlet_pair(const DualGraph& g, const SweepLimits& limits) {
  const std::size_t interior = g.interior_count();
  if (interior == 0) throw Error(Errc::EmptyInterior, "every dual vertex is a border facet");
  DirichletPair out;
  out.lambda = symmetric_spectrum(g.dirichlet_laplacian()).eigenvalues.front();

  // h_S: coboundary weight of interior vertex sets, image {0}.
  RatioProblem p;
  p.domain = interior;
  p.op_rows = g.edges.size();
  p.op_columns.assign(interior, BitVector(g.edges.size()));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [a, b] = g.edges[e];
    if (a < interior) p.op_columns[a].flip(e);
    if (b < interior) p.op_columns[b].flip(e);
  }
  p.image = Z2Basis(interior);
  out.h = minimize_ratio(p, 0, limits);
  return out;
}

AgreementReport agreement_check(const SimplicialComplex& x, const SweepLimits& limits) {
  require_non_branching(x);
  const int m = x.dimension();
  AgreementReport report;
  const auto orientation = x.coherent_orientation();
  report.orientable = orientation.has_value();

  Eigen::MatrixXd top = laplacian<double>(x, m, LaplacianKind::Full);
  if (orientation) {
    const Eigen::VectorXd s = Eigen::Map<const Eigen::VectorXi>(orientation->data(),
                                                                 static_cast<Eigen::Index>(orientation->size()))
                                  .cast<double>();
    top = s.asDiagonal() * top * s.asDiagonal();
  }
  const DualGraph g = dual_graph(x);
  const Eigen::MatrixXd dirichlet = g.dirichlet_laplacian();

  report.matrices_equal = top.rows() == dirichlet.rows();
  for (Eigen::Index i = 0; i < top.rows() && report.matrices_equal; ++i)
    for (Eigen::Index j = 0; j < top.cols(); ++j)
      if (top(i, j) != dirichlet(i, j)) {
        report.matrices_equal = false;
        report.mismatch = {static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
        report.mismatch_top = top(i, j);
        report.mismatch_dirichlet = dirichlet(i, j);
        break;
      }

  const CheegerCertificate h_top = cheeger(x, m, Direction::Boundary, false, limits);
  const CheegerCertificate h_s = dirichlet_pair(g, limits).h;
  report.h_top = h_top.value;
  report.h_dirichlet = h_s.value;
  report.h_equal = h_top.unbounded == h_s.unbounded && h_top.value == h_s.value;
  return report;
}

}  // namespace scx
