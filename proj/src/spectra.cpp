#include "scx/spectra.hpp"

namespace scx {

SpectralReport symmetric_spectrum(const Eigen::MatrixXd& m, double tol, double zero_band) {
  SpectralReport report;
  report.eigenvalues = jacobi_eigenvalues<double>(m, tol);
  while (report.zero_multiplicity < report.eigenvalues.size() &&
         std::abs(report.eigenvalues[report.zero_multiplicity]) < zero_band)
    ++report.zero_multiplicity;
  if (report.zero_multiplicity < report.eigenvalues.size())
    report.gap = report.eigenvalues[report.zero_multiplicity];
  return report;
}

SpectralReport laplacian_spectrum(const SimplicialComplex& x, int k, LaplacianKind kind, bool reduced, double tol) {
  SpectralReport report;
  report.eigenvalues = jacobi_eigenvalues<double>(laplacian<double>(x, k, kind, reduced), tol);
  const std::size_t n = x.count(k);
  switch (kind) {
    case LaplacianKind::Up:
      report.zero_multiplicity = n - rank(x, k + 1, Field::Rational);
      break;
    case LaplacianKind::Down:
      report.zero_multiplicity = n - rank(x, k, Field::Rational, reduced);
      break;
    case LaplacianKind::Full:
      report.zero_multiplicity = betti(x, k, Field::Rational, reduced);
      break;
  }
  report.exact_zero_count = true;
  if (report.zero_multiplicity < n) report.gap = report.eigenvalues[report.zero_multiplicity];
  return report;
}

double spectral_gap(const SimplicialComplex& x, int k, Direction direction, bool reduced, double tol) {
  if (k < 0 || k > x.dimension())
    throw Error(Errc::DimensionOutOfRange, "spectral gap of dimension " + std::to_string(k));
  if (betti(x, k, Field::Rational, reduced) > 0) return 0.0;
  const auto kind = direction == Direction::Coboundary ? LaplacianKind::Up : LaplacianKind::Down;
  return laplacian_spectrum(x, k, kind, reduced, tol).gap;
}

}  // namespace scx
