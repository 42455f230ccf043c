#include "scx/analyze.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "scx/algebra.hpp"
#include "scx/error.hpp"
#include "scx/metrics.hpp"
#include "scx/spectra.hpp"

namespace scx {

namespace {

using nlohmann::json;

json real(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

std::string method_name(CertificateMethod m) {
  switch (m) {
    case CertificateMethod::Brute: return "brute";
    case CertificateMethod::Structural: return "structural";
    case CertificateMethod::Witness: return "witness";
  }
  return "";
}

std::string cell(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object()) return v.contains("value") ? cell(v["value"]) : "-";
  if (v.is_number_float()) {
    std::ostringstream os;
    os << std::setprecision(10) << v.get<double>();
    return os.str();
  }
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) out += (out.empty() ? "" : " ") + cell(e);
    return out.empty() ? "-" : out;
  }
  return v.dump();
}

const std::vector<std::pair<std::string, std::string>>& columns() {
  static const std::vector<std::pair<std::string, std::string>> cols{
      {"k", "k"},          {"count", "simplices"}, {"betti_z2", "betti_z2"},  {"betti_rational", "betti_q"},
      {"torsion", "torsion"}, {"lambda_up", "lambda^k"}, {"lambda_down", "lambda_k"}, {"h_up", "h^k"},
      {"h_down", "h_k"}};
  return cols;
}

}  // namespace

json certificate_json(const CheegerCertificate& cert) {
  json out;
  out["value"] = cert.value_string();
  out["method"] = method_name(cert.method);
  if (!cert.unbounded) {
    out["numerator"] = cert.numerator;
    out["denominator"] = cert.denominator;
    out["witness"] = cert.witness.support();
  }
  return out;
}

json analyze(const SimplicialComplex& x, const AnalyzeOptions& options) {
  const int m = x.dimension();
  const Config& cfg = options.config;
  const SweepLimits limits = cfg.limits();
  std::vector<int> dims = options.dims;
  if (dims.empty())
    for (int k = 0; k <= m; ++k) dims.push_back(k);
  for (int k : dims)
    if (k < 0 || k > m) throw Error(Errc::DimensionOutOfRange, "dimension " + std::to_string(k) + " not in [0, m]");

  json doc;
  doc["dimension"] = m;
  doc["counts"] = x.counts();
  doc["euler_characteristic"] = x.euler_characteristic();
  doc["components"] = x.component_count();
  doc["non_branching"] = x.is_non_branching();
  doc["orientable"] = x.coherent_orientation().has_value();

  const DiameterResult diam = distance_and_diameter(x);
  doc["diameter"] = diam.disconnected ? json() : json(diam.diameter);
  doc["radius"] = nullptr;
  if (m >= 1) {
    try {
      doc["radius"] = depth_and_radius(x, cfg.brute_cap_bits).radius;
    } catch (const Error& e) {
      if (e.code() == Errc::BeyondBruteForceCap && !options.structural_only) throw;
      if (e.code() != Errc::NoBoundary && e.code() != Errc::BeyondBruteForceCap) throw;
    }
  }

  std::optional<CheegerCertificate> h1_structural, top_structural;
  if (options.structural_only && m >= 1) {
    try {
      h1_structural = structural_cheeger(x, StructuralTarget::BoundaryOneViaDiameter, cfg.brute_cap_bits);
    } catch (const Error&) {
    }
    try {
      top_structural = structural_cheeger(x, StructuralTarget::CoboundaryTopViaRadius, cfg.brute_cap_bits);
    } catch (const Error&) {
    }
  }

  json rows = json::array();
  for (int k : dims) {
    json row;
    row["k"] = k;
    row["count"] = x.count(k);
    row["betti_z2"] = betti(x, k, Field::Z2);
    row["betti_rational"] = betti(x, k, Field::Rational);
    json torsion = json::array();
    for (const BigInt& t : torsion_coefficients(x, k)) torsion.push_back(t.str());
    row["torsion"] = std::move(torsion);
    row["lambda_up"] = real(spectral_gap(x, k, Direction::Coboundary, false, cfg.eig_tol));
    row["lambda_down"] = real(spectral_gap(x, k, Direction::Boundary, false, cfg.eig_tol));
    const SpectralReport spectrum = laplacian_spectrum(x, k, LaplacianKind::Full, false, cfg.eig_tol);
    row["spectrum"] = spectrum.eigenvalues;
    row["zero_multiplicity"] = spectrum.zero_multiplicity;
    if (options.structural_only) {
      row["h_up"] = (top_structural && k == m - 1) ? certificate_json(*top_structural) : json();
      row["h_down"] = (h1_structural && k == 1) ? certificate_json(*h1_structural) : json();
    } else {
      row["h_up"] = certificate_json(cheeger(x, k, Direction::Coboundary, false, limits));
      row["h_down"] = certificate_json(cheeger(x, k, Direction::Boundary, false, limits));
    }
    rows.push_back(std::move(row));
  }
  doc["dimensions"] = std::move(rows);

  json reduced;
  reduced["betti_z2"] = betti(x, 0, Field::Z2, true);
  reduced["betti_rational"] = betti(x, 0, Field::Rational, true);
  reduced["lambda_up"] = real(spectral_gap(x, 0, Direction::Coboundary, true, cfg.eig_tol));
  reduced["h_up"] = options.structural_only ? json() : certificate_json(cheeger(x, 0, Direction::Coboundary, true, limits));
  doc["reduced_0"] = std::move(reduced);
  return doc;
}

std::string analysis_table(const json& report) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header;
  for (const auto& [key, title] : columns()) header.push_back(title);
  cells.push_back(header);
  for (const auto& row : report["dimensions"]) {
    std::vector<std::string> line;
    for (const auto& [key, title] : columns()) line.push_back(cell(row[key]));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());

  std::ostringstream os;
  os << "dimension " << report["dimension"] << ", counts " << report["counts"].dump() << ", euler "
     << report["euler_characteristic"] << ", orientable " << report["orientable"] << ", non-branching "
     << report["non_branching"] << ", diameter " << cell(report["diameter"]) << ", radius "
     << cell(report["radius"]) << "\n";
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c)
      os << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c])) << line[c];
    os << "\n";
  }
  const json& r = report["reduced_0"];
  os << "reduced k=0: betti_z2 " << cell(r["betti_z2"]) << ", betti_q " << cell(r["betti_rational"])
     << ", lambda^0 " << cell(r["lambda_up"]) << ", h^0 " << cell(r["h_up"]) << "\n";
  return os.str();
}

std::string analysis_csv(const json& report) {
  std::ostringstream os;
  for (std::size_t c = 0; c < columns().size(); ++c) os << (c ? "," : "") << columns()[c].second;
  os << "\n";
  for (const auto& row : report["dimensions"]) {
    for (std::size_t c = 0; c < columns().size(); ++c) os << (c ? "," : "") << cell(row[columns()[c].first]);
    os << "\n";
  }
  return os.str();
}

}  // namespace scx
