#include "scx/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "scx/algebra.hpp"
#include "scx/cheeger.hpp"
#include "scx/dirichlet.hpp"
#include "scx/error.hpp"
#include "scx/metrics.hpp"
#include "scx/spectra.hpp"

namespace scx {

namespace {

using nlohmann::json;

constexpr double kSlack = 1e-9;
constexpr double kEqual = 1e-8;

json real(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

std::string str(const Rational& r) { return to_string(r); }

std::vector<double> nonzero(const std::vector<double>& values, double band) {
  std::vector<double> out;
  for (double v : values)
    if (std::abs(v) >= band) out.push_back(v);
  return out;
}

bool same_multiset(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

class Runner {
 public:
  explicit Runner(const VerifyOptions& options) : opt_(options), limits_(options.config.limits()) {}

  /// `body` fills the values and bound and returns the verdict. Errors
  /// other than cap violations count as failures.
  template <typename Body>
  void check(const std::string& id, const std::string& claim, Body&& body) {
    Check c;
    c.id = id;
    c.claim = claim;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.pass = body(c.values, c.bound);
    } catch (const Error& e) {
      if (e.code() == Errc::BeyondBruteForceCap) throw;
      c.values["error"] = e.what();
      c.pass = false;
    }
    c.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(c));
  }

  SimplicialComplex make(FamilySpec spec) const { return opt_.generator(spec); }
  const SweepLimits& limits() const { return limits_; }
  const Config& config() const { return opt_.config; }
  /// Whether the exhaustive sweep for this Cheeger number is within both caps.
  bool brute_fits(const SimplicialComplex& x, int k, Direction d) const {
    if (x.count(k) > static_cast<std::size_t>(limits_.brute_cap_bits)) return false;
    const RatioProblem p = cheeger_problem(x, k, d);
    return p.domain - p.image.rank() <= static_cast<std::size_t>(limits_.coset_cap_bits);
  }

  VerificationReport take() { return std::move(report_); }

 private:
  const VerifyOptions& opt_;
  SweepLimits limits_;
  VerificationReport report_;
};

std::string indexed(const std::string& base, long i) { return base + "[" + std::to_string(i) + "]"; }

void xk_checks(Runner& run, int m, int kmax) {
  const double floor = static_cast<double>((m - 1) * (m - 1)) / (2.0 * (m + 1));
  for (int k = 1; k <= kmax; ++k) {
    const SimplicialComplex x = run.make({"xk", m, k});
    run.check(indexed("xk.radius", k), "rad(X_k) = k", [&](json& v, std::string& bound) {
      const int rad = depth_and_radius(x, run.config().brute_cap_bits).radius;
      v["radius"] = rad;
      bound = "= " + std::to_string(k);
      return rad == k;
    });
    run.check(indexed("xk.h_coboundary", k), "h^{m-1}(X_k) = 1/k", [&](json& v, std::string& bound) {
      const Rational expected(1, k);
      bound = "= " + str(expected);
      const CheegerCertificate s = structural_cheeger(x, StructuralTarget::CoboundaryTopViaRadius,
                                                      run.config().brute_cap_bits);
      v["structural"] = str(s.value);
      bool ok = s.value == expected;
      if (k <= 3 && run.brute_fits(x, m - 1, Direction::Coboundary)) {
        const CheegerCertificate b = cheeger(x, m - 1, Direction::Coboundary, false, run.limits());
        v["brute"] = b.value_string();
        ok = ok && !b.unbounded && b.value == expected;
      }
      return ok;
    });
    if (run.brute_fits(x, m, Direction::Boundary)) {
      run.check(indexed("xk.h_boundary", k), "h_m(X_k) = (m+1)(m-1) / ((m+1) - 2m^{1-k}) >= m-1",
                [&](json& v, std::string& bound) {
                  const CheegerCertificate b = cheeger(x, m, Direction::Boundary, false, run.limits());
                  std::int64_t power = 1;  // m^{k-1}
                  for (int i = 1; i < k; ++i) power *= m;
                  const Rational closed((m + 1) * (m - 1) * power, (m + 1) * power - 2);
                  v["h"] = b.value_string();
                  v["closed_form"] = str(closed);
                  bound = "= " + str(closed) + ", >= " + std::to_string(m - 1);
                  return !b.unbounded && b.value == closed && b.value >= Rational(m - 1);
                });
    }
    run.check(indexed("xk.lambda", k), "lambda^{m-1}(X_k) = lambda_m(X_k) >= (m-1)^2 / (2(m+1))",
              [&](json& v, std::string& bound) {
                const double up = spectral_gap(x, m - 1, Direction::Coboundary, false, run.config().eig_tol);
                const double down = spectral_gap(x, m, Direction::Boundary, false, run.config().eig_tol);
                v["lambda_coboundary"] = real(up);
                v["lambda_boundary"] = real(down);
                bound = ">= " + std::to_string(floor);
                return std::abs(up - down) <= kEqual && up >= floor - kSlack;
              });
  }
}

void yk_checks(Runner& run, int m, int kmax) {
  for (int k = 1; k <= kmax; ++k) {
    const SimplicialComplex y = run.make({"yk", m, k});
    std::int64_t power = 1;  // m^{k-1}
    for (int i = 1; i < k; ++i) power *= m;
    const Rational ceiling(1, power);

    run.check(indexed("yk.count", k), "inner facets (m+1)m^{k-1}, all facets (m+1)(m^k-1)/(m-1)",
              [&](json& v, std::string& bound) {
                std::size_t inner = 0;
                for (const Simplex& s : y.simplices(m)) inner += s.contains(yk_central_vertex(m)) ? 1 : 0;
                const auto expected_inner = static_cast<std::size_t>((m + 1) * power);
                const auto expected_total = static_cast<std::size_t>((m + 1) * (power * m - 1) / (m - 1));
                v["inner"] = inner;
                v["total"] = y.count(m);
                bound = "inner = " + std::to_string(expected_inner) + ", total = " + std::to_string(expected_total);
                return inner == expected_inner && y.count(m) == expected_total;
              });
    run.check(indexed("yk.h_coboundary", k), "h^{m-1}(Y_k) >= 1/k", [&](json& v, std::string& bound) {
      const CheegerCertificate s =
          structural_cheeger(y, StructuralTarget::CoboundaryTopViaRadius, run.config().brute_cap_bits);
      v["h"] = str(s.value);
      bound = ">= " + str(Rational(1, k));
      return s.value >= Rational(1, k);
    });
    run.check(indexed("yk.h_boundary", k), "h_m(Y_k) <= 1/m^{k-1}", [&](json& v, std::string& bound) {
      CheegerCertificate c;
      if (run.brute_fits(y, m, Direction::Boundary)) {
        c = cheeger(y, m, Direction::Boundary, false, run.limits());
      } else {
        c = chain_ratio(y, m, Direction::Boundary, Z2Chain{m, BitVector::ones(y.count(m))});
      }
      v["h"] = c.value_string();
      v["method"] = c.method == CertificateMethod::Brute ? "brute" : "witness";
      bound = "<= " + str(ceiling);
      return !c.unbounded && c.value <= ceiling;
    });
    if (k > 1) {
      run.check(indexed("yk.lambda", k), "lambda^{m-1}(Y_k) = lambda_m(Y_k) <= 1/m^{k-1}",
                [&](json& v, std::string& bound) {
                  const double up = spectral_gap(y, m - 1, Direction::Coboundary, false, run.config().eig_tol);
                  const double down = spectral_gap(y, m, Direction::Boundary, false, run.config().eig_tol);
                  v["lambda_coboundary"] = real(up);
                  v["lambda_boundary"] = real(down);
                  bound = "<= " + str(ceiling);
                  return std::abs(up - down) <= kEqual && up <= 1.0 / static_cast<double>(power) + kSlack;
                });
    }
  }
}

void sigma_checks(Runner& run, const std::vector<int>& sizes) {
  for (int n : sizes) {
    const SimplicialComplex x = run.make({"sigma", n - 1});
    run.check(indexed("sigma.spectrum", n), "every nonzero eigenvalue of every L_k of the full simplex on n vertices is n",
              [&](json& v, std::string& bound) {
                bound = "= " + std::to_string(n);
                bool ok = true;
                json per_dim = json::array();
                for (int k = 0; k < n; ++k) {
                  const auto nz = nonzero(symmetric_spectrum(laplacian<double>(x, k, LaplacianKind::Full),
                                                             run.config().eig_tol, run.config().zero_band)
                                              .eigenvalues,
                                          run.config().zero_band);
                  double worst = 0;
                  for (double e : nz) worst = std::max(worst, std::abs(e - n));
                  per_dim.push_back(worst);
                  ok = ok && worst <= kEqual;
                }
                v["max_deviation"] = std::move(per_dim);
                return ok;
              });
    run.check(indexed("sigma.cheeger", n), "h^k >= n/(k+2) and h_k >= n/(n-k), reduced at k = 0",
              [&](json& v, std::string& bound) {
                bound = "h^k >= n/(k+2), h_k >= n/(n-k)";
                bool ok = true;
                json up = json::array(), down = json::array();
                for (int k = 0; k < n; ++k) {
                  const CheegerCertificate a = cheeger(x, k, Direction::Coboundary, k == 0, run.limits());
                  const CheegerCertificate b = cheeger(x, k, Direction::Boundary, k == 0, run.limits());
                  up.push_back(a.value_string());
                  down.push_back(b.value_string());
                  ok = ok && (a.unbounded || a.value >= Rational(n, k + 2));
                  ok = ok && (b.unbounded || b.value >= Rational(n, n - k));
                }
                v["h_coboundary"] = std::move(up);
                v["h_boundary"] = std::move(down);
                return ok;
              });
  }
}

void rp2_checks(Runner& run) {
  const SimplicialComplex x = run.make({"rp2"});
  run.check("rp2.homology", "Z2 Betti (1,1,1), rational Betti (1,0,0), one invariant factor 2 in the top boundary map",
            [&](json& v, std::string& bound) {
              const auto z2 = betti_numbers(x, Field::Z2);
              const auto q = betti_numbers(x, Field::Rational);
              const auto torsion = smith_normal_form(boundary_matrix(x, 2)).torsion();
              v["betti_z2"] = z2;
              v["betti_rational"] = q;
              json t = json::array();
              for (const BigInt& f : torsion) t.push_back(f.str());
              v["torsion"] = t;
              bound = "(1,1,1), (1,0,0), [2]";
              return z2 == std::vector<std::size_t>{1, 1, 1} && q == std::vector<std::size_t>{1, 0, 0} &&
                     torsion.size() == 1 && torsion[0] == 2;
            });
  run.check("rp2.gap", "h_2 = 0 on the all-facets chain while lambda_2 > 0 and no coherent orientation exists",
            [&](json& v, std::string& bound) {
              const CheegerCertificate h = cheeger(x, 2, Direction::Boundary, false, run.limits());
              const double lambda = spectral_gap(x, 2, Direction::Boundary, false, run.config().eig_tol);
              v["h"] = h.value_string();
              v["witness_weight"] = h.witness.weight();
              v["lambda"] = real(lambda);
              v["orientable"] = x.coherent_orientation().has_value();
              bound = "h = 0, lambda > 0.05";
              return !h.unbounded && h.value == Rational(0) && h.witness.weight() == x.count(2) && lambda > 0.05 &&
                     !x.coherent_orientation();
            });
}

void theorem_checks(Runner& run, int seeds) {
  for (int s = 0; s < seeds; ++s) {
    const std::uint64_t seed = run.config().seed + static_cast<std::uint64_t>(s);
    const SimplicialComplex x = run.make({"random_disk", 2, 1, 3 + s % 10, seed});
    run.check(indexed("theorem.top", s), "h_2 >= lambda_2 >= h_2^2 / 6", [&](json& v, std::string& bound) {
      const CheegerCertificate h = cheeger(x, 2, Direction::Boundary, false, run.limits());
      const double lambda = spectral_gap(x, 2, Direction::Boundary, false, run.config().eig_tol);
      const double hv = boost::rational_cast<double>(h.value);
      v["facets"] = x.count(2);
      v["h"] = h.value_string();
      v["lambda"] = real(lambda);
      bound = "h >= lambda >= h^2/6";
      return !h.unbounded && hv >= lambda - kSlack && lambda >= hv * hv / 6.0 - kSlack;
    });
    run.check(indexed("theorem.invariants", s),
              "boundary of boundary vanishes, zero multiplicity equals the rational Betti number, "
              "nonzero spectra of L_k^up and L_{k+1}^down coincide",
              [&](json& v, std::string& bound) {
                bound = "exact, spectra within 1e-8";
                const int m = x.dimension();
                bool ok = true;
                for (int k = 1; k < m; ++k)
                  ok = ok && (boundary_matrix(x, k) * boundary_matrix(x, k + 1)).isZero();
                json zeros = json::array();
                for (int k = 0; k <= m; ++k) {
                  const SpectralReport r = symmetric_spectrum(laplacian<double>(x, k, LaplacianKind::Full),
                                                              run.config().eig_tol, run.config().zero_band);
                  zeros.push_back(r.zero_multiplicity);
                  ok = ok && r.zero_multiplicity == betti(x, k, Field::Rational);
                }
                v["zero_multiplicity"] = std::move(zeros);
                for (int k = 0; k < m; ++k) {
                  const auto up = nonzero(symmetric_spectrum(laplacian<double>(x, k, LaplacianKind::Up),
                                                             run.config().eig_tol, run.config().zero_band)
                                              .eigenvalues,
                                          run.config().zero_band);
                  const auto down = nonzero(symmetric_spectrum(laplacian<double>(x, k + 1, LaplacianKind::Down),
                                                               run.config().eig_tol, run.config().zero_band)
                                                .eigenvalues,
                                            run.config().zero_band);
                  ok = ok && same_multiset(up, down, kEqual);
                }
                return ok;
              });
  }
}

void lemma_checks(Runner& run, int seeds) {
  auto diameter_check = [&](const std::string& id, const SimplicialComplex& x) {
    run.check(id, "H_1(Z2) = 0 implies h_1 * diam = 2", [&](json& v, std::string& bound) {
      const std::size_t b1 = betti(x, 1, Field::Z2);
      v["betti_1_z2"] = b1;
      bound = "= 2";
      if (b1 != 0) return false;
      const CheegerCertificate h = cheeger(x, 1, Direction::Boundary, false, run.limits());
      const int diam = distance_and_diameter(x).diameter;
      v["h"] = h.value_string();
      v["diameter"] = diam;
      return !h.unbounded && h.value * Rational(diam) == Rational(2);
    });
  };
  for (int s = 0; s < seeds; ++s) {
    const std::uint64_t seed = run.config().seed + static_cast<std::uint64_t>(s);
    diameter_check(indexed("lemma.diameter_tree", s), run.make({"random_tree", 1, 1, 2 + s % 11, seed}));
  }
  for (int s = 0; s < seeds; ++s) {
    const std::uint64_t seed = run.config().seed + static_cast<std::uint64_t>(s);
    const SimplicialComplex x = run.make({"random_disk", 2, 1, 3 + s % 8, seed});
    diameter_check(indexed("lemma.diameter_disk", s), x);
    run.check(indexed("lemma.radius_disk", s), "H^{m-1}(Z2) = 0 and H_m(Z2) = 0 imply h^{m-1} * rad = 1",
              [&](json& v, std::string& bound) {
                const int m = x.dimension();
                bound = "= 1";
                v["non_branching"] = x.is_non_branching();
                v["betti_top_minus_one"] = betti(x, m - 1, Field::Z2);
                v["betti_top"] = betti(x, m, Field::Z2);
                if (!x.is_non_branching() || betti(x, m - 1, Field::Z2) != 0 || betti(x, m, Field::Z2) != 0)
                  return false;
                const CheegerCertificate h = cheeger(x, m - 1, Direction::Coboundary, false, run.limits());
                const int rad = depth_and_radius(x, run.config().brute_cap_bits).radius;
                v["h"] = h.value_string();
                v["radius"] = rad;
                return !h.unbounded && h.value * Rational(rad) == Rational(1);
              });
    if (x.count(1) <= 20) {
      run.check(indexed("lemma.depth_disk", s), "breadth-first depth equals exhaustive depth",
                [&](json& v, std::string& bound) {
                  bound = "equal per facet";
                  const auto fast = depth_and_radius(x, run.config().brute_cap_bits).depth;
                  const auto slow = brute_force_depths(x, run.config().brute_cap_bits);
                  v["depth"] = fast;
                  return fast == slow;
                });
    }
  }
}

void gk_checks(Runner& run, int kmax) {
  for (int k = 1; k <= kmax; ++k) {
    const SimplicialComplex g = run.make({"gk", 1, k});
    run.check(indexed("gk", k), "reduced h^0 = 1/(k+1), h_1 = 2/3, lambda_1 = reduced lambda^0 <= 2/(k+1)",
              [&](json& v, std::string& bound) {
                const CheegerCertificate h0 = cheeger(g, 0, Direction::Coboundary, true, run.limits());
                const CheegerCertificate h1 = cheeger(g, 1, Direction::Boundary, false, run.limits());
                const double l1 = spectral_gap(g, 1, Direction::Boundary, false, run.config().eig_tol);
                const double l0 = spectral_gap(g, 0, Direction::Coboundary, true, run.config().eig_tol);
                v["h0_reduced"] = h0.value_string();
                v["h1"] = h1.value_string();
                v["lambda_1"] = real(l1);
                v["lambda0_reduced"] = real(l0);
                bound = "h^0 = " + str(Rational(1, k + 1)) + ", h_1 = 2/3, lambda <= " + str(Rational(2, k + 1));
                return !h0.unbounded && h0.value == Rational(1, k + 1) && !h1.unbounded && h1.value == Rational(2, 3) &&
                       std::abs(l1 - l0) <= kEqual && l1 <= 2.0 / (k + 1) + kSlack;
              });
  }
}

void dirichlet_checks(Runner& run, int seeds) {
  for (int s = 0; s < seeds; ++s) {
    const std::uint64_t seed = run.config().seed + 1000 + static_cast<std::uint64_t>(s);
    const SimplicialComplex x = run.make({"random_disk", 2, 1, 3 + s % 10, seed});
    run.check(indexed("dirichlet.agreement", s),
              "orientable non-branching: L_m equals L_0^S entrywise, h_m = h_S, h_S >= lambda_S >= h_S^2/(2(m+1))",
              [&](json& v, std::string& bound) {
                const AgreementReport a = agreement_check(x, run.limits());
                const DirichletPair d = dirichlet_pair(dual_graph(x), run.limits());
                const double h = boost::rational_cast<double>(d.h.value);
                const int m = x.dimension();
                v["orientable"] = a.orientable;
                v["matrices_equal"] = a.matrices_equal;
                v["h_top"] = str(a.h_top);
                v["h_dirichlet"] = str(a.h_dirichlet);
                v["lambda_dirichlet"] = d.lambda;
                bound = "equal; h_S >= lambda_S >= h_S^2/" + std::to_string(2 * (m + 1));
                return a.orientable && a.matrices_equal && a.h_equal && h >= d.lambda - kSlack &&
                       d.lambda >= h * h / (2.0 * (m + 1)) - kSlack;
              });
  }
  const SimplicialComplex p = run.make({"rp2"});
  run.check("dirichlet.rp2", "non-orientable closed surface: lambda_S = 0 while lambda_2 > 0; h_2 = h_S",
            [&](json& v, std::string& bound) {
              const AgreementReport a = agreement_check(p, run.limits());
              const DirichletPair d = dirichlet_pair(dual_graph(p), run.limits());
              const double lambda = spectral_gap(p, 2, Direction::Boundary, false, run.config().eig_tol);
              v["lambda_dirichlet"] = d.lambda;
              v["lambda_2"] = real(lambda);
              v["matrices_equal"] = a.matrices_equal;
              v["h_equal"] = a.h_equal;
              bound = "|lambda_S| <= 1e-8, lambda_2 > 0, matrices differ, h equal";
              return std::abs(d.lambda) <= kEqual && lambda > kEqual && !a.matrices_equal && a.h_equal;
            });
}

}  // namespace

bool VerificationReport::pass() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

nlohmann::json VerificationReport::to_json(bool with_timing) const {
  json out;
  out["suite"] = suite;
  out["pass"] = pass();
  out["failures"] = failures();
  json list = json::array();
  for (const Check& c : checks) {
    json j;
    j["id"] = c.id;
    j["claim"] = c.claim;
    j["values"] = c.values;
    j["bound"] = c.bound;
    j["pass"] = c.pass;
    if (with_timing) j["runtime_ms"] = c.runtime_ms;
    list.push_back(std::move(j));
  }
  out["checks"] = std::move(list);
  return out;
}

std::string VerificationReport::text() const {
  std::ostringstream os;
  for (const Check& c : checks)
    os << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.claim << "  " << c.values.dump() << "\n";
  os << (pass() ? "all " + std::to_string(checks.size()) + " checks passed"
                : std::to_string(failures()) + " of " + std::to_string(checks.size()) + " checks failed")
     << "\n";
  return os.str();
}

VerificationReport run_verify(const VerifyOptions& options) {
  if (options.m < 2) throw Error(Errc::ValidationError, "verify needs m >= 2");
  if (options.kmax < 1) throw Error(Errc::ValidationError, "verify needs kmax >= 1");
  if (options.seeds < 0) throw Error(Errc::ValidationError, "verify needs seeds >= 0");
  if (options.suite != "paper" && options.suite != "quick")
    throw Error(Errc::ValidationError, "unknown suite '" + options.suite + "'");
  const bool quick = options.suite == "quick";
  const int kmax = quick ? std::min(options.kmax, 3) : options.kmax;
  const int seeds = quick ? std::min(options.seeds, 5) : options.seeds;

  Runner run(options);
  xk_checks(run, options.m, kmax);
  yk_checks(run, options.m, kmax);
  sigma_checks(run, quick ? std::vector<int>{3} : std::vector<int>{3, 4, 5});
  rp2_checks(run);
  theorem_checks(run, seeds);
  lemma_checks(run, seeds);
  gk_checks(run, quick ? 3 : kmax + 2);
  dirichlet_checks(run, quick ? std::min(seeds, 3) : std::min(seeds, 20));
  VerificationReport report = run.take();
  report.suite = options.suite;
  return report;
}

}  // namespace scx
