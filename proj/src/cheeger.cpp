#include "scx/cheeger.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <thread>

#include "scx/error.hpp"
#include "scx/metrics.hpp"

namespace scx {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

struct CosetEntry {
  std::uint32_t weight = kUnvisited;
  std::uint64_t chain = 0;
};

bool better(std::uint32_t w, std::uint64_t v, const CosetEntry& e) {
  return w < e.weight || (w == e.weight && support_less(v, e.chain));
}

std::size_t apply_weight(const RatioProblem& p, const BitVector& chain) {
  BitVector image(p.op_rows);
  for (std::size_t i : chain.support()) image ^= p.op_columns[i];
  return image.weight();
}

void sweep_range(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint64_t>& keys,
                 std::vector<CosetEntry>& table) {
  std::uint64_t v = lo ^ (lo >> 1);
  std::uint64_t key = 0;
  for (std::uint64_t bits = v; bits; bits &= bits - 1) key ^= keys[static_cast<std::size_t>(std::countr_zero(bits))];
  auto w = static_cast<std::uint32_t>(std::popcount(v));
  auto visit = [&] {
    CosetEntry& e = table[key];
    if (better(w, v, e)) {
      e.weight = w;
      e.chain = v;
    }
  };
  visit();
  for (std::uint64_t j = lo + 1; j < hi; ++j) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(j));
    const std::uint64_t mask = std::uint64_t{1} << bit;
    v ^= mask;
    key ^= keys[bit];
    w = (v & mask) ? w + 1 : w - 1;
    visit();
  }
}

std::string cap_message(const char* what, std::size_t bits, int cap, int dimension) {
  return std::string(what) + " 2^" + std::to_string(bits) + " exceeds cap 2^" + std::to_string(cap) +
         " in dimension " + std::to_string(dimension);
}

void check_dim(const SimplicialComplex& x, int k) {
  if (k < 0 || k > x.dimension())
    throw Error(Errc::DimensionOutOfRange, "Cheeger number of dimension " + std::to_string(k));
}

// Minimum weight over chain + span(basis), enumerating the span by Gray code.
std::size_t coset_min_weight(const BitVector& chain, const Z2Basis& basis, int cap_bits) {
  const std::size_t r = basis.rank();
  if (r > static_cast<std::size_t>(cap_bits) || r >= 63)
    throw Error(Errc::BeyondBruteForceCap, "image span 2^" + std::to_string(r) + " exceeds cap 2^" +
                                               std::to_string(cap_bits));
  BitVector v = chain;
  std::size_t best = v.weight();
  const std::uint64_t total = std::uint64_t{1} << r;
  for (std::uint64_t j = 1; j < total; ++j) {
    v ^= basis.vectors()[static_cast<std::size_t>(std::countr_zero(j))];
    best = std::min(best, v.weight());
  }
  return best;
}

}  // namespace

CheegerCertificate minimize_ratio(const RatioProblem& problem, int dimension, const SweepLimits& limits) {
  const std::size_t n = problem.domain;
  if (n > static_cast<std::size_t>(limits.brute_cap_bits) || n > 62)
    throw Error(Errc::BeyondBruteForceCap, cap_message("sweep of", n, limits.brute_cap_bits, dimension));
  const std::size_t rank = problem.image.rank();
  const std::size_t free = n - rank;
  if (free > static_cast<std::size_t>(limits.coset_cap_bits))
    throw Error(Errc::BeyondBruteForceCap, cap_message("coset table of", free, limits.coset_cap_bits, dimension));

  CheegerCertificate cert;
  cert.method = CertificateMethod::Brute;
  cert.witness = Z2Chain{dimension, BitVector(n)};
  if (free == 0) {
    cert.unbounded = true;
    return cert;
  }

  // Compressed coset key of each unit vector: reduced form restricted to the
  // non-pivot coordinates.
  std::vector<std::size_t> slot(n, n);
  {
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : problem.image.pivots()) is_pivot[p] = true;
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (!is_pivot[i]) slot[i] = next++;
  }
  std::vector<std::uint64_t> keys(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    BitVector e(n);
    e.set(i);
    for (std::size_t b : problem.image.reduce(std::move(e)).support()) keys[i] |= std::uint64_t{1} << slot[b];
  }

  const std::uint64_t total = std::uint64_t{1} << n;
  const std::size_t table_size = std::size_t{1} << free;
  unsigned workers = std::max(1u, limits.threads);
  if (total < (std::uint64_t{1} << 12)) workers = 1;
  std::vector<std::vector<CosetEntry>> tables(workers, std::vector<CosetEntry>(table_size));
  const std::uint64_t chunk = (total + workers - 1) / workers;
  if (workers == 1) {
    sweep_range(0, total, keys, tables[0]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      const std::uint64_t lo = chunk * t;
      const std::uint64_t hi = std::min(total, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi, t] { sweep_range(lo, hi, keys, tables[t]); });
    }
  }
  auto& table = tables[0];
  for (unsigned t = 1; t < workers; ++t)
    for (std::size_t key = 0; key < table_size; ++key) {
      const CosetEntry& e = tables[t][key];
      if (e.weight != kUnvisited && better(e.weight, e.chain, table[key])) table[key] = e;
    }

  bool found = false;
  for (std::size_t key = 1; key < table_size; ++key) {
    const CosetEntry& e = table[key];
    const BitVector chain = BitVector::from_word(n, e.chain);
    const std::size_t num = apply_weight(problem, chain);
    if (!found || num * cert.denominator < cert.numerator * e.weight) {
      found = true;
      cert.numerator = num;
      cert.denominator = e.weight;
      cert.witness.bits = chain;
    }
  }
  cert.value = Rational(static_cast<std::int64_t>(cert.numerator), static_cast<std::int64_t>(cert.denominator));
  return cert;
}

RatioProblem cheeger_problem(const SimplicialComplex& x, int k, Direction direction, bool reduced) {
  check_dim(x, k);
  RatioProblem p;
  p.domain = x.count(k);
  Z2Matrix op;
  Z2Matrix image;
  if (direction == Direction::Coboundary) {
    op = z2_coboundary_matrix(x, k);
    image = z2_coboundary_matrix(x, k - 1, reduced);
  } else {
    op = z2_boundary_matrix(x, k, reduced);
    image = z2_boundary_matrix(x, k + 1);
  }
  p.op_rows = op.rows();
  const Z2Matrix op_t = op.transpose();
  for (std::size_t i = 0; i < p.domain; ++i) p.op_columns.push_back(op_t.row(i));
  p.image = Z2Basis(p.domain);
  const Z2Matrix image_t = image.transpose();
  for (std::size_t c = 0; c < image_t.rows(); ++c) p.image.insert(image_t.row(c));
  return p;
}

CheegerCertificate cheeger(const SimplicialComplex& x, int k, Direction direction, bool reduced,
                           const SweepLimits& limits) {
  return minimize_ratio(cheeger_problem(x, k, direction, reduced), k, limits);
}

CheegerCertificate chain_ratio(const SimplicialComplex& x, int k, Direction direction, const Z2Chain& chain,
                               bool reduced, int cap_bits) {
  const RatioProblem p = cheeger_problem(x, k, direction, reduced);
  if (chain.bits.size() != p.domain) throw Error(Errc::ShapeMismatch, "chain length differs from |S_k|");
  if (p.image.contains(chain.bits)) throw Error(Errc::ValidationError, "chain lies in the image subspace");
  CheegerCertificate cert;
  cert.method = CertificateMethod::Witness;
  cert.witness = chain;
  cert.numerator = apply_weight(p, chain.bits);
  cert.denominator = coset_min_weight(chain.bits, p.image, cap_bits);
  cert.value = Rational(static_cast<std::int64_t>(cert.numerator), static_cast<std::int64_t>(cert.denominator));
  return cert;
}

bool reverify(const SimplicialComplex& x, int k, Direction direction, const CheegerCertificate& cert, bool reduced,
              int cap_bits) {
  const RatioProblem p = cheeger_problem(x, k, direction, reduced);
  if (cert.unbounded) return p.image.rank() == p.domain;
  if (cert.witness.bits.size() != p.domain || p.image.contains(cert.witness.bits)) return false;
  if (apply_weight(p, cert.witness.bits) != cert.numerator) return false;
  if (coset_min_weight(cert.witness.bits, p.image, cap_bits) != cert.denominator) return false;
  return cert.denominator > 0 &&
         cert.value == Rational(static_cast<std::int64_t>(cert.numerator), static_cast<std::int64_t>(cert.denominator));
}

CheegerCertificate structural_cheeger(const SimplicialComplex& x, StructuralTarget target, int cap_bits) {
  const int m = x.dimension();
  if (m < 1) throw Error(Errc::HypothesisViolated, "complex dimension >= 1");
  CheegerCertificate cert;
  cert.method = CertificateMethod::Structural;

  if (target == StructuralTarget::BoundaryOneViaDiameter) {
    if (betti(x, 1, Field::Z2) != 0) throw Error(Errc::HypothesisViolated, "H_1(Z2) = 0");
    if (x.component_count() != 1) throw Error(Errc::HypothesisViolated, "complex is connected");
    const DiameterResult d = distance_and_diameter(x);
    cert.witness = d.geodesics.front().chain;
    cert.numerator = 2;
    cert.denominator = static_cast<std::size_t>(d.diameter);
  } else {
    if (betti(x, m - 1, Field::Z2) != 0) throw Error(Errc::HypothesisViolated, "H^{m-1}(Z2) = 0");
    if (betti(x, m, Field::Z2) != 0) throw Error(Errc::HypothesisViolated, "H_m(Z2) = 0");
    const DepthResult d = depth_and_radius(x, cap_bits);
    const auto deepest = static_cast<std::size_t>(std::find(d.depth.begin(), d.depth.end(), d.radius) - d.depth.begin());
    cert.witness = d.witness[deepest];
    cert.numerator = 1;
    cert.denominator = static_cast<std::size_t>(d.radius);
  }
  cert.value = Rational(static_cast<std::int64_t>(cert.numerator), static_cast<std::int64_t>(cert.denominator));
  return cert;
}

}  // namespace scx
