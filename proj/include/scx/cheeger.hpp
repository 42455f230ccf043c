#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "scx/algebra.hpp"
#include "scx/complex.hpp"
#include "scx/z2.hpp"

namespace scx {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

struct SweepLimits {
  int brute_cap_bits = 24;  // at most 2^bits vectors swept
  int coset_cap_bits = 20;  // at most 2^bits cosets tabulated
  unsigned threads = 1;
};

/// min over x outside span(image) of |op * x| / min_{y in span(image)} |x + y|,
/// for x ranging over Z2^domain.
struct RatioProblem {
  std::size_t domain = 0;
  /// Images of the unit vectors under the numerator operator.
  std::vector<BitVector> op_columns;
  std::size_t op_rows = 0;
  Z2Basis image;
};

enum class CertificateMethod { Brute, Structural, Witness };

/// Exact value of a Cheeger-type ratio with the chain attaining it.
///
/// `unbounded` marks the empty minimum (every chain lies in the image);
/// value is then meaningless and the witness empty.
struct CheegerCertificate {
  Rational value{0};
  bool unbounded = false;
  Z2Chain witness;
  std::size_t numerator = 0;
  std::size_t denominator = 0;
  CertificateMethod method = CertificateMethod::Brute;

  std::string value_string() const { return unbounded ? "inf" : to_string(value); }
};

/// Exhaustive Gray-code sweep over Z2^domain.
///
/// Each vector's coset key is its reduction against `image` compressed to
/// the non-pivot coordinates; keys are linear, so each step only XORs one
/// precomputed key. The table stores the minimum weight per coset (ties go
/// to the lexicographically smallest support), after which the numerator is
/// evaluated once per coset on its minimiser. Work may be split across
/// `threads`; per-worker tables merge by the same order, so the result does
/// not depend on the thread count.
///
/// Throws BeyondBruteForceCap when domain > brute_cap_bits or the coset
/// count exceeds 2^coset_cap_bits.
CheegerCertificate minimize_ratio(const RatioProblem& problem, int dimension, const SweepLimits& limits = {});

/// Numerator operator and image subspace of h^k (Coboundary) or h_k
/// (Boundary). `reduced` only matters at k = 0: the coboundary image becomes
/// span{all-ones}, the boundary numerator becomes the augmentation.
RatioProblem cheeger_problem(const SimplicialComplex& x, int k, Direction direction, bool reduced = false);

/// h^k or h_k by exhaustive coset search. Throws DimensionOutOfRange,
/// BeyondBruteForceCap.
CheegerCertificate cheeger(const SimplicialComplex& x, int k, Direction direction, bool reduced = false,
                           const SweepLimits& limits = {});

/// Ratio of one given chain: |op * chain| over the minimum weight in its
/// coset (found by enumerating the image span, at most 2^cap_bits). An
/// upper bound on the Cheeger number. Throws ValidationError if the chain
/// lies in the image.
CheegerCertificate chain_ratio(const SimplicialComplex& x, int k, Direction direction, const Z2Chain& chain,
                               bool reduced = false, int cap_bits = 24);

/// Recomputes numerator and denominator of `cert` from scratch; true when
/// both match and the witness lies outside the image.
bool reverify(const SimplicialComplex& x, int k, Direction direction, const CheegerCertificate& cert,
              bool reduced = false, int cap_bits = 24);

enum class StructuralTarget {
  BoundaryOneViaDiameter,      // h_1 = 2 / diam
  CoboundaryTopViaRadius,      // h^{m-1} = 1 / rad
};

/// Closed-form Cheeger numbers with their geodesic or depth-attaining
/// witnesses. Hypotheses are checked first; a failure throws
/// HypothesisViolated naming it. The radius path also throws NoBoundary.
CheegerCertificate structural_cheeger(const SimplicialComplex& x, StructuralTarget target, int cap_bits = 24);

}  // namespace scx
