#include "scx/error.hpp"

namespace scx {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::DuplicateVertexInSimplex: return "DuplicateVertexInSimplex";
    case Errc::InvalidVertex: return "InvalidVertex";
    case Errc::SimplexNotFound: return "SimplexNotFound";
    case Errc::DimensionOutOfRange: return "DimensionOutOfRange";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NoBoundary: return "NoBoundary";
    case Errc::BeyondBruteForceCap: return "BeyondBruteForceCap";
    case Errc::NonSymmetric: return "NonSymmetric";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::Branching: return "Branching";
    case Errc::EmptyInterior: return "EmptyInterior";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace scx
