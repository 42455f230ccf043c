#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scx/cheeger.hpp"
#include "scx/complex.hpp"
#include "scx/config.hpp"

namespace scx {

struct AnalyzeOptions {
  Config config;
  /// Dimensions to report; all of [0, m] when empty.
  std::vector<int> dims;
  /// Skip exhaustive Cheeger sweeps; only the diameter and radius formulas
  /// are used, where their hypotheses hold.
  bool structural_only = false;
};

/// Certificate as JSON: value string, numerator, denominator, method and
/// witness support.
nlohmann::json certificate_json(const CheegerCertificate& cert);

/// Every invariant of the complex in one document. Cap violations throw
/// BeyondBruteForceCap naming the dimension.
nlohmann::json analyze(const SimplicialComplex& x, const AnalyzeOptions& options = {});

/// One row per reported dimension.
std::string analysis_table(const nlohmann::json& report);
std::string analysis_csv(const nlohmann::json& report);

}  // namespace scx
