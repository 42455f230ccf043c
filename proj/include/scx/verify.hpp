#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scx/config.hpp"
#include "scx/generators.hpp"

namespace scx {

struct Check {
  std::string id;
  /// The mathematical statement being tested.
  std::string claim;
  /// Computed quantities: exact values as rational strings, eigenvalues as
  /// numbers.
  nlohmann::json values;
  std::string bound;
  bool pass = false;
  double runtime_ms = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;

  bool pass() const;
  std::size_t failures() const;
  /// Timing is left out when `with_timing` is false, which makes the
  /// document a pure function of the options.
  nlohmann::json to_json(bool with_timing = true) const;
  /// One line per check.
  std::string text() const;
};

using GeneratorHook = std::function<SimplicialComplex(const FamilySpec&)>;

struct VerifyOptions {
  std::string suite = "paper";  // paper or quick
  int m = 2;
  int kmax = 4;
  int seeds = 25;
  Config config;
  /// Source of every generated complex; tests swap in a faulty one.
  GeneratorHook generator = generate;
};

/// Runs the claim matrix: the X_k and Y_k families in dimension m up to
/// kmax, full simplexes, RP², seeded random disks and trees (`seeds` of
/// each), G_k, and the dual-graph comparisons. The quick suite caps kmax at
/// 3 and seeds at 5. Throws ValidationError for m < 2 or kmax < 1 and
/// BeyondBruteForceCap when a required sweep exceeds the caps.
VerificationReport run_verify(const VerifyOptions& options);

}  // namespace scx
