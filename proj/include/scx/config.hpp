#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "scx/cheeger.hpp"

namespace scx {

struct Config {
  int brute_cap_bits = 24;
  int coset_cap_bits = 20;
  double eig_tol = 1e-10;
  double zero_band = 1e-8;
  std::uint64_t seed = 0;
  unsigned threads = 1;

  SweepLimits limits() const { return {brute_cap_bits, coset_cap_bits, threads}; }
};

using KeyValues = std::map<std::string, std::string>;

/// Keys recognised by resolve_config().
const std::vector<std::string>& config_keys();

/// `key = value` lines; blank lines and lines starting with '#' are
/// skipped, values may be double-quoted. Throws ParseError with the line.
KeyValues parse_key_values(std::string_view text);

/// SCX_<KEY> variables for every known key, read through `getenv`.
KeyValues environment_values(const std::function<const char*(const char*)>& getenv);

/// Defaults, overridden by the file, then the environment, then flags.
/// Throws ValidationError on an unknown key or a bad value.
Config resolve_config(const KeyValues& flags, const KeyValues& env, const KeyValues& file);

}  // namespace scx
