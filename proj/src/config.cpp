#include "scx/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "scx/error.hpp"

namespace scx {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw Error(Errc::ValidationError, "bad value '" + text + "' for " + key);
  return value;
}

void apply(Config& c, const std::string& key, const std::string& value) {
  if (key == "brute_cap_bits") {
    c.brute_cap_bits = parse_number<int>(key, value);
    if (c.brute_cap_bits < 1 || c.brute_cap_bits > 62) throw Error(Errc::ValidationError, key + " must be in [1, 62]");
  } else if (key == "coset_cap_bits") {
    c.coset_cap_bits = parse_number<int>(key, value);
    if (c.coset_cap_bits < 1 || c.coset_cap_bits > 40) throw Error(Errc::ValidationError, key + " must be in [1, 40]");
  } else if (key == "eig_tol") {
    c.eig_tol = parse_number<double>(key, value);
    if (!(c.eig_tol > 0)) throw Error(Errc::ValidationError, key + " must be positive");
  } else if (key == "zero_band") {
    c.zero_band = parse_number<double>(key, value);
    if (!(c.zero_band > 0)) throw Error(Errc::ValidationError, key + " must be positive");
  } else if (key == "seed") {
    c.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "threads") {
    c.threads = parse_number<unsigned>(key, value);
    if (c.threads < 1) throw Error(Errc::ValidationError, key + " must be at least 1");
  } else {
    throw Error(Errc::ValidationError, "unknown configuration key '" + key + "'");
  }
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{"brute_cap_bits", "coset_cap_bits", "eig_tol",
                                             "zero_band",      "seed",           "threads"};
  return keys;
}

KeyValues parse_key_values(std::string_view text) {
  KeyValues out;
  std::istringstream in{std::string(text)};
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw Error(Errc::ParseError, "line " + std::to_string(number) + ": expected key = value");
    std::string key = trim(std::string_view(t).substr(0, eq));
    std::string value = trim(std::string_view(t).substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key.empty()) throw Error(Errc::ParseError, "line " + std::to_string(number) + ": empty key");
    out[key] = value;
  }
  return out;
}

KeyValues environment_values(const std::function<const char*(const char*)>& getenv) {
  KeyValues out;
  for (const std::string& key : config_keys()) {
    std::string name = "SCX_";
    for (char ch : key) name += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (const char* v = getenv(name.c_str())) out[key] = v;
  }
  return out;
}

Config resolve_config(const KeyValues& flags, const KeyValues& env, const KeyValues& file) {
  Config c;
  for (const KeyValues* layer : {&file, &env, &flags})
    for (const auto& [key, value] : *layer) apply(c, key, value);
  return c;
}

}  // namespace scx
