#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "scx/complex.hpp"
#include "scx/dirichlet.hpp"

namespace scx {

/// A complex file: {"name"?, "metadata"?, "maximal_simplices": [[int...]...]}.
struct ComplexDocument {
  std::optional<std::string> name;
  nlohmann::json metadata;  // null when absent
  SimplicialComplex complex;
};

/// Throws ParseError (with line and column) on malformed JSON or a bad
/// field, ValidationError on duplicate facets or repeated vertices.
ComplexDocument parse_complex(std::string_view text);

/// Canonical form: keys in the order name, metadata, maximal_simplices;
/// metadata keys sorted; one facet per line, facets sorted
/// lexicographically; trailing newline.
std::string serialize_complex(const ComplexDocument& doc);
std::string serialize_complex(const SimplicialComplex& x);

/// {"dimension", "vertices": [[...]...], "edges": [[i,j]...], "border_set": [...]}.
nlohmann::json dual_graph_json(const DualGraph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace scx
