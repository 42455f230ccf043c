#include "scx/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "scx/error.hpp"

namespace scx {

namespace {

using nlohmann::json;

std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

// Offset of the opening bracket of facet row `row`; facet rows are flat
// arrays, so it is the (row + 2)-th '[' after the key.
std::size_t row_offset(std::string_view text, std::size_t row) {
  const std::size_t key = text.find("\"maximal_simplices\"");
  if (key == std::string_view::npos) return 0;
  std::size_t pos = text.find('[', key);
  for (std::size_t i = 0; i <= row && pos != std::string_view::npos; ++i) pos = text.find('[', pos + 1);
  return pos == std::string_view::npos ? key : pos;
}

}  // namespace

ComplexDocument parse_complex(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, position(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(Errc::ParseError, position(text, 0) + ": document must be a JSON object");

  ComplexDocument out;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw Error(Errc::ParseError, position(text, 0) + ": name must be a string");
    out.name = doc["name"].get<std::string>();
  }
  if (doc.contains("metadata")) out.metadata = doc["metadata"];
  if (!doc.contains("maximal_simplices") || !doc["maximal_simplices"].is_array())
    throw Error(Errc::ParseError, position(text, 0) + ": missing array field maximal_simplices");

  std::vector<Simplex> facets;
  std::set<Simplex> seen;
  const auto& rows = doc["maximal_simplices"];
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string where = position(text, row_offset(text, r));
    if (!rows[r].is_array() || rows[r].empty())
      throw Error(Errc::ParseError, where + ": simplex " + std::to_string(r) + " must be a nonempty array");
    std::vector<Vertex> v;
    for (const auto& id : rows[r]) {
      if (!id.is_number_integer() || id.get<long long>() < 0 || id.get<long long>() > 0x7fffffff)
        throw Error(Errc::ParseError, where + ": vertex ids must be non-negative integers");
      v.push_back(static_cast<Vertex>(id.get<long long>()));
    }
    Simplex s;
    try {
      s = Simplex::from_vertices(std::move(v));
    } catch (const Error& e) {
      throw Error(Errc::ValidationError, where + ": " + e.what());
    }
    if (!seen.insert(s).second) throw Error(Errc::ValidationError, where + ": duplicate facet " + s.to_string());
    facets.push_back(std::move(s));
  }
  if (facets.empty()) throw Error(Errc::ValidationError, "maximal_simplices is empty");
  out.complex = SimplicialComplex::from_maximal(facets);
  return out;
}

std::string serialize_complex(const ComplexDocument& doc) {
  std::ostringstream os;
  os << "{\n";
  if (doc.name) os << "  \"name\": " << json(*doc.name).dump() << ",\n";
  if (!doc.metadata.is_null()) os << "  \"metadata\": " << doc.metadata.dump() << ",\n";
  os << "  \"maximal_simplices\": [";
  const auto facets = doc.complex.maximal_simplices();
  for (std::size_t i = 0; i < facets.size(); ++i) {
    os << (i ? ",\n    [" : "\n    [");
    const auto& v = facets[i].vertices();
    for (std::size_t j = 0; j < v.size(); ++j) os << (j ? "," : "") << v[j];
    os << "]";
  }
  os << "\n  ]\n}\n";
  return os.str();
}

std::string serialize_complex(const SimplicialComplex& x) { return serialize_complex(ComplexDocument{{}, {}, x}); }

nlohmann::json dual_graph_json(const DualGraph& g) {
  json out;
  out["dimension"] = g.dimension;
  json vertices = json::array();
  for (const auto& s : g.vertices) vertices.push_back(s.vertices());
  out["vertices"] = std::move(vertices);
  json edges = json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  out["edges"] = std::move(edges);
  out["border_set"] = g.border;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ValidationError, "cannot write " + path);
  out << contents;
}

}  // namespace scx
