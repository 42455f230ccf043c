#include <filesystem>

#include <doctest.h>

#include "scx/error.hpp"
#include "scx/generators.hpp"
#include "scx/io.hpp"

using namespace scx;

namespace {

Errc code_of(std::string_view text) {
  try {
    parse_complex(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::EmptyInput;
}

}  // namespace

TEST_CASE("minimal document") {
  const ComplexDocument d = parse_complex(R"({"maximal_simplices":[[0,1,2]]})");
  CHECK(d.complex.counts() == std::vector<std::size_t>{3, 3, 1});
  CHECK_FALSE(d.name.has_value());
  CHECK(d.metadata.is_null());
}

TEST_CASE("golden files round-trip byte for byte") {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(SCX_GOLDEN_DIR)) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().string());
    const std::string bytes = read_file(entry.path().string());
    CHECK(serialize_complex(parse_complex(bytes)) == bytes);
    ++seen;
  }
  CHECK(seen >= 5);
}

TEST_CASE("serialization is canonical") {
  const std::string a = serialize_complex(parse_complex(R"({"maximal_simplices":[[2,1,0],[3,1]],"name":"x"})"));
  const std::string b = serialize_complex(parse_complex(R"({"name":"x","maximal_simplices":[[1,3],[0,2,1]]})"));
  CHECK(a == b);
  CHECK(a == "{\n  \"name\": \"x\",\n  \"maximal_simplices\": [\n    [0,1,2],\n    [1,3]\n  ]\n}\n");

  const std::string r = serialize_complex(rp2());
  CHECK(std::count(r.begin(), r.end(), '\n') == 14);  // braces, key line, 10 rows, closing bracket
  CHECK(r == serialize_complex(rp2()));
}

TEST_CASE("non-maximal input simplexes are absorbed") {
  const ComplexDocument d = parse_complex(R"({"maximal_simplices":[[0,1,2],[0,1]]})");
  CHECK(d.complex.maximal_simplices().size() == 1);
}

TEST_CASE("parse errors") {
  CHECK(code_of(R"({"maximal_simplices":[[0,-1]]})") == Errc::ParseError);
  CHECK(code_of(R"({"maximal_simplices":[[0,1.5]]})") == Errc::ParseError);
  CHECK(code_of(R"({"maximal_simplices":[[0,1],]})") == Errc::ParseError);
  CHECK(code_of(R"({"simplices":[[0,1]]})") == Errc::ParseError);
  CHECK(code_of(R"([[0,1]])") == Errc::ParseError);
  CHECK(code_of(R"({"maximal_simplices":[[0,1],[1,0]]})") == Errc::ValidationError);
  CHECK(code_of(R"({"maximal_simplices":[[0,0,1]]})") == Errc::ValidationError);
  CHECK(code_of(R"({"maximal_simplices":[]})") == Errc::ValidationError);
  CHECK(code_of(R"({"maximal_simplices":[[]]})") == Errc::ParseError);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_complex("{\n  \"maximal_simplices\": [\n    [0,1],\n    [2,-3]\n  ]\n}\n");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 4, column 5") != std::string::npos);
  }
  try {
    parse_complex("{\n  \"maximal_simplices\": [\n    [0,1]\n    [2]\n");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("dual graph document") {
  const auto j = dual_graph_json(dual_graph(sigma(2)));
  CHECK(j["dimension"] == 2);
  CHECK(j["vertices"].size() == 4);
  CHECK(j["edges"].size() == 3);
  CHECK(j["border_set"] == nlohmann::json({1, 2, 3}));
}
