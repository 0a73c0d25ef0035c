#include "doctest.h"
#include "tolspace/builders.hpp"
#include "tolspace/error.hpp"
#include "tolspace/json_io.hpp"

using namespace tolspace;
using tolspace::json::Json;

namespace {

std::string where_of(const std::string& text) {
  try {
    json::read_graph(text);
  } catch (const ParseError& e) {
    return e.where();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("graphs round trip") {
  for (const auto& x : {cycle(4), sphere(2), homology_sphere_with_simple_edge(), equator_fiber_model(), hopf_total(),
                        ToleranceSpace(), complete(1)}) {
    const std::string text = json::to_json(x).dump();
    CHECK(json::read_graph(text) == x);
    CHECK(json::to_json(json::read_graph(text)).dump() == text);
  }
}

TEST_CASE("graph output is fixed") {
  CHECK(json::to_json(cycle(3)).dump() ==
        R"({"schema_version":1,"vertices":["x1","x2","x3"],"edges":[["x1","x2"],["x1","x3"],["x2","x3"]]})");
  CHECK(json::to_json(complete(2), false).dump() == R"({"vertices":["v1","v2"],"edges":[["v1","v2"]]})");
}

TEST_CASE("graph errors point at the offending value") {
  CHECK(where_of(R"({"vertices": ["a", "b"], "edges": [["a", "c"]]})") == "/edges/0/1");
  CHECK(where_of(R"({"vertices": ["a", "a"], "edges": []})") == "/vertices/1");
  CHECK(where_of(R"({"vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]})") == "/edges/1");
  CHECK(where_of(R"({"vertices": ["a"], "edges": [["a", "a"]]})") == "/edges/0");
  CHECK(where_of(R"({"vertices": ["a", 3], "edges": []})") == "/vertices/1");
  CHECK(where_of(R"({"vertices": ["a"], "edges": [["a"]]})") == "/edges/0");
  CHECK(where_of(R"({"vertices": ["a"], "edges": [], "colour": "red"})") == "/colour");
  CHECK(where_of(R"({"vertices": ["a"]})") == "/");
  CHECK(where_of(R"({"schema_version": 2, "vertices": [], "edges": []})") == "/schema_version");
  CHECK(where_of(R"([1, 2])") == "/");
  CHECK(where_of("{\"vertices\": [\n  \"a\",,\n") == "line 2, column 7");
  CHECK(json::read_graph(R"({"vertices": ["a"], "edges": []})").size() == 1);
}

TEST_CASE("maps") {
  const ToleranceMap f = phi_bar();
  const std::string text = json::to_json(f).dump();
  const ToleranceMap g = json::read_map(text);
  CHECK(g.domain() == f.domain());
  CHECK(g.codomain() == f.codomain());
  CHECK(g.assignment() == f.assignment());

  const std::string base = R"("domain": {"vertices": ["a", "b"], "edges": []}, "codomain": {"vertices": ["p"], "edges": []})";
  try {
    json::read_map("{" + base + R"(, "assignment": {"a": "p"}})");
    FAIL("missing image accepted");
  } catch (const ParseError& e) {
    CHECK(e.where() == "/assignment");
  }
  try {
    json::read_map("{" + base + R"(, "assignment": {"a": "p", "b": "q"}})");
    FAIL("unknown image accepted");
  } catch (const ParseError& e) {
    CHECK(e.where() == "/assignment/b");
  }
  try {
    json::read_map(R"({"domain": {"vertices": ["a", "a"], "edges": []}, "codomain": {"vertices": [], "edges": []}, "assignment": {}})");
    FAIL("duplicate vertex accepted");
  } catch (const ParseError& e) {
    CHECK(e.where() == "/domain/vertices/1");
  }
}

TEST_CASE("multiplication tables") {
  const auto t = place_group(cyclic_group(3), Graph(3), {0, 1, 2});
  const auto back = json::read_table(json::to_json(t).dump());
  CHECK(back.table() == t.table());
  CHECK(back.identity() == "0");
  CHECK(back.carrier() == t.carrier());
  CHECK_THROWS_AS(json::read_table(R"({"graph": {"vertices": ["e"], "edges": []}, "identity": "e", "table": {}})"), ParseError);
  CHECK_THROWS_AS(json::read_table(R"({"graph": {"vertices": ["e"], "edges": []}, "identity": "z", "table": {"e": {"e": "e"}}})"),
                  ParseError);
}

TEST_CASE("reports") {
  const Json h = json::to_json(reduced_homology(cycle(5)));
  CHECK(h.dump() == R"({"0":{"betti":0,"torsion":[]},"1":{"betti":1,"torsion":[]}})");
  const Json v = json::to_json(check_equivalent(cycle(4), cycle(8)), true);
  CHECK(v["verdict"] == "equivalent");
  CHECK(v["trace"].is_object());
  CHECK(json::to_json(check_equivalent(cycle(4), cycle(8)), false).contains("moves"));
  const Json e = json::to_json(embed(cycle(4)));
  CHECK(e["dimension"] == 3);
  CHECK(e["coords"]["x4"] == Json::array({0, 0, 1}));
  // Same input, same bytes.
  CHECK(json::to_json(is_simple_contractible(cone(cycle(6))), true).dump() ==
        json::to_json(is_simple_contractible(cone(cycle(6))), true).dump());
}

TEST_CASE("dot output") {
  const std::string dot = json::to_dot(cycle(3), "T");
  CHECK(dot.rfind("graph \"T\" {", 0) == 0);
  CHECK(dot.find("\"x1\" -- \"x2\"") != std::string::npos);
  CHECK(dot.back() == '\n');
}
