#include <sstream>

#include "doctest.h"
#include "flatsr/flatsr.hpp"

using namespace flatsr;

TEST_CASE("make_graph validates names and endpoints") {
  CHECK_THROWS_AS(make_graph("g", {"a", "a"}, {}), input_error);
  CHECK_THROWS_AS(make_graph("g", {"a", "b"}, {{0, 2}}), input_error);
  CHECK_THROWS_AS(make_graph("g", {"a", "b"}, {{0, 1}, {0, 1}}), input_error);
  CHECK_NOTHROW(make_graph("g", {"a", "b"}, {{0, 1}}));
}

TEST_CASE("degree constraints and isolation") {
  auto fan = make_graph("fan", {"a", "b", "c"}, {{0, 1}, {0, 2}});
  auto v = validate_graph(fan);
  CHECK(!v.valid);
  CHECK(v.offending_vertex == "a");
  CHECK(v.reason == "out-degree exceeds 1");

  auto join = make_graph("join", {"a", "b", "c"}, {{0, 2}, {1, 2}});
  CHECK(validate_graph(join).reason == "in-degree exceeds 1");

  auto lonely = make_graph("lonely", {"a", "b", "c"}, {{0, 1}});
  CHECK(validate_graph(lonely).reason == "isolated vertex");
  auto lonely_ok = make_graph("lonely", {"a", "b", "c"}, {{0, 1}}, true);
  CHECK(validate_graph(lonely_ok).valid);
  CHECK_THROWS_AS(require_valid_graph(lonely, "test"), precondition_error);
}

TEST_CASE("components split into paths and cycles") {
  // p3 next to c2, plus an isolated vertex
  auto G = make_graph("mix", {"a", "b", "c", "u", "v", "w"}, {{0, 1}, {1, 2}, {3, 4}, {4, 3}}, true);
  auto s = components(G);
  REQUIRE(s.components.size() == 3);
  CHECK(!s.is_acyclic);
  CHECK(s.cycle_length_set == std::vector<int>{2});
  CHECK(s.max_path_edges == 2);
  CHECK(s.max_path_multiplicity == 1);
  CHECK(component_tags(s) == "c2+p1+p3");

  auto path = s.components[0];  // least vertex name "a"
  CHECK(!path.is_cycle);
  CHECK(path.length == 2);
  CHECK(path.vertex_indices == std::vector<int>{0, 1, 2});  // source to sink

  auto cyc = s.components[1];  // least name "u"
  CHECK(cyc.is_cycle);
  CHECK(cyc.length == 2);
  CHECK(cyc.vertex_indices.front() == 3);  // starts at the least-named vertex
}

TEST_CASE("path and cycle builders") {
  auto p = path_graph(4);
  CHECK(p.vertex_count() == 4);
  CHECK(p.edges.size() == 3);
  CHECK(component_tags(components(p)) == "p4");
  auto c = cycle_graph(1);
  CHECK(c.edges == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(component_tags(components(c)) == "c1");
  // a single vertex without its loop needs the isolation flag, which
  // path_graph sets for the 1-vertex path
  CHECK(validate_graph(path_graph(1)).valid);
  CHECK(component_tags(components(path_graph(1))) == "p1");
  CHECK(component_tags(components(make_graph("empty", {}, {}))) == "-");
}

TEST_CASE("multiplicity counts top-length paths") {
  auto G = make_graph("two", {"a", "b", "c", "d"}, {{0, 1}, {2, 3}});
  auto s = components(G);
  CHECK(s.max_path_edges == 1);
  CHECK(s.max_path_multiplicity == 2);
}

TEST_CASE("graph text round trip") {
  auto G = make_graph("mix", {"a", "b", "u"}, {{0, 1}, {2, 2}});
  std::ostringstream os;
  print_graph(os, G);
  std::istringstream is(os.str());
  auto H = parse_graph(is);
  CHECK(H.name == "mix");
  CHECK(H.vertices == G.vertices);
  CHECK(H.edges == G.edges);
  CHECK(H.allow_isolated == G.allow_isolated);
}

TEST_CASE("graph parser diagnostics") {
  auto bad = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_graph(in), input_error);
  };
  bad("graph g vertices a b edges a>b");
  bad("graph g vertices a b edges a->c");
  bad("graph g vertices a a edges");
  bad("vertices a b edges a->b");
  bad("graph g edges a->b");

  std::istringstream ok("graph g # comment\nvertices a b\nedges a->b\n");
  auto G = parse_graph(ok);
  CHECK(G.vertex_count() == 2);

  std::istringstream iso("graph g vertices a b c edges a->b allow_isolated");
  CHECK(validate_graph(parse_graph(iso)).valid);
}
