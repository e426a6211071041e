#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>

#include "ornalat/building_spec.hpp"
#include "ornalat/io.hpp"
#include "ornalat/verify.hpp"

using namespace ornalat;
using nlohmann::json;

namespace {

SubsetMask M(std::initializer_list<int> m) { return SubsetMask::of(m); }

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("ornalat_test_" + name);
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("building set JSON round trip") {
  for (const auto& [name, b] : constructor_zoo()) {
    CAPTURE(name);
    auto j = building_to_json(b);
    CHECK(building_from_json(json::parse(j.dump())) == b);
  }
  auto j = building_to_json(left_segment(2));
  CHECK(j["n"] == 2);
  CHECK(j["fibers"][0] == json::parse("[[1],[1,2]]"));
}

TEST_CASE("building set JSON errors") {
  CHECK_THROWS_AS(building_from_json(json::parse("[]")), ParseError);
  CHECK_THROWS_AS(building_from_json(json::parse(R"({"n": 2})")), ParseError);
  CHECK_THROWS_AS(building_from_json(json::parse(R"({"n": "2", "fibers": []})")), ParseError);
  CHECK_THROWS_AS(building_from_json(json::parse(R"({"n": 2, "fibers": [[[1]]]})")), ParseError);
  CHECK_THROWS_AS(building_from_json(json::parse(R"({"n": 2, "fibers": [[[1]], [[3]]]})")),
                  ParseError);
  CHECK_THROWS_AS(building_from_json(json::parse(R"({"n": 2, "fibers": [[[1]], [["x"]]]})")),
                  ParseError);
  CHECK_THROWS_AS(building_from_json(json::parse(R"({"n": 2, "fibers": [[[1,2]], [[2]]]})")),
                  BuildingSetError);
}

TEST_CASE("ornamentation JSON round trip") {
  auto b = digraphical(Digraph::cycle(3));
  auto lat = enumerate(b);
  for (const Ornamentation& r : lat.elements()) CHECK(orn_from_json(b, orn_to_json(r)) == r);
  CHECK_THROWS_AS(orn_from_json(b, json::parse(R"({"values": [[1,2],[2,3],[3]]})")),
                  OrnamentationError);
  CHECK_THROWS_AS(orn_from_json(b, json::parse(R"({"vals": []})")), ParseError);
}

TEST_CASE("lattice JSON shape") {
  auto lat = enumerate(left_segment(3));
  auto j = lattice_to_json(lat);
  CHECK(j["elements"].size() == 5);
  CHECK(j["covers"].size() == lat.covers().size());
  CHECK(j["elements"][0] == json::parse("[[1],[2],[3]]"));
  for (const auto& c : j["covers"]) CHECK(c[0].get<std::size_t>() < c[1].get<std::size_t>());
}

TEST_CASE("text formats") {
  auto tam = left_segment(3);
  auto r = validate_orn(tam, {M({0, 1}), M({1}), M({2})});
  const auto nat = Labeling::natural(3);
  CHECK(format_orn(r, nat) == "[{1,2},{2},{3}]");
  CHECK(parse_orn(tam, "[ {1, 2}, {2}, {3} ]", nat) == r);
  CHECK_THROWS_AS(parse_orn(tam, "[{1,2},{2}", nat), ParseError);
  CHECK_THROWS_AS(parse_orn(tam, "[{1,4},{2},{3}]", nat), ParseError);
  CHECK_THROWS_AS(parse_orn(tam, "[{1,2},{2},{3}] x", nat), ParseError);
  CHECK_THROWS_AS(parse_orn(tam, "[{1,2},{2,3},{3}]", nat), OrnamentationError);

  auto sl = Labeling::signed_cycle(2);
  CHECK(sl.names == std::vector<std::string>{"1", "2", "-1", "-2"});
  CHECK(sl.index_of("-2") == 3);
  CHECK_THROWS_AS(sl.index_of("3"), ParseError);

  CHECK(format_arcs(ArcTorsionClass{}) == "{}");
  CHECK(format_arcs(ArcTorsionClass{{{1, 2}, {1, 3}}}) == "(1,2) (1,3)");
  CHECK(format_table({{0, 1}, {1, 1}}) == "1 2\n2 2\n");
}

TEST_CASE("DOT labels parse back to the same elements") {
  for (int n : {2, 3}) {
    auto lat = csym_atam(n);
    auto labels = Labeling::signed_cycle(n);
    const std::string dot = hasse_dot(lat, labels);
    std::regex node(R"re(\n  (\d+) \[label="([^"]*)"\];)re");
    std::size_t seen = 0;
    for (auto it = std::sregex_iterator(dot.begin(), dot.end(), node); it != std::sregex_iterator(); ++it) {
      const std::size_t k = std::stoul((*it)[1]);
      CHECK(parse_orn(lat.building(), (*it)[2].str(), labels) == lat.element(k));
      ++seen;
    }
    CHECK(seen == lat.size());
    std::regex edge(R"((\d+) -> (\d+);)");
    std::size_t edges = std::distance(std::sregex_iterator(dot.begin(), dot.end(), edge), std::sregex_iterator());
    CHECK(edges == lat.covers().size());
  }
}

TEST_CASE("edge lists and shorthands") {
  int n = 0;
  auto e = parse_edge_list("# comment\n1 2\n\n2 3 # trailing\n", n);
  CHECK(n == 3);
  CHECK(e == std::vector<Edge>{{0, 1}, {1, 2}});
  e = parse_edge_list("n 5\n1 2\n", n);
  CHECK(n == 5);
  CHECK_THROWS_AS(parse_edge_list("1\n", n), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 1\n", n), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 2\n1 3\n", n), ParseError);

  CHECK(parse_digraph("K3") == Digraph::complete_dag(3));
  CHECK(parse_digraph("C4") == Digraph::cycle(4));
  CHECK(parse_digraph("P5") == Digraph::path(5));
  CHECK(parse_graph("K4") == Graph::complete(4));
  CHECK_THROWS_AS(parse_digraph("Q3"), ParseError);
  auto path = temp_file("edges.txt", "1 2\n1 3\n");
  CHECK(parse_digraph(path.string()) == Digraph(3, {{0, 1}, {0, 2}}));
  std::filesystem::remove(path);
}

TEST_CASE("spec resolution") {
  using K = BuildingSpec::Kind;
  CHECK(resolve({K::Interval, "4"}).building == left_segment(4));
  CHECK(resolve({K::Cycle, "3"}).building == digraphical(Digraph::cycle(3)));
  auto s = resolve({K::SignedCycle, "2"});
  CHECK(s.labels.names[2] == "-1");
  CHECK(s.building == digraphical(signed_cycle(2)));
  CHECK(resolve({K::Graph, "K3"}).building == graphical(Graph::complete(3)));
  CHECK_FALSE(resolve({K::Graph, "K3"}).digraph.has_value());
  CHECK(resolve({K::Digraph, "P3"}).digraph == Digraph::path(3));
  CHECK_THROWS_AS(resolve({K::Interval, "x"}), ParseError);
  CHECK_THROWS_AS(resolve({K::Interval, "0"}), ParseError);
  CHECK_THROWS_AS(resolve({K::Custom, "/nonexistent/file.json"}), ParseError);

  auto custom = temp_file("custom.json", building_to_json(left_segment(3)).dump());
  CHECK(resolve({K::Custom, custom.string()}).building == left_segment(3));
  std::filesystem::remove(custom);
  auto bad = temp_file("bad.json", R"({"n": 2, "fibers": [[[1,2]], [[2]]]})");
  CHECK_THROWS_AS(resolve({K::Custom, bad.string()}), BuildingSetError);
  std::filesystem::remove(bad);
}
