#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tracelet/io.hpp"

using namespace tracelet;
using tracelet::io::Json;

TEST_CASE("graph json round trip") {
  std::mt19937 rng(7);
  for (int k = 0; k < 50; ++k) {
    Graph g = oracle::random_graph(rng, 4, 5);
    CHECK(io::graph_from_json(io::to_json(g)) == g);
    CHECK(io::graph_from_json(io::parse(io::to_json(g).dump(), "graph")) == g);
  }
}

TEST_CASE("graph json with arbitrary ids") {
  Json j = io::parse(R"({"vertices": ["a", "b"], "edges": [{"id": "ab", "src": "a", "tgt": "b"}, {"src": "b", "tgt": "b"}]})",
                     "graph");
  Graph g = io::graph_from_json(j);
  CHECK(g == Graph(2, {{0, 1}, {1, 1}}));
  CHECK_THROWS_AS(io::graph_from_json(io::parse(R"({"vertices": ["a", "a"], "edges": []})", "g")), PreconditionError);
  CHECK_THROWS_AS(io::graph_from_json(io::parse(R"({"vertices": ["a"], "edges": [{"src": "a", "tgt": "z"}]})", "g")),
                  PreconditionError);
}

TEST_CASE("parse errors carry the byte offset") {
  try {
    io::parse("{\"vertices\": [", "input");
    FAIL("expected a parse error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("byte 15") != std::string::npos);
  }
}

TEST_CASE("rule and tracelet round trips") {
  for (const auto& [name, r] : bundled_library()) {
    CHECK(io::rule_from_json(io::to_json(r)) == r);
    (void)name;
  }
  int seen = 0;
  for (const auto& level : enumerate_tracelets(bundled_rules(), 2))
    for (const auto& t : level) {
      CHECK(io::tracelet_from_json(io::parse(io::to_json(t).dump(), "t")) == t);
      Tracelet c = canonicalize(t);
      CHECK(io::tracelet_from_json(io::to_compact_json(t)) == c);
      ++seen;
    }
  CHECK(seen > 50);
  CHECK_THROWS_AS(io::tracelet_from_json(io::parse(R"({"objects": [], "steps": []})", "t")), PreconditionError);
  CHECK_THROWS_AS(io::tracelet_from_json(io::parse(R"({"key": "nonsense"})", "t")), PreconditionError);
}

TEST_CASE("element and tensor serialisation") {
  HopfElement a = HopfElement::of(tracelet_of_rule(edge_deletion()));
  HopfElement b = HopfElement::of(tracelet_of_rule(edge_creation()));
  HopfElement p = product(a, b) + Rational(-3, 2) * unit();
  CHECK(io::element_from_json(io::parse(io::to_json(p).dump(), "e")) == p);
  Json j = io::to_json(unit(Rational(-3, 2)));
  CHECK(j.dump() == R"([[[],"-3/2"]])");
  Json t = io::to_json(coproduct(a));
  CHECK(t.size() == 2);
  CHECK(t[0][2] == "1/1");
  CHECK_THROWS_AS(io::element_from_json(io::parse(R"([[[], "1/0"]])", "e")), PreconditionError);
  CHECK_THROWS_AS(io::element_from_json(io::parse(R"([[[], 3]])", "e")), PreconditionError);
}

TEST_CASE("dot export") {
  CHECK(io::to_dot(Graph::single_edge()).find("v0 -> v1") != std::string::npos);
  CHECK(io::to_dot(edge_creation()).find("cluster_K") != std::string::npos);
  CHECK(io::to_dot(tracelet_of_rule(edge_creation())).find("cluster_X1_") != std::string::npos);
}

TEST_CASE("library directories and the environment default") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "tracelet_io_test_lib";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream one(dir / "a.json");
    one << io::to_json(NamedRule{"make", edge_creation()}).dump();
    std::ofstream many(dir / "b.json");
    Json all = {{"rules", {io::to_json(NamedRule{"kill", edge_deletion()}), io::to_json(NamedRule{"spawn", vertex_creation()})}}};
    many << all.dump();
    std::ofstream ignored(dir / "notes.txt");
    ignored << "not a rule";
  }
  auto lib = io::load_library(dir);
  REQUIRE(lib.size() == 3);
  CHECK(lib[0].first == "make");
  CHECK(lib[0].second == edge_creation());
  CHECK(lib[2].first == "spawn");
  ::setenv(io::kLibraryEnv, dir.c_str(), 1);
  CHECK(io::resolve_library("").size() == 3);
  ::unsetenv(io::kLibraryEnv);
  CHECK(io::resolve_library("").size() == bundled_library().size());
  CHECK_THROWS_AS(io::load_library(dir / "missing"), PreconditionError);
  {
    std::ofstream bad(dir / "c.json");
    bad << "{\"name\": \"x\"";
  }
  CHECK_THROWS_AS(io::load_library(dir), PreconditionError);
  fs::remove_all(dir);
}
