#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "tracelet/canonical.hpp"
#include "tracelet/constructions.hpp"
#include "tracelet/graph.hpp"

using namespace tracelet;

namespace {

GraphMorphism map_of(const Graph& a, const Graph& b, std::vector<int> v, std::vector<int> e = {}) {
  return GraphMorphism{a, b, std::move(v), std::move(e)};
}

}  // namespace

TEST_CASE("is_mono on small maps") {
  Graph pair(2, {{0, 1}, {0, 1}});
  CHECK(is_mono(identity(pair)));
  CHECK_FALSE(is_mono(map_of(Graph::discrete(2), Graph::discrete(1), {0, 0})));
  CHECK(is_mono(map_of(Graph::single_edge(), pair, {0, 1}, {1})));
  CHECK_THROWS_AS(validate(map_of(Graph::single_edge(), Graph(2, {{1, 0}}), {0, 1}, {0})), StructuralError);
}

TEST_CASE("mono enumeration counts") {
  CHECK(enumerate_monos(Graph::discrete(2), Graph::discrete(3)).size() == 6);
  CHECK(enumerate_monos(Graph::single_edge(), Graph::single_edge()).size() == 1);
  CHECK(enumerate_monos(Graph::discrete(1), Graph{}).empty());
  auto all = enumerate_monos(Graph::discrete(2), Graph::discrete(3));
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("pushout examples") {
  Graph e = Graph::single_edge();
  auto po = pushout(identity(e), identity(e));
  CHECK(canonical_key(po.apex) == canonical_key(e));

  auto src = map_of(Graph::discrete(1), e, {0});
  po = pushout(src, src);
  CHECK(canonical_key(po.apex) == canonical_key(Graph(3, {{0, 1}, {0, 2}})));

  Graph b(2, {{0, 1}});
  Graph c = Graph::loop();
  po = pushout(from_empty(b), from_empty(c));
  CHECK(canonical_key(po.apex) == canonical_key(Graph(3, {{0, 1}, {2, 2}})));
  CHECK_THROWS_AS(pushout(identity(b), identity(c)), StructuralError);
}

TEST_CASE("pullback examples") {
  Graph d = Graph::discrete(2);
  auto pb = pullback(identity(d), identity(d));
  CHECK(canonical_key(pb.apex) == canonical_key(d));
  pb = pullback(map_of(Graph::discrete(1), d, {0}), map_of(Graph::discrete(1), d, {1}));
  CHECK(pb.apex.empty());
  Graph e = Graph::single_edge();
  pb = pullback(identity(e), identity(e));
  CHECK(canonical_key(pb.apex) == canonical_key(e));
  CHECK_THROWS_AS(pullback(identity(d), identity(e)), StructuralError);
}

TEST_CASE("pushout complement examples") {
  Graph x = Graph::single_edge();
  auto poc = pushout_complement(identity(x), identity(x));
  REQUIRE(poc);
  CHECK(poc->apex == x);

  Graph v = Graph::discrete(1);
  CHECK_FALSE(pushout_complement(from_empty(v), map_of(v, Graph::loop(), {0})));

  poc = pushout_complement(from_empty(v), map_of(v, Graph::discrete(2), {1}));
  REQUIRE(poc);
  CHECK(canonical_key(poc->apex) == canonical_key(Graph::discrete(1)));

  CHECK_THROWS_AS(pushout_complement(from_empty(v), map_of(Graph::discrete(2), v, {0, 0})), PreconditionError);
}

TEST_CASE("canonical keys and automorphisms") {
  Graph g(3, {{0, 1}, {1, 2}, {2, 2}});
  Graph h(3, {{2, 0}, {0, 0}, {1, 2}});
  CHECK(canonical_key(g) == canonical_key(h));
  Graph cycle(2, {{0, 1}, {1, 0}});
  Graph parallel(2, {{0, 1}, {0, 1}});
  CHECK_FALSE(canonical_key(cycle) == canonical_key(parallel));
  CHECK(canonical_key(Graph{}) == canonical_key(Graph{}));
  CHECK(automorphism_count(Graph::discrete(2)) == 2);
  CHECK(automorphism_count(Graph::single_edge()) == 1);
  CHECK(automorphism_count(Graph::discrete(3)) == 6);
  CHECK(automorphism_count(parallel) == 2);
  CHECK(automorphism_count(cycle) == 2);
}

TEST_CASE("canonical key agrees with brute-force isomorphism") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Graph a = oracle::random_graph(rng, 4, 4);
    Graph b = oracle::random_graph(rng, 4, 4);
    if (trial % 3 == 0) b = oracle::shuffle_target(rng, identity(a)).target;
    bool iso = oracle::count_isos(a, b) > 0;
    CHECK((canonical_key(a) == canonical_key(b)) == iso);
    CHECK(automorphism_count(a) == oracle::count_isos(a, a));
    CHECK(decode(canonical_key(a).key).objects.at(0).num_vertices() == a.num_vertices());
  }
}

TEST_CASE("universal properties on random spans") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Graph a = oracle::random_graph(rng, 2, 2);
    auto f = oracle::random_mono_from(rng, a, 1, 2);
    auto g = oracle::random_mono_from(rng, a, 1, 1);
    auto po = pushout(f, g);
    std::vector<Graph> tests{po.apex, oracle::random_graph(rng, 3, 2), Graph::loop()};
    CHECK(oracle::pushout_universal(f, g, po, tests));

    auto pb = pullback(po.first, po.second);
    std::vector<Graph> sources{Graph{}, Graph::discrete(1), Graph::single_edge(), a};
    CHECK(oracle::pullback_universal(po.first, po.second, pb, sources));
    CHECK(pb.apex.size() == a.size());
  }
}

TEST_CASE("pushout complement agrees with exhaustive search") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    Graph k = oracle::random_graph(rng, 2, 1);
    auto ki = oracle::random_mono_from(rng, k, 2, 2);
    auto m = oracle::random_mono_from(rng, ki.target, 1, 2);
    auto poc = pushout_complement(ki, m);
    CHECK(poc.has_value() == oracle::complement_exists(ki, m));
    CHECK(poc.has_value() == satisfies_dangling(ki, m));
    if (poc) {
      CHECK(oracle::mono_square_is_pushout(ki, poc->first, m, poc->second));
      auto back = pushout(ki, poc->first);
      CHECK(canonical_key(back.apex) == canonical_key(m.target));
    }
  }
}

TEST_CASE("mediators") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Graph a = oracle::random_graph(rng, 2, 1);
    auto f = oracle::random_mono_from(rng, a, 1, 1);
    auto g = oracle::random_mono_from(rng, a, 1, 1);
    auto po = pushout(f, g);
    auto e = oracle::random_mono_from(rng, po.apex, 1, 1);
    auto u = pushout_mediator(po, compose(e, po.first), compose(e, po.second));
    REQUIRE(u);
    CHECK(*u == e);
    auto pb = pullback(po.first, po.second);
    auto w = pullback_mediator(pb, f, g);
    REQUIRE(w);
    CHECK(is_iso(*w));
  }
}

TEST_CASE("graph enumeration up to iso") {
  // <= 2 vertices, <= 1 edge: empty; point, loop; pair, pair with loop, pair with edge
  CHECK(enumerate_graphs(2, 1).size() == 6);
  std::mt19937 rng(3);
  auto all = enumerate_graphs(3, 2);
  std::set<CanonicalKey> keys;
  for (const auto& g : all) keys.insert(canonical_key(g));
  CHECK(keys.size() == all.size());
  for (int k = 0; k < 100; ++k) {
    Graph g = oracle::random_graph(rng, 3, 2);
    CHECK(keys.count(canonical_key(g)) == 1);
  }
}
