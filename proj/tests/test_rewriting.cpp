#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tracelet/library.hpp"
#include "tracelet/rewriting.hpp"

using namespace tracelet;

namespace {

LinearRule identity_rule(const Graph& g) { return LinearRule::make(identity(g), identity(g)); }

std::map<CanonicalKey, int> composite_classes(const LinearRule& rb, const LinearRule& ra) {
  std::map<CanonicalKey, int> out;
  for (const auto& mu : enumerate_rule_overlaps(rb, ra)) ++out[canonical_key(compose_rules(rb, mu, ra))];
  return out;
}

}  // namespace

TEST_CASE("rules reject non-mono legs") {
  GraphMorphism squash{Graph::discrete(2), Graph::discrete(1), {0, 0}, {}};
  CHECK_THROWS_AS(LinearRule::make(squash, identity(Graph::discrete(2))), StructuralError);
}

TEST_CASE("apply_rule examples") {
  Graph x(3, {{0, 1}, {1, 2}});
  auto d = apply_rule(LinearRule::trivial(), from_empty(x));
  REQUIRE(d);
  CHECK(canonical_key(d->result()) == canonical_key(x));
  CHECK(is_valid(*d));

  Graph two = Graph::discrete(2);
  d = apply_rule(edge_creation(), identity(two));
  REQUIRE(d);
  CHECK(canonical_key(d->result()) == canonical_key(Graph::single_edge()));
  CHECK(is_valid(*d));

  CHECK_FALSE(apply_rule(vertex_deletion(), GraphMorphism{Graph::discrete(1), Graph::loop(), {0}, {}}));
  GraphMorphism squash{two, Graph::discrete(1), {0, 0}, {}};
  CHECK_THROWS_AS(apply_rule(edge_creation(), squash), PreconditionError);
}

TEST_CASE("enumerate_matches examples") {
  CHECK(enumerate_matches(edge_creation(), Graph::discrete(3)).size() == 6);
  CHECK(enumerate_matches(LinearRule::trivial(), Graph(2, {{0, 1}})).size() == 1);
  CHECK(enumerate_matches(vertex_deletion(), Graph::loop()).empty());
}

TEST_CASE("reverse application undoes forward application") {
  auto d = apply_rule(edge_creation(), identity(Graph::discrete(2)));
  REQUIRE(d);
  auto back = apply_rule_reverse(edge_creation(), d->comatch);
  REQUIRE(back);
  CHECK(is_valid(*back));
  CHECK(canonical_key(back->host()) == canonical_key(Graph::discrete(2)));
  CHECK(back->orientation == Orientation::kReverse);
}

TEST_CASE("rule overlap counts") {
  auto t = LinearRule::trivial();
  CHECK(enumerate_rule_overlaps(t, t).size() == 1);
  auto ovs = enumerate_rule_overlaps(edge_deletion(), edge_creation());
  CHECK(ovs.size() == 8);
  for (std::size_t a = 0; a < ovs.size(); ++a)
    for (std::size_t b = a + 1; b < ovs.size(); ++b) CHECK_FALSE(spans_isomorphic(ovs[a], ovs[b]));
  CHECK(enumerate_rule_overlaps(vertex_creation(), edge_deletion()).size() == 1);
}

TEST_CASE("compose_rules examples") {
  auto re_m = edge_deletion();
  auto re_p = edge_creation();
  auto empty = empty_overlap(re_m.input, re_p.output);
  auto disjoint = compose_rules(re_m, empty, re_p);
  CHECK(disjoint.output.num_vertices() == 4);
  CHECK(disjoint.output.num_edges() == 1);
  CHECK(disjoint.input.num_edges() == 1);
  CHECK(disjoint.context.num_vertices() == 4);

  Overlap full{Graph::single_edge(), identity(Graph::single_edge()), identity(Graph::single_edge())};
  CHECK(rules_isomorphic(compose_rules(re_m, full, re_p), identity_rule(Graph::discrete(2))));

  for (const auto& r : bundled_rules()) {
    auto ovs = enumerate_rule_overlaps(LinearRule::trivial(), r);
    REQUIRE(ovs.size() == 1);
    CHECK(rules_isomorphic(compose_rules(LinearRule::trivial(), ovs[0], r), r));
    ovs = enumerate_rule_overlaps(r, LinearRule::trivial());
    REQUIRE(ovs.size() == 1);
    CHECK(rules_isomorphic(compose_rules(r, ovs[0], LinearRule::trivial()), r));
  }

  Overlap bad{Graph::discrete(1), GraphMorphism{Graph::discrete(1), Graph::discrete(1), {0}, {}},
              GraphMorphism{Graph::discrete(1), Graph::discrete(1), {0}, {}}};
  // vertex deletion after vertex creation with a shared vertex deletes what was created: admissible
  CHECK(rules_isomorphic(compose_rules(vertex_deletion(), bad, vertex_creation()), LinearRule::trivial()));
  // vertex creation's input is empty, so any nonempty overlap is malformed
  CHECK_THROWS(compose_rules(vertex_creation(), bad, vertex_deletion()));
}

TEST_CASE("analyze_derivation examples") {
  auto t = LinearRule::trivial();
  auto tt = compose_rules(t, enumerate_rule_overlaps(t, t)[0], t);
  Graph x(2, {{0, 1}});
  auto dd = apply_rule(tt, from_empty(x));
  REQUIRE(dd);
  auto two = analyze_derivation(tt, t, t, enumerate_rule_overlaps(t, t)[0], *dd);
  CHECK(canonical_key(two.first.result()) == canonical_key(x));

  Overlap full{Graph::single_edge(), identity(Graph::single_edge()), identity(Graph::single_edge())};
  auto r = compose_rules(edge_deletion(), full, edge_creation());
  Graph host = Graph::discrete(2);
  auto step = apply_rule(r, enumerate_matches(r, host).at(0));
  REQUIRE(step);
  two = analyze_derivation(r, edge_deletion(), edge_creation(), full, *step);
  CHECK(canonical_key(two.first.result()) == canonical_key(Graph::single_edge()));
  CHECK(canonical_key(two.second.result()) == canonical_key(host));
  CHECK(is_valid(two.first));
  CHECK(is_valid(two.second));

  CHECK_THROWS_AS(analyze_derivation(edge_creation(), edge_deletion(), edge_creation(), full, *step),
                  PreconditionError);
}

TEST_CASE("concurrency roundtrip on the bundled library") {
  auto lib = bundled_library();
  int checked = 0;
  for (const auto& [nb, rb] : lib)
    for (const auto& [na, ra] : lib)
      for (const auto& mu : enumerate_rule_overlaps(rb, ra)) {
        auto r = compose_rules(rb, mu, ra);
        for (int nv = 0; nv <= 3; ++nv) {
          Graph hosts[] = {Graph::discrete(nv), Graph(nv, nv >= 2 ? std::vector<Edge>{{0, 1}} : std::vector<Edge>{})};
          for (const Graph& host : hosts)
            for (const auto& m : enumerate_matches(r, host)) {
              auto dd = apply_rule(r, m);
              REQUIRE(dd);
              auto two = analyze_derivation(r, rb, ra, mu, *dd);
              CHECK(is_valid(two.first));
              CHECK(is_valid(two.second));
              auto syn = synthesize(two.first, two.second);
              CHECK(spans_isomorphic(syn.overlap, mu));
              CHECK(canonical_key(syn.derivation) == canonical_key(*dd));
              ++checked;
            }
        }
      }
  CHECK(checked > 100);
}

TEST_CASE("degree-one associativity of rule composition") {
  auto lib = bundled_library();
  for (const auto& [n3, r3] : lib)
    for (const auto& [n2, r2] : lib)
      for (const auto& [n1, r1] : lib) {
        std::map<CanonicalKey, int> left, right;
        for (const auto& mu : enumerate_rule_overlaps(r2, r1)) {
          auto c = compose_rules(r2, mu, r1);
          for (const auto& [k, n] : composite_classes(r3, c)) left[k] += n;
        }
        for (const auto& nu : enumerate_rule_overlaps(r3, r2)) {
          auto c = compose_rules(r3, nu, r2);
          for (const auto& [k, n] : composite_classes(c, r1)) right[k] += n;
        }
        CHECK(left == right);
      }
}

TEST_CASE("rule isomorphism components commute") {
  auto r = edge_creation();
  auto c = canonicalize(r);
  auto iso = rule_isomorphism(r, c);
  REQUIRE(iso);
  CHECK(compose(iso->output, r.o) == compose(c.o, iso->context));
  CHECK(compose(iso->input, r.i) == compose(c.i, iso->context));
  CHECK_FALSE(rule_isomorphism(edge_creation(), edge_deletion()));
}
