#include <map>

#include "doctest.h"
#include "tracelet/library.hpp"
#include "tracelet/tracelet.hpp"

using namespace tracelet;

namespace {

LinearRule identity_rule(const Graph& g) { return LinearRule::make(identity(g), identity(g)); }

Overlap full_edge() {
  return Overlap{Graph::single_edge(), identity(Graph::single_edge()), identity(Graph::single_edge())};
}

Tracelet create_then_delete() {
  return compose_tracelets(tracelet_of_rule(edge_deletion()), full_edge(), tracelet_of_rule(edge_creation()));
}

std::vector<Tracelet> small_library() {
  std::vector<Tracelet> out;
  for (const auto& level : enumerate_tracelets(bundled_rules(), 2))
    for (const auto& t : level) out.push_back(t);
  return out;
}

std::map<TraceletKey, int> nested_left(const Tracelet& a, const Tracelet& b, const Tracelet& c) {
  std::map<TraceletKey, int> out;
  for (const auto& mu : enumerate_tracelet_matches(b, c)) {
    Tracelet bc = compose_tracelets(b, mu, c);
    for (const auto& nu : enumerate_tracelet_matches(a, bc)) ++out[tracelet_key(compose_tracelets(a, nu, bc))];
  }
  return out;
}

std::map<TraceletKey, int> nested_right(const Tracelet& a, const Tracelet& b, const Tracelet& c) {
  std::map<TraceletKey, int> out;
  for (const auto& nu : enumerate_tracelet_matches(a, b)) {
    Tracelet ab = compose_tracelets(a, nu, b);
    for (const auto& mu : enumerate_tracelet_matches(ab, c)) ++out[tracelet_key(compose_tracelets(ab, mu, c))];
  }
  return out;
}

}  // namespace

TEST_CASE("tracelets of single rules") {
  Tracelet t0 = trivial_tracelet();
  CHECK(t0.length() == 1);
  CHECK(t0.in().empty());
  CHECK(is_valid(t0));
  Tracelet te = tracelet_of_rule(edge_creation());
  CHECK(te.in() == Graph::discrete(2));
  CHECK(canonical_key(te.out()) == canonical_key(Graph::single_edge()));
  Tracelet tv = tracelet_of_rule(vertex_deletion());
  CHECK(tv.in().num_vertices() == 1);
  CHECK(tv.out().empty());
  CHECK(empty_tracelet().length() == 0);
  CHECK(is_valid(empty_tracelet()));
}

TEST_CASE("tracelet match counts") {
  CHECK(enumerate_tracelet_matches(trivial_tracelet(), trivial_tracelet()).size() == 1);
  CHECK(enumerate_tracelet_matches(tracelet_of_rule(vertex_creation()), create_then_delete()).size() == 1);
  CHECK(enumerate_tracelet_matches(tracelet_of_rule(edge_deletion()), tracelet_of_rule(edge_creation())).size() == 8);
}

TEST_CASE("composition examples") {
  Tracelet a = tracelet_of_rule(edge_creation());
  Tracelet b = tracelet_of_rule(vertex_deletion());
  Tracelet ab = juxtapose(b, a);
  CHECK(is_valid(ab));
  CHECK(ab.in().num_vertices() == 3);
  CHECK(ab.out().num_vertices() == 2);
  CHECK(ab.out().num_edges() == 1);

  Tracelet cd = create_then_delete();
  CHECK(is_valid(cd));
  CHECK(cd.length() == 2);
  CHECK(canonical_key(cd.in()) == canonical_key(Graph::discrete(2)));
  CHECK(canonical_key(cd.out()) == canonical_key(Graph::discrete(2)));

  Overlap bad{Graph::discrete(1), GraphMorphism{Graph::discrete(1), Graph::discrete(1), {0}, {}},
              GraphMorphism{Graph::discrete(1), Graph::loop(), {0}, {}}};
  CHECK_THROWS_AS(compose_tracelets(b, bad, tracelet_of_rule(edge_creation())), PreconditionError);
}

TEST_CASE("evaluation") {
  CHECK(evaluate(empty_tracelet()) == LinearRule::trivial());
  CHECK(rules_isomorphic(evaluate(trivial_tracelet()), LinearRule::trivial()));
  for (const auto& r : bundled_rules()) CHECK(rules_isomorphic(evaluate(tracelet_of_rule(r)), r));
  CHECK(rules_isomorphic(evaluate(create_then_delete()), identity_rule(Graph::discrete(2))));
}

TEST_CASE("evaluation is compatible with composition") {
  auto lib = small_library();
  for (const auto& a : lib)
    for (const auto& b : lib) {
      if (a.length() + b.length() > 3) continue;
      for (const auto& m : enumerate_tracelet_matches(a, b)) {
        Tracelet ab = compose_tracelets(a, m, b);
        LinearRule ea = evaluate(a), eb = evaluate(b);
        // the rule-level overlap: the tracelet overlap read through the evaluations
        Overlap bar{m.overlap.apex, m.overlap.left, m.overlap.right};
        bar.left.target = ea.input;
        bar.right.target = eb.output;
        CHECK(rules_isomorphic(evaluate(ab), compose_rules(ea, bar, eb)));
      }
    }
}

TEST_CASE("faces and degeneracies") {
  Tracelet cd = create_then_delete();
  Tracelet merged = face(cd, 1);
  CHECK(is_valid(merged));
  CHECK(tracelet_key(merged) == tracelet_key(tracelet_of_rule(identity_rule(Graph::discrete(2)))));
  CHECK(tracelet_key(face(cd, 0)) == tracelet_key(tracelet_of_rule(edge_creation())));
  CHECK(tracelet_key(face(cd, 2)) == tracelet_key(tracelet_of_rule(edge_deletion())));

  CHECK(tracelet_key(degeneracy(empty_tracelet(), 0)) == tracelet_key(trivial_tracelet()));
  CHECK_THROWS_AS(face(empty_tracelet(), 0), PreconditionError);
  CHECK_THROWS_AS(face(cd, 3), PreconditionError);
  CHECK_THROWS_AS(degeneracy(cd, 3), PreconditionError);

  for (const auto& t : small_library()) {
    for (int i = 0; i <= t.length(); ++i) {
      Tracelet s = degeneracy(t, i);
      CHECK(is_valid(s));
      CHECK(tracelet_key(face(s, i)) == tracelet_key(t));
      CHECK(tracelet_key(face(s, i + 1)) == tracelet_key(t));
      CHECK(rules_isomorphic(evaluate(s), evaluate(t)));
      if (t.length() >= 1) CHECK(is_valid(face(t, i)));
    }
  }
}

TEST_CASE("keys round-trip and detect relabelling") {
  for (const auto& t : small_library()) {
    TraceletKey k = tracelet_key(t);
    Tracelet back = decode_tracelet(k);
    CHECK(is_valid(back));
    CHECK(tracelet_key(back) == k);
  }
  CHECK_FALSE(tracelet_key(tracelet_of_rule(edge_creation())) == tracelet_key(tracelet_of_rule(edge_deletion())));
  Tracelet p = tracelet_of_rule(edge_creation()), q = tracelet_of_rule(vertex_creation());
  CHECK_FALSE(tracelet_key(juxtapose(p, q)) == tracelet_key(juxtapose(q, p)));
}

TEST_CASE("associativity on short triples") {
  std::vector<Tracelet> singles;
  for (const auto& r : bundled_library()) singles.push_back(tracelet_of_rule(r.second));
  for (const auto& a : singles)
    for (const auto& b : singles)
      for (const auto& c : singles) CHECK(nested_left(a, b, c) == nested_right(a, b, c));
}

TEST_CASE("generated tracelets are valid and pairwise distinct") {
  auto levels = enumerate_tracelets(bundled_rules(), 2);
  REQUIRE(levels.size() == 3);
  CHECK(levels[1].size() == 4);
  for (const auto& level : levels)
    for (const auto& t : level) CHECK(is_valid(t));
}
