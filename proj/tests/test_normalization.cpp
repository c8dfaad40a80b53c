#include <map>
#include <set>

#include "closure_oracle.hpp"
#include "doctest.h"
#include "tracelet/library.hpp"
#include "tracelet/normalization.hpp"

using namespace tracelet;

namespace {

Overlap full_edge() {
  return Overlap{Graph::single_edge(), identity(Graph::single_edge()), identity(Graph::single_edge())};
}

Tracelet create_then_delete() {
  return compose_tracelets(tracelet_of_rule(edge_deletion()), full_edge(), tracelet_of_rule(edge_creation()));
}

// Edge creation followed by the creation of a second edge between the same two
// vertices: sequentially independent with a nonempty overlap.
Tracelet parallel_creations() {
  Tracelet a = tracelet_of_rule(edge_creation());
  Graph two = Graph::discrete(2);
  for (const auto& m : enumerate_tracelet_matches(a, a))
    if (m.overlap.apex == two) return compose_tracelets(a, m, a);
  FAIL("no vertex-pair overlap found");
  return a;
}

std::vector<Tracelet> flat(int max_length) {
  std::vector<Tracelet> out;
  for (const auto& level : enumerate_tracelets(bundled_rules(), max_length))
    for (const auto& t : level) out.push_back(t);
  return out;
}

// Groups of non-trivial steps linked through shared threads, found by
// flooding over the raw thread labels.
std::size_t linked_groups(const Tracelet& t) {
  const int n = t.length();
  ThreadLabels lab = thread_labels(t, 0, n);
  std::vector<std::set<std::pair<int, int>>> touched(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const auto& s = t.steps[static_cast<std::size_t>(k)];
    for (int v : s.match.vmap) touched[k].insert({0, lab.vertex[k][v]});
    for (int e : s.match.emap) touched[k].insert({1, lab.edge[k][e]});
    for (int v : s.comatch.vmap) touched[k].insert({0, lab.vertex[k + 1][v]});
    for (int e : s.comatch.emap) touched[k].insert({1, lab.edge[k + 1][e]});
  }
  std::vector<int> group(static_cast<std::size_t>(n), -1);
  std::size_t count = 0;
  for (int k = 0; k < n; ++k) {
    if (touched[k].empty() || group[k] >= 0) continue;
    std::vector<int> stack{k};
    group[k] = static_cast<int>(count);
    while (!stack.empty()) {
      int j = stack.back();
      stack.pop_back();
      for (int i = 0; i < n; ++i) {
        if (group[i] >= 0) continue;
        for (const auto& x : touched[j])
          if (touched[i].count(x)) {
            group[i] = static_cast<int>(count);
            stack.push_back(i);
            break;
          }
      }
    }
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("isomorphism of tracelets") {
  Tracelet p = tracelet_of_rule(edge_creation());
  Tracelet q = tracelet_of_rule(vertex_creation());
  CHECK(tracelets_isomorphic(p, canonicalize(p)));
  CHECK_FALSE(tracelets_isomorphic(p, tracelet_of_rule(edge_deletion())));
  CHECK_FALSE(tracelets_isomorphic(juxtapose(p, q), juxtapose(q, p)));
  CHECK(normal_form_key(juxtapose(p, q)) == normal_form_key(juxtapose(q, p)));
}

TEST_CASE("sequential independence") {
  Tracelet p = tracelet_of_rule(edge_creation());
  CHECK(is_sequentially_independent(juxtapose(p, p), 1));
  CHECK_FALSE(is_sequentially_independent(create_then_delete(), 1));
  CHECK(is_sequentially_independent(parallel_creations(), 1));
  CHECK_THROWS_AS(is_sequentially_independent(p, 1), PreconditionError);
  CHECK_THROWS_AS(shift(create_then_delete(), 1), PreconditionError);
}

TEST_CASE("shift examples") {
  Tracelet p = tracelet_of_rule(edge_creation()), q = tracelet_of_rule(vertex_deletion());
  Tracelet pq = juxtapose(p, q);
  CHECK(tracelet_key(shift(pq, 1)) == tracelet_key(juxtapose(q, p)));
  CHECK(tracelet_key(shift(shift(pq, 1), 1)) == tracelet_key(pq));
  Tracelet par = parallel_creations();
  CHECK(is_valid(shift(par, 1)));
  CHECK(tracelet_key(shift(shift(par, 1), 1)) == tracelet_key(par));
}

TEST_CASE("splitting positions") {
  Tracelet p = tracelet_of_rule(edge_creation()), q = tracelet_of_rule(vertex_creation()),
           r = tracelet_of_rule(edge_deletion());
  CHECK(splitting_positions(juxtapose(p, q)) == std::vector<int>{1});
  CHECK(splitting_positions(create_then_delete()).empty());
  CHECK(splitting_positions(juxtapose(r, juxtapose(p, q))) == std::vector<int>{1, 2});
}

TEST_CASE("primitive factorisation examples") {
  CHECK(primitive_factorization(trivial_tracelet()).factors.empty());
  CHECK(primitive_factorization(empty_tracelet()).factors.empty());
  Tracelet p = create_then_delete();
  Tracelet q = tracelet_of_rule(vertex_creation());
  auto np = primitive_factorization(p);
  REQUIRE(np.factors.size() == 1);
  auto nq = primitive_factorization(q);
  auto pqp = primitive_factorization(juxtapose(p, juxtapose(q, p)));
  auto ppq = primitive_factorization(juxtapose(q, juxtapose(p, p)));
  CHECK(pqp == ppq);
  REQUIRE(pqp.factors.size() == 3);
  std::multiset<TraceletKey> expect{np.factors[0], np.factors[0], nq.factors[0]};
  CHECK(std::multiset<TraceletKey>(pqp.factors.begin(), pqp.factors.end()) == expect);
}

TEST_CASE("normal forms absorb T_∅ and ignore order") {
  Tracelet unit = trivial_tracelet();
  for (const auto& t : flat(2)) {
    auto nf = normal_form_key(t);
    CHECK(normal_form_key(juxtapose(t, unit)) == nf);
    CHECK(normal_form_key(juxtapose(unit, t)) == nf);
  }
  Tracelet p = tracelet_of_rule(edge_creation()), q = tracelet_of_rule(edge_deletion());
  CHECK(normal_form_key(juxtapose(p, q)) == normal_form_key(juxtapose(q, p)));
}

TEST_CASE("is_primitive") {
  CHECK_FALSE(is_primitive(trivial_tracelet()));
  CHECK(is_primitive(tracelet_of_rule(edge_creation())));
  CHECK_FALSE(is_primitive(juxtapose(tracelet_of_rule(edge_creation()), tracelet_of_rule(edge_deletion()))));
  CHECK(is_primitive(create_then_delete()));
}

TEST_CASE("shift preserves evaluation") {
  for (const auto& t : flat(3))
    for (int c = 1; c < t.length(); ++c)
      if (is_sequentially_independent(t, c)) CHECK(rules_isomorphic(evaluate(shift(t, c)), evaluate(t)));
}

TEST_CASE("maximal splittings agree") {
  for (const auto& t : flat(3)) CHECK(maximal_splittings(t).size() == 1);
}

TEST_CASE("normal form matches closure oracle up to length 2") {
  auto universe = flat(2);
  oracle::Closure closure(universe, 3);
  for (std::size_t a = 0; a < universe.size(); ++a)
    for (std::size_t b = a; b < universe.size(); ++b) {
      bool same_nf = normal_form_key(universe[a]) == normal_form_key(universe[b]);
      bool same_class = closure.component(universe[a]) == closure.component(universe[b]);
      CHECK(same_nf == same_class);
    }
}

TEST_CASE("shifts inside a context") {
  // v1 created, v2 created, v1 deleted: no top-level cut is independent
  // enough to split, but the two inner steps may trade places.
  Tracelet make = tracelet_of_rule(vertex_creation());
  Tracelet two = juxtapose(make, make);
  Tracelet del = tracelet_of_rule(vertex_deletion());
  int seen = 0;
  for (const auto& m : enumerate_tracelet_matches(del, two)) {
    if (m.overlap.apex.empty()) continue;
    Tracelet t = compose_tracelets(del, m, two);
    if (!splitting_positions(t).empty()) continue;
    ++seen;
    CHECK(can_exchange(t, 1));
    Tracelet u = exchange_steps(t, 1);
    CHECK(is_valid(u));
    CHECK(splitting_positions(u) == std::vector<int>{2});
    CHECK(primitive_factorization(t).factors.size() == 2);
    CHECK(tracelet_key(shift_in_context(u, 1, 2, 3)) == tracelet_key(t));
  }
  CHECK(seen == 1);
  CHECK_THROWS_AS(exchange_steps(create_then_delete(), 0), PreconditionError);
}

TEST_CASE("in-context exchange agrees with the window shift") {
  int checked = 0;
  for (const auto& t : flat(3))
    for (int a = 0; a < t.length(); ++a)
      for (int b = a + 2; b <= t.length(); ++b) {
        Tracelet w = window(t, a, b).tracelet;
        for (int c = a + 1; c < b; ++c) {
          bool literal = is_sequentially_independent(w, c - a);
          std::vector<int> order;
          for (int k = 0; k < a; ++k) order.push_back(k);
          for (int k = c; k < b; ++k) order.push_back(k);
          for (int k = a; k < c; ++k) order.push_back(k);
          for (int k = b; k < t.length(); ++k) order.push_back(k);
          auto r = resequence(t, order);
          CHECK(literal == r.has_value());
          if (!r || !literal) continue;
          CHECK(is_valid(*r));
          CHECK(tracelets_isomorphic(window(*r, a, b).tracelet, shift(w, c - a)));
          CHECK(rules_isomorphic(evaluate(*r), evaluate(t)));
          ++checked;
        }
      }
  CHECK(checked > 100);
}

TEST_CASE("factor count equals linked step groups") {
  for (const auto& t : flat(3)) {
    CHECK(primitive_factorization(t).factors.size() == linked_groups(t));
    CHECK(restricted_factorization(t).factors.size() == linked_groups(t));
  }
}

TEST_CASE("restricted and full shifts diverge") {
  // two edge creations sharing a preserved middle vertex, in both orders
  Tracelet p = tracelet_of_rule(edge_creation());
  Tracelet pp = juxtapose(p, p);
  std::set<TraceletKey> full, restricted;
  std::size_t chains = 0;
  for (const auto& m : enumerate_tracelet_matches(p, p)) {
    if (m.overlap.apex.size() != 1) continue;
    Tracelet t = compose_tracelets(p, m, p);
    ++chains;
    full.insert(primitive_factorization(t).factors.at(0));
    restricted.insert(restricted_factorization(t).factors.at(0));
  }
  CHECK(chains == 4);
  CHECK(full.size() < restricted.size());
  CHECK(restricted_factorization(pp) == primitive_factorization(pp));
}

TEST_CASE("restricted shifts reach exactly the tracelets with equal restricted form") {
  auto levels = enumerate_tracelets(bundled_rules(), 3);
  const std::vector<Tracelet>& same_length = levels.back();
  for (std::size_t a = 0; a < same_length.size(); a += 40) {
    auto cls = shift_class(same_length[a], true);
    auto nf = restricted_factorization(same_length[a]);
    for (const auto& t : same_length) {
      bool reachable = cls.count(tracelet_key(t)) > 0;
      CHECK(reachable == (restricted_factorization(t) == nf));
    }
  }
}
