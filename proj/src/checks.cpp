#include "tracelet/checks.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace tracelet {

namespace {

class Lines {
 public:
  explicit Lines(SuiteReport& r) : report_(r) {}
  void record(const std::string& name, bool ok, const std::string& where = "") {
    CheckLine& line = find(name);
    ++line.instances;
    if (ok) return;
    ++line.failures;
    if (line.first_failure.empty()) line.first_failure = where.empty() ? "instance " + std::to_string(line.instances) : where;
  }
  void declare(const std::string& name) { find(name); }

 private:
  CheckLine& find(const std::string& name) {
    for (auto& l : report_.lines)
      if (l.name == name) return l;
    report_.lines.push_back({name, 0, 0, ""});
    return report_.lines.back();
  }
  SuiteReport& report_;
};

Graph random_graph(std::mt19937_64& rng, int max_vertices, int max_edges) {
  int n = std::uniform_int_distribution<int>(0, max_vertices)(rng);
  Graph g(n);
  if (n == 0) return g;
  int m = std::uniform_int_distribution<int>(0, max_edges)(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int k = 0; k < m; ++k) g.add_edge(pick(rng), pick(rng));
  return g;
}

// A mono out of `g` into g plus a few random extra vertices and edges.
GraphMorphism random_extension(std::mt19937_64& rng, const Graph& g) {
  Graph h = g;
  int extra_v = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int k = 0; k < extra_v; ++k) h.add_vertex();
  if (h.num_vertices() > 0) {
    int extra_e = std::uniform_int_distribution<int>(0, 2)(rng);
    std::uniform_int_distribution<int> pick(0, h.num_vertices() - 1);
    for (int k = 0; k < extra_e; ++k) h.add_edge(pick(rng), pick(rng));
  }
  GraphMorphism f{g, h, {}, {}};
  for (int v = 0; v < g.num_vertices(); ++v) f.vmap.push_back(v);
  for (int e = 0; e < g.num_edges(); ++e) f.emap.push_back(e);
  return f;
}

std::string rule_pair(const std::string& later, const std::string& earlier, std::size_t overlap) {
  return later + " after " + earlier + ", overlap " + std::to_string(overlap);
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& l : lines)
    if (l.failures) return false;
  return true;
}

std::vector<LinearRule> rules_of(const std::vector<NamedRule>& lib) {
  std::vector<LinearRule> out;
  for (const auto& [name, r] : lib)
    if (!rules_isomorphic(r, LinearRule::trivial())) out.push_back(r);
  return out;
}

SuiteReport check_pushouts(const CheckBounds& b) {
  SuiteReport report{"pushouts", {}};
  Lines lines(report);
  std::mt19937_64 rng(b.seed);
  for (int k = 0; k < b.samples; ++k) {
    const std::string where = "sample " + std::to_string(k) + " (seed " + std::to_string(b.seed) + ")";
    Graph m = random_graph(rng, 3, 3);
    GraphMorphism f = random_extension(rng, m), g = random_extension(rng, m);
    Square po = pushout(f, g);
    bool commutes = compose(po.first, f) == compose(po.second, g);
    lines.record("pushout commutes and is a pushout of monos", commutes && is_pushout_of_monos(f, g, po.first, po.second),
                 where);
    Square pb = pullback(po.first, po.second);
    lines.record("pushout along monos is a pullback", pb.apex.size() == m.size(), where);
    auto u = pullback_mediator(pb, f, g);
    lines.record("pullback mediator exists and is iso", u && is_iso(*u), where);
    auto v = pushout_mediator(po, po.first, po.second);
    lines.record("pushout mediator of the square itself is the identity", v && *v == identity(po.apex), where);
    auto poc = pushout_complement(f, po.first);
    bool ok = poc && poc->apex.size() == g.target.size();
    if (ok) {
      Square again = pushout(f, poc->first);
      ok = again.apex.size() == po.apex.size() && canonical_key(again.apex) == canonical_key(po.apex);
    }
    lines.record("pushout complement recovers the other leg", ok, where);
  }
  return report;
}

SuiteReport check_concurrency(const std::vector<NamedRule>& lib, const CheckBounds& b) {
  SuiteReport report{"concurrency", {}};
  Lines lines(report);
  lines.declare("analysis then synthesis reproduces the derivation");
  const auto hosts = enumerate_graphs(b.host_vertices, b.host_edges);
  for (const auto& [nb, rb] : lib)
    for (const auto& [na, ra] : lib) {
      auto overlaps = enumerate_rule_overlaps(rb, ra);
      for (std::size_t o = 0; o < overlaps.size(); ++o) {
        const Overlap& mu = overlaps[o];
        LinearRule r = compose_rules(rb, mu, ra);
        for (const auto& host : hosts)
          for (const auto& m : enumerate_matches(r, host)) {
            auto dd = apply_rule(r, m);
            if (!dd) {
              lines.record("analysis then synthesis reproduces the derivation", false, rule_pair(nb, na, o));
              continue;
            }
            bool ok = false;
            try {
              TwoStep two = analyze_derivation(r, rb, ra, mu, *dd);
              Synthesis syn = synthesize(two.first, two.second);
              ok = is_valid(two.first) && is_valid(two.second) && spans_isomorphic(syn.overlap, mu) &&
                   canonical_key(syn.derivation) == canonical_key(*dd);
            } catch (const std::exception&) {
              ok = false;
            }
            lines.record("analysis then synthesis reproduces the derivation", ok,
                         rule_pair(nb, na, o) + ", host " + host.debug_string());
          }
      }
    }
  return report;
}

SuiteReport check_simplicial(const std::vector<NamedRule>& lib, const CheckBounds& b, const FaceMap& d) {
  SuiteReport report{"simplicial", {}};
  Lines lines(report);
  const auto rules = rules_of(lib);
  SimplexUniverse u{rules, b.size, b.degree};
  IdentityReport ids = check_simplicial_identities(u, d);
  for (const auto& t : ids.tallies) {
    CheckLine line{t.identity, t.instances, t.failures, ""};
    for (const auto& c : ids.counterexamples)
      if (c.identity == t.identity) {
        line.first_failure = c.instance + ", tracelet key " + tracelet_key(c.tracelet).key;
        break;
      }
    report.lines.push_back(line);
  }
  MouldReport mould = check_mould_bijection(u);
  report.lines.push_back({"mould gluing is a bijection", mould.instances, mould.failures,
                          mould.counterexamples.empty() ? "" : mould.counterexamples[0].identity + " at " +
                                                                   mould.counterexamples[0].instance});
  auto witnesses = non_segal_witnesses(rules);
  lines.record("some short edges admit two fillers", !witnesses.empty(), "no witness in the library");
  // fiber of the merged step in three contexts against the two-step fiber
  SimplexUniverse fiber_u{rules, std::min(b.size, 3), 3};
  Tracelet spawn = tracelet_of_rule(vertex_creation());
  for (const auto& [name, r] : lib) {
    if (rules_isomorphic(r, LinearRule::trivial())) continue;
    Tracelet single = tracelet_of_rule(r);
    FiberReport direct = two_step_fiber(fiber_u, r);
    lines.record("fiber equals the two-step fiber", same_fiber(fiber_of_inner_face(fiber_u, single, 1), direct),
                 name + " alone");
    lines.record("fiber equals the two-step fiber", same_fiber(fiber_of_inner_face(fiber_u, juxtapose(single, spawn), 1), direct),
                 name + " after a vertex creation");
    lines.record("fiber equals the two-step fiber", same_fiber(fiber_of_inner_face(fiber_u, juxtapose(spawn, single), 2), direct),
                 name + " before a vertex creation");
  }
  return report;
}

SuiteReport check_normal_forms(const std::vector<NamedRule>& lib, const CheckBounds& b) {
  SuiteReport report{"normalform", {}};
  Lines lines(report);
  std::vector<LinearRule> rules = rules_of(lib);
  rules.push_back(LinearRule::trivial());
  const Tracelet unit = trivial_tracelet();
  for (const auto& level : enumerate_tracelets(rules, b.degree))
    for (const auto& t : level) {
      const std::string where = "tracelet key " + tracelet_key(t).key;
      NormalForm nf = normal_form_key(t);
      lines.record("absorbs T_∅ on both sides",
                   normal_form_key(juxtapose(t, unit)) == nf && normal_form_key(juxtapose(unit, t)) == nf, where);
      lines.record("maximal splittings agree", maximal_splittings(t).size() == 1, where);
      for (int k = 0; k + 1 < t.length(); ++k) {
        if (!can_exchange(t, k)) continue;
        Tracelet s = exchange_steps(t, k);
        lines.record("exchanges keep the normal form", normal_form_key(s) == nf, where);
        lines.record("exchanges keep the evaluation", rules_isomorphic(evaluate(s), evaluate(t)), where);
      }
      for (const auto& f : nf.factors) {
        Tracelet p = decode_tracelet(f);
        lines.record("factors are primitive", normal_form_key(p) == NormalForm{{f}}, where);
      }
    }
  return report;
}

std::vector<NormalForm> library_basis(const std::vector<LinearRule>& rules, int degree) {
  std::vector<TraceletKey> prims;
  for (const auto& r : rules) {
    NormalForm nf = normal_form_key(tracelet_of_rule(r));
    if (nf.factors.size() == 1) prims.push_back(nf.factors[0]);
  }
  std::sort(prims.begin(), prims.end());
  prims.erase(std::unique(prims.begin(), prims.end()), prims.end());
  std::vector<NormalForm> out{NormalForm{}};
  std::vector<NormalForm> frontier{NormalForm{}};
  for (int d = 1; d <= degree; ++d) {
    std::vector<NormalForm> next;
    for (const auto& x : frontier)
      for (const auto& p : prims) {
        if (!x.factors.empty() && p < x.factors.back()) continue;
        NormalForm y = x;
        y.factors.push_back(p);
        next.push_back(y);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

SuiteReport check_hopf(const std::vector<NamedRule>& lib, const CheckBounds& b) {
  SuiteReport report{"hopf", {}};
  Lines lines(report);
  const auto rules = rules_of(lib);
  const auto basis = library_basis(rules, b.degree);
  auto name = [](const NormalForm& x) { return "degree " + std::to_string(degree(x)) + " element"; };
  for (const auto& x : basis) {
    HopfElement e = HopfElement::basis(x);
    Tensor dx = coproduct(e);
    lines.record("coassociativity", coproduct_left(dx) == coproduct_right(dx), name(x));
    lines.record("cocommutativity", swap(dx) == dx, name(x));
    lines.record("counit laws", counit_left(dx) == e && counit_right(dx) == e, name(x));
    HopfElement expect = unit(counit(e));
    lines.record("antipode axiom", multiply(antipode_left(dx)) == expect && multiply(antipode_right(dx)) == expect, name(x));
    bool graded = true;
    for (const auto& [k, c] : dx.terms()) graded = graded && degree(k.first) + degree(k.second) == degree(x);
    lines.record("coproduct respects the filtration", graded, name(x));
    // product of the factors: leading term x with coefficient 1
    HopfElement acc = unit();
    for (const auto& f : x.factors) acc = product(acc, HopfElement::basis(NormalForm{{f}}));
    bool lead = acc.coefficient(x) == 1;
    for (const auto& [y, c] : acc.terms()) lead = lead && (y == x || degree(y) < degree(x));
    lines.record("products of primitives have leading term 1", lead, name(x));
  }
  for (const auto& x : basis)
    for (const auto& y : basis) {
      if (degree(x) + degree(y) > static_cast<std::size_t>(b.degree)) continue;
      HopfElement ex = HopfElement::basis(x), ey = HopfElement::basis(y);
      HopfElement xy = product(ex, ey);
      bool bounded = true;
      for (const auto& [z, c] : xy.terms()) bounded = bounded && degree(z) <= degree(x) + degree(y);
      lines.record("products respect the filtration", bounded, name(x) + " times " + name(y));
      if (degree(x) == 0 || degree(y) == 0) continue;
      lines.record("bialgebra compatibility", coproduct(xy) == multiply(coproduct(ex), coproduct(ey)),
                   name(x) + " times " + name(y));
      for (const auto& z : basis) {
        if (degree(x) + degree(y) + degree(z) > static_cast<std::size_t>(b.degree)) continue;
        HopfElement ez = HopfElement::basis(z);
        lines.record("associativity", product(xy, ez) == product(ex, product(ey, ez)),
                     name(x) + ", " + name(y) + ", " + name(z));
      }
    }
  // commutators of primitive elements, including connected composites
  std::vector<HopfElement> prims;
  std::set<NormalForm> seen;
  auto levels = enumerate_tracelets(rules, std::min(b.degree, 2));
  for (const auto& level : levels)
    for (const auto& t : level) {
      NormalForm nf = normal_form_key(t);
      if (nf.factors.size() == 1 && seen.insert(nf).second) prims.push_back(HopfElement::basis(nf));
    }
  for (std::size_t i = 0; i < prims.size(); ++i)
    for (std::size_t j = i + 1; j < prims.size() && j < i + 6; ++j) {
      HopfElement c = commutator(prims[i], prims[j]);
      lines.record("commutators of primitives are primitive", c.is_zero() || is_primitive_element(c),
                   "primitives " + std::to_string(i) + ", " + std::to_string(j));
    }
  return report;
}

std::vector<SuiteReport> run_suite(const std::string& name, const std::vector<NamedRule>& lib, const CheckBounds& b,
                                   const FaceMap& d) {
  std::vector<SuiteReport> out;
  const bool all = name == "all";
  if (all || name == "pushouts") out.push_back(check_pushouts(b));
  if (all || name == "concurrency") out.push_back(check_concurrency(lib, b));
  if (all || name == "simplicial") out.push_back(check_simplicial(lib, b, d));
  if (all || name == "normalform") out.push_back(check_normal_forms(lib, b));
  if (all || name == "hopf") out.push_back(check_hopf(lib, b));
  if (out.empty()) throw PreconditionError("unknown suite '" + name + "'");
  return out;
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "[" << r.suite << "] " << (r.passed() ? "pass" : "FAIL") << "\n";
  for (const auto& l : r.lines) {
    os << "  " << (l.failures ? "FAIL " : "ok   ") << l.name << ": " << l.instances << " instances, " << l.failures
       << " failures\n";
    if (!l.first_failure.empty()) os << "       first failure: " << l.first_failure << "\n";
  }
  return os.str();
}

}  // namespace tracelet
