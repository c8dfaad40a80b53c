#include "tracelet/rewriting.hpp"

#include <algorithm>

namespace tracelet {

LinearRule LinearRule::trivial() { return make(identity(Graph{}), identity(Graph{})); }

LinearRule LinearRule::make(GraphMorphism o, GraphMorphism i) {
  if (o.source != i.source) throw StructuralError("rule legs must share the context object");
  if (!is_mono(o) || !is_mono(i)) throw StructuralError("rule legs must be monomorphisms");
  LinearRule r{o.target, o.source, i.target, std::move(o), std::move(i)};
  return r;
}

void validate(const LinearRule& r) {
  if (r.o.source != r.context || r.i.source != r.context || r.o.target != r.output ||
      r.i.target != r.input)
    throw StructuralError("rule objects and legs disagree");
  if (!is_mono(r.o) || !is_mono(r.i)) throw StructuralError("rule legs must be monomorphisms");
}

Diagram diagram_of(const LinearRule& r) {
  Diagram d;
  d.add_object(r.output);
  d.add_object(r.context);
  d.add_object(r.input);
  d.add_arrow(1, 0, r.o);
  d.add_arrow(1, 2, r.i);
  return d;
}

LinearRule rule_from_diagram(const Diagram& d) {
  if (d.objects.size() != 3 || d.arrows.size() != 2) throw StructuralError("not a rule diagram");
  return LinearRule::make(d.morphism(0), d.morphism(1));
}

CanonicalKey canonical_key(const LinearRule& r) { return canonical_form(diagram_of(r)).key; }

LinearRule canonicalize(const LinearRule& r) { return rule_from_diagram(canonical_form(diagram_of(r)).diagram); }

bool rules_isomorphic(const LinearRule& a, const LinearRule& b) { return canonical_key(a) == canonical_key(b); }

std::optional<RuleIso> rule_isomorphism(const LinearRule& a, const LinearRule& b) {
  Diagram da = diagram_of(a);
  Diagram db = diagram_of(b);
  auto iso = isomorphism(da, db);
  if (!iso) return std::nullopt;
  return RuleIso{component(*iso, da, db, 0), component(*iso, da, db, 1), component(*iso, da, db, 2)};
}

DirectDerivation DirectDerivation::reversed() const {
  DirectDerivation r{rule.reversed(), comatch,  complement, context_map,
                     complement_out,  complement_in, match,
                     orientation == Orientation::kForward ? Orientation::kReverse : Orientation::kForward};
  return r;
}

bool is_valid(const DirectDerivation& d) {
  try {
    validate(d);
    return true;
  } catch (const StructuralError&) {
    return false;
  }
}

void validate(const DirectDerivation& d) {
  validate(d.rule);
  if (d.match.source != d.rule.input || d.comatch.source != d.rule.output ||
      d.context_map.source != d.rule.context || d.context_map.target != d.complement ||
      d.complement_in.source != d.complement || d.complement_out.source != d.complement ||
      d.complement_in.target != d.host() || d.complement_out.target != d.result())
    throw StructuralError("derivation objects and morphisms disagree");
  if (!is_pushout_of_monos(d.rule.i, d.context_map, d.match, d.complement_in))
    throw StructuralError("input square is not a pushout");
  if (!is_pushout_of_monos(d.rule.o, d.context_map, d.comatch, d.complement_out))
    throw StructuralError("output square is not a pushout");
}

Diagram diagram_of(const DirectDerivation& d) {
  Diagram g;
  int o = g.add_object(d.rule.output);
  int k = g.add_object(d.rule.context);
  int i = g.add_object(d.rule.input);
  int x = g.add_object(d.host());
  int c = g.add_object(d.complement);
  int y = g.add_object(d.result());
  g.add_arrow(k, o, d.rule.o);
  g.add_arrow(k, i, d.rule.i);
  g.add_arrow(i, x, d.match);
  g.add_arrow(k, c, d.context_map);
  g.add_arrow(c, x, d.complement_in);
  g.add_arrow(c, y, d.complement_out);
  g.add_arrow(o, y, d.comatch);
  return g;
}

CanonicalKey canonical_key(const DirectDerivation& d) { return canonical_form(diagram_of(d)).key; }

std::optional<DirectDerivation> apply_rule(const LinearRule& r, const GraphMorphism& m) {
  if (m.source != r.input) throw PreconditionError("apply_rule: match source is not the rule input");
  if (!is_mono(m)) throw PreconditionError("apply_rule: match must be a monomorphism");
  auto poc = pushout_complement(r.i, m);
  if (!poc) return std::nullopt;
  Square po = pushout(r.o, poc->first);
  return DirectDerivation{r, m, poc->apex, poc->first, poc->second, po.second, po.first, Orientation::kForward};
}

std::optional<DirectDerivation> apply_rule_reverse(const LinearRule& r, const GraphMorphism& comatch) {
  auto d = apply_rule(r.reversed(), comatch);
  if (!d) return std::nullopt;
  return d->reversed();
}

std::vector<GraphMorphism> enumerate_matches(const LinearRule& r, const Graph& x) {
  std::vector<GraphMorphism> out;
  for (auto& m : enumerate_monos(r.input, x))
    if (satisfies_dangling(r.i, m)) out.push_back(std::move(m));
  return out;
}

std::optional<Extension> extend(const DirectDerivation& d, const GraphMorphism& e) {
  if (e.source != d.host()) throw StructuralError("extend: embedding does not start at the host");
  auto step = apply_rule(d.rule, compose(e, d.match));
  if (!step) return std::nullopt;
  step->orientation = d.orientation;
  ImageIndex old_co(d.comatch);
  ImageIndex old_out(d.complement_out);
  ImageIndex new_in(step->complement_in);
  const Graph& y = d.result();
  GraphMorphism emb{y, step->result(), {}, {}};
  for (int v = 0; v < y.num_vertices(); ++v) {
    int o = old_co.vertex_pre[static_cast<std::size_t>(v)];
    if (o >= 0) {
      emb.vmap.push_back(step->comatch.vertex(o));
      continue;
    }
    int c = old_out.vertex_pre[static_cast<std::size_t>(v)];
    int c2 = new_in.vertex_pre[static_cast<std::size_t>(e.vertex(d.complement_in.vertex(c)))];
    emb.vmap.push_back(step->complement_out.vertex(c2));
  }
  for (int x = 0; x < y.num_edges(); ++x) {
    int o = old_co.edge_pre[static_cast<std::size_t>(x)];
    if (o >= 0) {
      emb.emap.push_back(step->comatch.edge(o));
      continue;
    }
    int c = old_out.edge_pre[static_cast<std::size_t>(x)];
    int c2 = new_in.edge_pre[static_cast<std::size_t>(e.edge(d.complement_in.edge(c)))];
    emb.emap.push_back(step->complement_out.edge(c2));
  }
  return Extension{std::move(*step), std::move(emb)};
}

Overlap empty_overlap(const Graph& left_target, const Graph& right_target) {
  return Overlap{Graph{}, from_empty(left_target), from_empty(right_target)};
}

std::vector<Overlap> enumerate_spans(const Graph& a, const Graph& b) {
  std::vector<Overlap> out;
  const int nv = a.num_vertices();
  for (unsigned vmask = 0; vmask < (1u << nv); ++vmask) {
    std::vector<bool> keepv(static_cast<std::size_t>(nv));
    int count = 0;
    for (int v = 0; v < nv; ++v) {
      keepv[static_cast<std::size_t>(v)] = (vmask >> v) & 1u;
      count += keepv[static_cast<std::size_t>(v)] ? 1 : 0;
    }
    if (count > b.num_vertices()) continue;
    std::vector<int> eligible;
    for (int e = 0; e < a.num_edges(); ++e)
      if (keepv[static_cast<std::size_t>(a.edge(e).src)] && keepv[static_cast<std::size_t>(a.edge(e).tgt)])
        eligible.push_back(e);
    for (unsigned emask = 0; emask < (1u << eligible.size()); ++emask) {
      std::vector<bool> keepe(static_cast<std::size_t>(a.num_edges()), false);
      for (std::size_t j = 0; j < eligible.size(); ++j)
        if ((emask >> j) & 1u) keepe[static_cast<std::size_t>(eligible[j])] = true;
      GraphMorphism inc = induced_subgraph(a, keepv, keepe);
      for (auto& m : enumerate_monos(inc.source, b)) out.push_back(Overlap{inc.source, inc, std::move(m)});
    }
  }
  return out;
}

Diagram diagram_of(const Overlap& mu) {
  Diagram d;
  d.add_object(mu.apex);
  d.add_object(mu.left.target);
  d.add_object(mu.right.target);
  d.add_arrow(0, 1, mu.left);
  d.add_arrow(0, 2, mu.right);
  return d;
}

bool spans_isomorphic(const Overlap& x, const Overlap& y) {
  return canonical_form(diagram_of(x)).key == canonical_form(diagram_of(y)).key;
}

Span compose_spans(const Span& later, const Span& earlier) {
  Square pb = pullback(later.to_in, earlier.to_out);
  return Span{compose(later.to_out, pb.first), compose(earlier.to_in, pb.second)};
}

std::optional<RuleComposition> glue_rules(const LinearRule& rb, const Overlap& mu, const LinearRule& ra) {
  if (mu.left.target != rb.input || mu.right.target != ra.output)
    throw PreconditionError("overlap legs do not land in I_B and O_A");
  if (!is_mono(mu.left) || !is_mono(mu.right)) throw PreconditionError("overlap legs must be monos");
  Square po = pushout(mu.left, mu.right);
  auto second = apply_rule(rb, po.first);
  if (!second) return std::nullopt;
  auto first = apply_rule_reverse(ra, po.second);
  if (!first) return std::nullopt;
  Span s = compose_spans(Span{second->complement_out, second->complement_in},
                         Span{first->complement_out, first->complement_in});
  LinearRule composite = LinearRule::make(s.to_out, s.to_in);
  return RuleComposition{std::move(po), std::move(*first), std::move(*second), std::move(composite)};
}

std::vector<Overlap> enumerate_rule_overlaps(const LinearRule& rb, const LinearRule& ra) {
  std::vector<Overlap> out;
  for (auto& mu : enumerate_spans(rb.input, ra.output))
    if (glue_rules(rb, mu, ra)) out.push_back(std::move(mu));
  return out;
}

LinearRule compose_rules(const LinearRule& rb, const Overlap& mu, const LinearRule& ra) {
  auto g = glue_rules(rb, mu, ra);
  if (!g) throw PreconditionError("compose_rules: overlap is not admissible");
  return canonicalize(g->composite);
}

namespace {

// Iso between the results of two derivations sharing rule, host and match.
GraphMorphism result_iso(const DirectDerivation& a, const DirectDerivation& b) {
  auto dd = factor_through(a.complement_in, b.complement_in);
  if (!dd) throw StructuralError("result_iso: complements differ");
  Square po{a.result(), a.comatch, a.complement_out};
  auto u = pushout_mediator(po, b.comatch, compose(b.complement_out, *dd));
  if (!u || !is_iso(*u)) throw StructuralError("result_iso: results are not isomorphic");
  return *u;
}

}  // namespace

TwoStep analyze_derivation(const LinearRule& r, const LinearRule& rb, const LinearRule& ra,
                           const Overlap& mu, const DirectDerivation& dd) {
  if (dd.rule != r) throw PreconditionError("analyze_derivation: derivation is not along r");
  auto g = glue_rules(rb, mu, ra);
  if (!g) throw PreconditionError("analyze_derivation: overlap is not admissible");
  auto iso = rule_isomorphism(g->composite, r);
  if (!iso) throw PreconditionError("analyze_derivation: r is not the composite along mu");
  GraphMorphism start = compose(dd.match, iso->input);
  auto first = extend(g->first, start);
  if (!first) throw StructuralError("analyze_derivation: first step does not extend");
  auto second = extend(g->second, first->embedding);
  if (!second) throw StructuralError("analyze_derivation: second step does not extend");
  return TwoStep{std::move(first->step), std::move(second->step)};
}

Synthesis synthesize(const DirectDerivation& first, const DirectDerivation& second) {
  if (first.result() != second.host()) throw PreconditionError("synthesize: steps are not consecutive");
  Square pb = pullback(second.match, first.comatch);
  Overlap mu{pb.apex, pb.first, pb.second};
  auto g = glue_rules(second.rule, mu, first.rule);
  if (!g) throw StructuralError("synthesize: induced overlap is not admissible");
  auto u = pushout_mediator(g->gluing, second.match, first.comatch);
  if (!u) throw StructuralError("synthesize: gluing does not map into the middle object");
  // walk the first step backwards on the concrete middle object
  auto back = extend(g->first.reversed(), *u);
  if (!back) throw StructuralError("synthesize: reverse step does not extend");
  GraphMorphism to_host = compose(result_iso(back->step, first.reversed()), back->embedding);
  auto d = apply_rule(g->composite, to_host);
  if (!d) throw StructuralError("synthesize: composite rule does not apply");
  return Synthesis{std::move(mu), std::move(*d)};
}

}  // namespace tracelet
