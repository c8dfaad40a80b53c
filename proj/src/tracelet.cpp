#include "tracelet/tracelet.hpp"

#include <map>
#include <numeric>
#include <set>

namespace tracelet {

namespace {

const Graph& empty_graph() {
  static const Graph g;
  return g;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

GraphMorphism factor_or_throw(const GraphMorphism& f, const GraphMorphism& g, const char* what) {
  auto h = factor_through(f, g);
  if (!h) throw StructuralError(what);
  return *h;
}

}  // namespace

const Graph& Tracelet::object(int k) const {
  if (k < 0 || k > length()) throw PreconditionError("tracelet object index out of range");
  if (steps.empty()) return empty_graph();
  if (k == length()) return steps.back().result();
  return steps[static_cast<std::size_t>(k)].host();
}

ThreadLabels thread_labels(const Tracelet& t, int a, int b) {
  std::vector<int> voff, eoff;
  int nv = 0, ne = 0;
  for (int c = a; c <= b; ++c) {
    voff.push_back(nv);
    eoff.push_back(ne);
    nv += t.object(c).num_vertices();
    ne += t.object(c).num_edges();
  }
  UnionFind uv(nv), ue(ne);
  std::vector<bool> tv(static_cast<std::size_t>(nv)), te(static_cast<std::size_t>(ne));
  for (int k = a; k < b; ++k) {
    const auto& s = t.steps[static_cast<std::size_t>(k)];
    const int lo = k - a, hi = k + 1 - a;
    for (int d = 0; d < s.complement.num_vertices(); ++d)
      uv.unite(voff[static_cast<std::size_t>(lo)] + s.complement_in.vertex(d),
               voff[static_cast<std::size_t>(hi)] + s.complement_out.vertex(d));
    for (int d = 0; d < s.complement.num_edges(); ++d)
      ue.unite(eoff[static_cast<std::size_t>(lo)] + s.complement_in.edge(d),
               eoff[static_cast<std::size_t>(hi)] + s.complement_out.edge(d));
    for (int v : s.match.vmap) tv[static_cast<std::size_t>(voff[static_cast<std::size_t>(lo)] + v)] = true;
    for (int e : s.match.emap) te[static_cast<std::size_t>(eoff[static_cast<std::size_t>(lo)] + e)] = true;
    for (int v : s.comatch.vmap) tv[static_cast<std::size_t>(voff[static_cast<std::size_t>(hi)] + v)] = true;
    for (int e : s.comatch.emap) te[static_cast<std::size_t>(eoff[static_cast<std::size_t>(hi)] + e)] = true;
  }
  ThreadLabels out;
  out.vertex_touched.assign(static_cast<std::size_t>(nv), false);
  out.edge_touched.assign(static_cast<std::size_t>(ne), false);
  for (int x = 0; x < nv; ++x)
    if (tv[static_cast<std::size_t>(x)]) out.vertex_touched[static_cast<std::size_t>(uv.find(x))] = true;
  for (int x = 0; x < ne; ++x)
    if (te[static_cast<std::size_t>(x)]) out.edge_touched[static_cast<std::size_t>(ue.find(x))] = true;
  for (int c = a; c <= b; ++c) {
    std::vector<int> lv, le;
    for (int v = 0; v < t.object(c).num_vertices(); ++v) lv.push_back(uv.find(voff[static_cast<std::size_t>(c - a)] + v));
    for (int e = 0; e < t.object(c).num_edges(); ++e) le.push_back(ue.find(eoff[static_cast<std::size_t>(c - a)] + e));
    out.vertex.push_back(std::move(lv));
    out.edge.push_back(std::move(le));
  }
  return out;
}

bool is_minimal(const Tracelet& t) {
  ThreadLabels th = thread_labels(t, 0, t.length());
  for (const auto& obj : th.vertex)
    for (int x : obj)
      if (!th.vertex_touched[static_cast<std::size_t>(x)]) return false;
  for (const auto& obj : th.edge)
    for (int x : obj)
      if (!th.edge_touched[static_cast<std::size_t>(x)]) return false;
  return true;
}

void validate(const Tracelet& t) {
  for (int k = 0; k < t.length(); ++k) {
    const auto& s = t.steps[static_cast<std::size_t>(k)];
    validate(s);
    if (s.orientation != Orientation::kForward) throw StructuralError("tracelet step is not forward");
    if (k > 0 && t.steps[static_cast<std::size_t>(k - 1)].result() != s.host())
      throw StructuralError("tracelet steps are not chained");
  }
  if (!is_minimal(t)) throw StructuralError("tracelet is not minimal");
}

bool is_valid(const Tracelet& t) {
  try {
    validate(t);
    return true;
  } catch (const StructuralError&) {
    return false;
  }
}

Tracelet empty_tracelet() { return Tracelet{}; }

Tracelet tracelet_of_rule(const LinearRule& r) {
  auto d = apply_rule(r, identity(r.input));
  if (!d) throw StructuralError("rule does not apply to its own input");
  return Tracelet{{std::move(*d)}};
}

Tracelet trivial_tracelet() { return tracelet_of_rule(LinearRule::trivial()); }

std::optional<TraceletMatch> admit(const Tracelet& later, const Overlap& mu, const Tracelet& earlier) {
  if (mu.left.target != later.in() || mu.right.target != earlier.out())
    throw PreconditionError("overlap legs do not land in in(later) and out(earlier)");
  if (!is_mono(mu.left) || !is_mono(mu.right)) throw PreconditionError("overlap legs must be monos");
  Square po = pushout(mu.left, mu.right);
  std::vector<DirectDerivation> lower(earlier.steps.size());
  GraphMorphism e = po.second;
  for (int k = earlier.length() - 1; k >= 0; --k) {
    auto ext = extend(earlier.steps[static_cast<std::size_t>(k)].reversed(), e);
    if (!ext) return std::nullopt;
    lower[static_cast<std::size_t>(k)] = ext->step.reversed();
    e = std::move(ext->embedding);
  }
  e = po.first;
  for (const auto& s : later.steps) {
    auto ext = extend(s, e);
    if (!ext) return std::nullopt;
    lower.push_back(std::move(ext->step));
    e = std::move(ext->embedding);
  }
  return TraceletMatch{mu, std::move(po), std::move(lower)};
}

std::vector<TraceletMatch> enumerate_tracelet_matches(const Tracelet& later, const Tracelet& earlier) {
  std::vector<TraceletMatch> out;
  for (const auto& mu : enumerate_spans(later.in(), earlier.out()))
    if (auto m = admit(later, mu, earlier)) out.push_back(std::move(*m));
  return out;
}

Tracelet compose_tracelets(const Tracelet& later, const TraceletMatch& mu, const Tracelet& earlier) {
  if (mu.overlap.left.target != later.in() || mu.overlap.right.target != earlier.out() ||
      mu.ladder.size() != later.steps.size() + earlier.steps.size())
    throw PreconditionError("match does not belong to this pair of tracelets");
  return Tracelet{mu.ladder};
}

Tracelet compose_tracelets(const Tracelet& later, const Overlap& mu, const Tracelet& earlier) {
  auto m = admit(later, mu, earlier);
  if (!m) throw PreconditionError("compose_tracelets: overlap is not admissible");
  return Tracelet{std::move(m->ladder)};
}

Tracelet juxtapose(const Tracelet& later, const Tracelet& earlier) {
  return compose_tracelets(later, empty_overlap(later.in(), earlier.out()), earlier);
}

Window window(const Tracelet& t, int a, int b) {
  if (a < 0 || b > t.length() || a > b) throw PreconditionError("window out of range");
  ThreadLabels th = thread_labels(t, a, b);
  Window w;
  std::vector<std::vector<bool>> keep_v, keep_e;
  for (int c = a; c <= b; ++c) {
    std::vector<bool> kv, ke;
    for (int x : th.vertex[static_cast<std::size_t>(c - a)]) kv.push_back(th.vertex_touched[static_cast<std::size_t>(x)]);
    for (int x : th.edge[static_cast<std::size_t>(c - a)]) ke.push_back(th.edge_touched[static_cast<std::size_t>(x)]);
    w.objects.push_back(induced_subgraph(t.object(c), kv, ke));
    keep_v.push_back(std::move(kv));
    keep_e.push_back(std::move(ke));
  }
  for (int k = a; k < b; ++k) {
    const auto& s = t.steps[static_cast<std::size_t>(k)];
    const auto& kv = keep_v[static_cast<std::size_t>(k - a)];
    const auto& ke = keep_e[static_cast<std::size_t>(k - a)];
    std::vector<bool> dv, de;
    for (int d = 0; d < s.complement.num_vertices(); ++d) dv.push_back(kv[static_cast<std::size_t>(s.complement_in.vertex(d))]);
    for (int d = 0; d < s.complement.num_edges(); ++d) de.push_back(ke[static_cast<std::size_t>(s.complement_in.edge(d))]);
    GraphMorphism inc_d = induced_subgraph(s.complement, dv, de);
    const GraphMorphism& lo = w.objects[static_cast<std::size_t>(k - a)];
    const GraphMorphism& hi = w.objects[static_cast<std::size_t>(k + 1 - a)];
    DirectDerivation step{s.rule,
                          factor_or_throw(s.match, lo, "window: match leaves the window"),
                          inc_d.source,
                          factor_or_throw(s.context_map, inc_d, "window: context leaves the window"),
                          factor_or_throw(compose(s.complement_in, inc_d), lo, "window: complement leaves the window"),
                          factor_or_throw(compose(s.complement_out, inc_d), hi, "window: complement leaves the window"),
                          factor_or_throw(s.comatch, hi, "window: comatch leaves the window"),
                          s.orientation};
    w.tracelet.steps.push_back(std::move(step));
    w.complements.push_back(std::move(inc_d));
  }
  return w;
}

LinearRule evaluate(const Tracelet& t) {
  if (t.length() == 0) return LinearRule::trivial();
  Span acc{t.steps[0].complement_out, t.steps[0].complement_in};
  for (int k = 1; k < t.length(); ++k) {
    const auto& s = t.steps[static_cast<std::size_t>(k)];
    acc = compose_spans(Span{s.complement_out, s.complement_in}, acc);
  }
  return LinearRule::make(acc.to_out, acc.to_in);
}

Tracelet face(const Tracelet& t, int i) {
  const int n = t.length();
  if (n < 1 || i < 0 || i > n) throw PreconditionError("face index out of range");
  if (i == 0) return window(t, 0, n - 1).tracelet;
  if (i == n) return window(t, 1, n).tracelet;
  const int j = n - i - 1;
  const auto& s0 = t.steps[static_cast<std::size_t>(j)];
  const auto& s1 = t.steps[static_cast<std::size_t>(j + 1)];
  Window w = window(t, j, j + 2);
  const auto& w0 = w.tracelet.steps[0];
  const auto& w1 = w.tracelet.steps[1];
  Square inner = pullback(w1.complement_in, w0.complement_out);
  LinearRule rule = LinearRule::make(compose(w1.complement_out, inner.first), compose(w0.complement_in, inner.second));
  Square outer = pullback(s1.complement_in, s0.complement_out);
  auto ctx = pullback_mediator(outer, compose(w.complements[1], inner.first), compose(w.complements[0], inner.second));
  if (!ctx) throw StructuralError("face: context does not map into the merged complement");
  DirectDerivation merged{std::move(rule),
                          w.objects[0],
                          outer.apex,
                          std::move(*ctx),
                          compose(s0.complement_in, outer.second),
                          compose(s1.complement_out, outer.first),
                          w.objects[2],
                          Orientation::kForward};
  Tracelet out;
  for (int k = 0; k < j; ++k) out.steps.push_back(t.steps[static_cast<std::size_t>(k)]);
  out.steps.push_back(std::move(merged));
  for (int k = j + 2; k < n; ++k) out.steps.push_back(t.steps[static_cast<std::size_t>(k)]);
  return out;
}

Tracelet degeneracy(const Tracelet& t, int i) {
  const int n = t.length();
  if (i < 0 || i > n) throw PreconditionError("degeneracy index out of range");
  const int c = n - i;
  const Graph& x = t.object(c);
  DirectDerivation idle{LinearRule::trivial(), from_empty(x), x, from_empty(x), identity(x), identity(x),
                        from_empty(x), Orientation::kForward};
  Tracelet out = t;
  out.steps.insert(out.steps.begin() + c, std::move(idle));
  return out;
}

Diagram diagram_of(const Tracelet& t) {
  Diagram d;
  const int n = t.length();
  for (int c = 0; c <= n; ++c) d.add_object(t.object(c));
  for (const auto& s : t.steps) {
    d.add_object(s.rule.output);
    d.add_object(s.rule.context);
    d.add_object(s.rule.input);
    d.add_object(s.complement);
  }
  for (int k = 0; k < n; ++k) {
    const auto& s = t.steps[static_cast<std::size_t>(k)];
    const int o = n + 1 + 4 * k, kk = o + 1, in = o + 2, dc = o + 3;
    d.add_arrow(in, k, s.match);
    d.add_arrow(o, k + 1, s.comatch);
    d.add_arrow(dc, k, s.complement_in);
    d.add_arrow(dc, k + 1, s.complement_out);
    d.add_arrow(kk, dc, s.context_map);
    d.add_arrow(kk, o, s.rule.o);
    d.add_arrow(kk, in, s.rule.i);
  }
  return d;
}

Tracelet tracelet_from_diagram(const Diagram& d) {
  if (d.objects.empty() || (d.objects.size() - 1) % 5 != 0) throw StructuralError("not a tracelet diagram");
  const int n = static_cast<int>(d.objects.size() - 1) / 5;
  if (d.arrows.size() != static_cast<std::size_t>(7 * n)) throw StructuralError("not a tracelet diagram");
  Tracelet t;
  for (int k = 0; k < n; ++k) {
    auto arrow = [&](int a) { return d.morphism(static_cast<std::size_t>(7 * k + a)); };
    LinearRule r = LinearRule::make(arrow(5), arrow(6));
    t.steps.push_back(DirectDerivation{std::move(r), arrow(0), d.objects[static_cast<std::size_t>(n + 4 + 4 * k)],
                                       arrow(4), arrow(2), arrow(3), arrow(1), Orientation::kForward});
  }
  return t;
}

TraceletKey tracelet_key(const Tracelet& t) { return canonical_form(diagram_of(t)).key; }

Tracelet canonicalize(const Tracelet& t) { return tracelet_from_diagram(canonical_form(diagram_of(t)).diagram); }

Tracelet decode_tracelet(const TraceletKey& key) { return tracelet_from_diagram(decode(key.key)); }

}  // namespace tracelet

namespace tracelet {

std::vector<std::vector<Tracelet>> enumerate_tracelets(const std::vector<LinearRule>& rules, int max_length) {
  std::vector<std::vector<Tracelet>> out{{empty_tracelet()}};
  std::vector<Tracelet> singles;
  for (const auto& r : rules) singles.push_back(tracelet_of_rule(r));
  for (int n = 1; n <= max_length; ++n) {
    std::map<TraceletKey, Tracelet> seen;
    for (const auto& prev : out.back())
      for (const auto& single : singles)
        for (const auto& m : enumerate_tracelet_matches(single, prev)) {
          Tracelet c = compose_tracelets(single, m, prev);
          auto form = canonical_form(diagram_of(c));
          if (!seen.count(form.key)) seen.emplace(form.key, tracelet_from_diagram(form.diagram));
        }
    std::vector<Tracelet> level;
    for (auto& [k, t] : seen) level.push_back(std::move(t));
    out.push_back(std::move(level));
  }
  return out;
}

}  // namespace tracelet

namespace tracelet {

namespace {

// Thread footprint of each step: the threads its input, context and output hit.
struct Footprint {
  std::vector<int> in_v, in_e, out_v, out_e;
  std::set<int> ctx_v, ctx_e;
  std::set<int> touched_v, touched_e;
};

struct ThreadModel {
  ThreadLabels labels;
  int nv = 0, ne = 0;
  std::vector<int> edge_src, edge_tgt;  // per edge thread
  std::vector<Footprint> steps;
};

ThreadModel thread_model(const Tracelet& t) {
  ThreadModel tm;
  tm.labels = thread_labels(t, 0, t.length());
  tm.nv = static_cast<int>(tm.labels.vertex_touched.size());
  tm.ne = static_cast<int>(tm.labels.edge_touched.size());
  tm.edge_src.assign(static_cast<std::size_t>(tm.ne), -1);
  tm.edge_tgt.assign(static_cast<std::size_t>(tm.ne), -1);
  for (int c = 0; c <= t.length(); ++c) {
    const Graph& x = t.object(c);
    const auto& lv = tm.labels.vertex[static_cast<std::size_t>(c)];
    const auto& le = tm.labels.edge[static_cast<std::size_t>(c)];
    for (int e = 0; e < x.num_edges(); ++e) {
      tm.edge_src[static_cast<std::size_t>(le[static_cast<std::size_t>(e)])] = lv[static_cast<std::size_t>(x.edge(e).src)];
      tm.edge_tgt[static_cast<std::size_t>(le[static_cast<std::size_t>(e)])] = lv[static_cast<std::size_t>(x.edge(e).tgt)];
    }
  }
  for (int k = 0; k < t.length(); ++k) {
    const auto& s = t.steps[static_cast<std::size_t>(k)];
    const auto& lv0 = tm.labels.vertex[static_cast<std::size_t>(k)];
    const auto& le0 = tm.labels.edge[static_cast<std::size_t>(k)];
    const auto& lv1 = tm.labels.vertex[static_cast<std::size_t>(k + 1)];
    const auto& le1 = tm.labels.edge[static_cast<std::size_t>(k + 1)];
    Footprint f;
    for (int v : s.match.vmap) f.in_v.push_back(lv0[static_cast<std::size_t>(v)]);
    for (int e : s.match.emap) f.in_e.push_back(le0[static_cast<std::size_t>(e)]);
    for (int v : s.comatch.vmap) f.out_v.push_back(lv1[static_cast<std::size_t>(v)]);
    for (int e : s.comatch.emap) f.out_e.push_back(le1[static_cast<std::size_t>(e)]);
    for (int v : s.rule.i.vmap) f.ctx_v.insert(f.in_v[static_cast<std::size_t>(v)]);
    for (int e : s.rule.i.emap) f.ctx_e.insert(f.in_e[static_cast<std::size_t>(e)]);
    f.touched_v.insert(f.in_v.begin(), f.in_v.end());
    f.touched_v.insert(f.out_v.begin(), f.out_v.end());
    f.touched_e.insert(f.in_e.begin(), f.in_e.end());
    f.touched_e.insert(f.out_e.begin(), f.out_e.end());
    tm.steps.push_back(std::move(f));
  }
  return tm;
}

// Graph on the alive threads, with thread -> position maps.
struct AliveGraph {
  Graph g;
  std::vector<int> vpos, epos;
};

AliveGraph alive_graph(const ThreadModel& tm, const std::vector<bool>& av, const std::vector<bool>& ae) {
  AliveGraph a;
  a.vpos.assign(static_cast<std::size_t>(tm.nv), -1);
  a.epos.assign(static_cast<std::size_t>(tm.ne), -1);
  for (int v = 0; v < tm.nv; ++v)
    if (av[static_cast<std::size_t>(v)]) a.vpos[static_cast<std::size_t>(v)] = a.g.add_vertex();
  for (int e = 0; e < tm.ne; ++e)
    if (ae[static_cast<std::size_t>(e)])
      a.epos[static_cast<std::size_t>(e)] = a.g.add_edge(a.vpos[static_cast<std::size_t>(tm.edge_src[static_cast<std::size_t>(e)])],
                                                         a.vpos[static_cast<std::size_t>(tm.edge_tgt[static_cast<std::size_t>(e)])]);
  return a;
}

GraphMorphism through_threads(const Graph& src, const std::vector<int>& v_threads, const std::vector<int>& e_threads,
                              const AliveGraph& dst) {
  GraphMorphism f{src, dst.g, {}, {}};
  for (int v : v_threads) f.vmap.push_back(dst.vpos[static_cast<std::size_t>(v)]);
  for (int e : e_threads) f.emap.push_back(dst.epos[static_cast<std::size_t>(e)]);
  return f;
}

}  // namespace

std::optional<Tracelet> resequence(const Tracelet& t, const std::vector<int>& order) {
  const int n = t.length();
  if (static_cast<int>(order.size()) != n) throw PreconditionError("resequence: order has the wrong length");
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < n; ++k)
    if (sorted[static_cast<std::size_t>(k)] != k) throw PreconditionError("resequence: not a permutation");
  ThreadModel tm = thread_model(t);
  std::vector<bool> av(static_cast<std::size_t>(tm.nv), false), ae(static_cast<std::size_t>(tm.ne), false);
  for (int x : tm.labels.vertex[0]) av[static_cast<std::size_t>(x)] = true;
  for (int x : tm.labels.edge[0]) ae[static_cast<std::size_t>(x)] = true;
  AliveGraph cur = alive_graph(tm, av, ae);
  Tracelet out;
  for (int k : order) {
    const auto& s = t.steps[static_cast<std::size_t>(k)];
    const Footprint& f = tm.steps[static_cast<std::size_t>(k)];
    for (int v : f.in_v)
      if (!av[static_cast<std::size_t>(v)]) return std::nullopt;
    for (int e : f.in_e)
      if (!ae[static_cast<std::size_t>(e)]) return std::nullopt;
    std::vector<bool> dv = av, de = ae;
    for (int v : f.in_v)
      if (!f.ctx_v.count(v)) dv[static_cast<std::size_t>(v)] = false;
    for (int e : f.in_e)
      if (!f.ctx_e.count(e)) de[static_cast<std::size_t>(e)] = false;
    std::vector<bool> nv = dv, ne = de;
    for (int v : f.out_v)
      if (!f.ctx_v.count(v)) {
        if (dv[static_cast<std::size_t>(v)]) return std::nullopt;
        nv[static_cast<std::size_t>(v)] = true;
      }
    for (int e : f.out_e)
      if (!f.ctx_e.count(e)) {
        if (de[static_cast<std::size_t>(e)]) return std::nullopt;
        ne[static_cast<std::size_t>(e)] = true;
      }
    for (int e = 0; e < tm.ne; ++e) {
      if (!de[static_cast<std::size_t>(e)] && !ne[static_cast<std::size_t>(e)]) continue;
      bool ends_d = dv[static_cast<std::size_t>(tm.edge_src[static_cast<std::size_t>(e)])] &&
                    dv[static_cast<std::size_t>(tm.edge_tgt[static_cast<std::size_t>(e)])];
      bool ends_n = nv[static_cast<std::size_t>(tm.edge_src[static_cast<std::size_t>(e)])] &&
                    nv[static_cast<std::size_t>(tm.edge_tgt[static_cast<std::size_t>(e)])];
      if ((de[static_cast<std::size_t>(e)] && !ends_d) || (ne[static_cast<std::size_t>(e)] && !ends_n)) return std::nullopt;
    }
    AliveGraph d = alive_graph(tm, dv, de);
    AliveGraph next = alive_graph(tm, nv, ne);
    std::vector<int> dvt, det;
    for (int v = 0; v < tm.nv; ++v)
      if (dv[static_cast<std::size_t>(v)]) dvt.push_back(v);
    for (int e = 0; e < tm.ne; ++e)
      if (de[static_cast<std::size_t>(e)]) det.push_back(e);
    std::vector<int> kvt, ket;
    for (int v : s.rule.i.vmap) kvt.push_back(f.in_v[static_cast<std::size_t>(v)]);
    for (int e : s.rule.i.emap) ket.push_back(f.in_e[static_cast<std::size_t>(e)]);
    DirectDerivation step{s.rule,
                          through_threads(s.rule.input, f.in_v, f.in_e, cur),
                          d.g,
                          through_threads(s.rule.context, kvt, ket, d),
                          through_threads(d.g, dvt, det, cur),
                          through_threads(d.g, dvt, det, next),
                          through_threads(s.rule.output, f.out_v, f.out_e, next),
                          Orientation::kForward};
    out.steps.push_back(std::move(step));
    av = std::move(nv);
    ae = std::move(ne);
    cur = std::move(next);
  }
  return out;
}

bool steps_conflict(const Tracelet& t, int j, int k) {
  ThreadModel tm = thread_model(t);
  const Footprint& a = tm.steps.at(static_cast<std::size_t>(j));
  const Footprint& b = tm.steps.at(static_cast<std::size_t>(k));
  for (int v : a.touched_v)
    if (b.touched_v.count(v) && !(a.ctx_v.count(v) && b.ctx_v.count(v))) return true;
  for (int e : a.touched_e)
    if (b.touched_e.count(e) && !(a.ctx_e.count(e) && b.ctx_e.count(e))) return true;
  return false;
}

bool steps_share_threads(const Tracelet& t, int j, int k) {
  ThreadModel tm = thread_model(t);
  const Footprint& a = tm.steps.at(static_cast<std::size_t>(j));
  const Footprint& b = tm.steps.at(static_cast<std::size_t>(k));
  for (int v : a.touched_v)
    if (b.touched_v.count(v)) return true;
  for (int e : a.touched_e)
    if (b.touched_e.count(e)) return true;
  return false;
}

}  // namespace tracelet
