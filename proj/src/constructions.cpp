#include "tracelet/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tracelet {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
  }

 private:
  std::vector<int> parent_;
};

struct HomSearch {
  const Graph& a;
  const Graph& b;
  bool injective;
  std::vector<int> vmap;
  std::vector<int> emap;
  std::vector<char> vused;
  std::vector<char> eused;
  // edges of A bucketed by the larger endpoint, checked once both are placed
  std::vector<std::vector<int>> edges_closing_at;
  // adjacency count in B: (s,t) -> number of edges
  std::map<std::pair<int, int>, int> bcount;
  std::vector<GraphMorphism> out;

  HomSearch(const Graph& a_, const Graph& b_, bool inj) : a(a_), b(b_), injective(inj) {
    vmap.assign(static_cast<std::size_t>(a.num_vertices()), -1);
    emap.assign(static_cast<std::size_t>(a.num_edges()), -1);
    vused.assign(static_cast<std::size_t>(b.num_vertices()), 0);
    eused.assign(static_cast<std::size_t>(b.num_edges()), 0);
    edges_closing_at.resize(static_cast<std::size_t>(a.num_vertices()));
    for (int e = 0; e < a.num_edges(); ++e) {
      int hi = std::max(a.edge(e).src, a.edge(e).tgt);
      edges_closing_at[static_cast<std::size_t>(hi)].push_back(e);
    }
    for (const Edge& e : b.edges()) ++bcount[{e.src, e.tgt}];
  }

  bool vertex_consistent(int v) const {
    for (int e : edges_closing_at[static_cast<std::size_t>(v)]) {
      auto key = std::make_pair(vmap[static_cast<std::size_t>(a.edge(e).src)],
                                vmap[static_cast<std::size_t>(a.edge(e).tgt)]);
      if (!bcount.contains(key)) return false;
    }
    return true;
  }

  void assign_vertex(int v) {
    if (v == a.num_vertices()) {
      assign_edge(0);
      return;
    }
    for (int w = 0; w < b.num_vertices(); ++w) {
      if (injective && vused[static_cast<std::size_t>(w)]) continue;
      vmap[static_cast<std::size_t>(v)] = w;
      if (vertex_consistent(v)) {
        vused[static_cast<std::size_t>(w)] = 1;
        assign_vertex(v + 1);
        vused[static_cast<std::size_t>(w)] = 0;
      }
    }
    vmap[static_cast<std::size_t>(v)] = -1;
  }

  void assign_edge(int e) {
    if (e == a.num_edges()) {
      out.push_back(GraphMorphism{a, b, vmap, emap});
      return;
    }
    int s = vmap[static_cast<std::size_t>(a.edge(e).src)];
    int t = vmap[static_cast<std::size_t>(a.edge(e).tgt)];
    for (int f = 0; f < b.num_edges(); ++f) {
      if (b.edge(f).src != s || b.edge(f).tgt != t) continue;
      if (injective && eused[static_cast<std::size_t>(f)]) continue;
      emap[static_cast<std::size_t>(e)] = f;
      eused[static_cast<std::size_t>(f)] = 1;
      assign_edge(e + 1);
      eused[static_cast<std::size_t>(f)] = 0;
    }
    emap[static_cast<std::size_t>(e)] = -1;
  }
};

}  // namespace

std::vector<GraphMorphism> enumerate_homs(const Graph& a, const Graph& b, bool injective_only) {
  if (injective_only && (a.num_vertices() > b.num_vertices() || a.num_edges() > b.num_edges()))
    return {};
  HomSearch search(a, b, injective_only);
  search.assign_vertex(0);
  std::sort(search.out.begin(), search.out.end(),
            [](const GraphMorphism& x, const GraphMorphism& y) {
              return std::tie(x.vmap, x.emap) < std::tie(y.vmap, y.emap);
            });
  return std::move(search.out);
}

Square pushout(const GraphMorphism& f, const GraphMorphism& g) {
  if (f.source != g.source) throw StructuralError("pushout: legs have different sources");
  validate(f);
  validate(g);
  const Graph& b = f.target;
  const Graph& c = g.target;
  const int nbv = b.num_vertices();
  const int nbe = b.num_edges();
  UnionFind vuf(nbv + c.num_vertices());
  UnionFind euf(nbe + c.num_edges());
  for (int v = 0; v < f.source.num_vertices(); ++v) vuf.unite(f.vertex(v), nbv + g.vertex(v));
  for (int e = 0; e < f.source.num_edges(); ++e) euf.unite(f.edge(e), nbe + g.edge(e));

  Graph d;
  std::vector<int> vclass(static_cast<std::size_t>(nbv + c.num_vertices()), -1);
  std::vector<int> vid(vclass.size(), -1);
  for (int x = 0; x < static_cast<int>(vclass.size()); ++x) {
    int r = vuf.find(x);
    if (vclass[static_cast<std::size_t>(r)] < 0) vclass[static_cast<std::size_t>(r)] = d.add_vertex();
    vid[static_cast<std::size_t>(x)] = vclass[static_cast<std::size_t>(r)];
  }
  std::vector<int> eclass(static_cast<std::size_t>(nbe + c.num_edges()), -1);
  std::vector<int> eid(eclass.size(), -1);
  for (int x = 0; x < static_cast<int>(eclass.size()); ++x) {
    int r = euf.find(x);
    if (eclass[static_cast<std::size_t>(r)] < 0) {
      const Edge& edge = x < nbe ? b.edge(x) : c.edge(x - nbe);
      int off = x < nbe ? 0 : nbv;
      eclass[static_cast<std::size_t>(r)] = d.add_edge(vid[static_cast<std::size_t>(edge.src + off)],
                                                       vid[static_cast<std::size_t>(edge.tgt + off)]);
    }
    eid[static_cast<std::size_t>(x)] = eclass[static_cast<std::size_t>(r)];
  }
  Square sq{d, {b, d, {}, {}}, {c, d, {}, {}}};
  for (int v = 0; v < nbv; ++v) sq.first.vmap.push_back(vid[static_cast<std::size_t>(v)]);
  for (int e = 0; e < nbe; ++e) sq.first.emap.push_back(eid[static_cast<std::size_t>(e)]);
  for (int v = 0; v < c.num_vertices(); ++v) sq.second.vmap.push_back(vid[static_cast<std::size_t>(nbv + v)]);
  for (int e = 0; e < c.num_edges(); ++e) sq.second.emap.push_back(eid[static_cast<std::size_t>(nbe + e)]);
  return sq;
}

Square pullback(const GraphMorphism& f, const GraphMorphism& g) {
  if (f.target != g.target) throw StructuralError("pullback: legs have different targets");
  validate(f);
  validate(g);
  const Graph& b = f.source;
  const Graph& c = g.source;
  Graph p;
  std::map<std::pair<int, int>, int> vpair;
  Square sq{{}, {{}, b, {}, {}}, {{}, c, {}, {}}};
  for (int x = 0; x < b.num_vertices(); ++x)
    for (int y = 0; y < c.num_vertices(); ++y)
      if (f.vertex(x) == g.vertex(y)) {
        vpair[{x, y}] = p.add_vertex();
        sq.first.vmap.push_back(x);
        sq.second.vmap.push_back(y);
      }
  for (int x = 0; x < b.num_edges(); ++x)
    for (int y = 0; y < c.num_edges(); ++y)
      if (f.edge(x) == g.edge(y)) {
        int s = vpair.at({b.edge(x).src, c.edge(y).src});
        int t = vpair.at({b.edge(x).tgt, c.edge(y).tgt});
        p.add_edge(s, t);
        sq.first.emap.push_back(x);
        sq.second.emap.push_back(y);
      }
  sq.apex = p;
  sq.first.source = p;
  sq.second.source = p;
  return sq;
}

bool satisfies_dangling(const GraphMorphism& k, const GraphMorphism& m) {
  if (!is_mono(k) || !is_mono(m)) throw PreconditionError("pushout_complement requires monos");
  if (k.target != m.source) throw StructuralError("pushout_complement: k and m not composable");
  const Graph& x = m.target;
  std::vector<char> vdel(static_cast<std::size_t>(x.num_vertices()), 0);
  std::vector<char> edel(static_cast<std::size_t>(x.num_edges()), 0);
  for (int v : m.vmap) vdel[static_cast<std::size_t>(v)] = 1;
  for (int e : m.emap) edel[static_cast<std::size_t>(e)] = 1;
  for (int v : k.vmap) vdel[static_cast<std::size_t>(m.vertex(v))] = 0;
  for (int e : k.emap) edel[static_cast<std::size_t>(m.edge(e))] = 0;
  for (int e = 0; e < x.num_edges(); ++e) {
    if (edel[static_cast<std::size_t>(e)]) continue;
    if (vdel[static_cast<std::size_t>(x.edge(e).src)] || vdel[static_cast<std::size_t>(x.edge(e).tgt)])
      return false;
  }
  return true;
}

std::optional<Square> pushout_complement(const GraphMorphism& k, const GraphMorphism& m) {
  if (!satisfies_dangling(k, m)) return std::nullopt;
  const Graph& x = m.target;
  std::vector<bool> keepv(static_cast<std::size_t>(x.num_vertices()), true);
  std::vector<bool> keepe(static_cast<std::size_t>(x.num_edges()), true);
  for (int v : m.vmap) keepv[static_cast<std::size_t>(v)] = false;
  for (int e : m.emap) keepe[static_cast<std::size_t>(e)] = false;
  for (int v : k.vmap) keepv[static_cast<std::size_t>(m.vertex(v))] = true;
  for (int e : k.emap) keepe[static_cast<std::size_t>(m.edge(e))] = true;
  GraphMorphism inc = induced_subgraph(x, keepv, keepe);
  auto kbar = factor_through(compose(m, k), inc);
  return Square{inc.source, *kbar, inc};
}

std::optional<GraphMorphism> pushout_mediator(const Square& po, const GraphMorphism& h1,
                                              const GraphMorphism& h2) {
  if (h1.source != po.first.source || h2.source != po.second.source || h1.target != h2.target)
    throw StructuralError("pushout_mediator: cocone shape mismatch");
  const Graph& d = po.apex;
  GraphMorphism u{d, h1.target, std::vector<int>(static_cast<std::size_t>(d.num_vertices()), -1),
                  std::vector<int>(static_cast<std::size_t>(d.num_edges()), -1)};
  auto put = [](std::vector<int>& slot, int idx, int val) {
    int& s = slot[static_cast<std::size_t>(idx)];
    if (s >= 0 && s != val) return false;
    s = val;
    return true;
  };
  for (int v = 0; v < h1.source.num_vertices(); ++v)
    if (!put(u.vmap, po.first.vertex(v), h1.vertex(v))) return std::nullopt;
  for (int v = 0; v < h2.source.num_vertices(); ++v)
    if (!put(u.vmap, po.second.vertex(v), h2.vertex(v))) return std::nullopt;
  for (int e = 0; e < h1.source.num_edges(); ++e)
    if (!put(u.emap, po.first.edge(e), h1.edge(e))) return std::nullopt;
  for (int e = 0; e < h2.source.num_edges(); ++e)
    if (!put(u.emap, po.second.edge(e), h2.edge(e))) return std::nullopt;
  for (int x : u.vmap)
    if (x < 0) throw StructuralError("pushout_mediator: legs not jointly surjective");
  for (int x : u.emap)
    if (x < 0) throw StructuralError("pushout_mediator: legs not jointly surjective");
  if (!is_well_formed(u)) return std::nullopt;
  return u;
}

std::optional<GraphMorphism> pullback_mediator(const Square& pb, const GraphMorphism& h1,
                                               const GraphMorphism& h2) {
  if (h1.target != pb.first.target || h2.target != pb.second.target || h1.source != h2.source)
    throw StructuralError("pullback_mediator: cone shape mismatch");
  std::map<std::pair<int, int>, int> vpair;
  std::map<std::pair<int, int>, int> epair;
  for (int p = 0; p < pb.apex.num_vertices(); ++p) vpair[{pb.first.vertex(p), pb.second.vertex(p)}] = p;
  for (int p = 0; p < pb.apex.num_edges(); ++p) epair[{pb.first.edge(p), pb.second.edge(p)}] = p;
  GraphMorphism u{h1.source, pb.apex, {}, {}};
  for (int q = 0; q < h1.source.num_vertices(); ++q) {
    auto it = vpair.find({h1.vertex(q), h2.vertex(q)});
    if (it == vpair.end()) return std::nullopt;
    u.vmap.push_back(it->second);
  }
  for (int q = 0; q < h1.source.num_edges(); ++q) {
    auto it = epair.find({h1.edge(q), h2.edge(q)});
    if (it == epair.end()) return std::nullopt;
    u.emap.push_back(it->second);
  }
  return u;
}

bool jointly_surjective(const GraphMorphism& b, const GraphMorphism& c) {
  if (b.target != c.target) return false;
  std::vector<char> vhit(static_cast<std::size_t>(b.target.num_vertices()), 0);
  std::vector<char> ehit(static_cast<std::size_t>(b.target.num_edges()), 0);
  for (int v : b.vmap) vhit[static_cast<std::size_t>(v)] = 1;
  for (int v : c.vmap) vhit[static_cast<std::size_t>(v)] = 1;
  for (int e : b.emap) ehit[static_cast<std::size_t>(e)] = 1;
  for (int e : c.emap) ehit[static_cast<std::size_t>(e)] = 1;
  return std::all_of(vhit.begin(), vhit.end(), [](char h) { return h != 0; }) &&
         std::all_of(ehit.begin(), ehit.end(), [](char h) { return h != 0; });
}

bool is_pushout_of_monos(const GraphMorphism& f, const GraphMorphism& g, const GraphMorphism& b,
                         const GraphMorphism& c) {
  if (f.source != g.source || f.target != b.source || g.target != c.source || b.target != c.target)
    return false;
  if (!is_mono(f) || !is_mono(g) || !is_mono(b) || !is_mono(c)) return false;
  if (compose(b, f) != compose(c, g)) return false;
  if (!jointly_surjective(b, c)) return false;
  // every overlap of the images must come from the apex
  Square pb = pullback(b, c);
  return pb.apex.num_vertices() == f.source.num_vertices() &&
         pb.apex.num_edges() == f.source.num_edges();
}

}  // namespace tracelet
