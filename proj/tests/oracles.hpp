#pragma once

// Brute-force reference checks shared by the unit tests and the acceptance
// binary. Nothing in here calls the constructions under test except to
// obtain the object being checked.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "tracelet/constructions.hpp"
#include "tracelet/graph.hpp"

namespace oracle {

using tracelet::Edge;
using tracelet::Graph;
using tracelet::GraphMorphism;

inline Graph random_graph(std::mt19937& rng, int max_vertices, int max_edges) {
  std::uniform_int_distribution<int> nv_dist(0, max_vertices);
  int nv = nv_dist(rng);
  Graph g(nv);
  if (nv == 0) return g;
  std::uniform_int_distribution<int> ne_dist(0, max_edges);
  std::uniform_int_distribution<int> v_dist(0, nv - 1);
  int ne = ne_dist(rng);
  for (int e = 0; e < ne; ++e) g.add_edge(v_dist(rng), v_dist(rng));
  return g;
}

/// Relabel the target of f by a random permutation.
inline GraphMorphism shuffle_target(std::mt19937& rng, const GraphMorphism& f) {
  const Graph& t = f.target;
  std::vector<int> pv(static_cast<std::size_t>(t.num_vertices()));
  std::vector<int> pe(static_cast<std::size_t>(t.num_edges()));
  std::iota(pv.begin(), pv.end(), 0);
  std::iota(pe.begin(), pe.end(), 0);
  std::shuffle(pv.begin(), pv.end(), rng);
  std::shuffle(pe.begin(), pe.end(), rng);
  std::vector<Edge> edges(static_cast<std::size_t>(t.num_edges()));
  for (int e = 0; e < t.num_edges(); ++e)
    edges[static_cast<std::size_t>(pe[static_cast<std::size_t>(e)])] =
        Edge{pv[static_cast<std::size_t>(t.edge(e).src)], pv[static_cast<std::size_t>(t.edge(e).tgt)]};
  Graph nt(t.num_vertices(), edges);
  GraphMorphism g{f.source, nt, {}, {}};
  for (int v : f.vmap) g.vmap.push_back(pv[static_cast<std::size_t>(v)]);
  for (int e : f.emap) g.emap.push_back(pe[static_cast<std::size_t>(e)]);
  return g;
}

/// A random mono out of `a`: add a few vertices/edges, then shuffle ids.
inline GraphMorphism random_mono_from(std::mt19937& rng, const Graph& a, int extra_vertices, int extra_edges) {
  Graph b = a;
  std::uniform_int_distribution<int> xv(0, extra_vertices);
  std::uniform_int_distribution<int> xe(0, extra_edges);
  int nv = xv(rng);
  for (int i = 0; i < nv; ++i) b.add_vertex();
  if (b.num_vertices() > 0) {
    std::uniform_int_distribution<int> v(0, b.num_vertices() - 1);
    int ne = xe(rng);
    for (int i = 0; i < ne; ++i) b.add_edge(v(rng), v(rng));
  }
  GraphMorphism f{a, b, {}, {}};
  for (int v = 0; v < a.num_vertices(); ++v) f.vmap.push_back(v);
  for (int e = 0; e < a.num_edges(); ++e) f.emap.push_back(e);
  return shuffle_target(rng, f);
}

inline bool same_map(const GraphMorphism& a, const GraphMorphism& b) {
  return a.vmap == b.vmap && a.emap == b.emap;
}

inline GraphMorphism after(const GraphMorphism& g, const GraphMorphism& f) {
  GraphMorphism h{f.source, g.target, {}, {}};
  for (int v : f.vmap) h.vmap.push_back(g.vmap[static_cast<std::size_t>(v)]);
  for (int e : f.emap) h.emap.push_back(g.emap[static_cast<std::size_t>(e)]);
  return h;
}

/// Pushout universal property against every cocone into every test object.
inline bool pushout_universal(const GraphMorphism& f, const GraphMorphism& g, const tracelet::Square& po,
                              const std::vector<Graph>& test_objects) {
  if (!same_map(after(po.first, f), after(po.second, g))) return false;
  for (const Graph& t : test_objects) {
    auto homs_d = tracelet::enumerate_homs(po.apex, t, false);
    for (const auto& h1 : tracelet::enumerate_homs(f.target, t, false))
      for (const auto& h2 : tracelet::enumerate_homs(g.target, t, false)) {
        if (!same_map(after(h1, f), after(h2, g))) continue;
        int count = 0;
        for (const auto& u : homs_d)
          if (same_map(after(u, po.first), h1) && same_map(after(u, po.second), h2)) ++count;
        if (count != 1) return false;
      }
  }
  return true;
}

/// Pullback universal property against every cone from every test object.
inline bool pullback_universal(const GraphMorphism& f, const GraphMorphism& g, const tracelet::Square& pb,
                               const std::vector<Graph>& test_objects) {
  if (!same_map(after(f, pb.first), after(g, pb.second))) return false;
  for (const Graph& q : test_objects) {
    auto homs_p = tracelet::enumerate_homs(q, pb.apex, false);
    for (const auto& h1 : tracelet::enumerate_homs(q, f.source, false))
      for (const auto& h2 : tracelet::enumerate_homs(q, g.source, false)) {
        if (!same_map(after(f, h1), after(g, h2))) continue;
        int count = 0;
        for (const auto& u : homs_p)
          if (same_map(after(pb.first, u), h1) && same_map(after(pb.second, u), h2)) ++count;
        if (count != 1) return false;
      }
  }
  return true;
}

/// Set-level pushout test for monos into X: union covers X and the
/// intersection of the images is exactly the image of the shared corner.
inline bool mono_square_is_pushout(const GraphMorphism& k, const GraphMorphism& kd, const GraphMorphism& m,
                                   const GraphMorphism& d) {
  if (!same_map(after(m, k), after(d, kd))) return false;
  std::set<int> im_v(m.vmap.begin(), m.vmap.end()), d_v(d.vmap.begin(), d.vmap.end());
  std::set<int> im_e(m.emap.begin(), m.emap.end()), d_e(d.emap.begin(), d.emap.end());
  for (int v = 0; v < m.target.num_vertices(); ++v)
    if (!im_v.count(v) && !d_v.count(v)) return false;
  for (int e = 0; e < m.target.num_edges(); ++e)
    if (!im_e.count(e) && !d_e.count(e)) return false;
  std::set<int> corner_v, corner_e;
  for (int v : k.vmap) corner_v.insert(m.vmap[static_cast<std::size_t>(v)]);
  for (int e : k.emap) corner_e.insert(m.emap[static_cast<std::size_t>(e)]);
  std::set<int> both_v, both_e;
  for (int v : im_v)
    if (d_v.count(v)) both_v.insert(v);
  for (int e : im_e)
    if (d_e.count(e)) both_e.insert(e);
  return both_v == corner_v && both_e == corner_e && std::set<int>(d.vmap.begin(), d.vmap.end()).size() == d.vmap.size();
}

/// Does some subgraph D of X complete K -> I -> X to a pushout? Exhaustive
/// over vertex and edge subsets.
inline bool complement_exists(const GraphMorphism& k, const GraphMorphism& m) {
  const Graph& x = m.target;
  const int nv = x.num_vertices(), ne = x.num_edges();
  for (unsigned vm = 0; vm < (1u << nv); ++vm)
    for (unsigned em = 0; em < (1u << ne); ++em) {
      bool closed = true;
      for (int e = 0; e < ne && closed; ++e)
        if (((em >> e) & 1u) && !(((vm >> x.edge(e).src) & 1u) && ((vm >> x.edge(e).tgt) & 1u))) closed = false;
      if (!closed) continue;
      std::vector<int> vid(static_cast<std::size_t>(nv), -1), eid(static_cast<std::size_t>(ne), -1);
      Graph d;
      GraphMorphism inc{{}, x, {}, {}};
      for (int v = 0; v < nv; ++v)
        if ((vm >> v) & 1u) {
          vid[static_cast<std::size_t>(v)] = d.add_vertex();
          inc.vmap.push_back(v);
        }
      for (int e = 0; e < ne; ++e)
        if ((em >> e) & 1u) {
          eid[static_cast<std::size_t>(e)] =
              d.add_edge(vid[static_cast<std::size_t>(x.edge(e).src)], vid[static_cast<std::size_t>(x.edge(e).tgt)]);
          inc.emap.push_back(e);
        }
      inc.source = d;
      GraphMorphism kd{k.source, d, {}, {}};
      bool ok = true;
      for (int v = 0; v < k.source.num_vertices() && ok; ++v) {
        int t = vid[static_cast<std::size_t>(m.vertex(k.vertex(v)))];
        ok = t >= 0;
        kd.vmap.push_back(t);
      }
      for (int e = 0; e < k.source.num_edges() && ok; ++e) {
        int t = eid[static_cast<std::size_t>(m.edge(k.edge(e)))];
        ok = t >= 0;
        kd.emap.push_back(t);
      }
      if (ok && mono_square_is_pushout(k, kd, m, inc)) return true;
    }
  return false;
}

/// Count bijective homs A -> B.
inline std::size_t count_isos(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return 0;
  return tracelet::enumerate_homs(a, b, true).size();
}

}  // namespace oracle
