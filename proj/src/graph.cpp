#include "tracelet/graph.hpp"

#include <algorithm>
#include <sstream>

namespace tracelet {

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 0) throw StructuralError("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.src < 0 || e.src >= num_vertices_ || e.tgt < 0 || e.tgt >= num_vertices_)
      throw StructuralError("edge endpoint out of range");
  }
}

int Graph::add_edge(int src, int tgt) {
  if (src < 0 || src >= num_vertices_ || tgt < 0 || tgt >= num_vertices_)
    throw StructuralError("edge endpoint out of range");
  edges_.push_back({src, tgt});
  return num_edges() - 1;
}

std::string Graph::debug_string() const {
  std::ostringstream os;
  os << "G(" << num_vertices_ << ";";
  for (const Edge& e : edges_) os << " " << e.src << ">" << e.tgt;
  os << ")";
  return os.str();
}

bool is_well_formed(const GraphMorphism& f) {
  const Graph& s = f.source;
  const Graph& t = f.target;
  if (static_cast<int>(f.vmap.size()) != s.num_vertices()) return false;
  if (static_cast<int>(f.emap.size()) != s.num_edges()) return false;
  for (int v : f.vmap)
    if (v < 0 || v >= t.num_vertices()) return false;
  for (int e = 0; e < s.num_edges(); ++e) {
    int fe = f.emap[static_cast<std::size_t>(e)];
    if (fe < 0 || fe >= t.num_edges()) return false;
    if (f.vertex(s.edge(e).src) != t.edge(fe).src) return false;
    if (f.vertex(s.edge(e).tgt) != t.edge(fe).tgt) return false;
  }
  return true;
}

void validate(const GraphMorphism& f) {
  if (!is_well_formed(f)) throw StructuralError("malformed graph morphism");
}

namespace {

bool injective(const std::vector<int>& m, int range) {
  std::vector<char> seen(static_cast<std::size_t>(range), 0);
  for (int x : m) {
    if (seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

}  // namespace

bool is_mono(const GraphMorphism& f) {
  validate(f);
  return injective(f.vmap, f.target.num_vertices()) && injective(f.emap, f.target.num_edges());
}

bool is_iso(const GraphMorphism& f) {
  return is_mono(f) && f.source.num_vertices() == f.target.num_vertices() &&
         f.source.num_edges() == f.target.num_edges();
}

GraphMorphism identity(const Graph& g) {
  GraphMorphism f{g, g, {}, {}};
  f.vmap.resize(static_cast<std::size_t>(g.num_vertices()));
  f.emap.resize(static_cast<std::size_t>(g.num_edges()));
  for (int v = 0; v < g.num_vertices(); ++v) f.vmap[static_cast<std::size_t>(v)] = v;
  for (int e = 0; e < g.num_edges(); ++e) f.emap[static_cast<std::size_t>(e)] = e;
  return f;
}

GraphMorphism from_empty(const Graph& g) { return GraphMorphism{Graph{}, g, {}, {}}; }

GraphMorphism compose(const GraphMorphism& g, const GraphMorphism& f) {
  if (f.target != g.source) throw StructuralError("compose: codomain/domain mismatch");
  GraphMorphism h{f.source, g.target, {}, {}};
  h.vmap.reserve(f.vmap.size());
  h.emap.reserve(f.emap.size());
  for (int v : f.vmap) h.vmap.push_back(g.vertex(v));
  for (int e : f.emap) h.emap.push_back(g.edge(e));
  return h;
}

GraphMorphism inverse(const GraphMorphism& f) {
  if (!is_iso(f)) throw PreconditionError("inverse of a non-isomorphism");
  GraphMorphism g{f.target, f.source, {}, {}};
  g.vmap.assign(f.vmap.size(), 0);
  g.emap.assign(f.emap.size(), 0);
  for (std::size_t v = 0; v < f.vmap.size(); ++v)
    g.vmap[static_cast<std::size_t>(f.vmap[v])] = static_cast<int>(v);
  for (std::size_t e = 0; e < f.emap.size(); ++e)
    g.emap[static_cast<std::size_t>(f.emap[e])] = static_cast<int>(e);
  return g;
}

ImageIndex::ImageIndex(const GraphMorphism& mono)
    : vertex_pre(static_cast<std::size_t>(mono.target.num_vertices()), -1),
      edge_pre(static_cast<std::size_t>(mono.target.num_edges()), -1) {
  for (std::size_t v = 0; v < mono.vmap.size(); ++v)
    vertex_pre[static_cast<std::size_t>(mono.vmap[v])] = static_cast<int>(v);
  for (std::size_t e = 0; e < mono.emap.size(); ++e)
    edge_pre[static_cast<std::size_t>(mono.emap[e])] = static_cast<int>(e);
}

GraphMorphism induced_subgraph(const Graph& g, const std::vector<bool>& keep_vertices,
                               const std::vector<bool>& keep_edges) {
  std::vector<int> renumber(static_cast<std::size_t>(g.num_vertices()), -1);
  GraphMorphism inc{};
  Graph sub;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (keep_vertices[static_cast<std::size_t>(v)]) {
      renumber[static_cast<std::size_t>(v)] = sub.add_vertex();
      inc.vmap.push_back(v);
    }
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!keep_edges[static_cast<std::size_t>(e)]) continue;
    int s = renumber[static_cast<std::size_t>(g.edge(e).src)];
    int t = renumber[static_cast<std::size_t>(g.edge(e).tgt)];
    if (s < 0 || t < 0) throw StructuralError("induced_subgraph: edge with dropped endpoint");
    sub.add_edge(s, t);
    inc.emap.push_back(e);
  }
  inc.source = std::move(sub);
  inc.target = g;
  return inc;
}

std::optional<GraphMorphism> factor_through(const GraphMorphism& f, const GraphMorphism& g) {
  if (f.target != g.target) throw StructuralError("factor_through: targets differ");
  ImageIndex idx(g);
  GraphMorphism h{f.source, g.source, {}, {}};
  for (int v : f.vmap) {
    int p = idx.vertex_pre[static_cast<std::size_t>(v)];
    if (p < 0) return std::nullopt;
    h.vmap.push_back(p);
  }
  for (int e : f.emap) {
    int p = idx.edge_pre[static_cast<std::size_t>(e)];
    if (p < 0) return std::nullopt;
    h.emap.push_back(p);
  }
  return h;
}

bool image_contained(const GraphMorphism& f, const GraphMorphism& g) {
  return factor_through(f, g).has_value();
}

Coproduct disjoint_union(const Graph& a, const Graph& b) {
  Graph u(a.num_vertices() + b.num_vertices());
  for (const Edge& e : a.edges()) u.add_edge(e.src, e.tgt);
  for (const Edge& e : b.edges()) u.add_edge(e.src + a.num_vertices(), e.tgt + a.num_vertices());
  Coproduct c{u, {a, u, {}, {}}, {b, u, {}, {}}};
  for (int v = 0; v < a.num_vertices(); ++v) c.left.vmap.push_back(v);
  for (int e = 0; e < a.num_edges(); ++e) c.left.emap.push_back(e);
  for (int v = 0; v < b.num_vertices(); ++v) c.right.vmap.push_back(v + a.num_vertices());
  for (int e = 0; e < b.num_edges(); ++e) c.right.emap.push_back(e + a.num_edges());
  return c;
}

}  // namespace tracelet
