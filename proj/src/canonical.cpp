#include "tracelet/canonical.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace tracelet {

int Diagram::add_object(Graph g) {
  objects.push_back(std::move(g));
  return static_cast<int>(objects.size()) - 1;
}

void Diagram::add_arrow(int source, int target, const GraphMorphism& f) {
  if (f.source != objects.at(static_cast<std::size_t>(source)) ||
      f.target != objects.at(static_cast<std::size_t>(target)))
    throw StructuralError("Diagram::add_arrow: morphism does not match objects");
  arrows.push_back(Arrow{source, target, f.vmap, f.emap});
}

GraphMorphism Diagram::morphism(std::size_t arrow) const {
  const Arrow& a = arrows.at(arrow);
  return GraphMorphism{objects[static_cast<std::size_t>(a.source)],
                       objects[static_cast<std::size_t>(a.target)], a.vmap, a.emap};
}

namespace {

int pin_of(const std::vector<std::vector<int>>& pins, std::size_t object, int idx) {
  if (object >= pins.size() || pins[object].empty()) return 0;
  return pins[object][static_cast<std::size_t>(idx)];
}

// Colored-graph view of a diagram: one node per vertex and per edge of each
// object; labelled arcs for src, tgt and every arrow.
struct NodeGraph {
  struct Node {
    int object;
    int kind;  // 0 vertex, 1 edge
    int local;
  };
  std::vector<Node> nodes;
  std::vector<std::vector<std::pair<int, int>>> out;  // (label, target)
  std::vector<std::vector<std::pair<int, int>>> in;   // (label, source)
  std::vector<int> initial;                           // initial colour rank
  std::vector<int> block_start;                       // first position of (object, kind) block
  std::vector<std::vector<int>> vnode;
  std::vector<std::vector<int>> enode;

  explicit NodeGraph(const Diagram& d) {
    std::vector<std::tuple<int, int, int>> keys;
    for (std::size_t o = 0; o < d.objects.size(); ++o) {
      const Graph& g = d.objects[o];
      vnode.emplace_back();
      enode.emplace_back();
      for (int v = 0; v < g.num_vertices(); ++v) {
        vnode.back().push_back(static_cast<int>(nodes.size()));
        nodes.push_back({static_cast<int>(o), 0, v});
        keys.emplace_back(static_cast<int>(o), 0, pin_of(d.vertex_pins, o, v));
      }
      for (int e = 0; e < g.num_edges(); ++e) {
        enode.back().push_back(static_cast<int>(nodes.size()));
        nodes.push_back({static_cast<int>(o), 1, e});
        keys.emplace_back(static_cast<int>(o), 1, pin_of(d.edge_pins, o, e));
      }
    }
    const std::size_t n = nodes.size();
    out.resize(n);
    in.resize(n);
    auto arc = [&](int label, int u, int v) {
      out[static_cast<std::size_t>(u)].emplace_back(label, v);
      in[static_cast<std::size_t>(v)].emplace_back(label, u);
    };
    for (std::size_t o = 0; o < d.objects.size(); ++o) {
      const Graph& g = d.objects[o];
      for (int e = 0; e < g.num_edges(); ++e) {
        arc(0, enode[o][static_cast<std::size_t>(e)], vnode[o][static_cast<std::size_t>(g.edge(e).src)]);
        arc(1, enode[o][static_cast<std::size_t>(e)], vnode[o][static_cast<std::size_t>(g.edge(e).tgt)]);
      }
    }
    for (std::size_t a = 0; a < d.arrows.size(); ++a) {
      const Arrow& ar = d.arrows[a];
      const int label = 2 + static_cast<int>(a);
      auto s = static_cast<std::size_t>(ar.source);
      auto t = static_cast<std::size_t>(ar.target);
      for (std::size_t v = 0; v < ar.vmap.size(); ++v)
        arc(label, vnode[s][v], vnode[t][static_cast<std::size_t>(ar.vmap[v])]);
      for (std::size_t e = 0; e < ar.emap.size(); ++e)
        arc(label, enode[s][e], enode[t][static_cast<std::size_t>(ar.emap[e])]);
    }
    for (auto& l : out) std::sort(l.begin(), l.end());
    for (auto& l : in) std::sort(l.begin(), l.end());

    std::vector<std::tuple<int, int, int>> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    initial.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      initial[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
    // nodes are created block by block in (object, kind) order
    block_start.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && nodes[i].object == nodes[i - 1].object && nodes[i].kind == nodes[i - 1].kind)
        block_start[i] = block_start[i - 1];
      else
        block_start[i] = static_cast<int>(i);
    }
  }

  std::size_t size() const { return nodes.size(); }
};

// Colours are dense ranks 0..k-1 with cells ordered by rank. Refinement keeps
// the relative order of existing cells and splits them canonically.
void refine(const NodeGraph& ng, std::vector<int>& colour) {
  const std::size_t n = ng.size();
  int num_colours = n == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
  std::vector<std::vector<int>> sig(n);
  std::vector<int> order(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) {
      auto& s = sig[i];
      s.clear();
      s.push_back(colour[i]);
      std::vector<int> nb;
      nb.reserve(ng.out[i].size() + ng.in[i].size());
      for (auto [label, v] : ng.out[i])
        nb.push_back((label * 2) * static_cast<int>(n + 1) + colour[static_cast<std::size_t>(v)]);
      for (auto [label, v] : ng.in[i])
        nb.push_back((label * 2 + 1) * static_cast<int>(n + 1) + colour[static_cast<std::size_t>(v)]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)];
    });
    std::vector<int> next(n);
    int rank = -1;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == 0 || sig[static_cast<std::size_t>(order[k])] != sig[static_cast<std::size_t>(order[k - 1])]) ++rank;
      next[static_cast<std::size_t>(order[k])] = rank;
    }
    int new_count = rank + 1;
    colour = std::move(next);
    if (new_count == num_colours) return;
    num_colours = new_count;
  }
}

Relabeling labeling_from_positions(const NodeGraph& ng, const Diagram& d, const std::vector<int>& pos) {
  Relabeling r;
  r.vertex.resize(d.objects.size());
  r.edge.resize(d.objects.size());
  for (std::size_t o = 0; o < d.objects.size(); ++o) {
    r.vertex[o].resize(static_cast<std::size_t>(d.objects[o].num_vertices()));
    r.edge[o].resize(static_cast<std::size_t>(d.objects[o].num_edges()));
  }
  for (std::size_t i = 0; i < ng.size(); ++i) {
    const auto& nd = ng.nodes[i];
    // a node's position always lies inside its own block
    int local = pos[i] - ng.block_start[static_cast<std::size_t>(pos[i])];
    if (nd.kind == 0)
      r.vertex[static_cast<std::size_t>(nd.object)][static_cast<std::size_t>(nd.local)] = local;
    else
      r.edge[static_cast<std::size_t>(nd.object)][static_cast<std::size_t>(nd.local)] = local;
  }
  return r;
}

struct Search {
  const Diagram& d;
  const NodeGraph& ng;
  bool prune;
  bool have_best = false;
  std::string best;
  std::vector<int> best_pos;
  std::vector<std::vector<int>> equal_leaves;  // positions of leaves with key == best
  std::vector<std::vector<int>> autos;         // node permutations

  Search(const Diagram& d_, const NodeGraph& ng_, bool p) : d(d_), ng(ng_), prune(p) {}

  void leaf(const std::vector<int>& pos) {
    std::string key = encode(apply(d, labeling_from_positions(ng, d, pos)));
    if (!have_best || key < best) {
      have_best = true;
      best = std::move(key);
      best_pos = pos;
      equal_leaves.assign(1, pos);
    } else if (key == best) {
      // node i -> node j with best_pos[j] == pos[i]
      std::vector<int> inv(pos.size());
      for (std::size_t j = 0; j < pos.size(); ++j) inv[static_cast<std::size_t>(best_pos[j])] = static_cast<int>(j);
      std::vector<int> perm(pos.size());
      for (std::size_t i = 0; i < pos.size(); ++i) perm[i] = inv[static_cast<std::size_t>(pos[i])];
      autos.push_back(std::move(perm));
      equal_leaves.push_back(pos);
    }
  }

  bool same_orbit(const std::vector<int>& prefix, int w, int v) const {
    // orbits of the pointwise stabiliser of `prefix` among discovered automorphisms
    std::vector<int> parent(ng.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    for (const auto& g : autos) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](int p) { return g[static_cast<std::size_t>(p)] == p; });
      if (!fixes) continue;
      for (std::size_t i = 0; i < g.size(); ++i) {
        int a = find(static_cast<int>(i));
        int b = find(g[i]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    return find(w) == find(v);
  }

  void visit(std::vector<int> colour, std::vector<int>& prefix) {
    refine(ng, colour);
    const std::size_t n = ng.size();
    std::vector<int> cell_size(n + 1, 0);
    for (int c : colour) ++cell_size[static_cast<std::size_t>(c)];
    int target = -1;
    for (std::size_t c = 0; c < n; ++c)
      if (cell_size[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    if (target < 0) {
      leaf(colour);
      return;
    }
    std::vector<int> explored;
    for (std::size_t v = 0; v < n; ++v) {
      if (colour[v] != target) continue;
      if (prune) {
        bool skip = false;
        for (int w : explored)
          if (same_orbit(prefix, w, static_cast<int>(v))) {
            skip = true;
            break;
          }
        if (skip) continue;
      }
      std::vector<int> next = colour;
      for (std::size_t i = 0; i < n; ++i)
        if (next[i] > target || (next[i] == target && i != v)) ++next[i];
      prefix.push_back(static_cast<int>(v));
      visit(std::move(next), prefix);
      prefix.pop_back();
      explored.push_back(static_cast<int>(v));
    }
  }
};

void append_list(std::string& s, const std::vector<int>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
}

std::vector<int> parse_list(std::string_view s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t i = 0;
  while (i <= s.size()) {
    std::size_t j = s.find(',', i);
    if (j == std::string_view::npos) j = s.size();
    int x = 0;
    auto res = std::from_chars(s.data() + i, s.data() + j, x);
    if (res.ec != std::errc{}) throw StructuralError("decode: bad integer");
    out.push_back(x);
    i = j + 1;
  }
  return out;
}

int parse_int(std::string_view s) {
  int x = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) throw StructuralError("decode: bad integer");
  return x;
}

}  // namespace

Diagram apply(const Diagram& d, const Relabeling& r) {
  Diagram out;
  for (std::size_t o = 0; o < d.objects.size(); ++o) {
    const Graph& g = d.objects[o];
    std::vector<Edge> edges(static_cast<std::size_t>(g.num_edges()));
    for (int e = 0; e < g.num_edges(); ++e)
      edges[static_cast<std::size_t>(r.edge[o][static_cast<std::size_t>(e)])] = {
          r.vertex[o][static_cast<std::size_t>(g.edge(e).src)],
          r.vertex[o][static_cast<std::size_t>(g.edge(e).tgt)]};
    out.objects.emplace_back(g.num_vertices(), std::move(edges));
  }
  for (const Arrow& a : d.arrows) {
    auto s = static_cast<std::size_t>(a.source);
    auto t = static_cast<std::size_t>(a.target);
    Arrow b{a.source, a.target, std::vector<int>(a.vmap.size()), std::vector<int>(a.emap.size())};
    for (std::size_t v = 0; v < a.vmap.size(); ++v)
      b.vmap[static_cast<std::size_t>(r.vertex[s][v])] = r.vertex[t][static_cast<std::size_t>(a.vmap[v])];
    for (std::size_t e = 0; e < a.emap.size(); ++e)
      b.emap[static_cast<std::size_t>(r.edge[s][e])] = r.edge[t][static_cast<std::size_t>(a.emap[e])];
    out.arrows.push_back(std::move(b));
  }
  auto relabel_pins = [&](const std::vector<std::vector<int>>& pins, const std::vector<std::vector<int>>& map) {
    std::vector<std::vector<int>> res(pins.size());
    for (std::size_t o = 0; o < pins.size(); ++o) {
      if (pins[o].empty()) continue;
      res[o].resize(pins[o].size());
      for (std::size_t i = 0; i < pins[o].size(); ++i) res[o][static_cast<std::size_t>(map[o][i])] = pins[o][i];
    }
    return res;
  };
  out.vertex_pins = relabel_pins(d.vertex_pins, r.vertex);
  out.edge_pins = relabel_pins(d.edge_pins, r.edge);
  return out;
}

std::string encode(const Diagram& d) {
  std::string s;
  for (std::size_t o = 0; o < d.objects.size(); ++o) {
    if (!s.empty()) s += '|';
    const Graph& g = d.objects[o];
    s += 'o';
    s += std::to_string(g.num_vertices());
    for (const Edge& e : g.edges()) {
      s += '.';
      s += std::to_string(e.src);
      s += '-';
      s += std::to_string(e.tgt);
    }
  }
  for (const Arrow& a : d.arrows) {
    s += "|a";
    s += std::to_string(a.source);
    s += '-';
    s += std::to_string(a.target);
    s += ':';
    append_list(s, a.vmap);
    s += '/';
    append_list(s, a.emap);
  }
  for (std::size_t o = 0; o < d.objects.size(); ++o) {
    bool vp = o < d.vertex_pins.size() && !d.vertex_pins[o].empty() &&
              std::any_of(d.vertex_pins[o].begin(), d.vertex_pins[o].end(), [](int x) { return x != 0; });
    bool ep = o < d.edge_pins.size() && !d.edge_pins[o].empty() &&
              std::any_of(d.edge_pins[o].begin(), d.edge_pins[o].end(), [](int x) { return x != 0; });
    if (!vp && !ep) continue;
    s += "|p";
    s += std::to_string(o);
    s += ':';
    if (vp) append_list(s, d.vertex_pins[o]);
    s += '/';
    if (ep) append_list(s, d.edge_pins[o]);
  }
  return s;
}

Diagram decode(const std::string& key) {
  Diagram d;
  if (key.empty()) return d;
  std::string_view rest(key);
  while (true) {
    std::size_t bar = rest.find('|');
    std::string_view item = rest.substr(0, bar);
    if (item.empty()) throw StructuralError("decode: empty item");
    if (item[0] == 'o') {
      std::size_t dot = item.find('.');
      int nv = parse_int(item.substr(1, dot == std::string_view::npos ? std::string_view::npos : dot - 1));
      Graph g(nv);
      while (dot != std::string_view::npos) {
        std::size_t next = item.find('.', dot + 1);
        std::string_view e = item.substr(dot + 1, next == std::string_view::npos ? std::string_view::npos : next - dot - 1);
        std::size_t dash = e.find('-');
        if (dash == std::string_view::npos) throw StructuralError("decode: bad edge");
        g.add_edge(parse_int(e.substr(0, dash)), parse_int(e.substr(dash + 1)));
        dot = next;
      }
      d.objects.push_back(std::move(g));
    } else if (item[0] == 'a') {
      std::size_t dash = item.find('-');
      std::size_t colon = item.find(':');
      std::size_t slash = item.find('/');
      if (dash == std::string_view::npos || colon == std::string_view::npos || slash == std::string_view::npos)
        throw StructuralError("decode: bad arrow");
      Arrow a{parse_int(item.substr(1, dash - 1)), parse_int(item.substr(dash + 1, colon - dash - 1)),
              parse_list(item.substr(colon + 1, slash - colon - 1)), parse_list(item.substr(slash + 1))};
      d.arrows.push_back(std::move(a));
    } else if (item[0] == 'p') {
      std::size_t colon = item.find(':');
      std::size_t slash = item.find('/');
      if (colon == std::string_view::npos || slash == std::string_view::npos) throw StructuralError("decode: bad pins");
      auto o = static_cast<std::size_t>(parse_int(item.substr(1, colon - 1)));
      if (d.vertex_pins.size() < d.objects.size()) d.vertex_pins.resize(d.objects.size());
      if (d.edge_pins.size() < d.objects.size()) d.edge_pins.resize(d.objects.size());
      d.vertex_pins.at(o) = parse_list(item.substr(colon + 1, slash - colon - 1));
      d.edge_pins.at(o) = parse_list(item.substr(slash + 1));
    } else {
      throw StructuralError("decode: unknown item");
    }
    if (bar == std::string_view::npos) break;
    rest = rest.substr(bar + 1);
  }
  for (const Arrow& a : d.arrows) {
    if (a.source < 0 || a.target < 0 || a.source >= static_cast<int>(d.objects.size()) ||
        a.target >= static_cast<int>(d.objects.size()))
      throw StructuralError("decode: arrow endpoint out of range");
    validate(d.morphism(static_cast<std::size_t>(&a - d.arrows.data())));
  }
  return d;
}

CanonicalForm canonical_form(const Diagram& d) {
  NodeGraph ng(d);
  Search s(d, ng, true);
  std::vector<int> prefix;
  s.visit(ng.initial, prefix);
  CanonicalForm cf;
  cf.labeling = labeling_from_positions(ng, d, s.best_pos);
  cf.diagram = apply(d, cf.labeling);
  cf.key = CanonicalKey{s.best};
  return cf;
}

std::vector<Relabeling> automorphisms(const Diagram& d) {
  NodeGraph ng(d);
  Search s(d, ng, false);
  std::vector<int> prefix;
  s.visit(ng.initial, prefix);
  // leaf labelling L maps the input to the canonical diagram; two leaves with
  // equal keys differ by an automorphism best^{-1} ∘ L.
  Relabeling best = labeling_from_positions(ng, d, s.best_pos);
  Relabeling best_inv = best;
  for (std::size_t o = 0; o < d.objects.size(); ++o) {
    for (std::size_t i = 0; i < best.vertex[o].size(); ++i)
      best_inv.vertex[o][static_cast<std::size_t>(best.vertex[o][i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < best.edge[o].size(); ++i)
      best_inv.edge[o][static_cast<std::size_t>(best.edge[o][i])] = static_cast<int>(i);
  }
  std::vector<Relabeling> out;
  for (const auto& pos : s.equal_leaves) {
    Relabeling l = labeling_from_positions(ng, d, pos);
    Relabeling g = l;
    for (std::size_t o = 0; o < d.objects.size(); ++o) {
      for (std::size_t i = 0; i < l.vertex[o].size(); ++i)
        g.vertex[o][i] = best_inv.vertex[o][static_cast<std::size_t>(l.vertex[o][i])];
      for (std::size_t i = 0; i < l.edge[o].size(); ++i)
        g.edge[o][i] = best_inv.edge[o][static_cast<std::size_t>(l.edge[o][i])];
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::uint64_t automorphism_count(const Diagram& d) { return automorphisms(d).size(); }

Relabeling inverse(const Relabeling& r) {
  Relabeling inv = r;
  for (std::size_t o = 0; o < r.vertex.size(); ++o) {
    for (std::size_t i = 0; i < r.vertex[o].size(); ++i)
      inv.vertex[o][static_cast<std::size_t>(r.vertex[o][i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < r.edge[o].size(); ++i)
      inv.edge[o][static_cast<std::size_t>(r.edge[o][i])] = static_cast<int>(i);
  }
  return inv;
}

std::optional<Relabeling> isomorphism(const Diagram& a, const Diagram& b) {
  CanonicalForm ca = canonical_form(a);
  CanonicalForm cb = canonical_form(b);
  if (ca.key != cb.key) return std::nullopt;
  Relabeling binv = inverse(cb.labeling);
  Relabeling r = ca.labeling;
  for (std::size_t o = 0; o < r.vertex.size(); ++o) {
    for (auto& x : r.vertex[o]) x = binv.vertex[o][static_cast<std::size_t>(x)];
    for (auto& x : r.edge[o]) x = binv.edge[o][static_cast<std::size_t>(x)];
  }
  return r;
}

GraphMorphism component(const Relabeling& r, const Diagram& a, const Diagram& b, int object) {
  auto o = static_cast<std::size_t>(object);
  return GraphMorphism{a.objects.at(o), b.objects.at(o), r.vertex.at(o), r.edge.at(o)};
}

Diagram diagram_of(const Graph& g) {
  Diagram d;
  d.add_object(g);
  return d;
}

CanonicalKey canonical_key(const Graph& g) { return canonical_form(diagram_of(g)).key; }

std::uint64_t automorphism_count(const Graph& g) { return automorphism_count(diagram_of(g)); }

}  // namespace tracelet

namespace tracelet {

std::vector<Graph> enumerate_graphs(int max_vertices, int max_edges) {
  if (max_vertices < 0 || max_edges < 0) throw PreconditionError("enumerate_graphs: negative bound");
  std::vector<Graph> out;
  for (int n = 0; n <= max_vertices; ++n) {
    std::map<CanonicalKey, Graph> level{{canonical_key(Graph(n)), Graph(n)}};
    for (int m = 0; m <= max_edges; ++m) {
      for (const auto& [k, g] : level) out.push_back(g);
      if (m == max_edges || n == 0) break;
      std::map<CanonicalKey, Graph> next;
      for (const auto& [k, g] : level)
        for (int s = 0; s < n; ++s)
          for (int t = 0; t < n; ++t) {
            Graph h = g;
            h.add_edge(s, t);
            next.emplace(canonical_key(h), std::move(h));
          }
      level = std::move(next);
    }
  }
  return out;
}

}  // namespace tracelet
