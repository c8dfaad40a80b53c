#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tracelet {

/// Raised when a graph or morphism violates its structural invariants.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation is called outside its domain (non-mono input,
/// inadmissible overlap, index out of range, ...).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Edge {
  int src = 0;
  int tgt = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite directed multigraph. Vertices are 0..num_vertices()-1 and edges are
/// indexed by position; ids are local to the graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices, std::vector<Edge> edges = {});

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int size() const { return num_vertices_ + num_edges(); }
  bool empty() const { return size() == 0; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }

  int add_vertex() { return num_vertices_++; }
  int add_edge(int src, int tgt);

  friend bool operator==(const Graph&, const Graph&) = default;
  friend auto operator<=>(const Graph&, const Graph&) = default;

  // Small constructors used throughout tests and the bundled library.
  static Graph discrete(int n) { return Graph(n); }
  static Graph single_edge() { return Graph(2, {{0, 1}}); }
  static Graph loop() { return Graph(1, {{0, 0}}); }

  std::string debug_string() const;

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
};

/// Structure-preserving map between graphs. Source and target are held by
/// value; graphs at the scale handled here are a few dozen integers.
struct GraphMorphism {
  Graph source;
  Graph target;
  std::vector<int> vmap;
  std::vector<int> emap;

  friend bool operator==(const GraphMorphism&, const GraphMorphism&) = default;
  friend auto operator<=>(const GraphMorphism&, const GraphMorphism&) = default;

  int vertex(int v) const { return vmap.at(static_cast<std::size_t>(v)); }
  int edge(int e) const { return emap.at(static_cast<std::size_t>(e)); }
};

/// Throws StructuralError unless maps are total, in range and commute with
/// src/tgt.
void validate(const GraphMorphism& f);
bool is_well_formed(const GraphMorphism& f);

bool is_mono(const GraphMorphism& f);
bool is_iso(const GraphMorphism& f);

GraphMorphism identity(const Graph& g);
/// The unique morphism from the empty graph.
GraphMorphism from_empty(const Graph& g);
/// g ∘ f. Requires f.target == g.source.
GraphMorphism compose(const GraphMorphism& g, const GraphMorphism& f);
/// Inverse of an isomorphism.
GraphMorphism inverse(const GraphMorphism& f);

/// Partial inverse lookup tables of a mono (-1 where not in the image).
struct ImageIndex {
  std::vector<int> vertex_pre;
  std::vector<int> edge_pre;
  explicit ImageIndex(const GraphMorphism& mono);
  bool has_vertex(int v) const { return vertex_pre[static_cast<std::size_t>(v)] >= 0; }
  bool has_edge(int e) const { return edge_pre[static_cast<std::size_t>(e)] >= 0; }
};

/// Subgraph spanned by the marked vertices and edges, with its inclusion.
/// Marked edges must have marked endpoints.
GraphMorphism induced_subgraph(const Graph& g, const std::vector<bool>& keep_vertices,
                               const std::vector<bool>& keep_edges);

/// Factor a mono f: A -> C through a mono g: B -> C, i.e. find h with g∘h = f.
/// Returns nullopt if the image of f is not contained in the image of g.
std::optional<GraphMorphism> factor_through(const GraphMorphism& f, const GraphMorphism& g);

/// Image of a mono as a subgraph of its target (as inclusion).
bool image_contained(const GraphMorphism& f, const GraphMorphism& g);

/// Disjoint union with both coprojections.
struct Coproduct {
  Graph apex;
  GraphMorphism left;
  GraphMorphism right;
};
Coproduct disjoint_union(const Graph& a, const Graph& b);

}  // namespace tracelet
