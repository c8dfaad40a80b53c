#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tracelet/graph.hpp"

namespace tracelet {

/// Bare arrow between two objects of a Diagram.
struct Arrow {
  int source = 0;
  int target = 0;
  std::vector<int> vmap;
  std::vector<int> emap;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A finite diagram of graphs: indexed objects plus arrows between them.
/// Optional pins force elements into distinguished colour classes; an
/// isomorphism of diagrams must preserve pins.
struct Diagram {
  std::vector<Graph> objects;
  std::vector<Arrow> arrows;
  std::vector<std::vector<int>> vertex_pins;  // per object, empty = all pin 0
  std::vector<std::vector<int>> edge_pins;

  int add_object(Graph g);
  void add_arrow(int source, int target, const GraphMorphism& f);
  GraphMorphism morphism(std::size_t arrow) const;
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

/// Object-wise relabelling: new index of each old vertex/edge, per object.
struct Relabeling {
  std::vector<std::vector<int>> vertex;
  std::vector<std::vector<int>> edge;
};

/// Canonical byte string of a graph or diagram. Equal iff isomorphic.
struct CanonicalKey {
  std::string key;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalForm {
  Diagram diagram;       // relabelled copy of the input
  Relabeling labeling;   // input -> canonical
  CanonicalKey key;
};

/// Canonical labelling by colour refinement and individualisation with
/// automorphism-orbit pruning; exact (the key is the serialised canonical
/// diagram, never a hash).
CanonicalForm canonical_form(const Diagram& d);

/// Every automorphism of the diagram, as object-wise relabellings.
std::vector<Relabeling> automorphisms(const Diagram& d);
std::uint64_t automorphism_count(const Diagram& d);

Diagram apply(const Diagram& d, const Relabeling& r);

/// Some isomorphism a -> b (object-wise relabelling), if the keys agree.
std::optional<Relabeling> isomorphism(const Diagram& a, const Diagram& b);
/// The graph isomorphism a.objects[o] -> b.objects[o] carried by r.
GraphMorphism component(const Relabeling& r, const Diagram& a, const Diagram& b, int object);
Relabeling inverse(const Relabeling& r);

/// Serialisation used as the canonical key; decode reverses it.
std::string encode(const Diagram& d);
Diagram decode(const std::string& key);

Diagram diagram_of(const Graph& g);
CanonicalKey canonical_key(const Graph& g);
std::uint64_t automorphism_count(const Graph& g);

/// One graph per isomorphism class with at most the given numbers of
/// vertices and edges (loops and parallel edges allowed), ordered by
/// vertex count, then edge count, then key.
std::vector<Graph> enumerate_graphs(int max_vertices, int max_edges);

}  // namespace tracelet
