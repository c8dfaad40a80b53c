#include "tracelet/library.hpp"

namespace tracelet {

namespace {

GraphMorphism inclusion(const Graph& small, const Graph& big) {
  GraphMorphism f{small, big, {}, {}};
  for (int v = 0; v < small.num_vertices(); ++v) f.vmap.push_back(v);
  for (int e = 0; e < small.num_edges(); ++e) f.emap.push_back(e);
  return f;
}

}  // namespace

LinearRule vertex_creation() {
  Graph k;
  return LinearRule::make(inclusion(k, Graph::discrete(1)), identity(k));
}

LinearRule vertex_deletion() { return vertex_creation().reversed(); }

LinearRule edge_creation() {
  Graph k = Graph::discrete(2);
  return LinearRule::make(inclusion(k, Graph::single_edge()), identity(k));
}

LinearRule edge_deletion() { return edge_creation().reversed(); }

std::vector<NamedRule> bundled_library() {
  return {{"rv+", vertex_creation()},
          {"rv-", vertex_deletion()},
          {"re+", edge_creation()},
          {"re-", edge_deletion()},
          {"trivial", LinearRule::trivial()}};
}

std::vector<LinearRule> bundled_rules() {
  return {vertex_creation(), vertex_deletion(), edge_creation(), edge_deletion()};
}

}  // namespace tracelet
