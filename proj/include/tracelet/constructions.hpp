#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tracelet/graph.hpp"

namespace tracelet {

/// All morphisms A -> B (injective ones only when `injective_only`), sorted
/// by (vmap, emap).
std::vector<GraphMorphism> enumerate_homs(const Graph& a, const Graph& b, bool injective_only);

inline std::vector<GraphMorphism> enumerate_monos(const Graph& a, const Graph& b) {
  return enumerate_homs(a, b, true);
}

/// Apex with the two legs of a square. For a pushout of (f: A->B, g: A->C)
/// `first` is B->D and `second` is C->D; for a pullback of (f: B->D, g: C->D)
/// `first` is P->B and `second` is P->C.
struct Square {
  Graph apex;
  GraphMorphism first;
  GraphMorphism second;
};

/// Pushout of a span, computed as the quotient of B ⊔ C. Requires a shared
/// source; intended for spans with at least one mono leg.
Square pushout(const GraphMorphism& f, const GraphMorphism& g);

/// Pullback of a cospan: pairs (b, c) with f(b) = g(c), component-wise.
Square pullback(const GraphMorphism& f, const GraphMorphism& g);

/// Pushout complement of K -k-> I -m-> X for monic k, m. On success `first`
/// is K -> K̄ and `second` is K̄ -> X (an inclusion). Absent when the dangling
/// condition fails.
std::optional<Square> pushout_complement(const GraphMorphism& k, const GraphMorphism& m);

/// True iff deleting m(I) \ m(k(K)) from X leaves no dangling edge.
bool satisfies_dangling(const GraphMorphism& k, const GraphMorphism& m);

/// Unique u: D -> T with u∘first = h1, u∘second = h2 for a pushout square,
/// or nullopt if h1, h2 do not form a compatible cocone.
std::optional<GraphMorphism> pushout_mediator(const Square& po, const GraphMorphism& h1,
                                              const GraphMorphism& h2);

/// Unique u: Q -> P with first∘u = h1, second∘u = h2 for a pullback square,
/// or nullopt if h1, h2 do not form a cone.
std::optional<GraphMorphism> pullback_mediator(const Square& pb, const GraphMorphism& h1,
                                               const GraphMorphism& h2);

/// For monos into a common object: the jointly surjective square check used
/// to certify pushouts along monos in graphs. With monos f: A->B, g: A->C
/// and b: B->D, c: C->D commuting, the square is a pushout iff b, c are
/// jointly surjective and A is their pullback.
bool is_pushout_of_monos(const GraphMorphism& f, const GraphMorphism& g, const GraphMorphism& b,
                         const GraphMorphism& c);

/// The unordered pair of monos into D is jointly surjective.
bool jointly_surjective(const GraphMorphism& b, const GraphMorphism& c);

}  // namespace tracelet
