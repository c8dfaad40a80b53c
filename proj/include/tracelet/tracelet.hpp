#pragma once

#include <optional>
#include <vector>

#include "tracelet/canonical.hpp"
#include "tracelet/rewriting.hpp"

namespace tracelet {

/// A tracelet of length n, stored as the derivation sequence
///   X_0 => X_1 => ... => X_n
/// with steps[k] the plaquette X_k => X_{k+1}. steps[0] is the first rule
/// applied (r_1 in right-to-left notation), in() is X_0 and out() is X_n.
///
/// Minimality: every element of every X_k lies on a thread (a chain of
/// elements carried along the complements) that some match or comatch hits.
struct Tracelet {
  std::vector<DirectDerivation> steps;

  int length() const { return static_cast<int>(steps.size()); }
  /// X_k for 0 <= k <= length(); the empty graph for the length-0 tracelet.
  const Graph& object(int k) const;
  const Graph& in() const { return object(0); }
  const Graph& out() const { return object(length()); }
  const LinearRule& rule(int k) const { return steps.at(static_cast<std::size_t>(k)).rule; }

  friend bool operator==(const Tracelet&, const Tracelet&) = default;
};

/// Squares valid, objects chained, all steps forward, minimal.
void validate(const Tracelet& t);
bool is_valid(const Tracelet& t);
bool is_minimal(const Tracelet& t);

Tracelet empty_tracelet();
/// T(r): r applied to its own input along the identity.
Tracelet tracelet_of_rule(const LinearRule& r);
/// T(trivial rule), the unit up to normal-form equivalence.
Tracelet trivial_tracelet();

/// An admissible overlap of in(later) with out(earlier), together with the
/// whole ladder of derivations of the composite.
struct TraceletMatch {
  Overlap overlap;
  Square gluing;                        // in(later) -> Y <- out(earlier)
  std::vector<DirectDerivation> ladder; // composite steps, earlier first
};

/// nullopt when some step of either ladder fails its dangling condition.
std::optional<TraceletMatch> admit(const Tracelet& later, const Overlap& mu, const Tracelet& earlier);
/// Admissible overlaps up to span isomorphism, in enumerate_spans order.
std::vector<TraceletMatch> enumerate_tracelet_matches(const Tracelet& later, const Tracelet& earlier);
Tracelet compose_tracelets(const Tracelet& later, const TraceletMatch& mu, const Tracelet& earlier);
/// Throws PreconditionError for an inadmissible overlap.
Tracelet compose_tracelets(const Tracelet& later, const Overlap& mu, const Tracelet& earlier);
/// Composite along the empty overlap.
Tracelet juxtapose(const Tracelet& later, const Tracelet& earlier);

/// Steps [a, b) cut down to the threads those steps touch. `objects[c - a]`
/// embeds the new X_c into the old one and `complements[k - a]` the new
/// complement of step k into the old one.
struct Window {
  Tracelet tracelet;
  std::vector<GraphMorphism> objects;
  std::vector<GraphMorphism> complements;
};
Window window(const Tracelet& t, int a, int b);

/// Span composite of the whole sequence: out() <- K -> in().
LinearRule evaluate(const Tracelet& t);

/// Simplicial structure. Simplex vertex i is the object X_{n-i}, so d_0
/// drops the last rule applied, d_n drops the first, and an inner d_i
/// merges steps n-i-1 and n-i into one plaquette along their composite.
/// s_i inserts a trivial plaquette at X_{n-i}.
Tracelet face(const Tracelet& t, int i);
Tracelet degeneracy(const Tracelet& t, int i);

using TraceletKey = CanonicalKey;

/// Objects X_0..X_n, then O, K, I, D per step; arrows per step: match,
/// comatch, complement in/out, context map, rule legs o and i.
Diagram diagram_of(const Tracelet& t);
Tracelet tracelet_from_diagram(const Diagram& d);
TraceletKey tracelet_key(const Tracelet& t);
Tracelet canonicalize(const Tracelet& t);
/// Rebuild a tracelet from its key.
Tracelet decode_tracelet(const TraceletKey& key);

/// Every tracelet over `rules` up to iso, grouped by length 0..max_length.
/// Length n+1 is obtained as T(r) composed after each length-n class along
/// each admissible overlap, which reaches every class.
std::vector<std::vector<Tracelet>> enumerate_tracelets(const std::vector<LinearRule>& rules, int max_length);

/// Union-find thread labels: label[c] gives, per vertex and edge of X_c, a
/// thread id shared along the complements of steps [a, b).
struct ThreadLabels {
  std::vector<std::vector<int>> vertex;
  std::vector<std::vector<int>> edge;
  std::vector<bool> vertex_touched;  // indexed by thread id
  std::vector<bool> edge_touched;
};
ThreadLabels thread_labels(const Tracelet& t, int a, int b);

/// Replay the steps in the given order on the same threads. Each step
/// keeps its rule and the threads its match and comatch hit; nullopt when
/// some step would need a thread that is not alive yet (or no longer), or
/// an edge would outlive an endpoint.
std::optional<Tracelet> resequence(const Tracelet& t, const std::vector<int>& order);
/// Threads touched by steps j and k that at least one of them creates or
/// deletes; empty exactly when the two steps may be exchanged.
bool steps_conflict(const Tracelet& t, int j, int k);
/// Whether steps j and k touch a common thread.
bool steps_share_threads(const Tracelet& t, int j, int k);

}  // namespace tracelet
