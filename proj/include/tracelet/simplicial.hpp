#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tracelet/hopf.hpp"
#include "tracelet/tracelet.hpp"

namespace tracelet {

/// Finite window into the simplicial groupoid: tracelets over `rules` (plus
/// the trivial rule, so degenerate simplices are present) of length at most
/// `degree_bound` whose objects have at most `size_bound` vertices+edges.
struct SimplexUniverse {
  std::vector<LinearRule> rules;
  int size_bound = 6;
  int degree_bound = 3;
};

/// Enumerated simplices grouped by length 0..degree_bound.
std::vector<std::vector<Tracelet>> simplices(const SimplexUniverse& u);

using FaceMap = std::function<Tracelet(const Tracelet&, int)>;

struct IdentityTally {
  std::string identity;
  std::size_t instances = 0;
  std::size_t failures = 0;
};

struct Counterexample {
  std::string identity;
  std::string instance;  // e.g. "n=3 i=0 j=2"
  Tracelet tracelet;
};

struct IdentityReport {
  std::vector<IdentityTally> tallies;
  std::vector<Counterexample> counterexamples;  // at most a few per identity
  bool passed() const;
  std::size_t instances() const;
};

/// All face/degeneracy identities, up to iso, on every simplex of `u`.
/// The maps are injectable so a corrupted implementation can be checked.
IdentityReport check_simplicial_identities(const SimplexUniverse& u, const FaceMap& d = face,
                                           const FaceMap& s = degeneracy);

/// Glue pieces[k] in place of step k of `base`; pieces[k] must evaluate to
/// base.rule(k) up to iso (PreconditionError naming k otherwise) and have
/// length >= 1. nullopt if some glued step fails its dangling condition.
std::optional<Tracelet> reconstruct_from_mould(const Tracelet& base, const std::vector<Tracelet>& pieces);
/// Merge consecutive blocks of the given lengths into single steps with
/// inner faces. Lengths must be >= 1 and sum to t.length().
Tracelet collapse(const Tracelet& t, const std::vector<int>& block_lengths);
/// The windows cut out by consecutive blocks.
std::vector<Tracelet> blocks(const Tracelet& t, const std::vector<int>& block_lengths);

/// Gluing after projecting, and projecting after gluing, on every simplex
/// and every block decomposition of it.
struct MouldReport {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<Counterexample> counterexamples;
};
MouldReport check_mould_bijection(const SimplexUniverse& u);

struct FiberEntry {
  TraceletKey piece;          // class of the two merged steps
  std::uint64_t automorphisms;  // of the piece
  Rational weight;            // sum of |Aut(base)| / |Aut(fiber object)| over objects with this piece
};

/// Homotopy fiber of an inner face over a base, truncated to merged pairs
/// whose objects respect the size bound. One entry per piece class, sorted by key.
struct FiberReport {
  CanonicalKey base_rule;
  int size_bound = 0;
  std::vector<FiberEntry> entries;
  Rational weighted_cardinality;
};

/// Fiber of d_i over `base` (length n-1, 0 < i < n). The two merged steps
/// range over the universe's rules; every other step is a base rule.
FiberReport fiber_of_inner_face(const SimplexUniverse& u, const Tracelet& base, int i);
/// Two-step tracelets over the universe's rules whose long edge is T(r).
FiberReport two_step_fiber(const SimplexUniverse& u, const LinearRule& r);
/// Same base rule, same set of piece classes, same weighted cardinality.
bool same_fiber(const FiberReport& a, const FiberReport& b);

/// Pairs (later, earlier) of rule indices with two or more non-isomorphic
/// two-step tracelets whose outer faces are T(earlier) and T(later).
struct SegalWitness {
  int later = -1;
  int earlier = -1;
  std::vector<Tracelet> classes;
};
std::vector<SegalWitness> non_segal_witnesses(const std::vector<LinearRule>& rules);

std::string to_text(const IdentityReport& r);
std::string to_text(const FiberReport& r);

}  // namespace tracelet
