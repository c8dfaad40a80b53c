#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tracelet/canonical.hpp"
#include "tracelet/constructions.hpp"
#include "tracelet/graph.hpp"

namespace tracelet {

/// Span of monos O <-o- K -i-> I.
struct LinearRule {
  Graph output;
  Graph context;
  Graph input;
  GraphMorphism o;  // K -> O
  GraphMorphism i;  // K -> I

  static LinearRule trivial();
  /// Builds and validates; throws StructuralError unless both legs are monos.
  static LinearRule make(GraphMorphism o, GraphMorphism i);
  /// The rule read against its direction: I <- K -> O.
  LinearRule reversed() const { return make(i, o); }

  friend bool operator==(const LinearRule&, const LinearRule&) = default;
};

void validate(const LinearRule& r);
Diagram diagram_of(const LinearRule& r);
CanonicalKey canonical_key(const LinearRule& r);
/// Relabelled copy in canonical form, so equal rules serialise identically.
LinearRule canonicalize(const LinearRule& r);
bool rules_isomorphic(const LinearRule& a, const LinearRule& b);
/// Rebuild a rule from a canonical rule diagram (objects O, K, I).
LinearRule rule_from_diagram(const Diagram& d);

enum class Orientation { kForward, kReverse };

/// One DPO step X <- D -> Y along a rule, carrying both squares:
///   O <-o- K -i-> I
///   |c     |k     |m
///   Y <-q- D -p-> X
struct DirectDerivation {
  LinearRule rule;
  GraphMorphism match;        // I -> X
  Graph complement;           // D
  GraphMorphism context_map;  // K -> D
  GraphMorphism complement_in;   // D -> X
  GraphMorphism complement_out;  // D -> Y
  GraphMorphism comatch;         // O -> Y
  Orientation orientation = Orientation::kForward;

  const Graph& host() const { return match.target; }
  const Graph& result() const { return comatch.target; }
  /// Same diagram read from Y to X along the reversed rule.
  DirectDerivation reversed() const;

  friend bool operator==(const DirectDerivation&, const DirectDerivation&) = default;
};

/// Both squares commute and are pushouts; throws StructuralError otherwise.
void validate(const DirectDerivation& d);
bool is_valid(const DirectDerivation& d);
Diagram diagram_of(const DirectDerivation& d);
CanonicalKey canonical_key(const DirectDerivation& d);

/// DPO step along a mono match; nullopt when the dangling condition fails.
std::optional<DirectDerivation> apply_rule(const LinearRule& r, const GraphMorphism& m);
/// DPO† step: the rule applied against its direction along a comatch O -> Y.
std::optional<DirectDerivation> apply_rule_reverse(const LinearRule& r, const GraphMorphism& comatch);

std::vector<GraphMorphism> enumerate_matches(const LinearRule& r, const Graph& x);

/// Re-run a step on a larger host: given `d` on X and a mono e: X -> H, apply
/// the same rule along e∘match. On success also returns the induced mono
/// d.result() -> new result.
struct Extension {
  DirectDerivation step;
  GraphMorphism embedding;
};
std::optional<Extension> extend(const DirectDerivation& d, const GraphMorphism& e);

/// Span of monos I_B <-left- M -right-> O_A.
struct Overlap {
  Graph apex;
  GraphMorphism left;
  GraphMorphism right;
  friend bool operator==(const Overlap&, const Overlap&) = default;
};

Overlap empty_overlap(const Graph& left_target, const Graph& right_target);
/// One representative per span-isomorphism class of spans of monos
/// A <- M -> B: M ranges over subgraphs of A (left leg an inclusion), right
/// over all monos M -> B. Deterministic order.
std::vector<Overlap> enumerate_spans(const Graph& a, const Graph& b);
Diagram diagram_of(const Overlap& mu);
bool spans_isomorphic(const Overlap& x, const Overlap& y);

/// Two-step gluing: the pushout Y of mu, the DPO step of rB on Y and the
/// DPO† step of rA on Y, so that in(rA-side) =: X0 => Y => X2.
struct RuleComposition {
  Square gluing;              // I_B -> Y <- O_A
  DirectDerivation first;     // rA: X0 => Y
  DirectDerivation second;    // rB: Y => X2
  LinearRule composite;       // X2 <- K -> X0, not canonicalised
};
std::optional<RuleComposition> glue_rules(const LinearRule& rb, const Overlap& mu, const LinearRule& ra);

std::vector<Overlap> enumerate_rule_overlaps(const LinearRule& rb, const LinearRule& ra);
/// Composite rule of rB after rA along mu, canonicalised. Throws
/// PreconditionError for an inadmissible overlap.
LinearRule compose_rules(const LinearRule& rb, const Overlap& mu, const LinearRule& ra);

/// Span composition (Y <- P -> X) of (Y <- D2 -> Z) after (Z <- D1 -> X) via
/// pullback over Z. Each span is given as (to_left, to_right) with to_left
/// landing in the later object.
struct Span {
  GraphMorphism to_out;
  GraphMorphism to_in;
};
Span compose_spans(const Span& later, const Span& earlier);

/// Concurrency theorem, analysis direction: the derivation `dd` along
/// r ≅ rB ∘_mu rA splits into X =>_{rA} Z =>_{rB} Y.
struct TwoStep {
  DirectDerivation first;   // rA on X
  DirectDerivation second;  // rB on Z
};
TwoStep analyze_derivation(const LinearRule& r, const LinearRule& rb, const LinearRule& ra,
                           const Overlap& mu, const DirectDerivation& dd);

/// Concurrency theorem, synthesis direction: the overlap induced by a
/// two-step sequence and the one-step derivation along the composite rule.
struct Synthesis {
  Overlap overlap;
  DirectDerivation derivation;
};
Synthesis synthesize(const DirectDerivation& first, const DirectDerivation& second);

/// Some isomorphism of rules a -> b as (O, K, I) component isos, if any.
struct RuleIso {
  GraphMorphism output;
  GraphMorphism context;
  GraphMorphism input;
};
std::optional<RuleIso> rule_isomorphism(const LinearRule& a, const LinearRule& b);

}  // namespace tracelet
