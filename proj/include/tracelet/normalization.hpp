#pragma once

#include <map>
#include <vector>

#include "tracelet/tracelet.hpp"

namespace tracelet {

bool tracelets_isomorphic(const Tracelet& a, const Tracelet& b);

/// T read as later ∘_mu earlier at the cut between X_{c-1} => X_c and
/// X_c => X_{c+1}; 1 <= cut <= length-1. The overlap is the pullback of the
/// two windows' copies of X_c.
struct Decomposition {
  Window earlier;   // steps [0, cut)
  Window later;     // steps [cut, n)
  Overlap overlap;  // in(later) <- M -> out(earlier)
};
Decomposition decompose_at(const Tracelet& t, int cut);

/// M lands inside the preserved context of both evaluations.
bool is_sequentially_independent(const Tracelet& t, int cut);
/// earlier ∘ later along the transposed overlap. Throws PreconditionError
/// unless the cut is sequentially independent.
Tracelet shift(const Tracelet& t, int cut);

/// Exchange of the blocks [a, cut) and [cut, b) inside t, the steps around
/// them kept as they are. Throws PreconditionError when the blocks interfere.
Tracelet shift_in_context(const Tracelet& t, int a, int cut, int b);
/// Steps k and k+1 may trade places: every thread both touch is preserved by
/// both, or (trivial_only) they touch no common thread.
bool can_exchange(const Tracelet& t, int k, bool trivial_only = false);
Tracelet exchange_steps(const Tracelet& t, int k);

/// Cuts whose overlap apex is empty.
std::vector<int> splitting_positions(const Tracelet& t);
/// Pieces between consecutive splitting cuts (windows of t).
std::vector<Tracelet> split_at(const Tracelet& t, const std::vector<int>& cuts);

/// Shift class of t: closure under exchanges of independent neighbouring
/// steps anywhere inside t (block shifts in any context reduce to these), or
/// of neighbours touching disjoint threads when `trivial_only`. Keyed by
/// tracelet key.
std::map<TraceletKey, Tracelet> shift_class(const Tracelet& t, bool trivial_only = false);

/// Sorted multiset of primitive factor keys; empty for the class of T_∅.
struct NormalForm {
  std::vector<TraceletKey> factors;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

/// Primitive factors under full shift equivalence. Each primitive factor is
/// named by the least key in its shift class; factors of class T_∅ are
/// dropped. Memoised; safe to call from several threads.
NormalForm primitive_factorization(const Tracelet& t);
NormalForm normal_form_key(const Tracelet& t);
/// Same factorisation when only trivial-overlap shifts are allowed.
NormalForm restricted_factorization(const Tracelet& t);
/// Every factor multiset obtained by maximally splitting some member of the
/// shift class; a single entry when maximal splittings agree.
std::vector<NormalForm> maximal_splittings(const Tracelet& t);

bool is_primitive(const Tracelet& t);
/// The piece-wise juxtaposition of the factors (T_∅ for the empty form).
Tracelet inflate(const NormalForm& nf);
std::size_t degree(const NormalForm& nf);

/// Drop all cached factorisations.
void clear_normal_form_cache();

}  // namespace tracelet
