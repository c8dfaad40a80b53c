#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tracelet/rewriting.hpp"

namespace tracelet {

// Bundled rules. Undirected examples are encoded with one directed edge per
// undirected edge, oriented from the lower to the higher vertex id.
LinearRule vertex_creation();   // • <- ∅ -> ∅
LinearRule vertex_deletion();   // ∅ <- ∅ -> •
LinearRule edge_creation();     // edge <- •• -> ••
LinearRule edge_deletion();     // •• <- •• -> edge

using NamedRule = std::pair<std::string, LinearRule>;

/// "rv+", "rv-", "re+", "re-" and "trivial", in that order.
std::vector<NamedRule> bundled_library();
/// The four non-trivial bundled rules.
std::vector<LinearRule> bundled_rules();

}  // namespace tracelet
