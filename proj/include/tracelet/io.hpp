#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "tracelet/hopf.hpp"
#include "tracelet/library.hpp"
#include "tracelet/simplicial.hpp"

namespace tracelet::io {

using Json = nlohmann::json;

// JSON shapes (element ids are strings):
//   graph     {"vertices": ["v0", ...], "edges": [{"id": "e0", "src": "v0", "tgt": "v1"}, ...]}
//   morphism  {"vertices": {"v0": "v3", ...}, "edges": {"e0": "e2", ...}}, ids of source and target
//   rule      {"output": g, "context": g, "input": g, "o": m, "i": m}
//   tracelet  {"objects": [X_0, ..., X_n], "steps": [{"rule", "complement", "match",
//             "context_map", "complement_in", "complement_out", "comatch"}, ...]}
//             or the compact {"key": "<canonical key>"}
//   element   [[[factor keys], "p/q"], ...] sorted by normal form
//   tensor    [[[left keys], [right keys], "p/q"], ...]
// Serialisers name vertex k "v<k>" and edge k "e<k>"; parsers accept any
// distinct strings and number them in listed order.

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Json to_json(const GraphMorphism& f);
GraphMorphism morphism_from_json(const Json& j, const Json& source, const Json& target);
Json to_json(const LinearRule& r);
LinearRule rule_from_json(const Json& j);
Json to_json(const Tracelet& t);
Json to_compact_json(const Tracelet& t);
/// Accepts both the full and the compact form.
Tracelet tracelet_from_json(const Json& j);
Json to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const Json& j);
Json to_json(const HopfElement& a);
HopfElement element_from_json(const Json& j);
Json to_json(const Tensor& t);
Json to_json(const Overlap& mu);

Json to_json(const IdentityReport& r);
Json to_json(const MouldReport& r);
Json to_json(const FiberReport& r);
Json to_json(const SegalWitness& w, const std::vector<NamedRule>& rules);

/// Parse text as JSON; errors become PreconditionError naming the byte offset.
Json parse(const std::string& text, const std::string& what);
std::string read_file(const std::filesystem::path& p);

std::string to_dot(const Graph& g, const std::string& name = "G");
std::string to_dot(const LinearRule& r, const std::string& name = "rule");
std::string to_dot(const Tracelet& t, const std::string& name = "tracelet");

/// Environment variable naming the default rule library directory.
inline constexpr const char* kLibraryEnv = "TRACELET_LIBRARY";

/// Every *.json file of the directory, in file-name order. A file holds one
/// rule with a "name" field, or {"rules": [...]} of such rules.
std::vector<NamedRule> load_library(const std::filesystem::path& dir);
/// The given directory, else $TRACELET_LIBRARY, else the bundled library.
std::vector<NamedRule> resolve_library(const std::string& dir);
Json to_json(const NamedRule& r);

}  // namespace tracelet::io
