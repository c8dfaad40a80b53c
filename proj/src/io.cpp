#include "tracelet/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace tracelet::io {

namespace {

std::string vname(int k) { return "v" + std::to_string(k); }
std::string ename(int k) { return "e" + std::to_string(k); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw PreconditionError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string id_of(const Json& x, const char* what) {
  if (!x.is_string()) throw PreconditionError(std::string(what) + " ids must be strings");
  return x.get<std::string>();
}

struct Names {
  std::map<std::string, int> vertex, edge;
};

Names names_of(const Json& g) {
  Names n;
  for (const auto& v : field(g, "vertices")) {
    auto id = id_of(v, "vertex");
    if (!n.vertex.emplace(id, static_cast<int>(n.vertex.size())).second)
      throw PreconditionError("duplicate vertex id '" + id + "'");
  }
  int k = 0;
  for (const auto& e : field(g, "edges")) {
    auto id = e.contains("id") ? id_of(e.at("id"), "edge") : ename(k);
    if (!n.edge.emplace(id, k).second) throw PreconditionError("duplicate edge id '" + id + "'");
    ++k;
  }
  return n;
}

int lookup(const std::map<std::string, int>& m, const std::string& id, const char* what) {
  auto it = m.find(id);
  if (it == m.end()) throw PreconditionError(std::string("unknown ") + what + " '" + id + "'");
  return it->second;
}

std::string key_text(const TraceletKey& k) { return k.key; }

}  // namespace

Json to_json(const Graph& g) {
  Json vs = Json::array(), es = Json::array();
  for (int v = 0; v < g.num_vertices(); ++v) vs.push_back(vname(v));
  for (int e = 0; e < g.num_edges(); ++e)
    es.push_back({{"id", ename(e)}, {"src", vname(g.edge(e).src)}, {"tgt", vname(g.edge(e).tgt)}});
  return {{"vertices", vs}, {"edges", es}};
}

Graph graph_from_json(const Json& j) {
  Names n = names_of(j);
  Graph g(static_cast<int>(n.vertex.size()));
  for (const auto& e : field(j, "edges"))
    g.add_edge(lookup(n.vertex, id_of(field(e, "src"), "vertex"), "vertex"),
               lookup(n.vertex, id_of(field(e, "tgt"), "vertex"), "vertex"));
  return g;
}

Json to_json(const GraphMorphism& f) {
  Json vs = Json::object(), es = Json::object();
  for (std::size_t v = 0; v < f.vmap.size(); ++v) vs[vname(static_cast<int>(v))] = vname(f.vmap[v]);
  for (std::size_t e = 0; e < f.emap.size(); ++e) es[ename(static_cast<int>(e))] = ename(f.emap[e]);
  return {{"vertices", vs}, {"edges", es}};
}

GraphMorphism morphism_from_json(const Json& j, const Json& source, const Json& target) {
  Names s = names_of(source), t = names_of(target);
  GraphMorphism f{graph_from_json(source), graph_from_json(target),
                  std::vector<int>(s.vertex.size(), -1), std::vector<int>(s.edge.size(), -1)};
  for (const auto& [from, to] : field(j, "vertices").items())
    f.vmap[static_cast<std::size_t>(lookup(s.vertex, from, "vertex"))] = lookup(t.vertex, id_of(to, "vertex"), "vertex");
  for (const auto& [from, to] : field(j, "edges").items())
    f.emap[static_cast<std::size_t>(lookup(s.edge, from, "edge"))] = lookup(t.edge, id_of(to, "edge"), "edge");
  if (std::count(f.vmap.begin(), f.vmap.end(), -1) || std::count(f.emap.begin(), f.emap.end(), -1))
    throw PreconditionError("morphism is not total");
  validate(f);
  return f;
}

Json to_json(const LinearRule& r) {
  return {{"output", to_json(r.output)}, {"context", to_json(r.context)}, {"input", to_json(r.input)},
          {"o", to_json(r.o)},           {"i", to_json(r.i)}};
}

LinearRule rule_from_json(const Json& j) {
  const Json& k = field(j, "context");
  return LinearRule::make(morphism_from_json(field(j, "o"), k, field(j, "output")),
                          morphism_from_json(field(j, "i"), k, field(j, "input")));
}

Json to_json(const Tracelet& t) {
  Json objects = Json::array(), steps = Json::array();
  for (int c = 0; c <= t.length(); ++c) objects.push_back(to_json(t.object(c)));
  for (const auto& s : t.steps)
    steps.push_back({{"rule", to_json(s.rule)},
                     {"complement", to_json(s.complement)},
                     {"match", to_json(s.match)},
                     {"context_map", to_json(s.context_map)},
                     {"complement_in", to_json(s.complement_in)},
                     {"complement_out", to_json(s.complement_out)},
                     {"comatch", to_json(s.comatch)}});
  return {{"objects", objects}, {"steps", steps}};
}

Json to_compact_json(const Tracelet& t) { return {{"key", key_text(tracelet_key(t))}}; }

Tracelet tracelet_from_json(const Json& j) {
  if (j.is_object() && j.contains("key")) {
    if (!j.at("key").is_string()) throw PreconditionError("tracelet key must be a string");
    try {
      return decode_tracelet(TraceletKey{j.at("key").get<std::string>()});
    } catch (const StructuralError& e) {
      throw PreconditionError(std::string("bad tracelet key: ") + e.what());
    }
  }
  const Json& objects = field(j, "objects");
  const Json& steps = field(j, "steps");
  if (!objects.is_array() || !steps.is_array() || objects.size() != steps.size() + 1)
    throw PreconditionError("tracelet needs one more object than steps");
  Tracelet t;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const Json& s = steps[k];
    const Json& rj = field(s, "rule");
    const Json& d = field(s, "complement");
    t.steps.push_back(DirectDerivation{rule_from_json(rj),
                                       morphism_from_json(field(s, "match"), field(rj, "input"), objects[k]),
                                       graph_from_json(d),
                                       morphism_from_json(field(s, "context_map"), field(rj, "context"), d),
                                       morphism_from_json(field(s, "complement_in"), d, objects[k]),
                                       morphism_from_json(field(s, "complement_out"), d, objects[k + 1]),
                                       morphism_from_json(field(s, "comatch"), field(rj, "output"), objects[k + 1]),
                                       Orientation::kForward});
  }
  validate(t);
  return t;
}

Json to_json(const NormalForm& nf) {
  Json out = Json::array();
  for (const auto& f : nf.factors) out.push_back(key_text(f));
  return out;
}

NormalForm normal_form_from_json(const Json& j) {
  if (!j.is_array()) throw PreconditionError("normal form must be an array of keys");
  NormalForm nf;
  for (const auto& k : j) nf.factors.push_back(TraceletKey{id_of(k, "factor")});
  std::sort(nf.factors.begin(), nf.factors.end());
  return nf;
}

Json to_json(const HopfElement& a) {
  Json out = Json::array();
  for (const auto& [nf, c] : a.terms()) out.push_back({to_json(nf), to_string(c)});
  return out;
}

HopfElement element_from_json(const Json& j) {
  if (!j.is_array()) throw PreconditionError("element must be an array of [factors, coefficient] pairs");
  HopfElement a;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[1].is_string())
      throw PreconditionError("element term must be [factors, \"p/q\"]");
    a.add(normal_form_from_json(term[0]), parse_rational(term[1].get<std::string>()));
  }
  return a;
}

Json to_json(const Tensor& t) {
  Json out = Json::array();
  for (const auto& [k, c] : t.terms()) out.push_back({to_json(k.first), to_json(k.second), to_string(c)});
  return out;
}

Json to_json(const Overlap& mu) {
  return {{"apex", to_json(mu.apex)}, {"left", to_json(mu.left)}, {"right", to_json(mu.right)}};
}

namespace {

Json counterexamples(const std::vector<Counterexample>& cs) {
  Json out = Json::array();
  for (const auto& c : cs)
    out.push_back({{"identity", c.identity}, {"instance", c.instance}, {"tracelet", to_json(c.tracelet)}});
  return out;
}

}  // namespace

Json to_json(const IdentityReport& r) {
  Json ids = Json::array();
  for (const auto& t : r.tallies)
    ids.push_back({{"identity", t.identity}, {"instances", t.instances}, {"failures", t.failures}, {"passed", t.failures == 0}});
  return {{"passed", r.passed()}, {"instances", r.instances()}, {"identities", ids},
          {"counterexamples", counterexamples(r.counterexamples)}};
}

Json to_json(const MouldReport& r) {
  return {{"passed", r.failures == 0}, {"instances", r.instances}, {"failures", r.failures},
          {"counterexamples", counterexamples(r.counterexamples)}};
}

Json to_json(const FiberReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"piece", key_text(e.piece)}, {"automorphisms", e.automorphisms}, {"weight", to_string(e.weight)}});
  return {{"base_rule", r.base_rule.key}, {"size_bound", r.size_bound}, {"entries", entries},
          {"weighted_cardinality", to_string(r.weighted_cardinality)}};
}

Json to_json(const SegalWitness& w, const std::vector<NamedRule>& rules) {
  Json classes = Json::array();
  for (const auto& t : w.classes) classes.push_back(to_compact_json(t));
  return {{"later", rules.at(static_cast<std::size_t>(w.later)).first},
          {"earlier", rules.at(static_cast<std::size_t>(w.earlier)).first},
          {"classes", classes}};
}

Json parse(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw PreconditionError(what + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw PreconditionError("cannot read '" + p.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace {

void dot_nodes(std::ostringstream& os, const Graph& g, const std::string& prefix, const std::string& indent) {
  for (int v = 0; v < g.num_vertices(); ++v) os << indent << prefix << v << " [label=\"" << v << "\"];\n";
  for (int e = 0; e < g.num_edges(); ++e)
    os << indent << prefix << g.edge(e).src << " -> " << prefix << g.edge(e).tgt << " [label=\"e" << e << "\"];\n";
}

void dot_cluster(std::ostringstream& os, const Graph& g, const std::string& prefix, const std::string& label) {
  os << "  subgraph cluster_" << prefix << " {\n    label=\"" << label << "\";\n";
  if (g.empty()) os << "    " << prefix << "_empty [label=\"∅\", shape=plaintext];\n";
  dot_nodes(os, g, prefix, "    ");
  os << "  }\n";
}

void dot_map(std::ostringstream& os, const GraphMorphism& f, const std::string& from, const std::string& to) {
  for (std::size_t v = 0; v < f.vmap.size(); ++v)
    os << "  " << from << v << " -> " << to << f.vmap[v] << " [style=dashed, color=gray];\n";
}

}  // namespace

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  dot_nodes(os, g, "v", "  ");
  os << "}\n";
  return os.str();
}

std::string to_dot(const LinearRule& r, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=LR;\n";
  dot_cluster(os, r.output, "O", "O");
  dot_cluster(os, r.context, "K", "K");
  dot_cluster(os, r.input, "I", "I");
  dot_map(os, r.o, "K", "O");
  dot_map(os, r.i, "K", "I");
  os << "}\n";
  return os.str();
}

std::string to_dot(const Tracelet& t, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=LR;\n";
  for (int c = 0; c <= t.length(); ++c) dot_cluster(os, t.object(c), "X" + std::to_string(c) + "_", "X" + std::to_string(c));
  // carried elements, step by step
  for (int k = 0; k < t.length(); ++k) {
    const auto& s = t.steps[static_cast<std::size_t>(k)];
    for (int d = 0; d < s.complement.num_vertices(); ++d)
      os << "  X" << k << "_" << s.complement_in.vertex(d) << " -> X" << k + 1 << "_" << s.complement_out.vertex(d)
         << " [style=dotted, color=gray];\n";
  }
  os << "}\n";
  return os.str();
}

Json to_json(const NamedRule& r) {
  Json j = to_json(r.second);
  j["name"] = r.first;
  return j;
}

std::vector<NamedRule> load_library(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw PreconditionError("library '" + dir.string() + "' is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<NamedRule> out;
  for (const auto& f : files) {
    Json j = parse(read_file(f), f.string());
    std::vector<Json> rules;
    if (j.is_object() && j.contains("rules"))
      for (const auto& r : j.at("rules")) rules.push_back(r);
    else
      rules.push_back(j);
    for (const auto& r : rules) {
      try {
        out.emplace_back(id_of(field(r, "name"), "rule name"), rule_from_json(r));
      } catch (const std::exception& e) {
        throw PreconditionError(f.string() + ": " + e.what());
      }
    }
  }
  return out;
}

std::vector<NamedRule> resolve_library(const std::string& dir) {
  if (!dir.empty()) return load_library(dir);
  if (const char* env = std::getenv(kLibraryEnv); env && *env) return load_library(env);
  return bundled_library();
}

}  // namespace tracelet::io
