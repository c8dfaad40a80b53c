// Command-line front end: compose, inspect and normalise tracelets, compute
// in the algebra and run the invariant suites.

#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tracelet/checks.hpp"
#include "tracelet/io.hpp"

using namespace tracelet;
using io::Json;

namespace {

struct Options {
  std::string format = "text";
  std::string bounds;
  std::uint64_t seed = 1;
  std::string library;
};

struct Context {
  std::vector<NamedRule> lib;
  CheckBounds bounds;
  std::string format;
};

CheckBounds parse_bounds(const std::string& s, std::uint64_t seed) {
  CheckBounds b;
  b.seed = seed;
  if (s.empty()) return b;
  auto comma = s.find(',');
  try {
    b.size = std::stoi(s.substr(0, comma));
    if (comma != std::string::npos) b.degree = std::stoi(s.substr(comma + 1));
  } catch (const std::exception&) {
    throw PreconditionError("--bounds expects SIZE[,DEGREE], got '" + s + "'");
  }
  if (b.size <= 0 || b.degree <= 0) throw PreconditionError("--bounds must be positive");
  return b;
}

std::string rule_name(const LinearRule& r, const std::vector<NamedRule>& lib) {
  for (const auto& [name, q] : lib)
    if (rules_isomorphic(q, r)) return name;
  return "(" + std::to_string(r.output.size()) + "<-" + std::to_string(r.context.size()) + "->" +
         std::to_string(r.input.size()) + ")";
}

Json load_json_ref(const std::string& ref) {
  if (ref.rfind('@', 0) == 0) return io::parse(io::read_file(ref.substr(1)), ref.substr(1));
  return io::parse(ref, "argument");
}

Tracelet resolve_tracelet(const std::string& ref, const Context& cx) {
  if (ref == "empty") return empty_tracelet();
  if (ref == "unit" || ref == "T_∅" || ref == "T0") return trivial_tracelet();
  for (const auto& [name, r] : cx.lib)
    if (name == ref) return tracelet_of_rule(r);
  if (ref.rfind('@', 0) == 0 || ref.rfind('{', 0) == 0) {
    Json j = load_json_ref(ref);
    if (j.is_object() && j.contains("output")) return tracelet_of_rule(io::rule_from_json(j));
    return io::tracelet_from_json(j);
  }
  std::string names;
  for (const auto& [name, r] : cx.lib) names += (names.empty() ? "" : ", ") + name;
  throw PreconditionError("cannot resolve '" + ref + "': not a library rule (" + names +
                          "), 'empty', 'unit', @file or inline JSON");
}

HopfElement resolve_element(const std::string& ref, const Context& cx) {
  if (ref == "0") return HopfElement{};
  if (ref.rfind('[', 0) == 0) return io::element_from_json(io::parse(ref, "element"));
  if (ref.rfind('@', 0) == 0) {
    Json j = load_json_ref(ref);
    if (j.is_array()) return io::element_from_json(j);
    if (j.is_object() && j.contains("output")) return HopfElement::of(tracelet_of_rule(io::rule_from_json(j)));
    return HopfElement::of(io::tracelet_from_json(j));
  }
  return HopfElement::of(resolve_tracelet(ref, cx));
}

std::string describe(const Tracelet& t, const Context& cx) {
  std::ostringstream os;
  os << "length " << t.length() << ", rules [";
  for (int k = 0; k < t.length(); ++k) os << (k ? ", " : "") << rule_name(t.rule(k), cx.lib);
  os << "] (first applied first), in " << t.in().num_vertices() << "v/" << t.in().num_edges() << "e, out "
     << t.out().num_vertices() << "v/" << t.out().num_edges() << "e\n  key " << tracelet_key(t).key << "\n";
  return os.str();
}

void emit_tracelet(const Tracelet& t, const Context& cx) {
  if (cx.format == "json") {
    Json j = io::to_json(t);
    j["key"] = tracelet_key(t).key;
    std::cout << j.dump(2) << "\n";
  } else if (cx.format == "dot") {
    std::cout << io::to_dot(t);
  } else {
    std::cout << describe(t, cx);
  }
}

// Factor labels: library rule names for T(r), #k for everything else.
class Legend {
 public:
  explicit Legend(const Context& cx) {
    for (const auto& [name, r] : cx.lib) {
      auto nf = normal_form_key(tracelet_of_rule(r));
      if (nf.factors.size() == 1) known_.emplace(nf.factors[0], name);
    }
  }
  std::string label(const TraceletKey& k) {
    if (auto it = known_.find(k); it != known_.end()) return it->second;
    auto [it, fresh] = other_.emplace(k, "#" + std::to_string(other_.size()));
    if (fresh) order_.push_back(k);
    return it->second;
  }
  std::string nf(const NormalForm& x) {
    if (x.factors.empty()) return "T_∅";
    std::string s;
    for (const auto& f : x.factors) s += (s.empty() ? "" : " ⊎ ") + label(f);
    return "[" + s + "]";
  }
  std::string footer() const {
    std::string s;
    for (const auto& k : order_) s += "  " + other_.at(k) + " = " + k.key + "\n";
    return s;
  }

 private:
  std::map<TraceletKey, std::string> known_, other_;
  std::vector<TraceletKey> order_;
};

void emit_element(const HopfElement& a, const Context& cx) {
  if (cx.format == "json") {
    std::cout << io::to_json(a).dump(2) << "\n";
    return;
  }
  if (a.is_zero()) {
    std::cout << "0\n";
    return;
  }
  Legend legend(cx);
  std::string body;
  for (const auto& [x, c] : a.terms()) body += "  " + to_string(c) + " " + legend.nf(x) + "\n";
  std::cout << body << legend.footer();
}

void emit_tensor(const Tensor& t, const Context& cx) {
  if (cx.format == "json") {
    std::cout << io::to_json(t).dump(2) << "\n";
    return;
  }
  if (t.is_zero()) {
    std::cout << "0\n";
    return;
  }
  Legend legend(cx);
  std::string body;
  for (const auto& [k, c] : t.terms()) body += "  " + to_string(c) + " " + legend.nf(k.first) + " ⊗ " + legend.nf(k.second) + "\n";
  std::cout << body << legend.footer();
}

std::size_t select_overlap(const std::string& sel, std::size_t count) {
  std::size_t pos = 0;
  long long k = -1;
  try {
    k = std::stoll(sel, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != sel.size() || k < 0 || static_cast<std::size_t>(k) >= count)
    throw PreconditionError("overlap '" + sel + "' out of range: " +
                            (count ? "valid indices are 0.." + std::to_string(count - 1) : std::string("no admissible overlaps")) +
                            " (" + std::to_string(count) + " admissible overlaps) or 'all'");
  return static_cast<std::size_t>(k);
}

Tracelet corrupted_face(const Tracelet& t, int i) {
  // negative control: the last outer face answers with the first one
  return i == t.length() && i > 0 ? face(t, 0) : face(t, i);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tracelets: composition, normal forms, algebra and invariant checks"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--bounds", opt.bounds, "SIZE[,DEGREE]: vertices+edges per object, tracelet length / degree");
  app.add_option("--seed", opt.seed, "seed for sampled checks");
  app.add_option("--library", opt.library, std::string("rule library directory (default $") + io::kLibraryEnv +
                                                ", else the bundled rules)");

  std::string later, earlier, overlap = "all", ref, op, suite, fault;
  int index = 0, max_degree = 0, max_length = 0;
  bool restricted = false;
  std::string first_operand, second_operand;

  auto* compose = app.add_subcommand("compose", "compose LATER after EARLIER along admissible overlaps");
  compose->add_option("later", later)->required();
  compose->add_option("earlier", earlier)->required();
  compose->add_option("--overlap", overlap, "index or 'all'");
  auto* matches = app.add_subcommand("matches", "admissible overlaps of in(LATER) with out(EARLIER)");
  matches->add_option("later", later)->required();
  matches->add_option("earlier", earlier)->required();
  auto* evaluate_cmd = app.add_subcommand("evaluate", "composite rule of a tracelet");
  evaluate_cmd->add_option("ref", ref)->required();
  auto* face_cmd = app.add_subcommand("face", "face map d_i");
  face_cmd->add_option("ref", ref)->required();
  face_cmd->add_option("index", index)->required();
  auto* degeneracy_cmd = app.add_subcommand("degeneracy", "degeneracy map s_i");
  degeneracy_cmd->add_option("ref", ref)->required();
  degeneracy_cmd->add_option("index", index)->required();
  auto* nf_cmd = app.add_subcommand("normal-form", "primitive factorisation");
  nf_cmd->add_option("ref", ref)->required();
  nf_cmd->add_flag("--restricted", restricted, "only trivial-overlap shifts");
  auto* algebra = app.add_subcommand("algebra", "product, coproduct, antipode, commutator or counit");
  algebra->add_option("op", op)->required()->check(CLI::IsMember({"product", "coproduct", "antipode", "commutator", "counit"}));
  algebra->add_option("a", first_operand, "library rule, tracelet file, or element JSON")->required();
  algebra->add_option("b", second_operand, "second operand of product and commutator");
  auto* check = app.add_subcommand("check", "run an invariant suite; exit 0 iff everything passes");
  check->add_option("suite", suite)->required()->check(
      CLI::IsMember({"pushouts", "concurrency", "simplicial", "hopf", "normalform", "all"}));
  check->add_option("--max-degree", max_degree, "filtration degree for the algebra suite");
  check->add_option("--max-length", max_length, "tracelet length for the other suites");
  check->add_option("--fault", fault, "inject a known fault (negative control)")->check(CLI::IsMember({"face"}));
  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a tracelet or rule");
  dot->add_option("ref", ref)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    Context cx{io::resolve_library(opt.library), parse_bounds(opt.bounds, opt.seed), opt.format};
    if (compose->parsed() || matches->parsed()) {
      Tracelet l = resolve_tracelet(later, cx), e = resolve_tracelet(earlier, cx);
      auto ms = enumerate_tracelet_matches(l, e);
      if (matches->parsed()) {
        if (cx.format == "json") {
          Json out = Json::array();
          for (std::size_t k = 0; k < ms.size(); ++k) out.push_back({{"index", k}, {"overlap", io::to_json(ms[k].overlap)}});
          std::cout << out.dump(2) << "\n";
        } else {
          std::cout << ms.size() << " admissible overlaps\n";
          for (std::size_t k = 0; k < ms.size(); ++k)
            std::cout << "  " << k << ": apex " << ms[k].overlap.apex.num_vertices() << "v/" << ms[k].overlap.apex.num_edges()
                      << "e\n";
        }
        return 0;
      }
      std::vector<std::size_t> chosen;
      if (overlap == "all")
        for (std::size_t k = 0; k < ms.size(); ++k) chosen.push_back(k);
      else
        chosen.push_back(select_overlap(overlap, ms.size()));
      if (cx.format == "json") {
        Json out = Json::array();
        for (auto k : chosen) {
          Tracelet t = compose_tracelets(l, ms[k], e);
          Json tj = io::to_json(t);
          tj["key"] = tracelet_key(t).key;
          out.push_back({{"overlap", k}, {"tracelet", tj}});
        }
        std::cout << out.dump(2) << "\n";
      } else {
        for (auto k : chosen) {
          Tracelet t = compose_tracelets(l, ms[k], e);
          if (cx.format == "dot") {
            std::cout << io::to_dot(t, "overlap " + std::to_string(k));
          } else {
            std::cout << "overlap " << k << ": " << describe(t, cx);
          }
        }
      }
      return 0;
    }
    if (evaluate_cmd->parsed()) {
      LinearRule r = evaluate(resolve_tracelet(ref, cx));
      if (cx.format == "json")
        std::cout << io::to_json(r).dump(2) << "\n";
      else if (cx.format == "dot")
        std::cout << io::to_dot(r);
      else
        std::cout << "rule " << rule_name(r, cx.lib) << ": O " << r.output.debug_string() << ", K " << r.context.debug_string()
                  << ", I " << r.input.debug_string() << "\n";
      return 0;
    }
    if (face_cmd->parsed()) {
      emit_tracelet(face(resolve_tracelet(ref, cx), index), cx);
      return 0;
    }
    if (degeneracy_cmd->parsed()) {
      emit_tracelet(degeneracy(resolve_tracelet(ref, cx), index), cx);
      return 0;
    }
    if (nf_cmd->parsed()) {
      Tracelet t = resolve_tracelet(ref, cx);
      NormalForm nf = restricted ? restricted_factorization(t) : normal_form_key(t);
      if (cx.format == "json") {
        std::cout << Json{{"degree", degree(nf)}, {"factors", io::to_json(nf)}}.dump(2) << "\n";
      } else {
        Legend legend(cx);
        std::string s = legend.nf(nf);
        std::cout << "degree " << degree(nf) << ": " << s << "\n" << legend.footer();
      }
      return 0;
    }
    if (algebra->parsed()) {
      const bool binary = op == "product" || op == "commutator";
      if (binary == second_operand.empty())
        throw PreconditionError(op + " takes " + std::string(binary ? "two operands" : "one operand"));
      HopfElement a = resolve_element(first_operand, cx);
      if (op == "product") emit_element(product(a, resolve_element(second_operand, cx)), cx);
      if (op == "commutator") emit_element(commutator(a, resolve_element(second_operand, cx)), cx);
      if (op == "antipode") emit_element(antipode(a), cx);
      if (op == "coproduct") emit_tensor(coproduct(a), cx);
      if (op == "counit") {
        Rational c = counit(a);
        if (cx.format == "json")
          std::cout << Json(to_string(c)).dump() << "\n";
        else
          std::cout << to_string(c) << "\n";
      }
      return 0;
    }
    if (check->parsed()) {
      CheckBounds b = cx.bounds;
      if (suite == "hopf" && max_degree > 0) b.degree = max_degree;
      if (suite != "hopf" && max_length > 0) b.degree = max_length;
      if (suite == "all" && max_degree > 0) b.degree = max_degree;
      FaceMap d = fault == "face" ? FaceMap(corrupted_face) : FaceMap(face);
      auto reports = run_suite(suite, cx.lib, b, d);
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.passed();
      if (cx.format == "json") {
        Json suites = Json::array();
        for (const auto& r : reports) {
          Json lines = Json::array();
          for (const auto& l : r.lines)
            lines.push_back({{"check", l.name}, {"instances", l.instances}, {"failures", l.failures},
                             {"passed", l.failures == 0}, {"first_failure", l.first_failure}});
          suites.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"checks", lines}});
        }
        Json out = {{"seed", b.seed},
                    {"bounds", {{"size", b.size}, {"degree", b.degree}, {"host_vertices", b.host_vertices},
                                {"host_edges", b.host_edges}, {"samples", b.samples}}},
                    {"passed", ok},
                    {"suites", suites}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "seed " << b.seed << ", size bound " << b.size << ", degree bound " << b.degree << "\n";
        for (const auto& r : reports) std::cout << to_text(r);
        std::cout << (ok ? "all checks passed" : "some checks failed") << "\n";
      }
      return ok ? 0 : 1;
    }
    if (dot->parsed()) {
      Json j;
      if (ref.rfind('@', 0) == 0 || ref.rfind('{', 0) == 0) j = load_json_ref(ref);
      if (j.is_object() && j.contains("output"))
        std::cout << io::to_dot(io::rule_from_json(j));
      else if (j.is_object() && j.contains("vertices"))
        std::cout << io::to_dot(io::graph_from_json(j));
      else
        std::cout << io::to_dot(resolve_tracelet(ref, cx));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
