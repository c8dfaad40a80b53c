#include "tracelet/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tracelet {

namespace {

constexpr std::size_t kMaxCounterexamples = 3;

std::vector<LinearRule> with_trivial(std::vector<LinearRule> rules) {
  bool has = false;
  for (const auto& r : rules) has = has || rules_isomorphic(r, LinearRule::trivial());
  if (!has) rules.push_back(LinearRule::trivial());
  return rules;
}

bool within(const Tracelet& t, int bound) {
  for (int c = 0; c <= t.length(); ++c)
    if (t.object(c).size() > bound) return false;
  return true;
}

std::string instance(int n, int i, int j) {
  std::ostringstream os;
  os << "n=" << n << " i=" << i;
  if (j >= 0) os << " j=" << j;
  return os.str();
}

class Tally {
 public:
  explicit Tally(IdentityReport& r) : report_(r) {}
  void record(const std::string& identity, bool ok, const std::string& where, const Tracelet& t) {
    auto it = std::find_if(report_.tallies.begin(), report_.tallies.end(),
                           [&](const IdentityTally& x) { return x.identity == identity; });
    if (it == report_.tallies.end()) {
      report_.tallies.push_back({identity, 0, 0});
      it = std::prev(report_.tallies.end());
    }
    ++it->instances;
    if (ok) return;
    ++it->failures;
    if (shown_[identity]++ < kMaxCounterexamples) report_.counterexamples.push_back({identity, where, t});
  }

 private:
  IdentityReport& report_;
  std::map<std::string, std::size_t> shown_;
};

// Preimage of an element under a mono, or -1.
int vertex_preimage(const GraphMorphism& f, int v) {
  auto it = std::find(f.vmap.begin(), f.vmap.end(), v);
  return it == f.vmap.end() ? -1 : static_cast<int>(it - f.vmap.begin());
}

int edge_preimage(const GraphMorphism& f, int e) {
  auto it = std::find(f.emap.begin(), f.emap.end(), e);
  return it == f.emap.end() ? -1 : static_cast<int>(it - f.emap.begin());
}

// Follow an element of the last result back through glued steps to their
// common host. Returns -1 once it leaves the complements.
int trace_back_vertex(const std::vector<DirectDerivation>& steps, int v) {
  for (auto it = steps.rbegin(); it != steps.rend() && v >= 0; ++it) {
    int d = vertex_preimage(it->complement_out, v);
    v = d < 0 ? -1 : it->complement_in.vertex(d);
  }
  return v;
}

int trace_back_edge(const std::vector<DirectDerivation>& steps, int e) {
  for (auto it = steps.rbegin(); it != steps.rend() && e >= 0; ++it) {
    int d = edge_preimage(it->complement_out, e);
    e = d < 0 ? -1 : it->complement_in.edge(d);
  }
  return e;
}

}  // namespace

bool IdentityReport::passed() const {
  for (const auto& t : tallies)
    if (t.failures) return false;
  return true;
}

std::size_t IdentityReport::instances() const {
  std::size_t n = 0;
  for (const auto& t : tallies) n += t.instances;
  return n;
}

std::vector<std::vector<Tracelet>> simplices(const SimplexUniverse& u) {
  if (u.size_bound < 0 || u.degree_bound < 0) throw PreconditionError("simplex universe bounds must be nonnegative");
  auto levels = enumerate_tracelets(with_trivial(u.rules), u.degree_bound);
  for (auto& level : levels)
    level.erase(std::remove_if(level.begin(), level.end(), [&](const Tracelet& t) { return !within(t, u.size_bound); }),
                level.end());
  return levels;
}

IdentityReport check_simplicial_identities(const SimplexUniverse& u, const FaceMap& d, const FaceMap& s) {
  IdentityReport report;
  Tally tally(report);
  auto key = [](const Tracelet& t) { return tracelet_key(t); };
  for (const auto& level : simplices(u))
    for (const auto& t : level) {
      const int n = t.length();
      const TraceletKey self = key(t);
      for (int j = 0; j <= n; ++j) {
        Tracelet sj = s(t, j);
        tally.record("d_j s_j = id", key(d(sj, j)) == self, instance(n, j, -1), t);
        tally.record("d_{j+1} s_j = id", key(d(sj, j + 1)) == self, instance(n, j, -1), t);
        for (int i = 0; i < j && n >= 1; ++i)
          tally.record("d_i s_j = s_{j-1} d_i", key(d(sj, i)) == key(s(d(t, i), j - 1)), instance(n, i, j), t);
        for (int i = j + 2; i <= n + 1 && n >= 1; ++i)
          tally.record("d_i s_j = s_j d_{i-1}", key(d(sj, i)) == key(s(d(t, i - 1), j)), instance(n, i, j), t);
        for (int i = 0; i <= j; ++i)
          tally.record("s_i s_j = s_{j+1} s_i", key(s(sj, i)) == key(s(s(t, i), j + 1)), instance(n, i, j), t);
      }
      if (n >= 2)
        for (int j = 1; j <= n; ++j) {
          Tracelet dj = d(t, j);
          for (int i = 0; i < j; ++i)
            tally.record("d_i d_j = d_{j-1} d_i", key(d(dj, i)) == key(d(d(t, i), j - 1)), instance(n, i, j), t);
        }
    }
  return report;
}

std::optional<Tracelet> reconstruct_from_mould(const Tracelet& base, const std::vector<Tracelet>& pieces) {
  if (static_cast<int>(pieces.size()) != base.length())
    throw PreconditionError("mould: need one piece per step of the base");
  Tracelet out;
  for (int k = 0; k < base.length(); ++k) {
    const Tracelet& piece = pieces[static_cast<std::size_t>(k)];
    if (piece.length() == 0) throw PreconditionError("mould: piece " + std::to_string(k) + " is empty");
    auto iso = rule_isomorphism(evaluate(piece), base.rule(k));
    if (!iso) throw PreconditionError("mould: piece " + std::to_string(k) + " does not evaluate to the base rule");
    const DirectDerivation& host = base.steps[static_cast<std::size_t>(k)];
    std::vector<DirectDerivation> glued;
    GraphMorphism e = compose(host.match, iso->input);
    for (const auto& ps : piece.steps) {
      auto ext = extend(ps, e);
      if (!ext) return std::nullopt;
      glued.push_back(std::move(ext->step));
      e = std::move(ext->embedding);
    }
    // Identify the last result with X_{k+1}: elements from the piece's output
    // go through the rule iso and the comatch, the rest through the base
    // complement.
    const Graph& z = glued.back().result();
    const GraphMorphism out_side = compose(host.comatch, iso->output);
    GraphMorphism to_base{z, host.result(), std::vector<int>(static_cast<std::size_t>(z.num_vertices()), -1),
                          std::vector<int>(static_cast<std::size_t>(z.num_edges()), -1)};
    for (int v = 0; v < z.num_vertices(); ++v) {
      int p = vertex_preimage(e, v);
      if (p >= 0) {
        to_base.vmap[static_cast<std::size_t>(v)] = out_side.vertex(p);
        continue;
      }
      int x = trace_back_vertex(glued, v);
      int dd = x < 0 ? -1 : vertex_preimage(host.complement_in, x);
      if (dd < 0) throw StructuralError("mould: context vertex lost while gluing");
      to_base.vmap[static_cast<std::size_t>(v)] = host.complement_out.vertex(dd);
    }
    for (int f = 0; f < z.num_edges(); ++f) {
      int p = edge_preimage(e, f);
      if (p >= 0) {
        to_base.emap[static_cast<std::size_t>(f)] = out_side.edge(p);
        continue;
      }
      int x = trace_back_edge(glued, f);
      int dd = x < 0 ? -1 : edge_preimage(host.complement_in, x);
      if (dd < 0) throw StructuralError("mould: context edge lost while gluing");
      to_base.emap[static_cast<std::size_t>(f)] = host.complement_out.edge(dd);
    }
    validate(to_base);
    if (!is_iso(to_base)) throw StructuralError("mould: glued result is not the base object");
    auto& last = glued.back();
    last.comatch = compose(to_base, last.comatch);
    last.complement_out = compose(to_base, last.complement_out);
    for (auto& g : glued) out.steps.push_back(std::move(g));
  }
  validate(out);
  return out;
}

Tracelet collapse(const Tracelet& t, const std::vector<int>& block_lengths) {
  int total = 0;
  for (int l : block_lengths) {
    if (l < 1) throw PreconditionError("collapse: block lengths must be positive");
    total += l;
  }
  if (total != t.length()) throw PreconditionError("collapse: block lengths do not sum to the length");
  Tracelet cur = t;
  int a = 0;
  for (int l : block_lengths) {
    for (int m = 1; m < l; ++m) cur = face(cur, cur.length() - a - 1);
    ++a;
  }
  return cur;
}

std::vector<Tracelet> blocks(const Tracelet& t, const std::vector<int>& block_lengths) {
  std::vector<Tracelet> out;
  int a = 0;
  for (int l : block_lengths) {
    out.push_back(window(t, a, a + l).tracelet);
    a += l;
  }
  if (a != t.length()) throw PreconditionError("blocks: block lengths do not sum to the length");
  return out;
}

namespace {

void compositions(int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int l = 1; l <= n; ++l) {
    cur.push_back(l);
    compositions(n - l, cur, out);
    cur.pop_back();
  }
}

}  // namespace

MouldReport check_mould_bijection(const SimplexUniverse& u) {
  MouldReport report;
  auto fail = [&](const std::string& what, const std::vector<int>& split, const Tracelet& t) {
    ++report.failures;
    std::ostringstream os;
    os << "blocks";
    for (int l : split) os << ' ' << l;
    if (report.counterexamples.size() < kMaxCounterexamples) report.counterexamples.push_back({what, os.str(), t});
  };
  for (const auto& level : simplices(u))
    for (const auto& t : level) {
      if (t.length() == 0) continue;
      std::vector<std::vector<int>> splits;
      std::vector<int> cur;
      compositions(t.length(), cur, splits);
      for (const auto& split : splits) {
        ++report.instances;
        Tracelet base = collapse(t, split);
        auto pieces = blocks(t, split);
        auto glued = reconstruct_from_mould(base, pieces);
        if (!glued) {
          fail("glue after project", split, t);
          continue;
        }
        if (tracelet_key(*glued) != tracelet_key(t)) fail("glue after project", split, t);
        if (tracelet_key(collapse(*glued, split)) != tracelet_key(base)) fail("collapse after glue", split, t);
        auto again = blocks(*glued, split);
        for (std::size_t k = 0; k < pieces.size(); ++k)
          if (tracelet_key(again[k]) != tracelet_key(pieces[k])) fail("project after glue", split, t);
      }
    }
  return report;
}

namespace {

std::uint64_t aut(const Tracelet& t) { return automorphism_count(diagram_of(t)); }

// One entry per piece class; a rigid context can split a class over several
// fiber objects, whose weights add up.
void finish(FiberReport& r) {
  std::map<TraceletKey, FiberEntry> by_piece;
  for (auto& e : r.entries) {
    auto [it, fresh] = by_piece.emplace(e.piece, e);
    if (!fresh) it->second.weight += e.weight;
  }
  r.entries.clear();
  r.weighted_cardinality = 0;
  for (auto& [k, e] : by_piece) {
    r.weighted_cardinality += e.weight;
    r.entries.push_back(std::move(e));
  }
}

std::set<CanonicalKey> rule_keys(const std::vector<LinearRule>& rules) {
  std::set<CanonicalKey> out;
  for (const auto& r : rules) out.insert(canonical_key(r));
  return out;
}

}  // namespace

FiberReport fiber_of_inner_face(const SimplexUniverse& u, const Tracelet& base, int i) {
  const int n = base.length() + 1;
  if (i <= 0 || i >= n) throw PreconditionError("fiber: face index must be inner");
  const int j = n - i - 1;
  FiberReport report;
  report.base_rule = canonical_key(base.rule(j));
  report.size_bound = u.size_bound;
  const std::vector<LinearRule> merged_rules = with_trivial(u.rules);
  const auto merged_keys = rule_keys(merged_rules);
  std::vector<LinearRule> all = merged_rules;
  for (const auto& s : base.steps) all.push_back(s.rule);
  std::set<CanonicalKey> seen;
  std::vector<LinearRule> distinct;
  for (const auto& r : all)
    if (seen.insert(canonical_key(r)).second) distinct.push_back(r);
  const TraceletKey base_key = tracelet_key(base);
  const Rational base_aut(aut(base));
  auto levels = enumerate_tracelets(distinct, n);
  for (const auto& t : levels.back()) {
    if (!merged_keys.count(canonical_key(t.rule(j))) || !merged_keys.count(canonical_key(t.rule(j + 1)))) continue;
    Tracelet piece = window(t, j, j + 2).tracelet;
    if (!within(piece, u.size_bound)) continue;
    if (tracelet_key(face(t, i)) != base_key) continue;
    report.entries.push_back({tracelet_key(piece), aut(piece), base_aut / Rational(aut(t))});
  }
  finish(report);
  return report;
}

FiberReport two_step_fiber(const SimplexUniverse& u, const LinearRule& r) {
  FiberReport report;
  report.base_rule = canonical_key(r);
  report.size_bound = u.size_bound;
  Tracelet single = tracelet_of_rule(r);
  const TraceletKey target = tracelet_key(single);
  const Rational single_aut(aut(single));
  auto levels = enumerate_tracelets(with_trivial(u.rules), 2);
  for (const auto& t : levels.back()) {
    if (!within(t, u.size_bound)) continue;
    if (tracelet_key(face(t, 1)) != target) continue;
    std::uint64_t a = aut(t);
    report.entries.push_back({tracelet_key(t), a, single_aut / Rational(a)});
  }
  finish(report);
  return report;
}

bool same_fiber(const FiberReport& a, const FiberReport& b) {
  std::set<TraceletKey> pa, pb;
  for (const auto& e : a.entries) pa.insert(e.piece);
  for (const auto& e : b.entries) pb.insert(e.piece);
  return a.base_rule == b.base_rule && pa == pb && a.weighted_cardinality == b.weighted_cardinality;
}

std::vector<SegalWitness> non_segal_witnesses(const std::vector<LinearRule>& rules) {
  std::vector<SegalWitness> out;
  for (int later = 0; later < static_cast<int>(rules.size()); ++later)
    for (int earlier = 0; earlier < static_cast<int>(rules.size()); ++earlier) {
      Tracelet tl = tracelet_of_rule(rules[static_cast<std::size_t>(later)]);
      Tracelet te = tracelet_of_rule(rules[static_cast<std::size_t>(earlier)]);
      const TraceletKey kl = tracelet_key(tl), ke = tracelet_key(te);
      std::map<TraceletKey, Tracelet> classes;
      for (const auto& m : enumerate_tracelet_matches(tl, te)) {
        Tracelet t = compose_tracelets(tl, m, te);
        // d_0 keeps the earlier step, d_2 the later one
        if (tracelet_key(face(t, 0)) != ke || tracelet_key(face(t, 2)) != kl) continue;
        classes.emplace(tracelet_key(t), t);
      }
      if (classes.size() < 2) continue;
      SegalWitness w{later, earlier, {}};
      for (auto& [k, t] : classes) w.classes.push_back(std::move(t));
      out.push_back(std::move(w));
    }
  return out;
}

std::string to_text(const IdentityReport& r) {
  std::ostringstream os;
  for (const auto& t : r.tallies)
    os << (t.failures ? "FAIL " : "ok   ") << t.identity << ": " << t.instances << " instances, " << t.failures
       << " failures\n";
  for (const auto& c : r.counterexamples)
    os << "  counterexample " << c.identity << " at " << c.instance << " (length " << c.tracelet.length() << ")\n";
  os << (r.passed() ? "pass" : "fail") << ", " << r.instances() << " instances\n";
  return os.str();
}

std::string to_text(const FiberReport& r) {
  std::ostringstream os;
  os << "fiber over rule, size bound " << r.size_bound << ": " << r.entries.size() << " classes, weighted cardinality "
     << to_string(r.weighted_cardinality) << "\n";
  for (const auto& e : r.entries) os << "  |Aut| = " << e.automorphisms << ", weight " << to_string(e.weight) << "\n";
  return os.str();
}

}  // namespace tracelet
