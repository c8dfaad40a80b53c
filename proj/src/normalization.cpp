#include "tracelet/normalization.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>

namespace tracelet {

namespace {

std::mutex cache_mutex;
// index 0: full shifts, 1: trivial-overlap shifts only
std::map<TraceletKey, NormalForm>& cache(bool trivial_only) {
  static std::map<TraceletKey, NormalForm> c[2];
  return c[trivial_only ? 1 : 0];
}

std::optional<NormalForm> cached(const TraceletKey& k, bool trivial_only) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache(trivial_only).find(k);
  if (it == cache(trivial_only).end()) return std::nullopt;
  return it->second;
}

void remember(const TraceletKey& k, const NormalForm& nf, bool trivial_only) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache(trivial_only).emplace(k, nf);
}

const TraceletKey& trivial_key() {
  static const TraceletKey k = tracelet_key(trivial_tracelet());
  return k;
}

bool is_unit_class(const Tracelet& t, const TraceletKey& k) { return t.length() == 0 || k == trivial_key(); }

NormalForm merge(const std::vector<NormalForm>& parts) {
  NormalForm nf;
  for (const auto& p : parts) nf.factors.insert(nf.factors.end(), p.factors.begin(), p.factors.end());
  std::sort(nf.factors.begin(), nf.factors.end());
  return nf;
}

}  // namespace

bool tracelets_isomorphic(const Tracelet& a, const Tracelet& b) {
  return a.length() == b.length() && tracelet_key(a) == tracelet_key(b);
}

Decomposition decompose_at(const Tracelet& t, int cut) {
  if (cut < 1 || cut >= t.length()) throw PreconditionError("cut must be an inner position");
  Decomposition d{window(t, 0, cut), window(t, cut, t.length()), {}};
  Square pb = pullback(d.later.objects.front(), d.earlier.objects.back());
  d.overlap = Overlap{pb.apex, pb.first, pb.second};
  return d;
}

bool is_sequentially_independent(const Tracelet& t, int cut) {
  Decomposition d = decompose_at(t, cut);
  LinearRule eb = evaluate(d.later.tracelet);
  LinearRule ea = evaluate(d.earlier.tracelet);
  return factor_through(d.overlap.left, eb.i).has_value() && factor_through(d.overlap.right, ea.o).has_value();
}

Tracelet shift(const Tracelet& t, int cut) {
  Decomposition d = decompose_at(t, cut);
  LinearRule eb = evaluate(d.later.tracelet);
  LinearRule ea = evaluate(d.earlier.tracelet);
  auto in_kb = factor_through(d.overlap.left, eb.i);
  auto in_ka = factor_through(d.overlap.right, ea.o);
  if (!in_kb || !in_ka) throw PreconditionError("shift: cut is not sequentially independent");
  Overlap bar{d.overlap.apex, compose(ea.i, *in_ka), compose(eb.o, *in_kb)};
  auto m = admit(d.earlier.tracelet, bar, d.later.tracelet);
  if (!m) throw StructuralError("shift: transposed overlap is not admissible");
  return Tracelet{std::move(m->ladder)};
}

bool can_exchange(const Tracelet& t, int k, bool trivial_only) {
  if (k < 0 || k + 1 >= t.length()) throw PreconditionError("can_exchange: no step after k");
  return trivial_only ? !steps_share_threads(t, k, k + 1) : !steps_conflict(t, k, k + 1);
}

Tracelet exchange_steps(const Tracelet& t, int k) {
  return shift_in_context(t, k, k + 1, k + 2);
}

Tracelet shift_in_context(const Tracelet& t, int a, int cut, int b) {
  if (!(0 <= a && a < cut && cut < b && b <= t.length())) throw PreconditionError("shift_in_context: need a < cut < b");
  std::vector<int> order;
  for (int k = 0; k < a; ++k) order.push_back(k);
  for (int k = cut; k < b; ++k) order.push_back(k);
  for (int k = a; k < cut; ++k) order.push_back(k);
  for (int k = b; k < t.length(); ++k) order.push_back(k);
  auto r = resequence(t, order);
  if (!r) throw PreconditionError("shift_in_context: blocks are not independent");
  return *r;
}

std::vector<int> splitting_positions(const Tracelet& t) {
  std::vector<int> out;
  for (int c = 1; c < t.length(); ++c)
    if (decompose_at(t, c).overlap.apex.empty()) out.push_back(c);
  return out;
}

std::vector<Tracelet> split_at(const Tracelet& t, const std::vector<int>& cuts) {
  std::vector<Tracelet> out;
  int a = 0;
  for (int c : cuts) {
    out.push_back(window(t, a, c).tracelet);
    a = c;
  }
  out.push_back(window(t, a, t.length()).tracelet);
  return out;
}

std::map<TraceletKey, Tracelet> shift_class(const Tracelet& t, bool trivial_only) {
  std::map<TraceletKey, Tracelet> seen;
  std::deque<const Tracelet*> queue;
  auto visit = [&](const Tracelet& x) {
    auto form = canonical_form(diagram_of(x));
    auto [it, fresh] = seen.emplace(form.key, Tracelet{});
    if (!fresh) return;
    it->second = tracelet_from_diagram(form.diagram);
    queue.push_back(&it->second);
  };
  visit(t);
  while (!queue.empty()) {
    const Tracelet& x = *queue.front();
    queue.pop_front();
    for (int k = 0; k + 1 < x.length(); ++k)
      if (can_exchange(x, k, trivial_only)) visit(exchange_steps(x, k));
  }
  return seen;
}

namespace {

NormalForm factorize(const Tracelet& t, bool trivial_only) {
  TraceletKey key = tracelet_key(t);
  if (is_unit_class(t, key)) return {};
  if (auto hit = cached(key, trivial_only)) return *hit;
  auto cls = shift_class(t, trivial_only);
  NormalForm nf;
  bool split = false;
  for (const auto& [k, member] : cls) {
    auto cuts = splitting_positions(member);
    if (cuts.empty()) continue;
    std::vector<NormalForm> parts;
    for (const auto& piece : split_at(member, cuts)) parts.push_back(factorize(piece, trivial_only));
    nf = merge(parts);
    split = true;
    break;
  }
  if (!split) nf.factors = {cls.begin()->first};
  for (const auto& [k, member] : cls) remember(k, nf, trivial_only);
  return nf;
}

}  // namespace

NormalForm primitive_factorization(const Tracelet& t) { return factorize(t, false); }

NormalForm normal_form_key(const Tracelet& t) { return primitive_factorization(t); }

NormalForm restricted_factorization(const Tracelet& t) { return factorize(t, true); }

std::vector<NormalForm> maximal_splittings(const Tracelet& t) {
  TraceletKey key = tracelet_key(t);
  if (is_unit_class(t, key)) return {NormalForm{}};
  auto cls = shift_class(t);
  std::set<NormalForm> found;
  for (const auto& [k, member] : cls) {
    auto cuts = splitting_positions(member);
    if (cuts.empty()) continue;
    std::vector<NormalForm> parts;
    for (const auto& piece : split_at(member, cuts)) parts.push_back(primitive_factorization(piece));
    found.insert(merge(parts));
  }
  if (found.empty()) found.insert(NormalForm{{cls.begin()->first}});
  return {found.begin(), found.end()};
}

bool is_primitive(const Tracelet& t) { return primitive_factorization(t).factors.size() == 1; }

Tracelet inflate(const NormalForm& nf) {
  if (nf.factors.empty()) return trivial_tracelet();
  Tracelet acc = decode_tracelet(nf.factors.front());
  for (std::size_t i = 1; i < nf.factors.size(); ++i) acc = juxtapose(decode_tracelet(nf.factors[i]), acc);
  return acc;
}

std::size_t degree(const NormalForm& nf) { return nf.factors.size(); }

void clear_normal_form_cache() {
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache(false).clear();
  cache(true).clear();
}

}  // namespace tracelet
