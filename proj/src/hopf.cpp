#include "tracelet/hopf.hpp"

#include <mutex>

namespace tracelet {

namespace {

std::mutex hopf_mutex;

std::map<std::pair<NormalForm, NormalForm>, HopfElement>& product_cache() {
  static std::map<std::pair<NormalForm, NormalForm>, HopfElement> c;
  return c;
}

std::map<NormalForm, HopfElement>& antipode_cache() {
  static std::map<NormalForm, HopfElement> c;
  return c;
}

template <class Map, class Key>
void accumulate(Map& m, const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = m.emplace(k, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) m.erase(it);
}

Rational binomial(std::size_t n, std::size_t k) {
  Rational r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
  return r;
}

}  // namespace

HopfElement HopfElement::basis(const NormalForm& nf, const Rational& c) {
  HopfElement e;
  e.add(nf, c);
  return e;
}

HopfElement HopfElement::of(const Tracelet& t, const Rational& c) { return basis(normal_form_key(t), c); }

void HopfElement::add(const NormalForm& nf, const Rational& c) { accumulate(terms_, nf, c); }

Rational HopfElement::coefficient(const NormalForm& nf) const {
  auto it = terms_.find(nf);
  return it == terms_.end() ? Rational(0) : it->second;
}

HopfElement& HopfElement::operator+=(const HopfElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

HopfElement& HopfElement::operator-=(const HopfElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

HopfElement operator*(const Rational& k, const HopfElement& a) {
  HopfElement out;
  for (const auto& [nf, c] : a.terms_) out.add(nf, k * c);
  return out;
}

void Tensor::add(const NormalForm& l, const NormalForm& r, const Rational& c) { accumulate(terms_, std::make_pair(l, r), c); }

Tensor& Tensor::operator+=(const Tensor& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

void Tensor3::add(const std::array<NormalForm, 3>& k, const Rational& c) { accumulate(terms_, k, c); }

HopfElement unit(const Rational& k) { return HopfElement::basis(NormalForm{}, k); }

Rational counit(const HopfElement& a) { return a.coefficient(NormalForm{}); }

HopfElement product_of_representatives(const Tracelet& a, const Tracelet& b) {
  HopfElement out;
  for (const auto& m : enumerate_tracelet_matches(a, b)) out.add(normal_form_key(compose_tracelets(a, m, b)), 1);
  return out;
}

HopfElement basis_product(const NormalForm& x, const NormalForm& y) {
  auto key = std::make_pair(x, y);
  {
    std::lock_guard<std::mutex> lock(hopf_mutex);
    auto it = product_cache().find(key);
    if (it != product_cache().end()) return it->second;
  }
  HopfElement out = product_of_representatives(inflate(x), inflate(y));
  std::lock_guard<std::mutex> lock(hopf_mutex);
  product_cache().emplace(key, out);
  return out;
}

HopfElement product(const HopfElement& a, const HopfElement& b) {
  HopfElement out;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) out += (cx * cy) * basis_product(x, y);
  return out;
}

Tensor coproduct(const NormalForm& x) {
  // distinct factors with multiplicities
  std::vector<std::pair<TraceletKey, std::size_t>> groups;
  for (const auto& f : x.factors) {
    if (!groups.empty() && groups.back().first == f)
      ++groups.back().second;
    else
      groups.emplace_back(f, 1);
  }
  Tensor out;
  std::vector<std::size_t> take(groups.size(), 0);
  while (true) {
    NormalForm left, right;
    Rational c = 1;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      c *= binomial(groups[g].second, take[g]);
      left.factors.insert(left.factors.end(), take[g], groups[g].first);
      right.factors.insert(right.factors.end(), groups[g].second - take[g], groups[g].first);
    }
    out.add(left, right, c);
    std::size_t g = 0;
    while (g < groups.size() && take[g] == groups[g].second) take[g++] = 0;
    if (g == groups.size()) break;
    ++take[g];
  }
  return out;
}

Tensor coproduct(const HopfElement& a) {
  Tensor out;
  for (const auto& [x, c] : a.terms())
    for (const auto& [k, d] : coproduct(x).terms()) out.add(k.first, k.second, c * d);
  return out;
}

namespace {

HopfElement basis_antipode(const NormalForm& x) {
  if (x.factors.empty()) return unit();
  {
    std::lock_guard<std::mutex> lock(hopf_mutex);
    auto it = antipode_cache().find(x);
    if (it != antipode_cache().end()) return it->second;
  }
  HopfElement out = Rational(-1) * HopfElement::basis(x);
  for (const auto& [k, c] : coproduct(x).terms()) {
    if (k.first.factors.empty() || k.second.factors.empty()) continue;
    out -= c * product(basis_antipode(k.first), HopfElement::basis(k.second));
  }
  std::lock_guard<std::mutex> lock(hopf_mutex);
  antipode_cache().emplace(x, out);
  return out;
}

}  // namespace

HopfElement antipode(const HopfElement& a) {
  HopfElement out;
  for (const auto& [x, c] : a.terms()) out += c * basis_antipode(x);
  return out;
}

HopfElement commutator(const HopfElement& a, const HopfElement& b) { return product(a, b) - product(b, a); }

std::size_t filtration_degree(const HopfElement& a) {
  if (a.is_zero()) throw PreconditionError("filtration degree of the zero element");
  std::size_t d = 0;
  for (const auto& [x, c] : a.terms()) d = std::max(d, degree(x));
  return d;
}

bool is_primitive_element(const HopfElement& a) {
  Tensor expect = tensor(a, unit());
  expect += tensor(unit(), a);
  return coproduct(a) == expect;
}

Tensor tensor(const HopfElement& a, const HopfElement& b) {
  Tensor out;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) out.add(x, y, cx * cy);
  return out;
}

Tensor swap(const Tensor& t) {
  Tensor out;
  for (const auto& [k, c] : t.terms()) out.add(k.second, k.first, c);
  return out;
}

Tensor multiply(const Tensor& a, const Tensor& b) {
  Tensor out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      HopfElement l = basis_product(ka.first, kb.first);
      HopfElement r = basis_product(ka.second, kb.second);
      for (const auto& [x, cx] : l.terms())
        for (const auto& [y, cy] : r.terms()) out.add(x, y, ca * cb * cx * cy);
    }
  return out;
}

HopfElement multiply(const Tensor& t) {
  HopfElement out;
  for (const auto& [k, c] : t.terms()) out += c * basis_product(k.first, k.second);
  return out;
}

Tensor antipode_left(const Tensor& t) {
  Tensor out;
  for (const auto& [k, c] : t.terms()) {
    Tensor piece = tensor(antipode(HopfElement::basis(k.first, c)), HopfElement::basis(k.second));
    out += piece;
  }
  return out;
}

Tensor antipode_right(const Tensor& t) {
  Tensor out;
  for (const auto& [k, c] : t.terms()) {
    Tensor piece = tensor(HopfElement::basis(k.first, c), antipode(HopfElement::basis(k.second)));
    out += piece;
  }
  return out;
}

HopfElement counit_left(const Tensor& t) {
  HopfElement out;
  for (const auto& [k, c] : t.terms())
    if (k.first.factors.empty()) out.add(k.second, c);
  return out;
}

HopfElement counit_right(const Tensor& t) {
  HopfElement out;
  for (const auto& [k, c] : t.terms())
    if (k.second.factors.empty()) out.add(k.first, c);
  return out;
}

Tensor3 coproduct_left(const Tensor& t) {
  Tensor3 out;
  for (const auto& [k, c] : t.terms())
    for (const auto& [kk, d] : coproduct(k.first).terms()) out.add({kk.first, kk.second, k.second}, c * d);
  return out;
}

Tensor3 coproduct_right(const Tensor& t) {
  Tensor3 out;
  for (const auto& [k, c] : t.terms())
    for (const auto& [kk, d] : coproduct(k.second).terms()) out.add({k.first, kk.first, kk.second}, c * d);
  return out;
}

std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int p(s.substr(0, slash)), q(s.substr(slash + 1));
    if (q == 0) throw PreconditionError("zero denominator in rational '" + s + "'");
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw PreconditionError("malformed rational '" + s + "'");
  }
}

void clear_hopf_cache() {
  std::lock_guard<std::mutex> lock(hopf_mutex);
  product_cache().clear();
  antipode_cache().clear();
}

}  // namespace tracelet
