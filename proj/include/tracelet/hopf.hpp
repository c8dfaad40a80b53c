#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "tracelet/normalization.hpp"

namespace tracelet {

using Rational = boost::multiprecision::cpp_rational;

/// Finite linear combination of normal-form classes. Zero coefficients are
/// never stored, so equality is term-wise.
class HopfElement {
 public:
  HopfElement() = default;
  static HopfElement basis(const NormalForm& nf, const Rational& c = 1);
  static HopfElement of(const Tracelet& t, const Rational& c = 1);

  void add(const NormalForm& nf, const Rational& c);
  Rational coefficient(const NormalForm& nf) const;
  const std::map<NormalForm, Rational>& terms() const& { return terms_; }
  std::map<NormalForm, Rational> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }

  HopfElement& operator+=(const HopfElement& o);
  HopfElement& operator-=(const HopfElement& o);
  friend HopfElement operator+(HopfElement a, const HopfElement& b) { return a += b; }
  friend HopfElement operator-(HopfElement a, const HopfElement& b) { return a -= b; }
  friend HopfElement operator*(const Rational& k, const HopfElement& a);
  friend bool operator==(const HopfElement&, const HopfElement&) = default;

 private:
  std::map<NormalForm, Rational> terms_;
};

/// Elements of the tensor square, keyed by (left, right) basis pairs.
class Tensor {
 public:
  void add(const NormalForm& l, const NormalForm& r, const Rational& c);
  const std::map<std::pair<NormalForm, NormalForm>, Rational>& terms() const& { return terms_; }
  std::map<std::pair<NormalForm, NormalForm>, Rational> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  Tensor& operator+=(const Tensor& o);
  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  std::map<std::pair<NormalForm, NormalForm>, Rational> terms_;
};

/// Elements of the triple tensor power, used for coassociativity.
class Tensor3 {
 public:
  void add(const std::array<NormalForm, 3>& k, const Rational& c);
  const std::map<std::array<NormalForm, 3>, Rational>& terms() const& { return terms_; }
  std::map<std::array<NormalForm, 3>, Rational> terms() && { return std::move(terms_); }
  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::map<std::array<NormalForm, 3>, Rational> terms_;
};

HopfElement unit(const Rational& k = 1);
Rational counit(const HopfElement& a);

/// a ⋄ b: every basis pair is inflated to representatives, every admissible
/// match of in(a-side) with out(b-side) is composed, and the composite's
/// normal form is counted.
HopfElement product(const HopfElement& a, const HopfElement& b);
HopfElement basis_product(const NormalForm& x, const NormalForm& y);
/// Same sum computed from caller-chosen representatives of the two classes.
HopfElement product_of_representatives(const Tracelet& a, const Tracelet& b);

/// Sub-multiset splitting with binomial multiplicities.
Tensor coproduct(const HopfElement& a);
Tensor coproduct(const NormalForm& x);
/// Recursive antipode of a connected filtered bialgebra.
HopfElement antipode(const HopfElement& a);
HopfElement commutator(const HopfElement& a, const HopfElement& b);
/// Largest factor count among the terms; throws PreconditionError on zero.
std::size_t filtration_degree(const HopfElement& a);
bool is_primitive_element(const HopfElement& a);

// Tensor plumbing for checking the axioms.
Tensor tensor(const HopfElement& a, const HopfElement& b);
Tensor swap(const Tensor& t);
/// Component-wise product (x ⊗ y)(x' ⊗ y') = (x ⋄ x') ⊗ (y ⋄ y').
Tensor multiply(const Tensor& a, const Tensor& b);
HopfElement multiply(const Tensor& t);
Tensor antipode_left(const Tensor& t);
Tensor antipode_right(const Tensor& t);
HopfElement counit_left(const Tensor& t);
HopfElement counit_right(const Tensor& t);
Tensor3 coproduct_left(const Tensor& t);
Tensor3 coproduct_right(const Tensor& t);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

void clear_hopf_cache();

}  // namespace tracelet
