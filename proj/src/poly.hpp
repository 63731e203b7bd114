#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "generators.hpp"
#include "rational.hpp"

namespace apkappa {

// Sparse rational polynomial in a declared generator system. Terms never
// store zero coefficients. Values are immutable in spirit: every operation
// returns a fresh polynomial.
class GradedPolynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational>;

  GradedPolynomial() : system_(GeneratorSystem::ph()) {}
  explicit GradedPolynomial(GeneratorSystem sys) : system_(sys) {}

  static GradedPolynomial zero(GeneratorSystem sys) { return GradedPolynomial(sys); }
  static GradedPolynomial constant(GeneratorSystem sys, const Rational& c);
  static GradedPolynomial monomial(GeneratorSystem sys, ExponentVector m,
                                   Rational coef = Rational(1));

  const GeneratorSystem& system() const { return system_; }
  // Ref-qualified so that iterating terms() of a temporary stays valid.
  const TermMap& terms() const& { return terms_; }
  TermMap terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const ExponentVector& m) const;

  void add_term(const ExponentVector& m, const Rational& c);

  GradedPolynomial operator+(const GradedPolynomial& o) const;
  GradedPolynomial operator-(const GradedPolynomial& o) const;
  GradedPolynomial operator*(const GradedPolynomial& o) const;
  GradedPolynomial operator*(const Rational& c) const;
  GradedPolynomial pow(int n) const;

  bool operator==(const GradedPolynomial& o) const {
    return system_ == o.system_ && terms_ == o.terms_;
  }

  // Degree bookkeeping. degree() of 0 is -1; is_homogeneous(0) is true.
  int degree() const;
  bool is_homogeneous() const;
  GradedPolynomial homogeneous_component(int degree) const;

  // Terms in canonical presentation order.
  std::vector<std::pair<ExponentVector, Rational>> sorted_terms() const;
  std::string to_string() const;

 private:
  void check_same_system(const GradedPolynomial& o) const;

  GeneratorSystem system_;
  TermMap terms_;
};

GradedPolynomial operator*(const Rational& c, const GradedPolynomial& p);

// Extends a ring map defined on generators (id -> image) to polynomials.
GradedPolynomial apply_ring_map(const GradedPolynomial& x, const GeneratorSystem& target,
                                const std::function<GradedPolynomial(int)>& image);

// Element of a tensor square: finitely supported map (monomial, monomial) ->
// coefficient, with independent generator systems on the two sides.
class TensorPolynomial {
 public:
  using Key = std::pair<ExponentVector, ExponentVector>;
  using TermMap = std::map<Key, Rational>;

  TensorPolynomial() : left_(GeneratorSystem::ph()), right_(GeneratorSystem::ph()) {}
  TensorPolynomial(GeneratorSystem left, GeneratorSystem right) : left_(left), right_(right) {}

  const GeneratorSystem& left_system() const { return left_; }
  const GeneratorSystem& right_system() const { return right_; }
  const TermMap& terms() const& { return terms_; }
  TermMap terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const ExponentVector& l, const ExponentVector& r) const;

  void add_term(const ExponentVector& l, const ExponentVector& r, const Rational& c);

  TensorPolynomial operator+(const TensorPolynomial& o) const;
  TensorPolynomial operator*(const TensorPolynomial& o) const;  // (a(x)b)(c(x)d) = ac(x)bd
  TensorPolynomial operator*(const Rational& c) const;

  bool operator==(const TensorPolynomial& o) const {
    return left_ == o.left_ && right_ == o.right_ && terms_ == o.terms_;
  }

  // Component with left degree p and right degree q.
  TensorPolynomial bidegree_component(int p, int q) const;

  std::vector<std::pair<Key, Rational>> sorted_terms() const;
  std::string to_string() const;

 private:
  GeneratorSystem left_, right_;
  TermMap terms_;
};

// Parses "ph1^2*ph2 - 2*ph3 + 1/2", i.e. +/- separated terms with an
// optional rational coefficient before the monomial.
GradedPolynomial poly_from_expression(const GeneratorSystem& sys, const std::string& expr);

// Signed term strings: "ph3", "-2*ph1^3", "1/2*ph1*ph2", "-1". A polynomial
// is rendered as the list of these in canonical order.
std::vector<std::string> poly_term_strings(const GradedPolynomial& p);

}  // namespace apkappa
