#pragma once

#include <vector>

#include "hopf.hpp"
#include "linalg.hpp"
#include "poly.hpp"

namespace apkappa {

// A subspace of H^m(BSO;Q), given by a linearly independent basis of
// homogeneous degree-m polynomials over the ph generators.
struct Subspace {
  int degree = 0;
  std::vector<GradedPolynomial> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

// Almost-primitive subspace AP^m(d): kernel of
//   x -> components of (Id (x) (restrict then project to degrees >= d+1))(Delta x)
// with nonconstant left factor. Canonical basis from the kernel RREF.
Subspace ap_basis_definitional(int d, int m);

// Same subspace by the closed-form criterion: the span of the degree-m
// ph-monomials all of whose proper divisor monomials have degree <= d.
Subspace ap_basis_monomial(int d, int m);

// Near-primitive subspace NP^m(d): as ap_basis_definitional but projecting
// to degrees >= d.
Subspace np_basis(int d, int m);

// True iff every proper divisor of the monomial has degree <= d; equivalently
// deg - 4*(smallest index in the support) <= d.
bool monomial_is_almost_primitive(const ExponentVector& m, int d, int degree);

// True iff x is homogeneous and lies in AP^{deg x}(d).
bool is_almost_primitive(const GradedPolynomial& x, int d);

// Bidegree-(p, d) component of Delta(x); x must be homogeneous of degree p+d.
TensorPolynomial middle_terms(const GradedPolynomial& x, int p, int d);

// Span comparisons by rank tests (robust across elimination strategies).
bool in_span(const std::vector<GradedPolynomial>& basis, const GradedPolynomial& v);
bool same_span(const Subspace& a, const Subspace& b);
bool contained_in_span(const Subspace& a, const Subspace& b);

}  // namespace apkappa
