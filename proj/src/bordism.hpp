#pragma once

#include <map>

#include "hopf.hpp"
#include "poly.hpp"

namespace apkappa {

// Rational oriented bordism class, encoded by its dimension and its
// Pontryagin numbers <p^I, [M]> on the degree-m p-monomials. Dimensions not
// divisible by 4 carry no numbers; a class with all numbers zero is the zero
// class. Only tangential Pontryagin data is stored.
struct BordismClassQ {
  int dimension = 0;
  std::map<ExponentVector, Rational> numbers;  // sparse; absent = 0

  static BordismClassQ zero(int dimension) { return {dimension, {}}; }
  bool is_zero() const;
  Rational number(const ExponentVector& m) const;

  bool operator==(const BordismClassQ&) const = default;
};

// Class of CP^n (real dimension 2n): p(T CP^n) = (1 + a^2)^{n+1}, so
// <p^I, [CP^n]> = prod_i C(n+1, i)^{e_i} when the monomial degree matches,
// and the class is rationally zero for odd n.
BordismClassQ cp_class(int n);

// Characteristic number <x, c>. Accepts ph or p input (ph is converted);
// inhomogeneous input pairs through its degree-matching component, so
// pairing 1 against a positive-dimensional class gives 0.
Rational pair(const GradedPolynomial& x, const BordismClassQ& c);

// Product class via the Whitney formula: numbers of the product are the
// bidegree-(dim c1, dim c2) coproduct components paired factorwise.
BordismClassQ product(const BordismClassQ& c1, const BordismClassQ& c2);

}  // namespace apkappa
