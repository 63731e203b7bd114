#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "primitives.hpp"

using namespace apkappa;

namespace {

const GeneratorSystem PH = GeneratorSystem::ph();

GradedPolynomial ph(const std::string& expr) { return poly_from_expression(PH, expr); }

Subspace span_of(std::initializer_list<const char*> exprs, int degree) {
  Subspace s{degree, {}};
  for (const char* e : exprs) s.basis.push_back(ph(e));
  return s;
}

}  // namespace

TEST_CASE("definitional kernel on small cases") {
  CHECK(same_span(ap_basis_definitional(6, 12), span_of({"ph3"}, 12)));
  CHECK(ap_basis_definitional(8, 12).dim() == 3);  // all of H^12, m <= d+4
  CHECK(same_span(ap_basis_definitional(2, 8), span_of({"ph2"}, 8)));
}

TEST_CASE("monomial criterion on small cases") {
  Subspace s = ap_basis_monomial(8, 16);
  REQUIRE(s.dim() == 2);
  CHECK(s.basis[0] == ph("ph4"));
  CHECK(s.basis[1] == ph("ph2^2"));

  for (int k = 1; k <= 6; ++k) {
    Subspace sk = ap_basis_monomial(2, 4 * k);
    REQUIRE(sk.dim() == 1);
    CHECK(sk.basis[0] == GradedPolynomial::monomial(PH, ExponentVector::generator(k)));
  }

  Subspace s12 = ap_basis_monomial(6, 12);
  REQUIRE(s12.dim() == 1);
  CHECK(s12.basis[0] == ph("ph3"));
}

TEST_CASE("degrees outside 4Z and degree 0") {
  CHECK(ap_basis_definitional(4, 10).dim() == 0);
  CHECK(ap_basis_monomial(4, 10).dim() == 0);
  CHECK(np_basis(3, 7).dim() == 0);
  CHECK(ap_basis_monomial(2, 0).dim() == 1);
  CHECK(ap_basis_definitional(2, 0).dim() == 1);
}

TEST_CASE("near-primitive examples") {
  CHECK(same_span(np_basis(9, 16), ap_basis_monomial(8, 16)));
  CHECK(same_span(np_basis(3, 8), span_of({"ph2"}, 8)));
  // m <= d: the projection target is empty, so everything is near primitive.
  CHECK(np_basis(8, 8).dim() == 2);
  CHECK(np_basis(12, 12).dim() == 3);
}

TEST_CASE("middle coproduct terms") {
  TensorPolynomial t = middle_terms(ph("ph1*ph2"), 4, 8);
  REQUIRE(t.terms().size() == 1);
  CHECK(t.coefficient(monomial_from_string(PH, "ph1"), monomial_from_string(PH, "ph2")) ==
        Rational(1));

  CHECK(middle_terms(ph("ph3"), 4, 8).is_zero());
  CHECK(middle_terms(ph("ph3"), 8, 4).is_zero());

  TensorPolynomial cube = middle_terms(ph("ph1^3"), 4, 8);
  REQUIRE(cube.terms().size() == 1);
  CHECK(cube.coefficient(monomial_from_string(PH, "ph1"), monomial_from_string(PH, "ph1^2")) ==
        Rational(3));

  CHECK_THROWS_AS(middle_terms(ph("ph1"), 4, 8), std::invalid_argument);
}

TEST_CASE("oracle equivalence of the two AP routes, d <= 10, m <= 20") {
  for (int d = 2; d <= 10; ++d)
    for (int m = 0; m <= 20; m += 4)
      CHECK(same_span(ap_basis_definitional(d, m), ap_basis_monomial(d, m)));
}

TEST_CASE("NP(d+1) = AP(d) for d <= 8, m <= 20") {
  for (int d = 2; d <= 8; ++d)
    for (int m = 0; m <= 20; m += 4) CHECK(same_span(np_basis(d + 1, m), ap_basis_monomial(d, m)));
}

TEST_CASE("high-degree almost-primitives are primitive") {
  for (int d = 2; d <= 8; ++d)
    for (int m = 4; m <= 20; m += 4) {
      if (m <= 2 * d) continue;
      Subspace expected{m, {GradedPolynomial::monomial(PH, ExponentVector::generator(m / 4))}};
      CHECK(contained_in_span(ap_basis_definitional(d, m), expected));
      CHECK(same_span(ap_basis_monomial(d, m), expected));
    }
}

TEST_CASE("monotonicity in the order") {
  for (int m = 4; m <= 20; m += 4)
    for (int d = 2; d <= 9; ++d)
      CHECK(contained_in_span(ap_basis_monomial(d, m), ap_basis_monomial(d + 1, m)));
}

TEST_CASE("membership test") {
  CHECK(is_almost_primitive(ph("ph3"), 2));
  CHECK(is_almost_primitive(ph("ph2^2"), 8));
  CHECK_FALSE(is_almost_primitive(ph("ph1*ph3"), 8));
  CHECK_FALSE(is_almost_primitive(ph("ph1 + ph2"), 4));  // inhomogeneous
  CHECK(is_almost_primitive(GradedPolynomial::zero(PH), 2));
}
