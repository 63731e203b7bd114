#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bordism.hpp"

using namespace apkappa;

namespace {

const GeneratorSystem PH = GeneratorSystem::ph();
const GeneratorSystem P = GeneratorSystem::p();

GradedPolynomial ph(const std::string& expr) { return poly_from_expression(PH, expr); }
GradedPolynomial pp(const std::string& expr) { return poly_from_expression(P, expr); }

}  // namespace

TEST_CASE("projective space pontryagin numbers") {
  BordismClassQ cp2 = cp_class(2);
  CHECK(cp2.dimension == 4);
  CHECK(pair(pp("p1"), cp2) == Rational(3));

  BordismClassQ cp4 = cp_class(4);
  CHECK(pair(pp("p1^2"), cp4) == Rational(25));
  CHECK(pair(pp("p2"), cp4) == Rational(10));

  CHECK(cp_class(1).is_zero());
  CHECK(cp_class(1).dimension == 2);
  CHECK(cp_class(3).is_zero());
}

TEST_CASE("pairing") {
  CHECK(pair(ph("ph2"), cp_class(4)) == Rational(5));
  CHECK(pair(ph("ph1"), cp_class(2)) == Rational(3));
  // No degree-0 pairing against a positive-dimensional class.
  CHECK(pair(ph("1"), cp_class(2)) == Rational(0));
  CHECK(pair(pp("1"), cp_class(0)) == Rational(1));
}

TEST_CASE("products via the whitney formula") {
  BordismClassQ c = product(cp_class(2), cp_class(2));
  CHECK(c.dimension == 8);
  CHECK(pair(pp("p2"), c) == Rational(9));
  CHECK(pair(pp("p1^2"), c) == Rational(18));

  CHECK(product(cp_class(2), cp_class(1)).is_zero());
  CHECK(product(cp_class(2), BordismClassQ::zero(4)).is_zero());
}

TEST_CASE("power sums vanish on products") {
  CHECK(pair(ph("ph2"), product(cp_class(2), cp_class(2))) == Rational(0));
  CHECK(pair(ph("ph3"), product(cp_class(2), cp_class(4))) == Rational(0));
  CHECK(pair(ph("ph4"), product(cp_class(4), cp_class(4))) == Rational(0));
  CHECK(pair(ph("ph4"), product(cp_class(2), product(cp_class(2), cp_class(2)))) == Rational(0));
}

TEST_CASE("product is commutative and bilinear on the stored numbers") {
  BordismClassQ a = cp_class(2), b = cp_class(4);
  CHECK(product(a, b) == product(b, a));

  BordismClassQ scaled = a;
  for (auto& [m, v] : scaled.numbers) v *= rational_of(5, 3);
  BordismClassQ lhs = product(scaled, b);
  BordismClassQ rhs = product(a, b);
  for (auto& [m, v] : rhs.numbers) v *= rational_of(5, 3);
  CHECK(lhs == rhs);

  BordismClassQ sum = a;
  for (const auto& [m, v] : scaled.numbers) sum.numbers[m] += v;
  BordismClassQ dist = product(a, b);
  for (const auto& [m, v] : product(scaled, b).numbers) dist.numbers[m] += v;
  CHECK(product(sum, b) == dist);

  // <p1^3, CP^2 x CP^4> = sum over splittings: 3 * (coefficient 3) * 25
  CHECK(pair(pp("p1^3"), product(a, b)) == Rational(3) * Rational(3) * Rational(25));
  CHECK(pair(pp("p1*p2"), product(a, b)) ==
        Rational(3) * Rational(10) + Rational(3) * Rational(25));
}

TEST_CASE("pairing is invariant under the basis change") {
  for (const char* expr : {"ph2", "ph1^2", "ph1^2 - 2*ph2"}) {
    GradedPolynomial x = ph(expr);
    CHECK(pair(ph_to_p(x), cp_class(4)) == pair(x, cp_class(4)));
  }
}
