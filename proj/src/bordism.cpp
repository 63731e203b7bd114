#include "bordism.hpp"

#include <stdexcept>

namespace apkappa {

bool BordismClassQ::is_zero() const {
  for (const auto& [m, v] : numbers)
    if (v != 0) return false;
  return true;
}

Rational BordismClassQ::number(const ExponentVector& m) const {
  auto it = numbers.find(m);
  return it == numbers.end() ? Rational(0) : it->second;
}

BordismClassQ cp_class(int n) {
  if (n < 0) throw std::invalid_argument("cp_class: n >= 0 required");
  BordismClassQ c = BordismClassQ::zero(2 * n);
  if (n % 2 != 0) return c;
  for (const ExponentVector& m : monomial_basis(GeneratorSystem::p(), 2 * n)) {
    Rational v(1);
    for (const auto& [i, e] : m.factors)
      for (int k = 0; k < e; ++k) v *= binomial(n + 1, i);
    c.numbers.emplace(m, v);
  }
  return c;
}

Rational pair(const GradedPolynomial& x, const BordismClassQ& c) {
  GradedPolynomial xp = ph_to_p(x);
  Rational out(0);
  for (const auto& [m, coef] : xp.terms())
    if (m.degree(xp.system()) == c.dimension) out += coef * c.number(m);
  return out;
}

BordismClassQ product(const BordismClassQ& c1, const BordismClassQ& c2) {
  const GeneratorSystem p = GeneratorSystem::p();
  BordismClassQ out = BordismClassQ::zero(c1.dimension + c2.dimension);
  if (out.dimension % 4 != 0) return out;
  for (const ExponentVector& m : monomial_basis(p, out.dimension)) {
    TensorPolynomial delta = whitney_coproduct(GradedPolynomial::monomial(p, m));
    Rational v(0);
    for (const auto& [key, coef] : delta.bidegree_component(c1.dimension, c2.dimension).terms())
      v += coef * c1.number(key.first) * c2.number(key.second);
    if (v != 0) out.numbers.emplace(m, v);
  }
  return out;
}

}  // namespace apkappa
