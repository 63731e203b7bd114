#include "hopf.hpp"

#include <stdexcept>
#include <vector>

namespace apkappa {

TensorPolynomial coproduct(const GradedPolynomial& x) {
  if (x.system().kind != SystemKind::PH)
    throw std::invalid_argument("coproduct: input must be over the ph generators");
  TensorPolynomial out(x.system(), x.system());
  for (const auto& [m, c] : x.terms())
    for (const auto& [j, binom] : divisors_with_binomials(m)) {
      ExponentVector rest;
      for (const auto& [g, e] : m.factors) {
        int re = e - j.exponent(g);
        if (re > 0) rest.factors.emplace_back(g, re);
      }
      out.add_term(j, rest, c * binom);
    }
  return out;
}

TensorPolynomial whitney_coproduct(const GradedPolynomial& x) {
  if (x.system().kind != SystemKind::P)
    throw std::invalid_argument("whitney_coproduct: input must be over the p generators");
  const GeneratorSystem sys = x.system();
  TensorPolynomial out(sys, sys);
  for (const auto& [m, c] : x.terms()) {
    TensorPolynomial term(sys, sys);
    term.add_term(ExponentVector::one(), ExponentVector::one(), c);
    for (const auto& [g, e] : m.factors) {
      // p_0 = 1 on either side of the sum.
      auto p_i = [](int i) { return i == 0 ? ExponentVector::one() : ExponentVector::generator(i); };
      TensorPolynomial gen(sys, sys);
      for (int i = 0; i <= g; ++i) gen.add_term(p_i(i), p_i(g - i), Rational(1));
      for (int k = 0; k < e; ++k) term = term * gen;
    }
    out = out + term;
  }
  return out;
}

namespace {

// Newton recurrences, computed fresh per call; degrees here are tiny.
// s_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i s_{k-i} + (-1)^{k-1} k e_k
std::vector<GradedPolynomial> power_sums_in_p(int upto) {
  const GeneratorSystem p = GeneratorSystem::p();
  std::vector<GradedPolynomial> s(upto + 1, GradedPolynomial::zero(p));
  for (int k = 1; k <= upto; ++k) {
    GradedPolynomial acc(p);
    for (int i = 1; i < k; ++i) {
      GradedPolynomial e_i = GradedPolynomial::monomial(p, ExponentVector::generator(i));
      acc = acc + e_i * s[k - i] * Rational(i % 2 == 1 ? 1 : -1);
    }
    acc = acc + GradedPolynomial::monomial(p, ExponentVector::generator(k),
                                           Rational(k % 2 == 1 ? k : -k));
    s[k] = acc;
  }
  return s;
}

// e_k = (1/k) sum_{i=1}^{k} (-1)^{i-1} e_{k-i} s_i, rewritten in the ph_i.
std::vector<GradedPolynomial> elementaries_in_ph(int upto) {
  const GeneratorSystem ph = GeneratorSystem::ph();
  std::vector<GradedPolynomial> e(upto + 1, GradedPolynomial::zero(ph));
  e[0] = GradedPolynomial::constant(ph, Rational(1));
  for (int k = 1; k <= upto; ++k) {
    GradedPolynomial acc(ph);
    for (int i = 1; i <= k; ++i) {
      GradedPolynomial s_i = GradedPolynomial::monomial(ph, ExponentVector::generator(i));
      acc = acc + e[k - i] * s_i * Rational(i % 2 == 1 ? 1 : -1);
    }
    e[k] = acc * rational_of(1, k);
  }
  return e;
}

}  // namespace

GradedPolynomial power_sum_in_p(int k) {
  if (k < 1) throw std::invalid_argument("power_sum_in_p: k >= 1 required");
  return power_sums_in_p(k)[k];
}

GradedPolynomial elementary_in_ph(int k) {
  if (k < 0) throw std::invalid_argument("elementary_in_ph: k >= 0 required");
  return elementaries_in_ph(k)[k];
}

GradedPolynomial ph_to_p(const GradedPolynomial& x) {
  if (x.system().kind == SystemKind::P) return x;
  if (x.system().kind != SystemKind::PH)
    throw std::invalid_argument("ph_to_p: input must be over ph (or already p)");
  int top = x.degree() / 4;
  std::vector<GradedPolynomial> s = power_sums_in_p(top < 1 ? 1 : top);
  return apply_ring_map(x, GeneratorSystem::p(), [&](int id) { return s[id]; });
}

GradedPolynomial p_to_ph(const GradedPolynomial& x) {
  if (x.system().kind == SystemKind::PH) return x;
  if (x.system().kind != SystemKind::P)
    throw std::invalid_argument("p_to_ph: input must be over p (or already ph)");
  int top = x.degree() / 4;
  std::vector<GradedPolynomial> e = elementaries_in_ph(top < 1 ? 1 : top);
  return apply_ring_map(x, GeneratorSystem::ph(), [&](int id) { return e[id]; });
}

GradedPolynomial restrict_to_bso(const GradedPolynomial& x, int d) {
  if (d < 2) throw std::invalid_argument("restrict_to_bso: d >= 2 required");
  GradedPolynomial xp = ph_to_p(x);
  const GeneratorSystem target = GeneratorSystem::bso(d);
  const int n = d / 2;
  return apply_ring_map(xp, target, [&](int id) {
    if (d % 2 == 1)
      return id <= n ? GradedPolynomial::monomial(target, ExponentVector::generator(id))
                     : GradedPolynomial::zero(target);
    if (id <= n - 1) return GradedPolynomial::monomial(target, ExponentVector::generator(id));
    if (id == n) return GradedPolynomial::monomial(target, ExponentVector::generator(0, 2));
    return GradedPolynomial::zero(target);
  });
}

QMatrix restriction_matrix(int d, int m) {
  const GeneratorSystem ph = GeneratorSystem::ph();
  std::vector<ExponentVector> cols = monomial_basis(ph, m);
  std::vector<ExponentVector> rows = monomial_basis(GeneratorSystem::bso(d), m);
  QMatrix mat(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    GradedPolynomial r = restrict_to_bso(GradedPolynomial::monomial(ph, cols[j]), d);
    for (std::size_t i = 0; i < rows.size(); ++i) mat.at(i, j) = r.coefficient(rows[i]);
  }
  return mat;
}

}  // namespace apkappa
