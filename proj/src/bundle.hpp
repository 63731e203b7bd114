#pragma once

#include <vector>

#include "bordism.hpp"
#include "constraints.hpp"
#include "poly.hpp"

namespace apkappa {

// P(O(a_0) (+) ... (+) O(a_r)) -> CP^m: fibre CP^r (d = 2r), base CP^m
// (p = 2m), total space of real dimension 2m + 2r.
struct ProjectiveBundleSpec {
  int m = 1;                // base CP^m
  std::vector<int> twists;  // a_0 ... a_r, r + 1 entries

  int r() const { return static_cast<int>(twists.size()) - 1; }
  int fibre_dim() const { return 2 * r(); }
  int base_dim() const { return 2 * m; }
  int total_dim() const { return base_dim() + fibre_dim(); }
};

// Element of H*(E;Q) = Q[h, u] / (h^{m+1}, prod_j (u + a_j h)) in normal
// form: coefficient grid over h^i u^j with i <= m, j <= r. Both h and u have
// cohomological degree 2; u is the first Chern class of the fibrewise dual
// tautological bundle.
class BundleCohomologyElement {
 public:
  BundleCohomologyElement(const ProjectiveBundleSpec& spec);

  static BundleCohomologyElement zero(const ProjectiveBundleSpec& spec);
  static BundleCohomologyElement constant(const ProjectiveBundleSpec& spec, const Rational& c);
  // h^i u^j, reduced.
  static BundleCohomologyElement term(const ProjectiveBundleSpec& spec, int hpow, int upow,
                                      const Rational& c = Rational(1));

  int m() const { return m_; }
  int r() const { return r_; }
  const Rational& coef(int hpow, int upow) const { return grid_[hpow][upow]; }

  BundleCohomologyElement operator+(const BundleCohomologyElement& o) const;
  BundleCohomologyElement operator-(const BundleCohomologyElement& o) const;
  BundleCohomologyElement operator*(const BundleCohomologyElement& o) const;
  BundleCohomologyElement operator*(const Rational& c) const;
  BundleCohomologyElement pow(int n) const;
  bool operator==(const BundleCohomologyElement& o) const = default;

  bool is_zero() const;
  // Component of cohomological degree 2k (i.e. h^i u^j with i + j = k).
  BundleCohomologyElement complex_degree_component(int k) const;

  // Fibrewise integration: the coefficient of u^r, a polynomial in h
  // (h-degree i entry of the result is coef(i, r)).
  std::vector<Rational> gysin() const;

  std::string to_string() const;

 private:
  int m_, r_;
  std::vector<Rational> sigma_;                // elementary symmetric in the twists
  std::vector<std::vector<Rational>> grid_;    // [h power][u power]

  void reduce(std::vector<std::vector<Rational>>& wide);
};

// Total Chern class of the vertical tangent bundle: prod_j (1 + u + a_j h).
// Its degree-(r+1) component reduces to 0 by the Grothendieck relation.
BundleCohomologyElement vertical_total_chern(const ProjectiveBundleSpec& spec);

// Chern components c_0..c_{r+1} of the vertical tangent bundle.
std::vector<BundleCohomologyElement> vertical_chern_components(const ProjectiveBundleSpec& spec);

// Pontryagin classes from Chern components: p_k = sum_i (-1)^{k+i} c_i c_{2k-i}.
// This is the one place signs can enter; it is exercised against the direct
// root expansion prod (1 + (u + a_j h)^2) in the tests.
std::vector<BundleCohomologyElement> pontryagin_from_chern(
    const ProjectiveBundleSpec& spec, const std::vector<BundleCohomologyElement>& chern,
    int top_index);

struct VerticalClasses {
  std::vector<BundleCohomologyElement> pontryagin;  // p_0 = 1, p_1, ..., p_r (p_{r+1} = 0)
  BundleCohomologyElement euler;                    // c_r of the vertical bundle
};
VerticalClasses vertical_pontryagin_and_euler(const ProjectiveBundleSpec& spec);

// Evaluation of a BSO(2r) monomial (e and p_i) on the vertical tangent bundle.
BundleCohomologyElement evaluate_vertical_class(const ProjectiveBundleSpec& spec,
                                                const ExponentVector& mono);

// K_C = integral over CP^m of prod_i gysin(c_i(T_pi)); requires
// sum (deg c_i - 2r) = 2m.
Rational kappa_number(const ProjectiveBundleSpec& spec, const KappaSequence& c);

BordismClassQ total_space_class(const ProjectiveBundleSpec& spec);
BordismClassQ base_class(const ProjectiveBundleSpec& spec);
BordismClassQ fibre_class(const ProjectiveBundleSpec& spec);

struct Eq3Report {
  Rational lhs, kappa_term, middle_term;
  bool equal = false;
};

// Checks <x,[E]> = K(kappa_{rho x}) + sum <x', [B]><x'', [F]> for x almost
// primitive of order 2r and degree 2m + 2r. A false report is a bug.
Eq3Report verify_eq3(const ProjectiveBundleSpec& spec, const GradedPolynomial& x);

struct PushforwardReport {
  Rational lhs, rhs;
  bool equal = false;
};

// The same identity without the almost-primitive restriction, summing over
// the full coproduct: integral_E x(TE) = sum integral_B a(TB) gysin(b(T_pi)).
PushforwardReport verify_pushforward_identity(const ProjectiveBundleSpec& spec,
                                              const GradedPolynomial& x);

}  // namespace apkappa
