#pragma once

#include "linalg.hpp"
#include "poly.hpp"

namespace apkappa {

// Coproduct of Q[ph1, ph2, ...] with every ph_i primitive:
// Delta(ph^I) = sum_{J <= I} binom(I, J) ph^J (x) ph^{I-J}.
TensorPolynomial coproduct(const GradedPolynomial& x);

// Whitney-sum coproduct on Q[p1, p2, ...]: Delta(p_k) = sum_{i+j=k} p_i (x) p_j,
// extended as an algebra map. Used for Pontryagin numbers of products.
TensorPolynomial whitney_coproduct(const GradedPolynomial& x);

// Basis change between the power-sum generators ph_i and the elementary
// (Pontryagin) generators p_i, via the Newton recurrences. Mutually inverse
// degree-preserving ring isomorphisms.
GradedPolynomial ph_to_p(const GradedPolynomial& x);
GradedPolynomial p_to_ph(const GradedPolynomial& x);

// k-th power sum written in the p_i, and k-th elementary written in the ph_i.
GradedPolynomial power_sum_in_p(int k);
GradedPolynomial elementary_in_ph(int k);

// Restriction H*(BSO;Q) -> H*(BSO(d);Q). On P-generators: for d = 2n+1,
// p_i -> p_i (i <= n) and 0 beyond; for d = 2n, p_i -> p_i (i <= n-1),
// p_n -> e^2, and 0 beyond. PH input is converted through ph_to_p first.
GradedPolynomial restrict_to_bso(const GradedPolynomial& x, int d);

// Matrix of the restriction on H^m, rows indexed by monomial_basis(BSO(d), m),
// columns by monomial_basis(PH, m). Rank dim H^m means injectivity in that
// degree.
QMatrix restriction_matrix(int d, int m);

}  // namespace apkappa
