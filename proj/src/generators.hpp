#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace apkappa {

// The three graded polynomial rings in play:
//   PH      Q[ph1, ph2, ...],  deg ph_i = 4i   (ph_i primitive, power-sum convention)
//   P       Q[p1, p2, ...],    deg p_i  = 4i
//   BSO(d)  d = 2n+1: Q[p1..pn];  d = 2n: Q[p1..p_{n-1}, e] with deg e = 2n
enum class SystemKind { PH, P, BSO };

struct GeneratorSystem {
  SystemKind kind = SystemKind::PH;
  int d = 0;  // only meaningful for BSO

  static GeneratorSystem ph() { return {SystemKind::PH, 0}; }
  static GeneratorSystem p() { return {SystemKind::P, 0}; }
  static GeneratorSystem bso(int d);

  bool operator==(const GeneratorSystem&) const = default;

  // Generator ids: 1, 2, ... for ph_i/p_i; id 0 is reserved for the Euler
  // class e in even BSO(d).
  bool has_euler() const { return kind == SystemKind::BSO && d % 2 == 0; }
  int max_p_index() const;           // largest valid p/ph index (-1 = unbounded)
  int generator_degree(int id) const;
  bool valid_generator(int id) const;
  std::string generator_name(int id) const;
  // Returns the generator id for a name like "ph3", "p2", "e"; -1 if the
  // name does not belong to this system.
  int generator_id(const std::string& name) const;

  std::string to_string() const;  // "ph", "p", "bso4"
  static GeneratorSystem from_string(const std::string& s);
};

// Monomial in a generator system: sorted (id, exponent) pairs, exponents > 0.
struct ExponentVector {
  std::vector<std::pair<int, int>> factors;

  static ExponentVector one() { return {}; }
  static ExponentVector generator(int id, int exp = 1);

  bool is_one() const { return factors.empty(); }
  int exponent(int id) const;
  int degree(const GeneratorSystem& sys) const;
  ExponentVector times(const ExponentVector& other) const;

  bool operator==(const ExponentVector&) const = default;
  // Structural order, used only as a map key; presentation order is
  // monomial_order below.
  bool operator<(const ExponentVector& o) const { return factors < o.factors; }
};

// Product of componentwise binomials C(i_j, j_j); zero unless sub <= m.
Rational binomial_product(const ExponentVector& m, const ExponentVector& sub);

// All componentwise divisors of m, each paired with binomial_product(m, .).
std::vector<std::pair<ExponentVector, Rational>> divisors_with_binomials(const ExponentVector& m);

// Canonical presentation order within the library: lower total degree first,
// then exponents compared from the highest generator id down, larger first.
// On PH this lists e.g. degree 12 as ph3, ph1*ph2, ph1^3.
bool monomial_order(const GeneratorSystem& sys, const ExponentVector& a, const ExponentVector& b);

// All monomials of the given total degree, in monomial_order.
std::vector<ExponentVector> monomial_basis(const GeneratorSystem& sys, int degree);

std::string monomial_to_string(const GeneratorSystem& sys, const ExponentVector& m);
// Parses "ph1^2*ph2", "e^4", "1" etc.; whitespace-tolerant.
ExponentVector monomial_from_string(const GeneratorSystem& sys, const std::string& s);

}  // namespace apkappa
