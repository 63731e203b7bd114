#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bordism.hpp"
#include "json_io.hpp"
#include "linalg.hpp"
#include "primitives.hpp"

namespace apkappa {

// A kappa characteristic number is indexed by a multiset of monomials in
// H^*(BSO(d);Q) of degree > d, stored sorted. For fibre dimension d and base
// dimension p the relevant sequences have total excess degree p.
using KappaSequence = std::vector<ExponentVector>;

// All degree->d monomials usable in sequences for (d, p): d < deg <= d + p,
// ordered by (degree, monomial order).
std::vector<ExponentVector> kappa_candidates(int d, int p);

// All multisets with sum of (deg c_i - d) equal to p, shortest first, then
// lexicographically in candidate order. Elements are sorted in candidate
// order within each sequence.
std::vector<KappaSequence> kappa_sequences(int d, int p);

std::string kappa_sequence_label(int d, const KappaSequence& c);  // "e^2,e^2"

// restrict(x, d) read off in the BSO(d) monomial basis: the coefficient of
// each monomial c multiplies the unknown K(kappa_c). Requires deg x > d.
std::map<ExponentVector, Rational> expand_kappa(const GradedPolynomial& x, int d);

// One linear equation per almost-primitive basis monomial x:
//   sum e_coeffs[I]*<p^I, e>  =  sum kappa_coeffs[c]*K(kappa_c)
//                              + sum b_coeffs[J]*<p^J, b> + constant.
struct LinearConstraint {
  ExponentVector x;  // ph-monomial label
  std::map<ExponentVector, Rational> e_coeffs;
  std::map<ExponentVector, Rational> b_coeffs;
  std::map<ExponentVector, Rational> kappa_coeffs;
  Rational constant = Rational(0);
};

// The system for AP^{p+d}(d) with fibre class f (dimension d); b enters
// through the coproduct middle terms paired against f.
std::vector<LinearConstraint> build_system(int d, int p, const BordismClassQ& f);

struct KappaFunctional {
  int d = 0, p = 0;
  std::map<KappaSequence, Rational> values;  // absent = 0

  Rational value(const KappaSequence& c) const;
};

struct FeasibilityProblem {
  int d = 0, p = 0;
  BordismClassQ f, e, b;
  KappaFunctional kappa;
};

struct Violation {
  ExponentVector x;
  Rational lhs, rhs;
};

struct Verdict {
  bool satisfied = true;
  std::vector<Violation> violations;
};

// Substitutes the problem's numbers into every constraint; exact comparison.
Verdict check_feasibility(const FeasibilityProblem& problem);

// A feasibility problem where some coordinates of e, b, K are left open.
struct ProblemWithHoles {
  int d = 0, p = 0;
  BordismClassQ f;
  std::map<ExponentVector, Rational> e_known, b_known;
  std::vector<ExponentVector> e_unknown, b_unknown;  // canonical order
  std::map<KappaSequence, Rational> kappa_known;
  std::vector<KappaSequence> kappa_unknown;  // canonical order
};

struct SolveOutcome {
  bool solvable = false;
  std::vector<std::string> unknowns;  // "e:p1^3", "b:p1", "K:e^2,e^2"
  QVector particular;
  std::vector<QVector> kernel;
};

// Exact affine solution family over the open coordinates, or solvable=false
// when the fixed data are inconsistent.
SolveOutcome solve_for(const ProblemWithHoles& problem);

// JSON forms. Problem documents look like
//   {"d": 8, "p": 4, "f": <bordism|shortcut>, "e": <bordism|"?">,
//    "b": ..., "K": [{"C": ["e^4"], "value": "0/1"}, ...] | "?"}
// with "?" marking open coordinates (only meaningful for solve); omitted
// kappa entries are zero, omitted e/b/K blocks are fully open.
FeasibilityProblem problem_from_json(const Json& j);
ProblemWithHoles problem_with_holes_from_json(const Json& j);

Json system_to_json(int d, int p, const BordismClassQ& f,
                    const std::vector<LinearConstraint>& constraints);
Json verdict_to_json(const Verdict& v);
Json solve_outcome_to_json(const SolveOutcome& s);

}  // namespace apkappa
