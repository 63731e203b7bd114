#include "bundle.hpp"

#include <algorithm>
#include <stdexcept>

namespace apkappa {

namespace {

void validate(const ProjectiveBundleSpec& spec) {
  if (spec.m < 1) throw std::invalid_argument("projective bundle: base CP^m needs m >= 1");
  if (spec.twists.size() < 2)
    throw std::invalid_argument("projective bundle: need at least two twists (fibre CP^r, r >= 1)");
}

std::vector<Rational> elementary_symmetric(const std::vector<int>& values) {
  std::vector<Rational> sigma(values.size() + 1, Rational(0));
  sigma[0] = 1;
  std::size_t used = 0;
  for (int a : values) {
    ++used;
    for (std::size_t k = used; k >= 1; --k) sigma[k] += Rational(a) * sigma[k - 1];
  }
  return sigma;
}

}  // namespace

BundleCohomologyElement::BundleCohomologyElement(const ProjectiveBundleSpec& spec)
    : m_(spec.m), r_(spec.r()) {
  validate(spec);
  sigma_ = elementary_symmetric(spec.twists);
  grid_.assign(m_ + 1, std::vector<Rational>(r_ + 1, Rational(0)));
}

BundleCohomologyElement BundleCohomologyElement::zero(const ProjectiveBundleSpec& spec) {
  return BundleCohomologyElement(spec);
}

BundleCohomologyElement BundleCohomologyElement::constant(const ProjectiveBundleSpec& spec,
                                                          const Rational& c) {
  BundleCohomologyElement e(spec);
  e.grid_[0][0] = c;
  return e;
}

BundleCohomologyElement BundleCohomologyElement::term(const ProjectiveBundleSpec& spec, int hpow,
                                                      int upow, const Rational& c) {
  BundleCohomologyElement e(spec);
  if (hpow < 0 || upow < 0) throw std::invalid_argument("negative power");
  if (hpow > e.m_) return e;
  int cols = std::max(upow + 1, e.r_ + 1);
  std::vector<std::vector<Rational>> wide(e.m_ + 1, std::vector<Rational>(cols, Rational(0)));
  wide[hpow][upow] = c;
  e.reduce(wide);
  return e;
}

void BundleCohomologyElement::reduce(std::vector<std::vector<Rational>>& wide) {
  // Grothendieck relation: u^{r+1} = -sum_{k=1}^{r+1} sigma_k h^k u^{r+1-k};
  // h^{m+1} = 0 drops anything past column m.
  for (int j = static_cast<int>(wide[0].size()) - 1; j > r_; --j)
    for (int i = 0; i <= m_; ++i) {
      if (wide[i][j] == 0) continue;
      Rational c = wide[i][j];
      wide[i][j] = 0;
      for (int k = 1; k <= r_ + 1 && k <= j; ++k)
        if (i + k <= m_) wide[i + k][j - k] += -sigma_[k] * c;
    }
  for (int i = 0; i <= m_; ++i)
    for (int j = 0; j <= r_; ++j) grid_[i][j] = wide[i][j];
}

BundleCohomologyElement BundleCohomologyElement::operator+(
    const BundleCohomologyElement& o) const {
  BundleCohomologyElement out = *this;
  for (int i = 0; i <= m_; ++i)
    for (int j = 0; j <= r_; ++j) out.grid_[i][j] += o.grid_[i][j];
  return out;
}

BundleCohomologyElement BundleCohomologyElement::operator-(
    const BundleCohomologyElement& o) const {
  BundleCohomologyElement out = *this;
  for (int i = 0; i <= m_; ++i)
    for (int j = 0; j <= r_; ++j) out.grid_[i][j] -= o.grid_[i][j];
  return out;
}

BundleCohomologyElement BundleCohomologyElement::operator*(
    const BundleCohomologyElement& o) const {
  BundleCohomologyElement out = *this;
  std::vector<std::vector<Rational>> wide(m_ + 1, std::vector<Rational>(2 * r_ + 1, Rational(0)));
  for (int i = 0; i <= m_; ++i)
    for (int j = 0; j <= r_; ++j) {
      if (grid_[i][j] == 0) continue;
      for (int i2 = 0; i2 + i <= m_; ++i2)
        for (int j2 = 0; j2 <= r_; ++j2)
          if (o.grid_[i2][j2] != 0) wide[i + i2][j + j2] += grid_[i][j] * o.grid_[i2][j2];
    }
  out.reduce(wide);
  return out;
}

BundleCohomologyElement BundleCohomologyElement::operator*(const Rational& c) const {
  BundleCohomologyElement out = *this;
  for (int i = 0; i <= m_; ++i)
    for (int j = 0; j <= r_; ++j) out.grid_[i][j] *= c;
  return out;
}

BundleCohomologyElement BundleCohomologyElement::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power");
  BundleCohomologyElement out = *this;
  for (int i = 0; i <= m_; ++i)
    for (int j = 0; j <= r_; ++j) out.grid_[i][j] = i == 0 && j == 0 ? Rational(1) : Rational(0);
  for (int k = 0; k < n; ++k) out = out * *this;
  return out;
}

bool BundleCohomologyElement::is_zero() const {
  for (int i = 0; i <= m_; ++i)
    for (int j = 0; j <= r_; ++j)
      if (grid_[i][j] != 0) return false;
  return true;
}

BundleCohomologyElement BundleCohomologyElement::complex_degree_component(int k) const {
  BundleCohomologyElement out = *this;
  for (int i = 0; i <= m_; ++i)
    for (int j = 0; j <= r_; ++j)
      if (i + j != k) out.grid_[i][j] = 0;
  return out;
}

std::vector<Rational> BundleCohomologyElement::gysin() const {
  std::vector<Rational> out(m_ + 1, Rational(0));
  for (int i = 0; i <= m_; ++i) out[i] = grid_[i][r_];
  return out;
}

std::string BundleCohomologyElement::to_string() const {
  std::string s;
  for (int k = 0; k <= m_ + r_; ++k)
    for (int j = 0; j <= r_; ++j) {
      int i = k - j;
      if (i < 0 || i > m_ || grid_[i][j] == 0) continue;
      if (!s.empty()) s += " + ";
      s += rational_to_string(grid_[i][j]);
      if (i > 0) s += "*h^" + std::to_string(i);
      if (j > 0) s += "*u^" + std::to_string(j);
    }
  return s.empty() ? "0" : s;
}

BundleCohomologyElement vertical_total_chern(const ProjectiveBundleSpec& spec) {
  validate(spec);
  BundleCohomologyElement out = BundleCohomologyElement::constant(spec, Rational(1));
  for (int a : spec.twists) {
    BundleCohomologyElement factor = BundleCohomologyElement::constant(spec, Rational(1)) +
                                     BundleCohomologyElement::term(spec, 0, 1) +
                                     BundleCohomologyElement::term(spec, 1, 0, Rational(a));
    out = out * factor;
  }
  return out;
}

std::vector<BundleCohomologyElement> vertical_chern_components(const ProjectiveBundleSpec& spec) {
  BundleCohomologyElement total = vertical_total_chern(spec);
  std::vector<BundleCohomologyElement> out;
  for (int k = 0; k <= spec.r() + 1; ++k) out.push_back(total.complex_degree_component(k));
  return out;
}

std::vector<BundleCohomologyElement> pontryagin_from_chern(
    const ProjectiveBundleSpec& spec, const std::vector<BundleCohomologyElement>& chern,
    int top_index) {
  std::vector<BundleCohomologyElement> p;
  for (int k = 0; k <= top_index; ++k) {
    BundleCohomologyElement pk = BundleCohomologyElement::zero(spec);
    for (int i = 0; i <= 2 * k; ++i) {
      if (i >= static_cast<int>(chern.size()) || 2 * k - i >= static_cast<int>(chern.size()))
        continue;
      BundleCohomologyElement prod = chern[i] * chern[2 * k - i];
      pk = (k + i) % 2 == 0 ? pk + prod : pk - prod;
    }
    p.push_back(std::move(pk));
  }
  return p;
}

VerticalClasses vertical_pontryagin_and_euler(const ProjectiveBundleSpec& spec) {
  std::vector<BundleCohomologyElement> chern = vertical_chern_components(spec);
  VerticalClasses out{pontryagin_from_chern(spec, chern, spec.r()), chern[spec.r()]};
  return out;
}

BundleCohomologyElement evaluate_vertical_class(const ProjectiveBundleSpec& spec,
                                                const ExponentVector& mono) {
  VerticalClasses vc = vertical_pontryagin_and_euler(spec);
  BundleCohomologyElement out = BundleCohomologyElement::constant(spec, Rational(1));
  for (const auto& [g, e] : mono.factors) {
    if (g == 0)
      out = out * vc.euler.pow(e);
    else if (g <= spec.r())
      out = out * vc.pontryagin[g].pow(e);
    else
      return BundleCohomologyElement::zero(spec);
  }
  return out;
}

namespace {

// p_k of the vertical tangent bundle for arbitrary k (zero above r+1; the
// k = r+1 class reduces to zero in the ring).
std::vector<BundleCohomologyElement> vertical_p_all(const ProjectiveBundleSpec& spec, int upto) {
  std::vector<BundleCohomologyElement> chern = vertical_chern_components(spec);
  return pontryagin_from_chern(spec, chern, upto);
}

// Value of a P-polynomial on T CP^m, as a pullback element (u-power 0):
// p_k(T CP^m) = C(m+1, k) h^{2k}.
BundleCohomologyElement evaluate_base_p_poly(const ProjectiveBundleSpec& spec,
                                             const GradedPolynomial& xp) {
  BundleCohomologyElement out = BundleCohomologyElement::zero(spec);
  for (const auto& [mono, c] : xp.terms()) {
    BundleCohomologyElement term = BundleCohomologyElement::constant(spec, c);
    for (const auto& [g, e] : mono.factors)
      term = term * BundleCohomologyElement::term(spec, 2 * g, 0, binomial(spec.m + 1, g)).pow(e);
    out = out + term;
  }
  return out;
}

BundleCohomologyElement evaluate_vertical_p_poly(const ProjectiveBundleSpec& spec,
                                                 const GradedPolynomial& xp,
                                                 const std::vector<BundleCohomologyElement>& p) {
  BundleCohomologyElement out = BundleCohomologyElement::zero(spec);
  for (const auto& [mono, c] : xp.terms()) {
    BundleCohomologyElement term = BundleCohomologyElement::constant(spec, c);
    for (const auto& [g, e] : mono.factors) {
      if (g >= static_cast<int>(p.size())) {
        term = BundleCohomologyElement::zero(spec);
        break;
      }
      term = term * p[g].pow(e);
    }
    out = out + term;
  }
  return out;
}

Rational integrate_over_base(const std::vector<Rational>& hpoly, int m) {
  return static_cast<int>(hpoly.size()) > m ? hpoly[m] : Rational(0);
}

}  // namespace

Rational kappa_number(const ProjectiveBundleSpec& spec, const KappaSequence& c) {
  validate(spec);
  const int d = spec.fibre_dim();
  const GeneratorSystem bso = GeneratorSystem::bso(d);
  int excess = 0;
  for (const ExponentVector& mono : c) excess += mono.degree(bso) - d;
  if (c.empty() || excess != spec.base_dim())
    throw std::invalid_argument("kappa_number: sequence excess degree must equal 2m");

  std::vector<Rational> acc(spec.m + 1, Rational(0));
  acc[0] = 1;
  for (const ExponentVector& mono : c) {
    std::vector<Rational> factor = evaluate_vertical_class(spec, mono).gysin();
    std::vector<Rational> next(spec.m + 1, Rational(0));
    for (int i = 0; i <= spec.m; ++i)
      for (int j = 0; i + j <= spec.m && j <= spec.m; ++j) next[i + j] += acc[i] * factor[j];
    acc = std::move(next);
  }
  return integrate_over_base(acc, spec.m);
}

BordismClassQ total_space_class(const ProjectiveBundleSpec& spec) {
  validate(spec);
  const GeneratorSystem p_sys = GeneratorSystem::p();
  BordismClassQ out = BordismClassQ::zero(spec.total_dim());
  if (out.dimension % 4 != 0) return out;

  // p(TE) = p(pi* T CP^m) p(T_pi E) via the stable splitting.
  int top = out.dimension / 4;
  std::vector<BundleCohomologyElement> vert = vertical_p_all(spec, std::min(top, spec.r() + 1));
  std::vector<BundleCohomologyElement> p_total;
  for (int k = 0; k <= top; ++k) {
    BundleCohomologyElement pk = BundleCohomologyElement::zero(spec);
    for (int i = 0; i <= k; ++i) {
      if (k - i >= static_cast<int>(vert.size())) continue;
      if (2 * i > spec.m) continue;
      pk = pk + vert[k - i] * BundleCohomologyElement::term(spec, 2 * i, 0, binomial(spec.m + 1, i));
    }
    p_total.push_back(std::move(pk));
  }

  for (const ExponentVector& mono : monomial_basis(p_sys, out.dimension)) {
    BundleCohomologyElement val = BundleCohomologyElement::constant(spec, Rational(1));
    for (const auto& [g, e] : mono.factors) val = val * p_total[g].pow(e);
    Rational v = integrate_over_base(val.gysin(), spec.m);
    if (v != 0) out.numbers[mono] = v;
  }
  return out;
}

BordismClassQ base_class(const ProjectiveBundleSpec& spec) { return cp_class(spec.m); }
BordismClassQ fibre_class(const ProjectiveBundleSpec& spec) { return cp_class(spec.r()); }

Eq3Report verify_eq3(const ProjectiveBundleSpec& spec, const GradedPolynomial& x) {
  validate(spec);
  if (x.system().kind != SystemKind::PH)
    throw std::invalid_argument("verify_eq3: x must be over the ph generators");
  const int d = spec.fibre_dim();
  const int p = spec.base_dim();
  if (!x.is_zero() && (!x.is_homogeneous() || x.degree() != d + p))
    throw std::invalid_argument("verify_eq3: x must be homogeneous of degree 2m + 2r");
  if (!is_almost_primitive(x, d))
    throw std::invalid_argument("verify_eq3: x is not almost primitive of order 2r");

  Eq3Report report;
  report.lhs = pair(x, total_space_class(spec));

  report.kappa_term = 0;
  if (!x.is_zero())
    for (const auto& [c, coef] : expand_kappa(x, d))
      report.kappa_term += coef * kappa_number(spec, {c});

  report.middle_term = 0;
  const BordismClassQ base = base_class(spec);
  const BordismClassQ fibre = fibre_class(spec);
  const GeneratorSystem ph = GeneratorSystem::ph();
  for (const auto& [key, coef] : middle_terms(x, p, d).terms())
    report.middle_term += coef * pair(GradedPolynomial::monomial(ph, key.first), base) *
                          pair(GradedPolynomial::monomial(ph, key.second), fibre);

  report.equal = report.lhs == report.kappa_term + report.middle_term;
  return report;
}

PushforwardReport verify_pushforward_identity(const ProjectiveBundleSpec& spec,
                                              const GradedPolynomial& x) {
  validate(spec);
  if (x.system().kind != SystemKind::PH)
    throw std::invalid_argument("pushforward identity: x must be over the ph generators");
  if (!x.is_zero() && (!x.is_homogeneous() || x.degree() != spec.total_dim()))
    throw std::invalid_argument("pushforward identity: x must be homogeneous of degree 2m + 2r");

  PushforwardReport report;
  report.lhs = pair(x, total_space_class(spec));

  std::vector<BundleCohomologyElement> vert =
      vertical_p_all(spec, std::min(spec.total_dim() / 4, spec.r() + 1));
  const GeneratorSystem ph = GeneratorSystem::ph();
  report.rhs = 0;
  for (const auto& [key, coef] : coproduct(x).terms()) {
    GradedPolynomial left_p = ph_to_p(GradedPolynomial::monomial(ph, key.first));
    GradedPolynomial right_p = ph_to_p(GradedPolynomial::monomial(ph, key.second));
    BundleCohomologyElement a_tb = evaluate_base_p_poly(spec, left_p);
    std::vector<Rational> g = evaluate_vertical_p_poly(spec, right_p, vert).gysin();
    Rational term(0);
    for (int i = 0; i <= spec.m; ++i) {
      // coefficient of h^i in a(TB) (u-power 0 only)
      Rational ai = a_tb.coef(i, 0);
      if (ai == 0) continue;
      if (spec.m - i >= 0 && spec.m - i < static_cast<int>(g.size())) term += ai * g[spec.m - i];
    }
    report.rhs += coef * term;
  }
  report.equal = report.lhs == report.rhs;
  return report;
}

}  // namespace apkappa
