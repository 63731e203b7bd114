#include "primitives.hpp"

#include <map>
#include <stdexcept>

namespace apkappa {

namespace {

// Kernel of the "coproduct then restrict the right factor, keep right
// degrees >= min_right" map on H^m. Rows are indexed by pairs (left
// ph-monomial J != 1, BSO(d)-monomial c of degree m - |J| >= min_right).
Subspace coproduct_kernel(int d, int m, int min_right) {
  const GeneratorSystem ph = GeneratorSystem::ph();
  Subspace out{m, {}};
  if (m < 0 || m % 4 != 0) return out;

  std::vector<ExponentVector> columns = monomial_basis(ph, m);
  const GeneratorSystem bso = GeneratorSystem::bso(d);

  // Row index per (left monomial, bso monomial).
  std::map<std::pair<ExponentVector, ExponentVector>, std::size_t> row_of;
  for (int left = 4; left <= m - min_right; left += 4) {
    int right = m - left;
    std::vector<ExponentVector> cs = monomial_basis(bso, right);
    if (cs.empty()) continue;
    for (const ExponentVector& j : monomial_basis(ph, left))
      for (const ExponentVector& c : cs) row_of.insert({{j, c}, row_of.size()});
  }

  QMatrix mat(row_of.size(), columns.size());
  std::map<ExponentVector, GradedPolynomial> restricted;  // per right monomial
  for (std::size_t col = 0; col < columns.size(); ++col) {
    TensorPolynomial delta = coproduct(GradedPolynomial::monomial(ph, columns[col]));
    for (const auto& [key, coef] : delta.terms()) {
      const auto& [j, k] = key;
      if (j.is_one() || k.degree(ph) < min_right) continue;
      auto it = restricted.find(k);
      if (it == restricted.end())
        it = restricted.emplace(k, restrict_to_bso(GradedPolynomial::monomial(ph, k), d)).first;
      for (const auto& [c, rc] : it->second.terms())
        mat.at(row_of.at({j, c}), col) += coef * rc;
    }
  }

  for (const QVector& v : kernel_basis(mat)) {
    GradedPolynomial x(ph);
    for (std::size_t i = 0; i < columns.size(); ++i) x.add_term(columns[i], v[i]);
    out.basis.push_back(std::move(x));
  }
  return out;
}

}  // namespace

Subspace ap_basis_definitional(int d, int m) {
  if (d < 2) throw std::invalid_argument("ap_basis: d >= 2 required");
  return coproduct_kernel(d, m, d + 1);
}

Subspace np_basis(int d, int m) {
  if (d < 2) throw std::invalid_argument("np_basis: d >= 2 required");
  return coproduct_kernel(d, m, d);
}

bool monomial_is_almost_primitive(const ExponentVector& m, int d, int degree) {
  // The largest proper divisors drop a single generator; the binding one
  // drops the smallest index in the support.
  if (m.is_one()) return true;
  int smallest = m.factors.front().first;
  return degree - 4 * smallest <= d;
}

Subspace ap_basis_monomial(int d, int m) {
  if (d < 2) throw std::invalid_argument("ap_basis: d >= 2 required");
  const GeneratorSystem ph = GeneratorSystem::ph();
  Subspace out{m, {}};
  if (m < 0 || m % 4 != 0) return out;
  for (const ExponentVector& mono : monomial_basis(ph, m))
    if (monomial_is_almost_primitive(mono, d, m))
      out.basis.push_back(GradedPolynomial::monomial(ph, mono));
  return out;
}

bool is_almost_primitive(const GradedPolynomial& x, int d) {
  if (!x.is_homogeneous()) return false;
  int m = x.degree();
  if (m <= 0) return true;
  for (const auto& [mono, c] : x.terms())
    if (!monomial_is_almost_primitive(mono, d, m)) return false;
  return true;
}

TensorPolynomial middle_terms(const GradedPolynomial& x, int p, int d) {
  if (!x.is_homogeneous() || (x.degree() >= 0 && x.degree() != p + d))
    throw std::invalid_argument("middle_terms: x must be homogeneous of degree p + d");
  return coproduct(x).bidegree_component(p, d);
}

namespace {

QMatrix basis_matrix(const std::vector<GradedPolynomial>& vectors,
                     const std::vector<ExponentVector>& coords) {
  QMatrix m(vectors.size(), coords.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < coords.size(); ++j) m.at(i, j) = vectors[i].coefficient(coords[j]);
  return m;
}

}  // namespace

bool in_span(const std::vector<GradedPolynomial>& basis, const GradedPolynomial& v) {
  if (v.is_zero()) return true;
  if (basis.empty()) return false;
  std::vector<ExponentVector> coords = monomial_basis(v.system(), v.degree());
  QMatrix without = basis_matrix(basis, coords);
  std::vector<GradedPolynomial> extended = basis;
  extended.push_back(v);
  QMatrix with = basis_matrix(extended, coords);
  return rank(without) == rank(with);
}

bool contained_in_span(const Subspace& a, const Subspace& b) {
  for (const GradedPolynomial& v : a.basis)
    if (!in_span(b.basis, v)) return false;
  return true;
}

bool same_span(const Subspace& a, const Subspace& b) {
  return a.dim() == b.dim() && contained_in_span(a, b);
}

}  // namespace apkappa
