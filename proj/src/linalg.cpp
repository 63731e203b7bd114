#include "linalg.hpp"

#include <stdexcept>

namespace apkappa {

QVector QMatrix::apply(const QVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("QMatrix::apply: size mismatch");
  QVector out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (a_[i * cols_ + j] != 0) out[i] += a_[i * cols_ + j] * v[j];
  return out;
}

std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
    Rational inv = 1 / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const QMatrix& m) {
  QMatrix r = m;
  return rref(r).size();
}

namespace {

// One vector per free column, scaled so the first nonzero entry is +1.
std::vector<QVector> kernel_from_rref(const QMatrix& r, const std::vector<std::size_t>& pivots,
                                      std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<QVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, free);
    for (const Rational& entry : v) {
      if (entry == 0) continue;
      if (entry != 1) {
        Rational inv = 1 / entry;
        for (Rational& e : v) e *= inv;
      }
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<QVector> kernel_basis(const QMatrix& m) {
  QMatrix r = m;
  std::vector<std::size_t> pivots = rref(r);
  return kernel_from_rref(r, pivots, m.cols());
}

std::optional<AffineSolution> solve_affine(const QMatrix& a, const QVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_affine: rhs length mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;

  AffineSolution sol;
  sol.particular.assign(a.cols(), Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k)
    sol.particular[pivots[k]] = aug.at(k, a.cols());
  sol.kernel = kernel_from_rref(aug, pivots, a.cols());
  return sol;
}

}  // namespace apkappa
