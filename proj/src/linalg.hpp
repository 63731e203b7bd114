#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace apkappa {

using QVector = std::vector<Rational>;

// Dense matrix over Q. Sizes in this library stay small (a few hundred rows
// at most), so dense Gauss-Jordan with exact rationals is the whole story.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  QVector apply(const QVector& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

struct AffineSolution {
  QVector particular;
  std::vector<QVector> kernel;
};

// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<std::size_t> rref(QMatrix& m);

std::size_t rank(const QMatrix& m);

// Canonical kernel basis read off the RREF: one vector per free column, in
// column order, with a 1 in the free coordinate. Deterministic for a fixed
// input.
std::vector<QVector> kernel_basis(const QMatrix& m);

// Solution set of a·x = b as particular + span(kernel), or nullopt if the
// system is inconsistent. Free coordinates of the particular solution are 0.
std::optional<AffineSolution> solve_affine(const QMatrix& a, const QVector& b);

}  // namespace apkappa
