#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linalg.hpp"

using namespace apkappa;

namespace {

QMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  QMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Rational(rows[i][j]);
  return m;
}

// Independent rank oracle: fraction-free (Bareiss) elimination over the
// integers, no rationals involved.
std::size_t bareiss_rank(std::vector<std::vector<Integer>> a) {
  if (a.empty() || a[0].empty()) return 0;
  std::size_t rows = a.size(), cols = a[0].size();
  Integer prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
  }
  return row;
}

std::vector<std::vector<Integer>> to_int_rows(const QMatrix& m) {
  std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      REQUIRE(m.at(i, j).get_den() == 1);
      rows[i][j] = m.at(i, j).get_num();
    }
  return rows;
}

bool is_zero(const QVector& v) {
  for (const Rational& r : v)
    if (r != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("kernel of injective and simple maps") {
  CHECK(kernel_basis(from_rows({{1, 0}, {0, 1}})).empty());

  std::vector<QVector> k = kernel_basis(from_rows({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == Rational(1));
  CHECK(k[0][1] == Rational(-1));
}

TEST_CASE("rank basics") {
  CHECK(rank(from_rows({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})) == 0);
  CHECK(rank(from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})) == 4);
  CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("solve_affine on pinned and underdetermined systems") {
  auto sol = solve_affine(from_rows({{1, 0}, {0, 1}}), {Rational(3), Rational(5)});
  REQUIRE(sol.has_value());
  CHECK(sol->particular == QVector{Rational(3), Rational(5)});
  CHECK(sol->kernel.empty());

  sol = solve_affine(from_rows({{1, 1}}), {Rational(2)});
  REQUIRE(sol.has_value());
  CHECK(sol->particular == QVector{Rational(2), Rational(0)});
  REQUIRE(sol->kernel.size() == 1);
  CHECK(sol->kernel[0] == QVector{Rational(1), Rational(-1)});

  CHECK_FALSE(solve_affine(from_rows({{1}, {2}}), {Rational(1), Rational(1)}).has_value());
}

TEST_CASE("random rank-4 6x9 matrices against the fraction-free oracle") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<long> coef(-3, 3);
  int produced = 0;
  while (produced < 20) {
    QMatrix l(6, 4), r(4, 9);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 4; ++j) l.at(i, j) = Rational(coef(rng));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 9; ++j) r.at(i, j) = Rational(coef(rng));

    QMatrix a(6, 9);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 9; ++j)
        for (std::size_t k = 0; k < 4; ++k) a.at(i, j) += l.at(i, k) * r.at(k, j);

    std::size_t oracle = bareiss_rank(to_int_rows(a));
    if (oracle != 4) continue;  // product rank dropped; resample
    ++produced;

    CHECK(rank(a) == 4);
    std::vector<QVector> kernel = kernel_basis(a);
    CHECK(kernel.size() == 5);
    for (const QVector& v : kernel) CHECK(is_zero(a.apply(v)));
  }
}

TEST_CASE("rank + kernel dimension = column count on random shapes") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coef(-4, 4);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int t = 0; t < 100; ++t) {
    QMatrix a(dim(rng), dim(rng));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = Rational(coef(rng));
    std::size_t rk = rank(a);
    std::vector<QVector> kernel = kernel_basis(a);
    CHECK(rk + kernel.size() == a.cols());
    CHECK(rk == bareiss_rank(to_int_rows(a)));
    for (const QVector& v : kernel) CHECK(is_zero(a.apply(v)));
  }
}

TEST_CASE("solve_affine reproduces the right-hand side on 100 random systems") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (int t = 0; t < 100; ++t) {
    QMatrix a(4, 6);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = Rational(coef(rng));
    QVector x0(6);
    for (Rational& r : x0) r = Rational(coef(rng));
    QVector b = a.apply(x0);

    auto sol = solve_affine(a, b);
    REQUIRE(sol.has_value());
    CHECK(a.apply(sol->particular) == b);
    for (const QVector& v : sol->kernel) CHECK(is_zero(a.apply(v)));
  }
}

TEST_CASE("inconsistent systems agree with a rank comparison") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int t = 0; t < 100; ++t) {
    QMatrix a(5, 3);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = Rational(coef(rng));
    QVector b(5);
    for (Rational& r : b) r = Rational(coef(rng));

    QMatrix aug(5, 4);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 3; ++j) aug.at(i, j) = a.at(i, j);
      aug.at(i, 3) = b[i];
    }
    bool solvable_by_rank = rank(a) == rank(aug);

    auto sol = solve_affine(a, b);
    CHECK(sol.has_value() == solvable_by_rank);
    if (sol) CHECK(a.apply(sol->particular) == b);
  }
}

TEST_CASE("empty matrices") {
  QMatrix none_rows(0, 3);
  CHECK(kernel_basis(none_rows).size() == 3);
  CHECK(rank(none_rows) == 0);
  QMatrix none_cols(3, 0);
  CHECK(kernel_basis(none_cols).empty());
}
