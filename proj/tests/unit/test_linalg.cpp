#include <gtest/gtest.h>

#include "dzid/diffpoly.hpp"
#include "dzid/linalg.hpp"
#include "support.hpp"

using namespace dzid;

namespace {

Matrix<Rational> random_matrix(testkit::Rng& rng, int rows, int cols) {
  Matrix<Rational> m(rows, std::vector<Rational>(cols));
  for (auto& row : m)
    for (auto& x : row) x = rng.uniform(0, 2) == 0 ? Rational(0) : rng.rational(9, 5);
  return m;
}

std::vector<Rational> mat_vec(const Matrix<Rational>& a, const std::vector<Rational>& x) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
  return out;
}

}  // namespace

TEST(Linalg, SmallSystems) {
  const LinearSolution s = solve_linear_exact({{2, 1}, {1, 3}}, {3, 5});
  ASSERT_EQ(s.status, SolveStatus::unique);
  EXPECT_EQ(s.solution, (std::vector<Rational>{Rational(4, 5), Rational(7, 5)}));
  EXPECT_EQ(solve_linear_exact({{1, 1}, {2, 2}}, {1, 3}).status, SolveStatus::inconsistent);
  const LinearSolution u = solve_linear_exact({{1, 1}, {2, 2}}, {1, 2});
  EXPECT_EQ(u.status, SolveStatus::underdetermined);
  EXPECT_EQ(u.nullspace.size(), 1u);
  EXPECT_THROW(solve_linear_exact({{1, 1}, {1}}, {1, 1}), std::invalid_argument);
}

TEST(Linalg, RandomSolutionsSatisfySystem) {
  testkit::Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = rng.uniform(1, 6), cols = rng.uniform(1, 6);
    const Matrix<Rational> a = random_matrix(rng, rows, cols);
    std::vector<Rational> x0(cols);
    for (auto& x : x0) x = rng.rational(7, 3);
    const std::vector<Rational> b = mat_vec(a, x0);
    const LinearSolution s = solve_linear_exact(a, b);
    ASSERT_NE(s.status, SolveStatus::inconsistent);
    EXPECT_EQ(mat_vec(a, s.solution), b);
    for (const auto& k : s.nullspace) EXPECT_EQ(mat_vec(a, k), std::vector<Rational>(rows));
    EXPECT_EQ(s.rank + s.nullspace.size(), static_cast<std::size_t>(cols));
  }
}

TEST(Linalg, AdjugateOverDiffPoly) {
  const DiffPoly x = DiffPoly::var(1, 1), y = DiffPoly::var(2, 1), z = DiffPoly::var(1, 0);
  const Matrix<DiffPoly> m{{x, y, DiffPoly(0)}, {y, z, x}, {DiffPoly(1), x, y}};
  const auto [det, adj] = det_adjugate(m);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      DiffPoly s;
      for (int k = 0; k < 3; ++k) s += m[i][k] * adj[k][j];
      EXPECT_EQ(s, i == j ? det : DiffPoly(0));
    }
}
