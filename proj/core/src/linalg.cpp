#include "dzid/linalg.hpp"

#include <numeric>

namespace dzid {

LinearSolution solve_linear_exact(const Matrix<Rational>& matrix, const std::vector<Rational>& rhs) {
  const std::size_t m = matrix.size();
  if (rhs.size() != m) throw std::invalid_argument("solve_linear_exact: rhs length does not match row count");
  const std::size_t n = m == 0 ? 0 : matrix[0].size();
  for (const auto& row : matrix)
    if (row.size() != n) throw std::invalid_argument("solve_linear_exact: ragged matrix");

  // Integer augmented matrix, one row scaled by the lcm of its denominators.
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    BigInt l = rhs[i].denominator();
    for (const auto& x : matrix[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i][j] = matrix[i][j].numerator() * (l / matrix[i][j].denominator());
    a[i][n] = rhs[i].numerator() * (l / rhs[i].denominator());
  }

  std::vector<std::size_t> col(n);
  std::iota(col.begin(), col.end(), 0);
  BigInt prev = 1;
  std::size_t r = 0;
  for (; r < std::min(m, n); ++r) {
    // Full pivoting: smallest nonzero magnitude in the trailing block.
    std::size_t pi = m, pj = n;
    for (std::size_t i = r; i < m; ++i)
      for (std::size_t j = r; j < n; ++j)
        if (sgn(a[i][j]) != 0 && (pi == m || mpz_cmpabs(a[i][j].get_mpz_t(), a[pi][pj].get_mpz_t()) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    std::swap(a[r], a[pi]);
    if (pj != r) {
      for (auto& row : a) std::swap(row[r], row[pj]);
      std::swap(col[r], col[pj]);
    }
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = r + 1; j <= n; ++j) {
        a[i][j] = a[r][r] * a[i][j] - a[i][r] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][r] = 0;
    }
    prev = a[r][r];
  }

  LinearSolution out;
  out.rank = r;
  for (std::size_t i = r; i < m; ++i)
    if (sgn(a[i][n]) != 0) {
      out.status = SolveStatus::inconsistent;
      return out;
    }

  auto back_substitute = [&](std::size_t free_index, bool homogeneous) {
    std::vector<Rational> y(n, Rational(0));
    if (homogeneous) y[free_index] = 1;
    for (std::size_t k = r; k-- > 0;) {
      Rational acc = homogeneous ? Rational(0) : Rational(a[k][n]);
      for (std::size_t j = k + 1; j < n; ++j)
        if (!y[j].is_zero()) acc -= Rational(a[k][j]) * y[j];
      y[k] = acc / Rational(a[k][k]);
    }
    std::vector<Rational> x(n);
    for (std::size_t j = 0; j < n; ++j) x[col[j]] = y[j];
    return x;
  };

  out.solution = back_substitute(0, false);
  for (std::size_t f = r; f < n; ++f) out.nullspace.push_back(back_substitute(f, true));
  out.status = out.nullspace.empty() ? SolveStatus::unique : SolveStatus::underdetermined;
  return out;
}

}  // namespace dzid
