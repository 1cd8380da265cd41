#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dzid/rational.hpp"

namespace dzid {

template <class T>
using Matrix = std::vector<std::vector<T>>;

enum class SolveStatus { unique, inconsistent, underdetermined };

struct LinearSolution {
  SolveStatus status = SolveStatus::inconsistent;
  std::vector<Rational> solution;           // particular solution when not inconsistent
  std::vector<std::vector<Rational>> nullspace;
  std::size_t rank = 0;
};

/// Fraction-free (Bareiss) elimination with full pivoting on the row-scaled
/// integer system. Throws std::invalid_argument on ragged input or when
/// rhs.size() differs from the row count.
LinearSolution solve_linear_exact(const Matrix<Rational>& matrix, const std::vector<Rational>& rhs);

namespace detail {

template <class T>
Matrix<T> minor_of(const Matrix<T>& m, std::size_t row, std::size_t col) {
  Matrix<T> out;
  out.reserve(m.size() - 1);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    std::vector<T> r;
    r.reserve(m.size() - 1);
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != col) r.push_back(m[i][j]);
    out.push_back(std::move(r));
  }
  return out;
}

template <class T>
T laplace_det(const Matrix<T>& m) {
  if (m.empty()) return T(1);
  if (m.size() == 1) return m[0][0];
  if (m.size() == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  T det(0);
  for (std::size_t j = 0; j < m.size(); ++j) {
    T term = m[0][j] * laplace_det(minor_of(m, 0, j));
    if (j % 2 == 0)
      det = det + term;
    else
      det = det - term;
  }
  return det;
}

}  // namespace detail

/// Determinant and adjugate by cofactor expansion; works over any commutative
/// ring type constructible from an int. Intended for the small N of Frobenius
/// models, where no division is available.
template <class T>
std::pair<T, Matrix<T>> det_adjugate(const Matrix<T>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det_adjugate: matrix is not square");
  Matrix<T> adj(n, std::vector<T>(n, T(0)));
  if (n == 1) {
    adj[0][0] = T(1);
    return {m[0][0], adj};
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      T c = detail::laplace_det(detail::minor_of(m, i, j));
      adj[j][i] = ((i + j) % 2 == 0) ? c : T(0) - c;
    }
  T det(0);
  for (std::size_t j = 0; j < n; ++j) det = det + m[0][j] * adj[j][0];
  return {det, adj};
}

}  // namespace dzid
