#ifndef POLYSUB_LINALG_HPP
#define POLYSUB_LINALG_HPP

// Exact linear algebra over the rationals: square solves, rank,
// affine-system consistency and nullspace directions.

#include <optional>
#include <utility>

#include "polysub/rational.hpp"

namespace polysub {

/// Solves A x = b for square A by exact Gaussian elimination.
/// Returns nullopt when det(A) = 0.
inline std::optional<RVec> solve_square(RMat A, RVec b) {
  const std::size_t d = A.size();
  for (const auto& row : A)
    if (row.size() != d) throw std::invalid_argument("solve_square: not square");
  if (b.size() != d) throw std::invalid_argument("solve_square: size mismatch");

  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && A[piv][col] == 0) ++piv;
    if (piv == d) return std::nullopt;
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < d; ++r) {
      if (A[r][col] == 0) continue;
      Rational f = A[r][col] / A[col][col];
      for (std::size_t c = col; c < d; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  RVec x(d);
  for (std::size_t r = d; r-- > 0;) {
    Rational s = b[r];
    for (std::size_t c = r + 1; c < d; ++c) s -= A[r][c] * x[c];
    x[r] = s / A[r][r];
  }
  return x;
}

/// Exact rank via elimination.
inline int rank(RMat A) {
  if (A.empty()) return 0;
  const std::size_t rows = A.size();
  const std::size_t cols = A[0].size();
  int rk = 0;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && A[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    for (std::size_t rr = r + 1; rr < rows; ++rr) {
      if (A[rr][col] == 0) continue;
      Rational f = A[rr][col] / A[r][col];
      for (std::size_t c = col; c < cols; ++c) A[rr][c] -= f * A[r][c];
    }
    ++r;
    ++rk;
  }
  return rk;
}

struct AffineSolution {
  bool consistent = false;
  int rank_a = 0;
  std::optional<RVec> point;  // a particular solution (free variables = 0)
};

/// Row-reduces [A | b]; reports consistency, rank(A) and one solution.
inline AffineSolution solve_affine(RMat A, RVec b) {
  AffineSolution out;
  const std::size_t rows = A.size();
  if (b.size() != rows) throw std::invalid_argument("solve_affine: size mismatch");
  if (rows == 0) {
    out.consistent = true;
    out.point = RVec{};
    return out;
  }
  const std::size_t cols = A[0].size();
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && A[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    std::swap(b[piv], b[r]);
    for (std::size_t rr = 0; rr < rows; ++rr) {
      if (rr == r || A[rr][col] == 0) continue;
      Rational f = A[rr][col] / A[r][col];
      for (std::size_t c = col; c < cols; ++c) A[rr][c] -= f * A[r][c];
      b[rr] -= f * b[r];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++r;
  }
  out.rank_a = static_cast<int>(r);
  for (std::size_t rr = r; rr < rows; ++rr)
    if (b[rr] != 0) return out;  // 0 = nonzero: inconsistent
  out.consistent = true;
  RVec x(cols, Rational(0));
  for (std::size_t k = 0; k < pivot_col.size(); ++k)
    x[pivot_col[k]] = b[k] / A[k][pivot_col[k]];
  out.point = std::move(x);
  return out;
}

/// A nonzero direction u with A u = 0.  Pre: nullity(A) >= 1 in `dim` variables.
/// Deterministic: uses the first free column of the reduced system.
inline RVec nullspace_direction(RMat A, int dim) {
  const std::size_t cols = static_cast<std::size_t>(dim);
  for (const auto& row : A)
    if (row.size() != cols) throw std::invalid_argument("nullspace_direction: bad row width");
  std::vector<int> pivot_col;
  std::size_t r = 0;
  const std::size_t rows = A.size();
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && A[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    for (std::size_t rr = 0; rr < rows; ++rr) {
      if (rr == r || A[rr][col] == 0) continue;
      Rational f = A[rr][col] / A[r][col];
      for (std::size_t c = col; c < cols; ++c) A[rr][c] -= f * A[r][c];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++r;
  }
  int free_col = -1;
  {
    std::size_t k = 0;
    for (std::size_t col = 0; col < cols; ++col) {
      if (k < pivot_col.size() && pivot_col[k] == static_cast<int>(col)) {
        ++k;
        continue;
      }
      free_col = static_cast<int>(col);
      break;
    }
  }
  if (free_col < 0) throw std::invalid_argument("nullspace_direction: trivial nullspace");
  RVec u(cols, Rational(0));
  u[free_col] = 1;
  for (std::size_t k = 0; k < pivot_col.size(); ++k)
    u[pivot_col[k]] = -A[k][free_col] / A[k][pivot_col[k]];
  return u;
}

}  // namespace polysub

#endif  // POLYSUB_LINALG_HPP
