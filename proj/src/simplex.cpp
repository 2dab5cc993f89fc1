#include "affdem/simplex.hpp"

#include <stdexcept>

namespace affdem {

FeasibilityResult solve_feasibility(const std::vector<RationalVector>& A, const RationalVector& b)
{
  const std::size_t m = A.size();
  if (b.size() != m)
    throw std::invalid_argument("row count mismatch");
  const std::size_t n = m == 0 ? 0 : A[0].size();
  for (const auto& row : A)
    if (row.size() != n)
      throw std::invalid_argument("ragged constraint matrix");

  // Columns 0..n-1 are x, n..n+m-1 artificials, n+m is the right-hand side.
  const std::size_t cols = n + m + 1;
  std::vector<RationalVector> T(m, RationalVector(cols));
  std::vector<int> sign(m, 1);
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    sign[r] = b[r] < 0 ? -1 : 1;
    for (std::size_t c = 0; c < n; ++c)
      T[r][c] = sign[r] * A[r][c];
    T[r][n + r] = 1;
    T[r][n + m] = sign[r] * b[r];
    basis[r] = n + r;
  }
  // Reduced costs of the phase-one objective sum(artificials).
  RationalVector cost(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    if (c >= n && c < n + m)
      continue;
    for (std::size_t r = 0; r < m; ++r)
      cost[c] -= T[r][c];
  }

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t c = 0; c + 1 < cols; ++c)
      if (cost[c] < 0) {
        enter = c;
        break;
      }
    if (enter == cols)
      break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (T[r][enter] <= 0)
        continue;
      Rational ratio = T[r][n + m] / T[r][enter];
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m)
      throw std::logic_error("phase-one objective unbounded");
    Rational pivot = T[leave][enter];
    for (auto& entry : T[leave])
      entry /= pivot;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || T[r][enter] == 0)
        continue;
      Rational f = T[r][enter];
      for (std::size_t c = 0; c < cols; ++c)
        T[r][c] -= f * T[leave][c];
    }
    if (cost[enter] != 0) {
      Rational f = cost[enter];
      for (std::size_t c = 0; c < cols; ++c)
        cost[c] -= f * T[leave][c];
    }
    basis[leave] = enter;
  }

  FeasibilityResult out;
  out.feasible = cost[n + m] == 0;
  if (out.feasible) {
    out.x.assign(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r)
      if (basis[r] < n)
        out.x[basis[r]] = T[r][n + m];
  } else {
    out.farkas.resize(m);
    for (std::size_t r = 0; r < m; ++r)
      out.farkas[r] = sign[r] * (1 - cost[n + r]);
  }
  return out;
}

} // namespace affdem
