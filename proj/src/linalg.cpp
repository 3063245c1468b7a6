#include "landau/linalg.hpp"

#include <algorithm>

namespace landau {

void ledger_merge(std::vector<PPoly>& ledger, const std::vector<std::pair<PPoly, int>>& factors) {
  for (const auto& [f, e] : factors) {
    if (f.is_constant()) continue;
    bool seen = false;
    for (const auto& g : ledger)
      if (PPoly::compare(g, f) == 0) {
        seen = true;
        break;
      }
    if (!seen) ledger.push_back(f);
  }
}

namespace {

LinearSolution solve_core(const Matrix& A, const std::vector<RatFunc>& b, bool allow_residual) {
  const int n = A.rows, m = A.cols;
  Matrix w = A;
  std::vector<RatFunc> rhs = b;
  std::vector<int> pivot_row_of_col(m, -1);
  std::vector<bool> used(n, false);
  LinearSolution out;

  for (int col = 0; col < m; ++col) {
    int prow = -1;
    for (int r = 0; r < n; ++r)
      if (!used[r] && !w.at(r, col).is_zero()) {
        prow = r;
        break;
      }
    if (prow < 0) continue;
    used[prow] = true;
    pivot_row_of_col[col] = prow;
    out.pivot_cols.push_back(col);
    RatFunc inv = w.at(prow, col).inverse();
    ledger_merge(out.ledger, inv.den());
    for (int j = col; j < m; ++j) w.at(prow, j) *= inv;
    rhs[prow] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == prow || w.at(r, col).is_zero()) continue;
      RatFunc f = w.at(r, col);
      for (int j = col; j < m; ++j) w.at(r, j) -= f * w.at(prow, j);
      rhs[r] -= f * rhs[prow];
    }
  }

  if (!allow_residual)
    for (int r = 0; r < n; ++r)
      if (!used[r] && !rhs[r].is_zero())
        throw InconsistentSystem(r, rhs[r],
                                 "linear system is inconsistent: reduced row " + std::to_string(r) +
                                     " reads 0 = " + rhs[r].str());

  out.particular.assign(m, RatFunc(A.tab));
  for (int col = 0; col < m; ++col)
    if (pivot_row_of_col[col] >= 0) out.particular[col] = rhs[pivot_row_of_col[col]];

  for (int f = 0; f < m; ++f) {
    if (pivot_row_of_col[f] >= 0) continue;
    std::vector<RatFunc> v(m, RatFunc(A.tab));
    v[f] = RatFunc(A.tab, Rat(1));
    for (int col = 0; col < m; ++col)
      if (pivot_row_of_col[col] >= 0) v[col] = -w.at(pivot_row_of_col[col], f);
    for (int i = 0; i < m; ++i) {
      if (v[i].is_zero()) continue;
      RatFunc s = v[i].inverse();
      for (int j = 0; j < m; ++j) v[j] *= s;
      break;
    }
    out.kernel.push_back(std::move(v));
  }
  return out;
}

}  // namespace

LinearSolution rf_solve_linear(const Matrix& A, const std::vector<RatFunc>& b) {
  return solve_core(A, b, false);
}

LinearSolution rf_solve_least(const Matrix& A, const std::vector<RatFunc>& b,
                              std::vector<RatFunc>& residual) {
  LinearSolution sol = solve_core(A, b, true);
  residual = b;
  for (int r = 0; r < A.rows; ++r)
    for (int c = 0; c < A.cols; ++c)
      if (!A.at(r, c).is_zero() && !sol.particular[c].is_zero())
        residual[r] -= A.at(r, c) * sol.particular[c];
  return sol;
}

Matrix mat_mul(const Matrix& A, const Matrix& B) {
  Matrix C(A.rows, B.cols, A.tab);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      if (A.at(i, k).is_zero()) continue;
      for (int j = 0; j < B.cols; ++j) C.at(i, j) += A.at(i, k) * B.at(k, j);
    }
  return C;
}

Matrix mat_inverse(const Matrix& A) {
  const int n = A.rows;
  Matrix w = A;
  Matrix inv(n, n, A.tab);
  for (int i = 0; i < n; ++i) inv.at(i, i) = RatFunc(A.tab, Rat(1));
  std::vector<bool> used(n, false);
  std::vector<int> prow_of_col(n, -1);
  for (int col = 0; col < n; ++col) {
    int prow = -1;
    for (int r = 0; r < n; ++r)
      if (!used[r] && !w.at(r, col).is_zero()) {
        prow = r;
        break;
      }
    if (prow < 0) throw ComputationError("matrix is singular: no pivot in column " +
                                         std::to_string(col));
    used[prow] = true;
    prow_of_col[col] = prow;
    RatFunc s = w.at(prow, col).inverse();
    for (int j = 0; j < n; ++j) {
      w.at(prow, j) *= s;
      inv.at(prow, j) *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == prow || w.at(r, col).is_zero()) continue;
      RatFunc f = w.at(r, col);
      for (int j = 0; j < n; ++j) {
        w.at(r, j) -= f * w.at(prow, j);
        inv.at(r, j) -= f * inv.at(prow, j);
      }
    }
  }
  // rows of `inv` are permuted: row prow_of_col[c] holds row c of the inverse
  Matrix out(n, n, A.tab);
  for (int c = 0; c < n; ++c)
    for (int j = 0; j < n; ++j) out.at(c, j) = inv.at(prow_of_col[c], j);
  return out;
}

namespace {

RatFunc det_rec(const Matrix& A, std::vector<int>& rows, int col, std::vector<RatFunc>& memo,
                std::vector<bool>& have, unsigned mask) {
  const int n = A.rows;
  if (col == n) return RatFunc(A.tab, Rat(1));
  if (have[mask]) return memo[mask];
  RatFunc acc(A.tab);
  int sign = 1;
  for (size_t k = 0; k < rows.size(); ++k) {
    int r = rows[k];
    if (!A.at(r, col).is_zero()) {
      std::vector<int> rest;
      rest.reserve(rows.size() - 1);
      for (size_t j = 0; j < rows.size(); ++j)
        if (j != k) rest.push_back(rows[j]);
      RatFunc sub = det_rec(A, rest, col + 1, memo, have, mask & ~(1u << r));
      RatFunc term = A.at(r, col) * sub;
      acc = sign > 0 ? acc + term : acc - term;
    }
    sign = -sign;
  }
  have[mask] = true;
  memo[mask] = acc;
  return acc;
}

}  // namespace

RatFunc mat_det(const Matrix& A) {
  const int n = A.rows;
  if (n == 0) return RatFunc(A.tab, Rat(1));
  if (n > 16) throw ComputationError("determinant size cap exceeded");
  std::vector<RatFunc> memo(1u << n, RatFunc(A.tab));
  std::vector<bool> have(1u << n, false);
  std::vector<int> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = i;
  return det_rec(A, rows, 0, memo, have, (1u << n) - 1);
}

}  // namespace landau
