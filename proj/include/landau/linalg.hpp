#pragma once

#include <vector>

#include "landau/errors.hpp"
#include "landau/ratfunc.hpp"

namespace landau {

// Dense matrix over the rational-function field.
struct Matrix {
  int rows = 0;
  int cols = 0;
  SymTabPtr tab;
  std::vector<RatFunc> a;

  Matrix() = default;
  Matrix(int r, int c, SymTabPtr t)
      : rows(r), cols(c), tab(std::move(t)), a(static_cast<size_t>(r) * c, RatFunc(tab)) {}

  RatFunc& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const RatFunc& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// A x = b has no solution; `row` is the index of a zero row of the reduced
// system whose right-hand side is nonzero (an inconsistency certificate).
struct InconsistentSystem : ComputationError {
  int row;
  RatFunc residual;
  InconsistentSystem(int r, RatFunc res, const std::string& what)
      : ComputationError(what), row(r), residual(std::move(res)) {}
};

struct LinearSolution {
  std::vector<RatFunc> particular;          // free variables set to zero
  std::vector<std::vector<RatFunc>> kernel; // first nonzero coordinate is +1
  std::vector<PPoly> ledger;                // distinct irreducible pivot-numerator
                                            // factors in pivot-discovery order
  std::vector<int> pivot_cols;
};

// Gauss-Jordan over RatFunc. Pivoting is deterministic: columns in order, the
// pivot is the first structurally nonzero entry in a row not yet used.
LinearSolution rf_solve_linear(const Matrix& A, const std::vector<RatFunc>& b);

// Same elimination, but instead of throwing on inconsistency returns the best
// partial solution (pivot equations satisfied, free variables zero) and the
// residual b - A x in `residual`.
LinearSolution rf_solve_least(const Matrix& A, const std::vector<RatFunc>& b,
                              std::vector<RatFunc>& residual);

Matrix mat_mul(const Matrix& A, const Matrix& B);
Matrix mat_inverse(const Matrix& A);  // throws ComputationError when singular
RatFunc mat_det(const Matrix& A);

// append new factors to the ledger in discovery order, skipping constants
void ledger_merge(std::vector<PPoly>& ledger, const std::vector<std::pair<PPoly, int>>& factors);

}  // namespace landau
