#pragma once

#include <string>
#include <vector>

#include "landau/homological.hpp"

namespace landau {

// The Q-matrix has an eigenvalue whose geometric multiplicity falls short of
// its algebraic one, so no basis of eigenvectors exists.
struct NonSemisimple : ComputationError {
  explicit NonSemisimple(const std::string& what) : ComputationError(what) {}
};

// A linear change Z = A J of the quadratic invariants putting Q into Jordan
// form P = A Q A^{-1} = P_s + P_n.
struct AdaptedBasis {
  Matrix A;
  Matrix A_inv;
  Matrix P;                          // A Q A^{-1}, verified Jordan
  Matrix P_s;                        // diagonal part
  Matrix P_n;                        // strictly super-diagonal nilpotent part
  std::vector<RatFunc> eigenvalues;  // diagonal of P_s
  std::vector<VPoly> Z_j;            // Z_mu over the original invariants
  std::vector<VPoly> Z_x;            // the same, expanded to x
};

enum class ResonanceVerdict { Resonant, Nonresonant, Conditional };

struct ResonanceClass {
  VMono monomial;               // canonical J-monomial exponents
  RatFunc weight;               // lambda . k over the quadratic exponents
  ResonanceVerdict verdict;
  std::vector<PPoly> factors;   // for Conditional: factors that may vanish
};

// Verify a user-supplied adapting matrix: P = A Q A^{-1} must be in Jordan
// form (diagonal plus unit super-diagonal entries inside equal-eigenvalue
// blocks). Throws ValidationError when A is singular or P is not Jordan,
// naming the offending entry.
AdaptedBasis adapt(const InvariantRing& ring, const Matrix& Q, const Matrix& A);

// For Q with all entries rational: exact eigendecomposition when the
// characteristic polynomial splits over the rationals. Throws NonSemisimple
// when a rational eigenvalue is defective, ComputationError when irrational
// eigenvalues make the exact path impossible (use numeric_eigenvalues then).
AdaptedBasis auto_adapt(const InvariantRing& ring, const Matrix& Q);

// Eigenvalues of a numeric matrix of size <= 3, sorted ascending (closed
// forms; requires all eigenvalues real).
std::vector<double> numeric_eigenvalues(const Matrix& Q);

// Classify every canonical monomial of the induced degree against the
// eigenvalues of the semisimple part: weight 0 -> resonant; otherwise factor
// the weight and discount factors dividing some eigenvalue numerator (their
// vanishing degenerates the quadratic form itself); anything left ->
// conditional on those factors.
std::vector<ResonanceClass> classify_resonances(const InvariantRing& ring,
                                                const std::vector<RatFunc>& eigenvalues,
                                                int degree);

// Order-m homological solve in adapted coordinates: per-monomial division by
// the weight for non-resonant monomials, resonant coefficients retained.
HomologicalStep diagonal_solve(const InvariantRing& ring,
                               const std::vector<RatFunc>& eigenvalues, int order,
                               const VPoly& psi);

}  // namespace landau
