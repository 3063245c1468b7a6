#pragma once

#include <map>
#include <string>
#include <vector>

#include "landau/invariant_ring.hpp"
#include "landau/reduction_pipeline.hpp"
#include "landau/series.hpp"

namespace landau {

// ---------------------------------------------------------------- numerics

enum class Stability { Minimum, Saddle, Maximum, Degenerate };

std::string stability_str(Stability s);

struct CriticalPoint {
  std::vector<double> x;
  std::vector<double> J_values;
  double value = 0.0;  // potential at x
  double gradient_norm = 0.0;
  std::vector<double> hessian_eigenvalues;  // ascending
  Stability stability = Stability::Degenerate;
  std::vector<int> isotropy;  // generator indices fixing x within tolerance
};

struct SearchConfig {
  double box = 2.0;         // multi-start grid spans [-box, box]^m
  int grid_per_axis = 11;
  double tol_grad = 1e-10;
  double tol_eig = 1e-8;
  double dedup_distance = 1e-6;
  int newton_max_iters = 100;
  unsigned seed = 0;  // reserved; the grid search itself is deterministic
};

// numeric values for every table symbol: parameters from `params`, extension
// symbols from the real root of their defining relation.
std::map<int, double> numeric_symbol_values(const SymTabPtr& tab,
                                            const std::map<int, Rat>& params);

// Multi-start Newton search for critical points of an x-space potential with
// fully numeric coefficients. Results are sorted, deduplicated, and completed
// to whole group orbits; rerunning with the same inputs reproduces the list.
std::vector<CriticalPoint> critical_points(const InvariantRing& ring,
                                           const VPoly& potential_x,
                                           const std::map<int, double>& params,
                                           const SearchConfig& cfg = {});

// symmetric-matrix eigenvalues (Jacobi rotations), ascending
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> h);

// ----------------------------------------------------- orbit-space gradient

// One closed-form branch J_var = shift + scale * base^(1/root); root == 1
// means the rational value `shift` alone.
struct OrbitBranch {
  int var = -1;
  RatFunc shift, scale, base;
  int root = 1;
  std::string display;
};

struct OrbitGradientSystem {
  std::vector<VPoly> equations;           // equations[a] = dPsi/dJ_a, canonical
  std::vector<OrbitBranch> branches;      // closed-form solved coordinates
  std::vector<std::string> inconsistent;  // nonzero-constant equations
  std::vector<int> unsolved;              // J indices left for numeric work
};

OrbitGradientSystem orbit_gradient_system(const InvariantRing& ring, const VPoly& reduced);

// ------------------------------------------------------------ singular locus

struct FactoredPoly {
  Rat content = Rat(1);
  std::vector<std::pair<VPoly, int>> factors;  // x-space irreducible factors
  bool factored = true;  // false when exact factorization was unavailable
};

struct SingularLocus {
  // row/column index subsets (ascending) identifying each maximal minor, in
  // lexicographic order; a square gradient matrix yields the single full det
  std::vector<std::pair<std::vector<int>, std::vector<int>>> labels;
  std::vector<VPoly> minors;  // determinants of the labelled submatrices
  std::vector<FactoredPoly> factored;
};

SingularLocus singular_locus(const InvariantRing& ring);

// --------------------------------------------------------------- verification

struct VerifyConfig {
  int trials = 100;
  double radius = 0.1;
  unsigned seed = 1;
  std::map<int, Rat> numeric_params;  // enables the critical-point transport leg
};

struct VerifyReport {
  bool symbolic_zero = false;  // (original o inverse) - reduced == 0 through D
  int trials = 0;
  int ledger_redraws = 0;
  double max_defect_ratio = 0.0;  // max |difference| / |x|^(D+1), bound 10
  bool numeric_ok = false;
  double max_fd_rel = 0.0;  // finite-difference vs symbolic gradient
  bool fd_ok = false;
  int minima_transported = 0;
  double max_transported_grad = 0.0;
  bool transport_ok = true;  // vacuously true when no numeric parameters given
  std::vector<std::string> notes;
};

VerifyReport verify_equivalence(const InvariantRing& ring, const ReductionReport& rep,
                                int degree, const VerifyConfig& cfg = {});

}  // namespace landau
