#pragma once

#include <memory>
#include <string>
#include <vector>

#include "landau/homological.hpp"

namespace landau {

// A truncated invariant potential over a fixed integrity basis.
struct LandauProblem {
  std::shared_ptr<InvariantRing> ring;
  VPoly potential;         // J-space, written form (not yet relation-reduced)
  int truncation_degree;   // D, even
  bool top_rho = true;     // pin the degree-D part to rho^{D/2}
};

struct ReductionReport {
  VPoly original;                 // canonical form of the input potential
  VPoly reduced;                  // canonical form after all steps
  VPoly pinned;                   // canonical rho^{D/2} when pinned, else 0
  std::vector<HomologicalStep> steps;
  PolyMap inverse_map;            // original coordinates as a function of final ones
  PolyMap forward_map;            // its series inverse
  std::vector<PPoly> ledger;      // all pivot factors, discovery order, once each
  int original_terms = 0;         // coefficient slots of the written potential
  int remaining = 0;              // free coefficients of the reduced form
  int eliminated = 0;             // original_terms - remaining
  std::vector<std::string> warnings;
};

// One Poincare step at order m (acting on degree m+2) against the current
// potential: solves the full-P bracket restricted to monomials the quadratic
// operator reaches. `potential` is the current canonical J-space potential.
HomologicalStep reduce_order(const InvariantRing& ring, const VPoly& potential, int m);

// The top step (m = D-2): same solve, but against psi_D - rho^{D/2}.
HomologicalStep reduce_top_order(const InvariantRing& ring, const VPoly& potential, int D);

// Run the whole cascade m = 1..D-2 with exact coordinate-map bookkeeping.
ReductionReport run_reduction(const LandauProblem& problem);

}  // namespace landau
