#pragma once

#include <vector>

#include "landau/invariant_ring.hpp"

namespace landau {

// K^gamma_{alpha,beta}: the structure constants of the quadratic block of the
// P-matrix, P^(0)_{alpha,beta} = K^gamma_{alpha,beta} J_gamma, where alpha,
// beta, gamma all range over the degree-2 invariants (the first s of the MIB).
struct KTensor {
  int s = 0;
  std::vector<RatFunc> k;  // s*s*s, [alpha][beta][gamma]

  const RatFunc& at(int a, int b, int g) const { return k[(a * s + b) * s + g]; }
  RatFunc& at(int a, int b, int g) { return k[(a * s + b) * s + g]; }
};

// Requires the degree-2 invariants to be a prefix of the MIB; throws
// ValidationError otherwise.
KTensor extract_quadratic_part(const InvariantRing& ring);

// Q_beta^gamma = c^alpha K^gamma_{alpha,beta} (row beta, column gamma); `c`
// holds the quadratic coefficients of the potential, one per degree-2
// invariant.
Matrix q_matrix(const KTensor& K, const std::vector<RatFunc>& c);

// The homological operator of the quadratic block:
//   L0(chi) = c^alpha P^(0)_{alpha,beta} d(chi)/d(J_beta),
// returned in canonical (relation-reduced) form.
VPoly apply_L(const InvariantRing& ring, const KTensor& K, const std::vector<RatFunc>& c,
              const VPoly& chi);

struct HomologicalStep {
  int order = 0;                  // step order m; acts on degree m+2
  std::vector<VMono> basis;       // canonical monomials of degree m+2, descending
  std::vector<VMono> columns;     // monomials admitted as chi components
  Matrix action_matrix;           // basis-row coefficients of the operator on each column
  VPoly chi;                      // generator actually used (free components zero)
  VPoly removed;                  // image of chi = part of psi eliminated
  VPoly retained;                 // psi - removed
  std::vector<PPoly> ledger;      // pivot-numerator factors, discovery order
};

// Assemble the action matrix for the given column images and solve
// operator(chi) = psi as far as possible (free components zero, unreachable
// components retained). `psi` must be homogeneous canonical of degree
// `order` + 2.
HomologicalStep solve_step(const InvariantRing& ring, int order, const std::vector<VMono>& basis,
                           const std::vector<VMono>& col_monos,
                           const std::vector<VPoly>& col_images, const VPoly& psi);

// Module-level solve with the L0 operator over the full canonical basis.
HomologicalStep solve_homological(const InvariantRing& ring, const KTensor& K,
                                  const std::vector<RatFunc>& c, int order, const VPoly& psi);

}  // namespace landau
