#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "landau/linalg.hpp"
#include "landau/series.hpp"
#include "landau/vpoly.hpp"

namespace landau {

// An invariant monomial combination could be written in the canonical basis in
// more than one way: the declared relations do not cut the basis down enough.
struct AmbiguousBasis : ValidationError {
  explicit AmbiguousBasis(const std::string& what) : ValidationError(what) {}
};

// The polynomial is not a combination of the canonical invariant monomials of
// its degree (e.g. it is not actually G-invariant, or the basis is incomplete).
struct NotExpressible : ValidationError {
  explicit NotExpressible(const std::string& what) : ValidationError(what) {}
};

// An oriented rewrite rule: the monomial `lhs` equals the polynomial `rhs`,
// and every monomial of `rhs` is strictly smaller than `lhs`.
struct Syzygy {
  VMono lhs;
  VPoly rhs;
};

// A minimal integrity basis J1..Jr for a compact group action on x1..xn,
// with its relations and the generator matrices of the group.
class InvariantRing {
 public:
  // `relations` are unoriented equalities (lhs expression, rhs expression);
  // orientation is derived from the monomial order. Throws ValidationError if
  // a generator is not orthogonal, an invariant is not homogeneous of its
  // declared degree or not invariant, or a relation does not hold identically.
  InvariantRing(VSpacePtr xspace, VSpacePtr jspace, std::vector<VPoly> expansions,
                const std::vector<std::pair<VPoly, VPoly>>& relations,
                std::vector<Matrix> generators);

  const VSpacePtr& xspace() const { return xspace_; }
  const VSpacePtr& jspace() const { return jspace_; }
  const std::vector<VPoly>& expansions() const { return expansions_; }
  const std::vector<Syzygy>& syzygies() const { return syzygies_; }
  const std::vector<Matrix>& generators() const { return generators_; }

  // the action of generator g as a linear polynomial map x -> g.x
  PolyMap group_action(int g) const;

  // true if the x-space polynomial is fixed by every generator
  bool is_invariant(const VPoly& xpoly) const;

  // exponent vectors k with sum k_i deg(J_i) == degree, no syzygy lhs
  // dividing them, sorted descending
  std::vector<VMono> canonical_monomials(int degree) const;
  bool is_canonical(const VMono& m) const;

  // rewrite with the oriented relations until canonical
  VPoly syzygy_reduce(VPoly jpoly) const;

  // substitute the x-expansions of the invariants
  VPoly expand_to_x(const VPoly& jpoly) const;

  // write an invariant x-space polynomial over the canonical monomials
  // (each homogeneous part separately); throws NotExpressible/AmbiguousBasis
  VPoly express_in_basis(const VPoly& xpoly) const;

  // P_ih = <grad J_i, grad J_h>, expressed over the canonical monomials
  const std::vector<std::vector<VPoly>>& p_matrix() const;

  // |x|^2 expressed over the canonical monomials
  VPoly rho() const;

 private:
  VSpacePtr xspace_;
  VSpacePtr jspace_;
  std::vector<VPoly> expansions_;
  std::vector<Syzygy> syzygies_;
  std::vector<Matrix> generators_;
  mutable std::optional<std::vector<std::vector<VPoly>>> pmatrix_;
};

}  // namespace landau
