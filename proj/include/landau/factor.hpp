#pragma once
// Exact factorization over the rationals.
//
// Univariate: content/primitive split, Yun squarefree decomposition,
// Cantor-Zassenhaus modulo a small prime, linear Hensel lifting, Zassenhaus
// subset recombination.
//
// Multivariate: per-variable monomial content extraction, then Kronecker
// substitution x_i -> t^(B^i) to a univariate image, whose integer factors are
// recombined into multivariate factors by digit expansion + exact division.
// Sound for any input (candidates are verified by division); complete as long
// as the effort caps are not hit, which desk-scale inputs never approach.

#include <optional>
#include <vector>

#include "landau/ppoly.hpp"
#include "landau/rat.hpp"

namespace landau {

struct Factorization {
  Rat content = Rat(0);  // rational content (and sign)
  // Primitive irreducible factors with positive leading coefficient, sorted by
  // PPoly::compare, with multiplicities.
  std::vector<std::pair<PPoly, int>> factors;
};

// Factors a polynomial with no extension symbols. Throws std::invalid_argument
// if extension symbols are present, std::runtime_error if an effort cap is hit.
Factorization factor_ppoly(const PPoly& p);

// Univariate convenience used for characteristic polynomials: coefficients
// ascending by degree. Returns content and irreducible primitive factors
// (coefficient vectors, ascending), each with multiplicity.
struct UnivariateFactorization {
  Rat content = Rat(0);
  std::vector<std::pair<std::vector<Int>, int>> factors;
};
UnivariateFactorization factor_univariate(const std::vector<Rat>& coeffs);

}  // namespace landau
