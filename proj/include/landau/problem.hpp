#pragma once
// Problem-file model: the documented text format, its parser (with line and
// column diagnostics), and the canonical printer that round-trips.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "landau/invariant_ring.hpp"
#include "landau/reduction_pipeline.hpp"

namespace landau {

// One named invariant as written: `invariant J1 = x^2 degree 2`.
struct InvariantDecl {
  std::string name;
  VPoly expansion;  // over the order-parameter variables
  int degree = 0;
};

// `extension beta^2 = 1 + delta^2`: a new algebraic symbol with its monic
// defining relation over previously declared symbols.
struct ExtensionDecl {
  std::string symbol;
  int index = -1;  // symbol-table slot
  int degree = 0;  // exponent of the monic left-hand side
  PPoly rhs;
};

struct ProblemOptions {
  std::string top_order_target = "rho";  // "rho" | "none"
  std::optional<Matrix> adapt_matrix;    // r x r over the parameters
  std::map<int, Rat> numeric_params;     // symbol index -> exact value
  std::uint64_t seed = 1;
};

// A parsed and statically validated problem file. Expressions are stored in
// canonical polynomial form; `print_problem` reproduces an equivalent file.
struct ProblemFile {
  SymTabPtr table;
  VSpacePtr xspace;  // order-parameter variables, all of degree 1
  VSpacePtr jspace;  // invariant names with their declared degrees

  std::vector<std::string> variables;
  std::vector<int> quadratic_params;  // table indices, declaration order
  std::vector<int> higher_params;
  std::vector<int> auxiliary_params;
  std::vector<ExtensionDecl> extensions;
  std::vector<Matrix> group;  // generator matrices over the parameter field
  std::vector<InvariantDecl> invariants;
  std::vector<std::pair<VPoly, VPoly>> syzygies;  // unoriented equalities
  std::optional<VPoly> potential;                 // over the invariant names
  int truncation_degree = -1;
  ProblemOptions options;

  // `map x = ...` components (invert inputs); empty for ordinary problems.
  PolyMap map_components;

  // Build the invariant ring (runs the full semantic checks: orthogonal
  // generators, invariance, homogeneity, relations hold identically).
  std::shared_ptr<InvariantRing> make_ring() const;

  LandauProblem make_problem(const std::shared_ptr<InvariantRing>& ring) const;
};

// Parse the documented problem format. Throws ValidationError with a
// "line L, column C" prefix on syntax errors, unknown identifiers, odd
// truncation degree, inhomogeneous invariants, and malformed statements.
ProblemFile parse_problem(const std::string& text);

// Parse a coordinate-map file (the `invert` input): `variables`, optional
// parameter declarations, `degree`, and one `map <var> = <expr>` statement
// per variable.
ProblemFile parse_map_file(const std::string& text);

// Canonical text form; parsing it again reproduces the same canonical form
// byte for byte.
std::string print_problem(const ProblemFile& p);

// Canonical, re-parseable rendering of a polynomial (used by the printer and
// the text reports).
std::string expr_str(const VPoly& p);
std::string param_expr_str(const RatFunc& c);  // polynomial coefficients only

}  // namespace landau
