#include "landau/reduction_pipeline.hpp"

#include <sstream>

#include "landau/errors.hpp"
#include "landau/series.hpp"

namespace landau {

namespace {

// Coefficients of the quadratic part, indexed by the degree-2 invariants.
std::vector<RatFunc> quadratic_coefficients(const InvariantRing& ring, const VPoly& canonical,
                                            int s) {
  const VSpacePtr& jspace = canonical.space();
  std::vector<RatFunc> c;
  c.reserve(s);
  for (int a = 0; a < s; ++a) {
    VMono unit(jspace->size(), 0);
    unit[a] = 1;
    c.push_back(canonical.coeff(unit));
  }
  return c;
}

// Pc[b] = sum_a c_a P[a][b]: the row vector the bracket contracts against.
std::vector<VPoly> bracket_row(const InvariantRing& ring, const std::vector<RatFunc>& c) {
  const auto& P = ring.p_matrix();
  const int r = static_cast<int>(ring.jspace()->size());
  const int s = static_cast<int>(c.size());
  std::vector<VPoly> row;
  row.reserve(r);
  for (int b = 0; b < r; ++b) {
    VPoly acc(ring.jspace());
    for (int a = 0; a < s; ++a) acc = acc + P[a][b].scaled(c[a]);
    row.push_back(acc);
  }
  return row;
}

VPoly bracket_image(const InvariantRing& ring, const std::vector<VPoly>& row, const VMono& mono) {
  VPoly g = VPoly::monomial(ring.jspace(), mono, RatFunc(ring.jspace()->params, Rat(1)));
  VPoly out(ring.jspace());
  const int r = static_cast<int>(ring.jspace()->size());
  for (int b = 0; b < r; ++b) {
    if (mono[b] == 0) continue;
    out = out + row[b] * g.derivative(b);
  }
  return ring.syzygy_reduce(out);
}

bool is_pure_zeta(const VMono& mono, int s) {
  for (int a = 0; a < s; ++a)
    if (mono[a] != 0) return false;
  return true;
}

// Assemble and solve one order, with an optional pinned target subtracted
// from the right-hand side.  `psi` must be canonical and homogeneous.
HomologicalStep bracket_step(const InvariantRing& ring, const KTensor& K,
                             const std::vector<RatFunc>& c, const std::vector<VPoly>& row, int m,
                             const VPoly& psi, const VPoly* target) {
  std::vector<VMono> basis = ring.canonical_monomials(m + 2);
  std::vector<VMono> cols;
  std::vector<VPoly> images;
  for (const VMono& mono : basis) {
    VPoly probe = VPoly::monomial(ring.jspace(), mono, RatFunc(ring.jspace()->params, Rat(1)));
    if (apply_L(ring, K, c, probe).is_zero()) continue;
    cols.push_back(mono);
    images.push_back(bracket_image(ring, row, mono));
  }
  VPoly rhs = target ? psi - *target : psi;
  HomologicalStep step = solve_step(ring, m, basis, cols, images, rhs);
  if (target) step.retained = step.retained + *target;
  return step;
}

void append_ledger(std::vector<PPoly>& ledger, const std::vector<PPoly>& more) {
  for (const PPoly& p : more) {
    bool seen = false;
    for (const PPoly& q : ledger)
      if (q == p) {
        seen = true;
        break;
      }
    if (!seen) ledger.push_back(p);
  }
}

}  // namespace

HomologicalStep reduce_order(const InvariantRing& ring, const VPoly& potential, int m) {
  if (m < 1) throw ValidationError("step order must be at least 1");
  VPoly canonical = ring.syzygy_reduce(potential);
  KTensor K = extract_quadratic_part(ring);
  std::vector<RatFunc> c = quadratic_coefficients(ring, canonical, K.s);
  std::vector<VPoly> row = bracket_row(ring, c);
  return bracket_step(ring, K, c, row, m, canonical.part_of_degree(m + 2), nullptr);
}

HomologicalStep reduce_top_order(const InvariantRing& ring, const VPoly& potential, int D) {
  if (D < 4 || D % 2 != 0) throw ValidationError("truncation degree must be even and at least 4");
  VPoly canonical = ring.syzygy_reduce(potential);
  KTensor K = extract_quadratic_part(ring);
  std::vector<RatFunc> c = quadratic_coefficients(ring, canonical, K.s);
  std::vector<VPoly> row = bracket_row(ring, c);
  VPoly target = ring.syzygy_reduce(ring.rho().pow_truncated(D / 2, -1));
  return bracket_step(ring, K, c, row, D - 2, canonical.part_of_degree(D), &target);
}

ReductionReport run_reduction(const LandauProblem& problem) {
  const InvariantRing& ring = *problem.ring;
  const int D = problem.truncation_degree;
  if (D < 2 || D % 2 != 0) throw ValidationError("truncation degree must be a positive even integer");

  ReductionReport report;
  report.original_terms = problem.potential.num_terms();
  report.original = ring.syzygy_reduce(problem.potential);
  report.pinned = VPoly(ring.jspace());
  if (report.original.degree() > D)
    throw ValidationError("potential contains terms above the truncation degree");

  int top_invariant_degree = 0;
  for (int d : ring.jspace()->degrees) top_invariant_degree = std::max(top_invariant_degree, d);
  if (D < 2 * top_invariant_degree) {
    std::ostringstream w;
    w << "truncation degree " << D << " is below twice the top invariant degree "
      << top_invariant_degree << "; the reduced form may not capture a generic minimum";
    report.warnings.push_back(w.str());
  }

  KTensor K = extract_quadratic_part(ring);
  std::vector<RatFunc> c = quadratic_coefficients(ring, report.original, K.s);
  std::vector<VPoly> row = bracket_row(ring, c);

  VPoly phi_x = ring.expand_to_x(report.original);
  PolyMap S = identity_map(ring.xspace());
  bool moved = false;

  for (int m = 1; m <= D - 2; ++m) {
    const int degree = m + 2;
    if (ring.canonical_monomials(degree).empty()) continue;

    VPoly psi = ring.express_in_basis(phi_x.part_of_degree(degree));
    const bool top = (m == D - 2) && problem.top_rho;
    VPoly target(ring.jspace());
    if (top) {
      target = ring.syzygy_reduce(ring.rho().pow_truncated(D / 2, -1));
      report.pinned = target;
      if (psi.is_zero())
        report.warnings.push_back(
            "top-degree part of the potential vanishes; the pinned target is introduced by the "
            "final transformation");
    }

    HomologicalStep step = bracket_step(ring, K, c, row, m, psi, top ? &target : nullptr);

    // Anything left at this order beyond the pinned target is genuinely stuck;
    // flag it unless it lives purely on invariants without a quadratic factor.
    VPoly residual = step.retained - target;
    for (const auto& [mono, coef] : residual.terms()) {
      if (is_pure_zeta(mono, K.s)) continue;
      std::ostringstream w;
      w << "order " << m << ": coefficient of " << VPoly::monomial(ring.jspace(), mono,
                                                                    RatFunc(ring.jspace()->params, Rat(1)))
                                                       .str()
        << " was retained; the quadratic part does not reach it at these parameter values";
      report.warnings.push_back(w.str());
    }

    if (!step.chi.is_zero()) {
      VPoly chi_x = ring.expand_to_x(step.chi);
      PolyMap T;
      const int n = static_cast<int>(ring.xspace()->size());
      T.reserve(n);
      for (int a = 0; a < n; ++a)
        T.push_back(VPoly::var(ring.xspace(), a) - chi_x.derivative(a));

      VPoly next = poly_substitute(phi_x, T, D);
      for (int k = 2; k < degree; ++k)
        if (!(next.part_of_degree(k) == phi_x.part_of_degree(k)))
          throw ComputationError("step invariant violated: a lower order changed during order " +
                                 std::to_string(m));
      if (!(next.part_of_degree(degree) == ring.expand_to_x(step.retained)))
        throw ComputationError("step invariant violated: retained part mismatch at order " +
                               std::to_string(m));
      phi_x = next;
      S = compose_maps(S, T, D);
      moved = true;
    }

    append_ledger(report.ledger, step.ledger);
    report.steps.push_back(std::move(step));
  }

  report.reduced = ring.express_in_basis(phi_x);
  report.inverse_map = S;
  report.forward_map = moved ? series_invert(S, D) : identity_map(ring.xspace());
  report.remaining = (report.reduced - report.pinned).num_terms();
  report.eliminated = report.original_terms - report.remaining;
  return report;
}

}  // namespace landau
