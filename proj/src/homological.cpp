#include "landau/homological.hpp"

namespace landau {

KTensor extract_quadratic_part(const InvariantRing& ring) {
  const VSpacePtr& js = ring.jspace();
  int s = 0;
  while (s < js->size() && js->degrees[s] == 2) ++s;
  for (int i = s; i < js->size(); ++i)
    if (js->degrees[i] == 2)
      throw ValidationError("degree-2 invariants must come first in the basis (" + js->names[i] +
                            " is out of place)");
  KTensor K;
  K.s = s;
  K.k.assign(static_cast<size_t>(s) * s * s, RatFunc(js->params));
  const auto& P = ring.p_matrix();
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b)
      for (const auto& [m, coef] : P[a][b].terms()) {
        int g = -1;
        bool unit = true;
        int total = 0;
        for (int i = 0; i < js->size(); ++i) {
          total += m[i];
          if (m[i] == 1 && g < 0)
            g = i;
          else if (m[i] != 0)
            unit = false;
        }
        // the quadratic block is linear in the degree-2 invariants
        if (!unit || total != 1 || g >= s)
          throw ValidationError("quadratic block of the P-matrix is not linear in the "
                                "degree-2 invariants");
        K.at(a, b, g) = coef;
      }
  return K;
}

Matrix q_matrix(const KTensor& K, const std::vector<RatFunc>& c) {
  const int s = K.s;
  if (static_cast<int>(c.size()) != s)
    throw ValidationError("expected " + std::to_string(s) +
                          " quadratic coefficients, got " + std::to_string(c.size()));
  SymTabPtr tab = c.empty() ? SymTabPtr() : c[0].table();
  Matrix Q(s, s, tab);
  for (int b = 0; b < s; ++b)
    for (int g = 0; g < s; ++g)
      for (int a = 0; a < s; ++a) Q.at(b, g) += c[a] * K.at(a, b, g);
  return Q;
}

VPoly apply_L(const InvariantRing& ring, const KTensor& K, const std::vector<RatFunc>& c,
              const VPoly& chi) {
  const VSpacePtr& js = ring.jspace();
  if (static_cast<int>(c.size()) != K.s)
    throw ValidationError("expected " + std::to_string(K.s) + " quadratic coefficients, got " +
                          std::to_string(c.size()));
  VPoly out(js);
  for (int b = 0; b < K.s; ++b) {
    VPoly dchi = chi.derivative(b);
    if (dchi.is_zero()) continue;
    // multiplier = sum_{a,g} c_a K^g_{a,b} J_g
    VPoly mult(js);
    for (int g = 0; g < K.s; ++g) {
      RatFunc coef(js->params);
      for (int a = 0; a < K.s; ++a) coef += c[a] * K.at(a, b, g);
      if (coef.is_zero()) continue;
      VMono m(js->size(), 0);
      m[g] = 1;
      mult.add_term(m, coef);
    }
    out = out + mult * dchi;
  }
  return ring.syzygy_reduce(out);
}

HomologicalStep solve_step(const InvariantRing& ring, int order, const std::vector<VMono>& basis,
                           const std::vector<VMono>& col_monos,
                           const std::vector<VPoly>& col_images, const VPoly& psi) {
  const VSpacePtr& js = ring.jspace();
  HomologicalStep st;
  st.order = order;
  st.basis = basis;
  st.columns = col_monos;
  st.chi = VPoly(js);
  st.removed = VPoly(js);

  std::map<VMono, int, VMonoLess> row_of;
  for (size_t i = 0; i < basis.size(); ++i) row_of[basis[i]] = static_cast<int>(i);

  Matrix A(static_cast<int>(basis.size()), static_cast<int>(col_monos.size()), js->params);
  for (size_t col = 0; col < col_images.size(); ++col)
    for (const auto& [m, coef] : col_images[col].terms()) {
      auto it = row_of.find(m);
      if (it == row_of.end())
        throw ComputationError("operator image leaves the degree-" + std::to_string(order + 2) +
                               " canonical basis");
      A.at(it->second, static_cast<int>(col)) = coef;
    }
  st.action_matrix = A;

  std::vector<RatFunc> b(basis.size(), RatFunc(js->params));
  for (const auto& [m, coef] : psi.terms()) {
    auto it = row_of.find(m);
    if (it == row_of.end())
      throw ComputationError("right-hand side is not supported on the degree-" +
                             std::to_string(order + 2) + " canonical basis");
    b[it->second] = coef;
  }

  std::vector<RatFunc> residual;
  LinearSolution sol = rf_solve_least(A, b, residual);
  st.ledger = sol.ledger;
  for (size_t col = 0; col < col_monos.size(); ++col)
    st.chi.add_term(col_monos[col], sol.particular[col]);
  for (size_t row = 0; row < basis.size(); ++row) {
    RatFunc rem = b[row] - residual[row];
    st.removed.add_term(basis[row], rem);
  }
  st.retained = psi - st.removed;
  return st;
}

HomologicalStep solve_homological(const InvariantRing& ring, const KTensor& K,
                                  const std::vector<RatFunc>& c, int order, const VPoly& psi) {
  std::vector<VMono> basis = ring.canonical_monomials(order + 2);
  std::vector<VPoly> images;
  images.reserve(basis.size());
  for (const auto& m : basis)
    images.push_back(
        apply_L(ring, K, c, VPoly::monomial(ring.jspace(), m, RatFunc(ring.jspace()->params, Rat(1)))));
  return solve_step(ring, order, basis, basis, images, psi);
}

}  // namespace landau
