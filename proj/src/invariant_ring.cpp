#include "landau/invariant_ring.hpp"

#include <algorithm>
#include <functional>

namespace landau {

namespace {

std::string mono_str(const VSpacePtr& space, const VMono& m) {
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += space->names[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

bool divides(const VMono& a, const VMono& b) {  // a | b componentwise
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

InvariantRing::InvariantRing(VSpacePtr xspace, VSpacePtr jspace, std::vector<VPoly> expansions,
                             const std::vector<std::pair<VPoly, VPoly>>& relations,
                             std::vector<Matrix> generators)
    : xspace_(std::move(xspace)),
      jspace_(std::move(jspace)),
      expansions_(std::move(expansions)),
      generators_(std::move(generators)) {
  const int n = xspace_->size();
  const int r = jspace_->size();
  if (static_cast<int>(expansions_.size()) != r)
    throw ValidationError("expected one expansion per invariant");

  for (size_t g = 0; g < generators_.size(); ++g) {
    const Matrix& M = generators_[g];
    if (M.rows != n || M.cols != n)
      throw ValidationError("group generator " + std::to_string(g + 1) + " is not " +
                            std::to_string(n) + "x" + std::to_string(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        RatFunc dot(M.tab);
        for (int k = 0; k < n; ++k) dot += M.at(k, i) * M.at(k, j);
        Rat want = i == j ? Rat(1) : Rat(0);
        if (!(dot == RatFunc(M.tab, want)))
          throw ValidationError("group generator " + std::to_string(g + 1) +
                                " is not orthogonal: (g^T g)[" + std::to_string(i + 1) + "][" +
                                std::to_string(j + 1) + "] = " + dot.str());
      }
  }

  for (int i = 0; i < r; ++i) {
    const VPoly& e = expansions_[i];
    if (e.is_zero() || !e.is_homogeneous() || e.degree() != jspace_->degrees[i])
      throw ValidationError("invariant " + jspace_->names[i] +
                            " is not homogeneous of its declared degree " +
                            std::to_string(jspace_->degrees[i]));
    if (!is_invariant(e))
      throw ValidationError("polynomial declared for " + jspace_->names[i] +
                            " is not invariant under the group");
  }

  for (const auto& [lhs_expr, rhs_expr] : relations) {
    VPoly rel = lhs_expr - rhs_expr;
    if (rel.is_zero()) throw ValidationError("relation is trivially 0 = 0");
    // largest monomial becomes the rewrite lhs
    auto it = std::prev(rel.terms().end());
    VMono lhs = it->first;
    RatFunc lead = it->second;
    VPoly rest(jspace_);
    for (const auto& [m, c] : rel.terms())
      if (m != lhs) rest.add_term(m, c);
    Syzygy s{lhs, (-rest).scaled(lead.inverse())};
    if (!(expand_to_x(VPoly::monomial(jspace_, s.lhs, RatFunc(jspace_->params, Rat(1)))) ==
          expand_to_x(s.rhs)))
      throw ValidationError("relation does not hold: " + mono_str(jspace_, s.lhs) +
                            " != " + s.rhs.str() + " after substituting the invariants");
    for (const auto& other : syzygies_)
      if (divides(other.lhs, s.lhs) || divides(s.lhs, other.lhs))
        throw ValidationError("rewrite rules overlap: " + mono_str(jspace_, other.lhs) + " and " +
                              mono_str(jspace_, s.lhs));
    syzygies_.push_back(std::move(s));
  }
}

PolyMap InvariantRing::group_action(int g) const {
  const Matrix& M = generators_[g];
  PolyMap map;
  for (int i = 0; i < M.rows; ++i) {
    VPoly comp(xspace_);
    for (int j = 0; j < M.cols; ++j) {
      VMono m(xspace_->size(), 0);
      m[j] = 1;
      comp.add_term(m, M.at(i, j));
    }
    map.push_back(std::move(comp));
  }
  return map;
}

bool InvariantRing::is_invariant(const VPoly& xpoly) const {
  for (size_t g = 0; g < generators_.size(); ++g)
    if (!(poly_substitute(xpoly, group_action(static_cast<int>(g)), -1) == xpoly)) return false;
  return true;
}

std::vector<VMono> InvariantRing::canonical_monomials(int degree) const {
  const int r = jspace_->size();
  std::vector<VMono> out;
  VMono cur(r, 0);
  std::function<void(int, int)> rec = [&](int idx, int remaining) {
    if (idx == r) {
      if (remaining == 0 && is_canonical(cur)) out.push_back(cur);
      return;
    }
    int d = jspace_->degrees[idx];
    for (int k = 0; k * d <= remaining; ++k) {
      cur[idx] = k;
      rec(idx + 1, remaining - k * d);
    }
    cur[idx] = 0;
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(),
            [](const VMono& a, const VMono& b) { return vmono_compare(a, b) > 0; });
  return out;
}

bool InvariantRing::is_canonical(const VMono& m) const {
  for (const auto& s : syzygies_)
    if (divides(s.lhs, m)) return false;
  return true;
}

VPoly InvariantRing::syzygy_reduce(VPoly jpoly) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [m, c] : jpoly.terms()) {
      for (const auto& s : syzygies_) {
        if (!divides(s.lhs, m)) continue;
        VMono rest = m;
        for (size_t i = 0; i < rest.size(); ++i) rest[i] -= s.lhs[i];
        VPoly replacement = s.rhs.scaled(c) * VPoly::monomial(jspace_, rest,
                                                              RatFunc(jspace_->params, Rat(1)));
        VPoly removed = VPoly::monomial(jspace_, m, c);
        jpoly = jpoly - removed + replacement;
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  return jpoly;
}

VPoly InvariantRing::expand_to_x(const VPoly& jpoly) const {
  return poly_substitute(jpoly, expansions_, -1);
}

VPoly InvariantRing::express_in_basis(const VPoly& xpoly) const {
  VPoly out(jspace_);
  for (const auto& [deg, part] : xpoly.decompose_by_degree()) {
    std::vector<VMono> basis = canonical_monomials(deg);
    if (basis.empty())
      throw NotExpressible("no invariant monomial has degree " + std::to_string(deg) +
                           ", but the polynomial has a degree-" + std::to_string(deg) + " part");
    std::vector<VPoly> expanded;
    expanded.reserve(basis.size());
    for (const auto& m : basis)
      expanded.push_back(expand_to_x(VPoly::monomial(jspace_, m, RatFunc(jspace_->params, Rat(1)))));
    // row index per x-monomial appearing anywhere
    std::map<VMono, int, VMonoLess> rows;
    auto row_of = [&](const VMono& m) {
      auto it = rows.find(m);
      if (it == rows.end()) it = rows.emplace(m, static_cast<int>(rows.size())).first;
      return it->second;
    };
    for (const auto& e : expanded)
      for (const auto& [m, c] : e.terms()) row_of(m);
    for (const auto& [m, c] : part.terms()) row_of(m);
    Matrix A(static_cast<int>(rows.size()), static_cast<int>(basis.size()), jspace_->params);
    std::vector<RatFunc> b(rows.size(), RatFunc(jspace_->params));
    for (size_t col = 0; col < expanded.size(); ++col)
      for (const auto& [m, c] : expanded[col].terms())
        A.at(row_of(m), static_cast<int>(col)) = c;
    for (const auto& [m, c] : part.terms()) b[row_of(m)] = c;
    LinearSolution sol;
    try {
      sol = rf_solve_linear(A, b);
    } catch (const InconsistentSystem& e) {
      VMono bad;
      for (const auto& [m, idx] : rows)
        if (idx == e.row) bad = m;
      throw NotExpressible("degree-" + std::to_string(deg) +
                           " part is not a combination of the invariant monomials: coefficient "
                           "of " + mono_str(xspace_, bad) + " cannot be matched (residual " +
                           e.residual.str() + ")");
    }
    if (!sol.kernel.empty()) {
      std::string combo;
      for (size_t i = 0; i < basis.size(); ++i) {
        if (sol.kernel[0][i].is_zero()) continue;
        if (!combo.empty()) combo += " + ";
        combo += "(" + sol.kernel[0][i].str() + ")*" + mono_str(jspace_, basis[i]);
      }
      throw AmbiguousBasis("invariant monomials of degree " + std::to_string(deg) +
                           " are linearly dependent: " + combo + " expands to 0");
    }
    for (size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], sol.particular[i]);
  }
  return out;
}

const std::vector<std::vector<VPoly>>& InvariantRing::p_matrix() const {
  if (!pmatrix_) {
    const int r = jspace_->size();
    std::vector<std::vector<VPoly>> P(r, std::vector<VPoly>(r, VPoly(jspace_)));
    for (int i = 0; i < r; ++i)
      for (int h = i; h < r; ++h) {
        VPoly dot(xspace_);
        for (int a = 0; a < xspace_->size(); ++a)
          dot = dot + expansions_[i].derivative(a) * expansions_[h].derivative(a);
        VPoly entry = express_in_basis(dot);
        P[i][h] = entry;
        P[h][i] = entry;
      }
    pmatrix_ = std::move(P);
  }
  return *pmatrix_;
}

VPoly InvariantRing::rho() const {
  VPoly r2(xspace_);
  for (int a = 0; a < xspace_->size(); ++a) {
    VMono m(xspace_->size(), 0);
    m[a] = 2;
    r2.add_term(m, RatFunc(xspace_->params, Rat(1)));
  }
  return express_in_basis(r2);
}

}  // namespace landau
