#include "landau/orbit_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "landau/factor.hpp"

namespace landau {

namespace {

// ----------------------------------------------------------- small numerics

double vnorm(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Gaussian elimination with partial pivoting; false when near-singular.
bool lin_solve(std::vector<std::vector<double>> A, std::vector<double> b,
               std::vector<double>& out) {
  const int n = static_cast<int>(b.size());
  double scale = 1e-300;
  for (const auto& row : A)
    for (double v : row) scale = std::max(scale, std::abs(v));
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(A[i][k]) > std::abs(A[piv][k])) piv = i;
    if (std::abs(A[piv][k]) < 1e-13 * scale) return false;
    std::swap(A[piv], A[k]);
    std::swap(b[piv], b[k]);
    for (int i = k + 1; i < n; ++i) {
      double f = A[i][k] / A[k][k];
      for (int j = k; j < n; ++j) A[i][j] -= f * A[k][j];
      b[i] -= f * b[k];
    }
  }
  out.assign(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= A[i][j] * out[j];
    out[i] = s / A[i][i];
  }
  return true;
}

// deterministic uniform draw in [0,1) from the engine's specified sequence
double unit_draw(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * (1.0 / 9007199254740992.0);
}

// Evaluate a fully parameter-substituted polynomial at an exact rational
// point (per-variable power cache).  Every coefficient must be constant.
Rat vpoly_eval_rat(const VPoly& f, const std::vector<Rat>& x) {
  const int m = static_cast<int>(x.size());
  std::vector<std::vector<Rat>> pw(m, std::vector<Rat>{Rat(1)});
  Rat acc(0);
  for (const auto& [mono, coef] : f.terms()) {
    Rat t = coef.constant_value();
    for (int i = 0; i < m; ++i) {
      while (static_cast<int>(pw[i].size()) <= mono[i])
        pw[i].push_back(pw[i].back() * x[i]);
      if (mono[i] > 0) t *= pw[i][mono[i]];
    }
    acc += t;
  }
  return acc;
}

struct NumericPotential {
  int m;
  const VPoly* phi;
  std::vector<VPoly> grad;
  std::vector<std::vector<VPoly>> hess;
  const std::map<int, double>* params;

  NumericPotential(const VPoly& p, int mm, const std::map<int, double>& pm)
      : m(mm), phi(&p), params(&pm) {
    for (int i = 0; i < m; ++i) grad.push_back(p.derivative(i));
    for (int i = 0; i < m; ++i) {
      hess.emplace_back();
      for (int j = 0; j < m; ++j) hess.back().push_back(grad[i].derivative(j));
    }
  }
  double value(const std::vector<double>& x) const { return phi->eval_double(x, *params); }
  std::vector<double> gradient(const std::vector<double>& x) const {
    std::vector<double> g(m);
    for (int i = 0; i < m; ++i) g[i] = grad[i].eval_double(x, *params);
    return g;
  }
  std::vector<std::vector<double>> hessian(const std::vector<double>& x) const {
    std::vector<std::vector<double>> h(m, std::vector<double>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) h[i][j] = hess[i][j].eval_double(x, *params);
    return h;
  }
};

// Newton with Levenberg fallback; true when |grad| converges below target.
bool newton_polish(const NumericPotential& f, std::vector<double>& x, int max_iters,
                   double accept, double escape_radius) {
  for (int it = 0; it < max_iters; ++it) {
    std::vector<double> g = f.gradient(x);
    if (vnorm(g) <= 1e-14) break;
    std::vector<std::vector<double>> h = f.hessian(x);
    std::vector<double> rhs(f.m), step;
    for (int i = 0; i < f.m; ++i) rhs[i] = -g[i];
    bool ok = false;
    for (double mu : {0.0, 1e-10, 1e-6, 1e-3, 1e-1, 1.0, 10.0}) {
      std::vector<std::vector<double>> hm = h;
      for (int i = 0; i < f.m; ++i) hm[i][i] += mu;
      if (lin_solve(hm, rhs, step)) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
    double sn = vnorm(step);
    if (sn > 1.0)
      for (double& v : step) v /= sn;  // trust-region style cap
    for (int i = 0; i < f.m; ++i) x[i] += step[i];
    if (vnorm(x) > escape_radius) return false;
  }
  return vnorm(f.gradient(x)) <= accept;
}

// finite group closure of the generator matrices, deduplicated numerically
std::vector<std::vector<std::vector<double>>> group_closure(
    const std::vector<std::vector<std::vector<double>>>& gens, int m) {
  std::vector<std::vector<std::vector<double>>> elems;
  std::vector<std::vector<double>> id(m, std::vector<double>(m, 0.0));
  for (int i = 0; i < m; ++i) id[i][i] = 1.0;
  elems.push_back(id);
  auto close_to = [&](const std::vector<std::vector<double>>& a,
                      const std::vector<std::vector<double>>& b) {
    double d = 0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
    return d < 1e-9;
  };
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      std::vector<std::vector<double>> prod(m, std::vector<double>(m, 0.0));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          for (int k = 0; k < m; ++k) prod[i][j] += g[i][k] * elems[head][k][j];
      bool seen = false;
      for (const auto& e : elems)
        if (close_to(e, prod)) {
          seen = true;
          break;
        }
      if (!seen) {
        if (elems.size() >= 1024)
          throw ComputationError(
              "group closure exceeded 1024 elements; orbit completion aborted");
        elems.push_back(std::move(prod));
      }
    }
  }
  return elems;
}

CriticalPoint make_point(const InvariantRing& ring, const NumericPotential& f,
                         const std::vector<double>& x, const std::map<int, double>& params,
                         const SearchConfig& cfg) {
  CriticalPoint p;
  p.x = x;
  p.value = f.value(x);
  p.gradient_norm = vnorm(f.gradient(x));
  for (const VPoly& J : ring.expansions()) p.J_values.push_back(J.eval_double(x, params));
  p.hessian_eigenvalues = symmetric_eigenvalues(f.hessian(x));
  bool zero = false, pos = false, neg = false;
  for (double e : p.hessian_eigenvalues) {
    if (std::abs(e) <= cfg.tol_eig)
      zero = true;
    else if (e > 0)
      pos = true;
    else
      neg = true;
  }
  p.stability = zero  ? Stability::Degenerate
                : !neg ? Stability::Minimum
                : !pos ? Stability::Maximum
                       : Stability::Saddle;
  const int m = static_cast<int>(x.size());
  for (size_t gi = 0; gi < ring.generators().size(); ++gi) {
    const Matrix& g = ring.generators()[gi];
    double moved = 0;
    for (int i = 0; i < m; ++i) {
      double yi = 0;
      for (int j = 0; j < m; ++j) yi += g.at(i, j).eval_double(params) * x[j];
      moved = std::max(moved, std::abs(yi - x[i]));
    }
    if (moved <= 1e-8) p.isotropy.push_back(static_cast<int>(gi));
  }
  return p;
}

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i] - 1e-15) return true;
    if (a[i] > b[i] + 1e-15) return false;
  }
  return false;
}

// ------------------------------------------------- VPoly <-> PPoly bridging

// determinant of a small VPoly matrix by Laplace expansion on the first row
VPoly vpoly_det(const std::vector<std::vector<VPoly>>& M, const VSpacePtr& space) {
  const int n = static_cast<int>(M.size());
  if (n == 0) return VPoly(space);
  if (n == 1) return M[0][0];
  VPoly acc(space);
  for (int j = 0; j < n; ++j) {
    if (M[0][j].is_zero()) continue;
    std::vector<std::vector<VPoly>> sub;
    for (int i = 1; i < n; ++i) {
      sub.emplace_back();
      for (int k = 0; k < n; ++k)
        if (k != j) sub.back().push_back(M[i][k]);
    }
    VPoly term = M[0][j] * vpoly_det(sub, space);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

std::string stability_str(Stability s) {
  switch (s) {
    case Stability::Minimum: return "minimum";
    case Stability::Saddle: return "saddle";
    case Stability::Maximum: return "maximum";
    default: return "degenerate";
  }
}

std::map<int, double> numeric_symbol_values(const SymTabPtr& tab,
                                            const std::map<int, Rat>& params) {
  std::map<int, double> out;
  for (int i = 0; i < tab->size(); ++i) {
    if (tab->is_extension(i)) {
      const ExtensionRelation& rel = tab->relation(i);
      if (rel.degree <= 0)
        throw ComputationError("extension symbol '" + tab->name(i) +
                               "' has no defining relation");
      double rhs = 0.0;
      for (const auto& [expvec, coef] : rel.rhs_terms) {
        double term = coef.get_d();
        for (size_t j = 0; j < expvec.size(); ++j) {
          if (expvec[j] == 0) continue;
          auto it = out.find(static_cast<int>(j));
          if (it == out.end())
            throw ComputationError("extension relation for '" + tab->name(i) +
                                   "' references '" + tab->name(static_cast<int>(j)) +
                                   "', which has no numeric value");
          term *= std::pow(it->second, expvec[j]);
        }
        rhs += term;
      }
      if (rel.degree % 2 == 0 && rhs < 0)
        throw ComputationError("extension symbol '" + tab->name(i) +
                               "' has negative radicand at the given parameter values");
      out[i] = std::copysign(std::pow(std::abs(rhs), 1.0 / rel.degree), rhs);
    } else {
      auto it = params.find(i);
      if (it != params.end()) out[i] = it->second.get_d();
    }
  }
  return out;
}

std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> h) {
  const int n = static_cast<int>(h.size());
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += h[i][j] * h[i][j];
    double diag = 1e-300;
    for (int i = 0; i < n; ++i) diag = std::max(diag, std::abs(h[i][i]));
    if (std::sqrt(off) < 1e-15 * diag) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(h[p][q]) < 1e-300) continue;
        double theta = (h[q][q] - h[p][p]) / (2 * h[p][q]);
        double t = std::copysign(1.0, theta) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < n; ++k) {
          double hkp = h[k][p], hkq = h[k][q];
          h[k][p] = c * hkp - s * hkq;
          h[k][q] = s * hkp + c * hkq;
        }
        for (int k = 0; k < n; ++k) {
          double hpk = h[p][k], hqk = h[q][k];
          h[p][k] = c * hpk - s * hqk;
          h[q][k] = s * hpk + c * hqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = h[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<CriticalPoint> critical_points(const InvariantRing& ring,
                                           const VPoly& potential_x,
                                           const std::map<int, double>& params,
                                           const SearchConfig& cfg) {
  const int m = static_cast<int>(ring.xspace()->names.size());
  NumericPotential f(potential_x, m, params);

  // deterministic multi-start grid on [-box, box]^m
  std::vector<std::vector<double>> found;  // accepted raw points
  std::vector<int> idx(m, 0);
  const int n = std::max(2, cfg.grid_per_axis);
  while (true) {
    std::vector<double> x(m);
    for (int i = 0; i < m; ++i) x[i] = -cfg.box + 2 * cfg.box * idx[i] / (n - 1);
    if (newton_polish(f, x, cfg.newton_max_iters, cfg.tol_grad, 10 * cfg.box))
      found.push_back(std::move(x));
    int d = m - 1;
    while (d >= 0 && ++idx[d] == n) idx[d--] = 0;
    if (d < 0) break;
  }

  // deterministic dedup: sort, then greedy merge keeping the smaller residual
  std::sort(found.begin(), found.end(), lex_less);
  std::vector<std::vector<double>> reps;
  for (const auto& x : found) {
    bool merged = false;
    for (auto& r : reps) {
      double d2 = 0;
      for (int i = 0; i < m; ++i) d2 += (x[i] - r[i]) * (x[i] - r[i]);
      if (std::sqrt(d2) <= cfg.dedup_distance) {
        if (vnorm(f.gradient(x)) < vnorm(f.gradient(r))) r = x;
        merged = true;
        break;
      }
    }
    if (!merged) reps.push_back(x);
  }

  // complete every point to its whole group orbit
  std::vector<std::vector<std::vector<double>>> gens;
  for (const Matrix& g : ring.generators()) {
    std::vector<std::vector<double>> gm(m, std::vector<double>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) gm[i][j] = g.at(i, j).eval_double(params);
    gens.push_back(std::move(gm));
  }
  auto elems = group_closure(gens, m);
  std::vector<std::vector<double>> completed = reps;
  for (const auto& x : reps)
    for (const auto& e : elems) {
      std::vector<double> y(m, 0.0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) y[i] += e[i][j] * x[j];
      bool seen = false;
      for (const auto& r : completed) {
        double d2 = 0;
        for (int i = 0; i < m; ++i) d2 += (y[i] - r[i]) * (y[i] - r[i]);
        if (std::sqrt(d2) <= cfg.dedup_distance) {
          seen = true;
          break;
        }
      }
      if (!seen) completed.push_back(std::move(y));
    }
  std::sort(completed.begin(), completed.end(), lex_less);

  std::vector<CriticalPoint> out;
  for (const auto& x : completed) {
    CriticalPoint p = make_point(ring, f, x, params, cfg);
    if (p.gradient_norm <= cfg.tol_grad) out.push_back(std::move(p));
  }
  return out;
}

OrbitGradientSystem orbit_gradient_system(const InvariantRing& ring, const VPoly& reduced) {
  const VSpacePtr& js = ring.jspace();
  const SymTabPtr& tab = js->params;
  const int r = static_cast<int>(js->names.size());
  OrbitGradientSystem sys;
  VPoly psi = ring.syzygy_reduce(reduced);
  for (int a = 0; a < r; ++a) sys.equations.push_back(psi.derivative(a));

  RatFunc one(tab, Rat(1)), two(tab, Rat(2)), four(tab, Rat(4));
  std::vector<int> pending;  // indices of equations needing the joint pass
  std::vector<bool> var_unsolved(r, false);

  for (int a = 0; a < r; ++a) {
    const VPoly& eq = sys.equations[a];
    if (eq.is_zero()) continue;

    // variables actually present
    std::vector<int> vars;
    bool constant_term = false;
    int max_total = 0;
    for (const auto& [mono, coef] : eq.terms()) {
      int total = 0;
      for (int v = 0; v < r; ++v)
        if (mono[v] > 0) {
          total += mono[v];
          if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
        }
      if (total == 0) constant_term = true;
      max_total = std::max(max_total, total);
    }

    if (vars.empty()) {
      std::ostringstream msg;
      msg << "d(Psi)/d(" << js->names[a] << ") = " << eq.str()
          << " never vanishes; no critical point in the orbit-space interior unless "
          << eq.str() << " = 0";
      sys.inconsistent.push_back(msg.str());
      continue;
    }

    if (vars.size() == 1) {
      const int v = vars[0];
      std::map<int, RatFunc> coeffs;  // exponent of J_v -> coefficient
      for (const auto& [mono, coef] : eq.terms()) coeffs[mono[v]] = coef;
      auto cf = [&](int e) {
        auto it = coeffs.find(e);
        return it == coeffs.end() ? RatFunc(tab) : it->second;
      };
      const int deg = coeffs.rbegin()->first;
      if (deg == 1) {
        OrbitBranch br;
        br.var = v;
        br.shift = RatFunc(tab) - cf(0) / cf(1);
        br.display = js->names[v] + " = " + br.shift.str();
        sys.branches.push_back(std::move(br));
        continue;
      }
      if (deg == 2) {
        RatFunc a2 = cf(2), a1 = cf(1), a0 = cf(0);
        RatFunc shift = (RatFunc(tab) - a1) / (two * a2);
        RatFunc base = a1 * a1 - four * a2 * a0;
        for (int sign : {+1, -1}) {
          OrbitBranch br;
          br.var = v;
          br.shift = shift;
          br.scale = (sign > 0 ? one : RatFunc(tab) - one) / (two * a2);
          br.base = base;
          br.root = 2;
          std::ostringstream d;
          d << js->names[v] << " = ";
          if (!br.shift.is_zero()) d << br.shift.str() << " + ";
          d << "(" << br.scale.str() << ")*(" << br.base.str() << ")^(1/2)";
          br.display = d.str();
          sys.branches.push_back(std::move(br));
        }
        continue;
      }
      if (coeffs.size() == 2 && constant_term) {  // binomial a0 + an J^n
        OrbitBranch br;
        br.var = v;
        br.scale = one;
        br.base = (RatFunc(tab) - cf(0)) / cf(deg);
        br.root = deg;
        std::ostringstream d;
        d << js->names[v] << " = (" << br.base.str() << ")^(1/" << deg << ")";
        if (deg % 2 == 0) d << "  [real only when the radicand is nonnegative]";
        br.display = d.str();
        sys.branches.push_back(std::move(br));
        continue;
      }
      var_unsolved[v] = true;
      continue;
    }

    if (max_total <= 1) {
      pending.push_back(a);
      continue;
    }
    for (int v : vars) var_unsolved[v] = true;
  }

  // joint pass: equations affine-linear in their variables, solved as a system
  if (!pending.empty()) {
    std::vector<int> wvars;
    for (int a : pending)
      for (const auto& [mono, coef] : sys.equations[a].terms())
        for (int v = 0; v < r; ++v)
          if (mono[v] > 0 && std::find(wvars.begin(), wvars.end(), v) == wvars.end())
            wvars.push_back(v);
    std::sort(wvars.begin(), wvars.end());
    bool solved = false;
    if (wvars.size() == pending.size()) {
      Matrix A(static_cast<int>(pending.size()), static_cast<int>(wvars.size()), tab);
      std::vector<RatFunc> b(pending.size(), RatFunc(tab));
      for (size_t e = 0; e < pending.size(); ++e)
        for (const auto& [mono, coef] : sys.equations[pending[e]].terms()) {
          int which = -1;
          for (size_t w = 0; w < wvars.size(); ++w)
            if (mono[wvars[w]] == 1) which = static_cast<int>(w);
          if (which < 0)
            b[e] = b[e] - coef;  // constant term moved to the right-hand side
          else
            A.at(static_cast<int>(e), which) = coef;
        }
      try {
        LinearSolution sol = rf_solve_linear(A, b);
        if (sol.kernel.empty()) {
          for (size_t w = 0; w < wvars.size(); ++w) {
            OrbitBranch br;
            br.var = wvars[w];
            br.shift = sol.particular[w];
            br.display = js->names[wvars[w]] + " = " + br.shift.str();
            sys.branches.push_back(std::move(br));
          }
          solved = true;
        }
      } catch (const InconsistentSystem&) {
        sys.inconsistent.push_back(
            "the linear subsystem of orbit-space gradient equations is inconsistent");
        solved = true;  // reported; nothing left to solve numerically
      }
    }
    if (!solved)
      for (int v : wvars) var_unsolved[v] = true;
  }

  for (int v = 0; v < r; ++v)
    if (var_unsolved[v]) sys.unsolved.push_back(v);
  return sys;
}

SingularLocus singular_locus(const InvariantRing& ring) {
  const VSpacePtr& xs = ring.xspace();
  const int m = static_cast<int>(xs->names.size());
  const int r = static_cast<int>(ring.expansions().size());
  const int k = std::min(r, m);

  std::vector<std::vector<VPoly>> D;
  for (int i = 0; i < r; ++i) {
    D.emplace_back();
    for (int a = 0; a < m; ++a) D.back().push_back(ring.expansions()[i].derivative(a));
  }

  // ascending k-subsets in lexicographic order
  auto subsets = [&](int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      out.push_back(pick);
      int i = k - 1;
      while (i >= 0 && pick[i] == total - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
  };

  SingularLocus loc;
  for (const auto& rows : subsets(r))
    for (const auto& cols : subsets(m)) {
      std::vector<std::vector<VPoly>> sub;
      for (int i : rows) {
        sub.emplace_back();
        for (int j : cols) sub.back().push_back(D[i][j]);
      }
      loc.labels.emplace_back(rows, cols);
      loc.minors.push_back(vpoly_det(sub, xs));
    }

  // exact factorization over the rationals (x-variables as free symbols)
  auto ftab = std::make_shared<SymbolTable>();
  for (const std::string& nm : xs->names) ftab->add(nm, SymbolKind::Auxiliary);
  SymTabPtr ft = ftab;
  for (const VPoly& minor : loc.minors) {
    FactoredPoly fp;
    bool convertible = true;
    PPoly as_ppoly(ft);
    for (const auto& [mono, coef] : minor.terms()) {
      if (!coef.is_constant()) {
        convertible = false;
        break;
      }
      PPoly term = PPoly::constant(ft, coef.constant_value());
      for (int a = 0; a < m; ++a)
        if (mono[a] > 0) term = term * PPoly::symbol(ft, a, mono[a]);
      as_ppoly = as_ppoly + term;
    }
    if (convertible && !minor.is_zero()) {
      try {
        Factorization fac = factor_ppoly(as_ppoly);
        fp.content = fac.content;
        for (const auto& [f, e] : fac.factors) {
          VPoly vf(xs);
          for (const auto& [pm, c] : f.terms()) {
            VMono vm(m, 0);
            for (int a = 0; a < m; ++a) vm[a] = pm[a];
            vf.add_term(vm, RatFunc(xs->params, c));
          }
          fp.factors.emplace_back(std::move(vf), e);
        }
      } catch (const std::invalid_argument&) {
        convertible = false;
      }
    }
    if (!convertible) {
      fp.factored = false;
      fp.content = Rat(1);
      if (!minor.is_zero()) fp.factors.emplace_back(minor, 1);
    }
    loc.factored.push_back(std::move(fp));
  }
  return loc;
}

VerifyReport verify_equivalence(const InvariantRing& ring, const ReductionReport& rep,
                                int degree, const VerifyConfig& cfg) {
  const VSpacePtr& xs = ring.xspace();
  const SymTabPtr& tab = xs->params;
  const int m = static_cast<int>(xs->names.size());
  VerifyReport out;
  out.trials = cfg.trials;

  VPoly orig_x = ring.expand_to_x(rep.original);
  VPoly red_x = ring.expand_to_x(rep.reduced);

  // (a) exact: original composed with the inverse map agrees through degree D
  VPoly diff = poly_substitute(orig_x, rep.inverse_map, degree) - red_x;
  out.symbolic_zero = diff.is_zero();
  if (!out.symbolic_zero)
    out.notes.push_back("symbolic residual through degree " + std::to_string(degree) +
                        ": " + diff.str());

  // (b) numeric spot checks at random parameters (away from ledger zeros)
  std::mt19937_64 gen(cfg.seed);
  auto draw_params = [&](std::map<int, Rat>& assign) {
    while (true) {
      assign.clear();
      // O(1)-normalized draws keep the composition tail commensurate with
      // the fixed acceptance bound: integer quadratic coefficients in
      // [-3, 3] \ {0}, higher coefficients with magnitude below one.
      for (int i = 0; i < tab->size(); ++i) {
        if (tab->is_extension(i)) continue;
        long num = 0;
        while (num == 0) num = static_cast<long>(gen() % 7) - 3;
        long den = tab->kind(i) == SymbolKind::QuadraticCoefficient
                       ? 1
                       : static_cast<long>(gen() % 3) + 2;
        assign[i] = Rat(num, den);
      }
      bool bad = false;
      for (const PPoly& f : rep.ledger)
        if (f.substitute(assign).is_zero()) {
          bad = true;
          break;
        }
      if (!bad) return;
      ++out.ledger_redraws;
    }
  };

  // Without extension symbols the sampled coordinates (exact binary
  // rationals) and parameters allow the defect to be computed in exact
  // arithmetic, so the ratio measures the genuine truncation tail rather
  // than the floating-point rounding floor of |x|^(D+1).  Extension symbols
  // take irrational values, so those rings fall back to double evaluation.
  bool exact_eval = true;
  for (int i = 0; i < tab->size(); ++i)
    if (tab->is_extension(i)) exact_eval = false;

  std::map<int, Rat> assign;
  std::map<int, double> pd;
  for (int t = 0; t < cfg.trials; ++t) {
    draw_params(assign);
    // random direction scaled to |x| in [radius/2, radius]
    std::vector<double> x(m);
    double norm = 0;
    while (norm < 1e-3) {
      for (int i = 0; i < m; ++i) x[i] = 2 * unit_draw(gen) - 1;
      norm = vnorm(x);
    }
    double target = cfg.radius * (0.5 + 0.5 * unit_draw(gen));
    for (int i = 0; i < m; ++i) x[i] *= target / norm;
    norm = target;
    double d;
    if (exact_eval) {
      std::vector<Rat> xr(m), yr(m);
      for (int i = 0; i < m; ++i) xr[i] = Rat(x[i]);
      for (int i = 0; i < m; ++i)
        yr[i] = vpoly_eval_rat(rep.inverse_map[i].substitute_params(assign), xr);
      Rat defect = vpoly_eval_rat(orig_x.substitute_params(assign), yr) -
                   vpoly_eval_rat(red_x.substitute_params(assign), xr);
      d = std::abs(defect.get_d());
    } else {
      pd = numeric_symbol_values(tab, assign);
      std::vector<double> y(m);
      for (int i = 0; i < m; ++i) y[i] = rep.inverse_map[i].eval_double(x, pd);
      d = std::abs(orig_x.eval_double(y, pd) - red_x.eval_double(x, pd));
    }
    out.max_defect_ratio = std::max(out.max_defect_ratio, d / std::pow(norm, degree + 1));
  }
  out.numeric_ok = out.max_defect_ratio <= 10.0;

  // (d) finite-difference cross-check of the symbolic gradient
  {
    std::vector<VPoly> grad;
    for (int i = 0; i < m; ++i) grad.push_back(orig_x.derivative(i));
    const double h = 1e-5;
    for (int t = 0; t < 5; ++t) {
      draw_params(assign);
      pd = numeric_symbol_values(tab, assign);
      std::vector<double> x(m);
      for (int i = 0; i < m; ++i) x[i] = (2 * unit_draw(gen) - 1) * cfg.radius;
      double scale = 1.0, worst = 0.0;
      std::vector<double> sym(m);
      for (int i = 0; i < m; ++i) {
        sym[i] = grad[i].eval_double(x, pd);
        scale = std::max(scale, std::abs(sym[i]));
      }
      for (int i = 0; i < m; ++i) {
        std::vector<double> xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        double fd = (orig_x.eval_double(xp, pd) - orig_x.eval_double(xm, pd)) / (2 * h);
        worst = std::max(worst, std::abs(fd - sym[i]) / scale);
      }
      out.max_fd_rel = std::max(out.max_fd_rel, worst);
    }
    out.fd_ok = out.max_fd_rel <= 1e-6;
  }

  // (c) transport of reduced minima back to critical points of the original.
  // The reduced->original change of variables seeds a Newton polish on the
  // original potential; the report carries the polished residual.
  if (!cfg.numeric_params.empty()) {
    pd = numeric_symbol_values(tab, cfg.numeric_params);
    VPoly orig_n = orig_x.substitute_params(cfg.numeric_params);
    VPoly red_n = red_x.substitute_params(cfg.numeric_params);
    NumericPotential f(orig_n, m, pd);
    SearchConfig scfg;
    for (const CriticalPoint& p : critical_points(ring, red_n, pd, scfg)) {
      if (p.stability != Stability::Minimum) continue;
      std::vector<double> y(m);
      for (int i = 0; i < m; ++i) y[i] = rep.inverse_map[i].eval_double(p.x, pd);
      std::vector<double> seed = y;
      bool ok = newton_polish(f, y, 100, 1e-8, 1e6);
      double gn = vnorm(f.gradient(y));
      out.max_transported_grad = std::max(out.max_transported_grad, gn);
      ++out.minima_transported;
      if (!ok) out.transport_ok = false;
      double moved = 0;
      for (int i = 0; i < m; ++i) moved = std::max(moved, std::abs(y[i] - seed[i]));
      std::ostringstream note;
      note << "minimum of the reduced potential at (";
      for (int i = 0; i < m; ++i) note << (i ? ", " : "") << p.x[i];
      note << ") transports to |grad| = " << gn << " after a polish step of " << moved;
      out.notes.push_back(note.str());
    }
    if (out.minima_transported == 0)
      out.notes.push_back("no minima of the reduced potential found to transport");
    if (out.max_transported_grad > 1e-8) out.transport_ok = false;
  } else {
    out.notes.push_back(
        "critical-point transport skipped: no numeric parameter values given");
  }
  return out;
}

}  // namespace landau
