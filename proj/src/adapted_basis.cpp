#include "landau/adapted_basis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "landau/factor.hpp"

namespace landau {

namespace {

// distinct non-constant irreducible factors of the numerator of w; when w
// contains extension symbols the free-ring factorization may fail, in which
// case the whole numerator is kept as one (conservative) factor.
std::vector<PPoly> weight_factors(const RatFunc& w) {
  std::vector<PPoly> out;
  if (w.is_zero() || w.num().is_constant()) return out;
  try {
    for (const auto& [f, e] : factor_ppoly(w.num()).factors)
      if (!f.is_constant()) out.push_back(f);
  } catch (const std::invalid_argument&) {
    out.push_back(w.num());
  }
  return out;
}

}  // namespace

AdaptedBasis adapt(const InvariantRing& ring, const Matrix& Q, const Matrix& A) {
  const int s = Q.rows;
  if (Q.cols != s || A.rows != s || A.cols != s)
    throw ValidationError("adapting matrix must match the Q-matrix size");

  AdaptedBasis out;
  out.A = A;
  try {
    out.A_inv = mat_inverse(A);
  } catch (const ComputationError&) {
    throw ValidationError("adapting matrix is singular");
  }
  out.P = mat_mul(mat_mul(A, Q), out.A_inv);

  const SymTabPtr& tab = ring.jspace()->params;
  RatFunc zero(tab), one(tab, Rat(1));
  out.P_s = Matrix(s, s, tab);
  out.P_n = Matrix(s, s, tab);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      const RatFunc& e = out.P.at(i, j);
      if (i == j) {
        out.P_s.at(i, i) = e;
      } else if (j == i + 1 && (e == zero || e == one)) {
        out.P_n.at(i, j) = e;
      } else if (!(e == zero)) {
        std::ostringstream msg;
        msg << "A Q A^-1 is not in Jordan form: entry (" << i + 1 << "," << j + 1
            << ") = " << e.str();
        throw ValidationError(msg.str());
      }
    }
  for (int i = 0; i + 1 < s; ++i)
    if (out.P_n.at(i, i + 1) == one && !(out.P_s.at(i, i) == out.P_s.at(i + 1, i + 1))) {
      std::ostringstream msg;
      msg << "A Q A^-1 is not in Jordan form: unit entry (" << i + 1 << "," << i + 2
          << ") joins distinct eigenvalues";
      throw ValidationError(msg.str());
    }
  Matrix sn = mat_mul(out.P_s, out.P_n), ns = mat_mul(out.P_n, out.P_s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      if (!(sn.at(i, j) == ns.at(i, j)))
        throw ComputationError("semisimple and nilpotent parts fail to commute");

  for (int i = 0; i < s; ++i) out.eigenvalues.push_back(out.P_s.at(i, i));

  for (int mu = 0; mu < s; ++mu) {
    VPoly zj(ring.jspace());
    for (int nu = 0; nu < s; ++nu) {
      VMono m(ring.jspace()->size(), 0);
      m[nu] = 1;
      zj.add_term(m, A.at(mu, nu));
    }
    out.Z_x.push_back(ring.expand_to_x(zj));
    out.Z_j.push_back(std::move(zj));
  }
  return out;
}

AdaptedBasis auto_adapt(const InvariantRing& ring, const Matrix& Q) {
  const int s = Q.rows;
  const SymTabPtr& tab = ring.jspace()->params;
  std::vector<std::vector<Rat>> q(s, std::vector<Rat>(s));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      if (!Q.at(i, j).is_constant())
        throw ValidationError("automatic adaptation requires a fully numeric Q-matrix");
      q[i][j] = Q.at(i, j).constant_value();
    }

  // Faddeev-LeVerrier: char(Q) = lambda^s + a_{s-1} lambda^{s-1} + ... + a_0
  std::vector<Rat> a(s + 1, Rat(0));
  a[s] = 1;
  std::vector<std::vector<Rat>> M(s, std::vector<Rat>(s, Rat(0)));
  for (int i = 0; i < s; ++i) M[i][i] = 1;
  for (int k = 1; k <= s; ++k) {
    // M <- Q*M + a_{s-k+1} I was applied last round; now trace step
    std::vector<std::vector<Rat>> QM(s, std::vector<Rat>(s, Rat(0)));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j)
        for (int l = 0; l < s; ++l) QM[i][j] += q[i][l] * M[l][j];
    Rat tr(0);
    for (int i = 0; i < s; ++i) tr += QM[i][i];
    a[s - k] = -tr / k;
    M = QM;
    for (int i = 0; i < s; ++i) M[i][i] += a[s - k];
  }

  auto fac = factor_univariate(std::vector<Rat>(a.begin(), a.end()));
  std::vector<std::pair<Rat, int>> eigen;  // value, algebraic multiplicity
  for (const auto& [coeffs, mult] : fac.factors) {
    if (coeffs.size() != 2)
      throw ComputationError(
          "Q-matrix has irrational eigenvalues; exact adaptation is impossible (numeric "
          "eigenvalues are still available)");
    eigen.emplace_back(Rat(-coeffs[0]) / Rat(coeffs[1]), mult);
  }
  std::sort(eigen.begin(), eigen.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  // rows of A are left eigenvectors: row.Q = lambda row ⇔ (Q^T - lambda I) row^T = 0
  Matrix A(s, s, tab);
  int row = 0;
  for (const auto& [lam, mult] : eigen) {
    Matrix K(s, s, tab);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) K.at(i, j) = RatFunc(tab, q[j][i] - (i == j ? lam : Rat(0)));
    LinearSolution sol = rf_solve_linear(K, std::vector<RatFunc>(s, RatFunc(tab)));
    if (static_cast<int>(sol.kernel.size()) != mult) {
      std::ostringstream msg;
      msg << "eigenvalue " << rat_str(lam) << " has geometric multiplicity "
          << sol.kernel.size() << " below its algebraic multiplicity " << mult
          << "; Q is not semisimple";
      throw NonSemisimple(msg.str());
    }
    for (const auto& vec : sol.kernel) {
      for (int j = 0; j < s; ++j) A.at(row, j) = vec[j];
      ++row;
    }
  }
  return adapt(ring, Q, A);
}

std::vector<double> numeric_eigenvalues(const Matrix& Q) {
  const int n = Q.rows;
  if (Q.cols != n) throw ValidationError("eigenvalues require a square matrix");
  std::vector<std::vector<double>> q(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q[i][j] = Q.at(i, j).eval_double({});

  std::vector<double> ev;
  if (n == 0) return ev;
  if (n == 1) {
    ev = {q[0][0]};
  } else if (n == 2) {
    double tr = q[0][0] + q[1][1];
    double det = q[0][0] * q[1][1] - q[0][1] * q[1][0];
    double disc = tr * tr - 4 * det;
    if (disc < -1e-12 * std::max(1.0, tr * tr))
      throw ComputationError("Q-matrix has complex eigenvalues");
    double r = std::sqrt(std::max(0.0, disc));
    ev = {(tr - r) / 2, (tr + r) / 2};
  } else if (n == 3) {
    double c2 = -(q[0][0] + q[1][1] + q[2][2]);
    double m2 = q[0][0] * q[1][1] - q[0][1] * q[1][0] + q[0][0] * q[2][2] -
                q[0][2] * q[2][0] + q[1][1] * q[2][2] - q[1][2] * q[2][1];
    double det = q[0][0] * (q[1][1] * q[2][2] - q[1][2] * q[2][1]) -
                 q[0][1] * (q[1][0] * q[2][2] - q[1][2] * q[2][0]) +
                 q[0][2] * (q[1][0] * q[2][1] - q[1][1] * q[2][0]);
    double c1 = m2, c0 = -det;
    // depressed cubic t^3 + p t + q0 with lambda = t - c2/3
    double p = c1 - c2 * c2 / 3;
    double q0 = 2 * c2 * c2 * c2 / 27 - c2 * c1 / 3 + c0;
    double shift = -c2 / 3;
    double scale = std::max({1.0, std::abs(p), std::abs(q0)});
    if (std::abs(p) < 1e-14 * scale && std::abs(q0) < 1e-14 * scale) {
      ev = {shift, shift, shift};
    } else {
      if (p >= 0) throw ComputationError("Q-matrix has complex eigenvalues");
      double m = 2 * std::sqrt(-p / 3);
      double arg = 3 * q0 / (p * m);
      arg = std::min(1.0, std::max(-1.0, arg));
      double theta = std::acos(arg);
      for (int k = 0; k < 3; ++k)
        ev.push_back(shift + m * std::cos(theta / 3 - 2 * M_PI * k / 3));
    }
  } else {
    throw ComputationError("numeric eigenvalues implemented for matrices up to 3x3");
  }
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<ResonanceClass> classify_resonances(const InvariantRing& ring,
                                                const std::vector<RatFunc>& eigenvalues,
                                                int degree) {
  const SymTabPtr& tab = ring.jspace()->params;
  const int s = static_cast<int>(eigenvalues.size());
  std::vector<ResonanceClass> out;
  for (const VMono& mono : ring.canonical_monomials(degree)) {
    ResonanceClass rc;
    rc.monomial = mono;
    RatFunc w(tab);
    for (int a = 0; a < s; ++a)
      if (mono[a] != 0) w = w + eigenvalues[a] * RatFunc(tab, Rat(mono[a]));
    rc.weight = w;
    if (w.is_zero()) {
      rc.verdict = ResonanceVerdict::Resonant;
    } else {
      for (const PPoly& f : weight_factors(w)) {
        bool degenerate = false;
        for (const RatFunc& lam : eigenvalues)
          if (!lam.is_zero() && lam.num().divide_exact(f).has_value()) {
            degenerate = true;
            break;
          }
        if (!degenerate) rc.factors.push_back(f);
      }
      rc.verdict =
          rc.factors.empty() ? ResonanceVerdict::Nonresonant : ResonanceVerdict::Conditional;
    }
    out.push_back(std::move(rc));
  }
  return out;
}

HomologicalStep diagonal_solve(const InvariantRing& ring,
                               const std::vector<RatFunc>& eigenvalues, int order,
                               const VPoly& psi) {
  const SymTabPtr& tab = ring.jspace()->params;
  const int s = static_cast<int>(eigenvalues.size());
  VPoly reduced = ring.syzygy_reduce(psi);

  HomologicalStep step;
  step.order = order;
  step.basis = ring.canonical_monomials(order + 2);
  step.chi = VPoly(ring.jspace());
  step.removed = VPoly(ring.jspace());
  step.retained = VPoly(ring.jspace());

  std::vector<RatFunc> weights;
  for (const VMono& mono : step.basis) {
    RatFunc w(tab);
    for (int a = 0; a < s; ++a)
      if (mono[a] != 0) w = w + eigenvalues[a] * RatFunc(tab, Rat(mono[a]));
    if (!w.is_zero()) {
      step.columns.push_back(mono);
      weights.push_back(w);
      for (const PPoly& f : weight_factors(w)) {
        bool seen = false;
        for (const PPoly& g : step.ledger)
          if (g == f) {
            seen = true;
            break;
          }
        if (!seen) step.ledger.push_back(f);
      }
    }
  }

  step.action_matrix = Matrix(static_cast<int>(step.basis.size()),
                              static_cast<int>(step.columns.size()), tab);
  for (size_t j = 0; j < step.columns.size(); ++j) {
    for (size_t i = 0; i < step.basis.size(); ++i)
      if (step.basis[i] == step.columns[j]) {
        step.action_matrix.at(static_cast<int>(i), static_cast<int>(j)) = weights[j];
        break;
      }
    RatFunc c = reduced.coeff(step.columns[j]);
    if (!c.is_zero()) {
      step.chi.add_term(step.columns[j], c / weights[j]);
      step.removed.add_term(step.columns[j], c);
    }
  }
  step.retained = reduced - step.removed;
  return step;
}

}  // namespace landau
