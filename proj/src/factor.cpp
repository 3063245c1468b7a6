#include "landau/factor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace landau {
namespace {

// ---------------------------------------------------------------- uv over Z
using ZPoly = std::vector<Int>;  // ascending, trimmed

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  if (b.size() > r.size()) r.resize(b.size(), Int(0));
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ztrim(r);
  return r;
}

ZPoly zscale(const ZPoly& a, const Int& c) {
  if (c == 0) return {};
  ZPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

Int zcontent(const ZPoly& f) {
  Int g = 0;
  for (const auto& c : f) g = gcd(g, c);
  return g;
}

ZPoly zprimitive(const ZPoly& f) {
  if (f.empty()) return {};
  Int g = zcontent(f);
  if (f.back() < 0) g = -g;
  ZPoly r = f;
  for (auto& c : r) c /= g;
  return r;
}

ZPoly zderiv(const ZPoly& f) {
  ZPoly r;
  for (size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<long>(i));
  ztrim(r);
  return r;
}

// Exact division over Q, returning the quotient only when the remainder is
// zero. Works for non-monic divisors via rational arithmetic.
std::optional<ZPoly> zdivide_exact(const ZPoly& f, const ZPoly& g) {
  if (g.empty()) return std::nullopt;
  if (f.empty()) return ZPoly{};
  if (zdeg(f) < zdeg(g)) return std::nullopt;
  std::vector<Rat> rem(f.size());
  for (size_t i = 0; i < f.size(); ++i) rem[i] = Rat(f[i]);
  const int dg = zdeg(g);
  std::vector<Rat> quot(zdeg(f) - dg + 1);
  for (int i = zdeg(f) - dg; i >= 0; --i) {
    Rat q = rem[i + dg] / Rat(g[dg]);
    q.canonicalize();
    quot[i] = q;
    if (q != 0)
      for (int j = 0; j <= dg; ++j) {
        rem[i + j] -= q * Rat(g[j]);
        rem[i + j].canonicalize();
      }
  }
  for (int i = 0; i < dg; ++i)
    if (rem[i] != 0) return std::nullopt;
  ZPoly zq(quot.size());
  for (size_t i = 0; i < quot.size(); ++i) {
    if (quot[i].get_den() != 1) return std::nullopt;
    zq[i] = quot[i].get_num();
  }
  ztrim(zq);
  return zq;
}

// Primitive gcd via subresultant-free rational Euclid on primitives; safe at
// our sizes because inputs are small (used only inside Yun's algorithm).
ZPoly zgcd(ZPoly a, ZPoly b) {
  a = zprimitive(a);
  b = zprimitive(b);
  while (!b.empty()) {
    // pseudo-remainder: lc(b)^(da-db+1) * a mod b
    int da = zdeg(a), db = zdeg(b);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    ZPoly r = zscale(a, [&] {
      Int l = b.back();
      Int p = 1;
      for (int i = 0; i <= da - db; ++i) p *= l;
      return p;
    }());
    for (int i = da - db; i >= 0 && !r.empty() && zdeg(r) >= db; --i) {
      int dr = zdeg(r);
      if (dr - db != i) continue;
      Int q = r[dr] / b.back();
      for (int j = 0; j <= db; ++j) r[dr - db + j] -= q * b[j];
      ztrim(r);
    }
    a = b;
    b = zprimitive(r);
  }
  return zprimitive(a);
}

bool msquarefree_witness(const ZPoly& f);

// Yun squarefree decomposition of a primitive polynomial: returns list of
// (squarefree primitive part, multiplicity).
std::vector<std::pair<ZPoly, int>> zsquarefree(const ZPoly& f) {
  std::vector<std::pair<ZPoly, int>> out;
  if (zdeg(f) < 1) return out;
  if (msquarefree_witness(f)) {
    out.push_back({zprimitive(f), 1});
    return out;
  }
  ZPoly fp = zderiv(f);
  ZPoly a = zgcd(f, fp);
  if (zdeg(a) == 0) {
    out.push_back({zprimitive(f), 1});
    return out;
  }
  ZPoly b = *zdivide_exact(f, a);
  ZPoly c = *zdivide_exact(fp, a);
  ZPoly d = zsub(c, zderiv(b));
  int mult = 1;
  while (true) {
    ZPoly g = zgcd(b, d);
    if (zdeg(g) > 0) out.push_back({zprimitive(g), mult});
    ZPoly bn = *zdivide_exact(b, g);
    ZPoly cn = *zdivide_exact(d, g);
    b = bn;
    d = zsub(cn, zderiv(b));
    ++mult;
    if (zdeg(b) < 1) break;
  }
  return out;
}

// ---------------------------------------------------------------- mod p
using MPoly = std::vector<long>;  // ascending, coefficients in [0, p)

void mtrim(MPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
int mdeg(const MPoly& f) { return static_cast<int>(f.size()) - 1; }

MPoly mfrom(const ZPoly& f, long p) {
  MPoly r(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    Int m = f[i] % p;
    if (m < 0) m += p;
    r[i] = m.get_si();
  }
  mtrim(r);
  return r;
}

long minv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return t < 0 ? t + p : t;
}

MPoly mmul(const MPoly& a, const MPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  mtrim(r);
  return r;
}

MPoly msub(const MPoly& a, const MPoly& b, long p) {
  MPoly r = a;
  if (b.size() > r.size()) r.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] % p + p) % p;
  mtrim(r);
  return r;
}

MPoly mscale(const MPoly& a, long c, long p) {
  c %= p;
  if (c < 0) c += p;
  if (c == 0) return {};
  MPoly r = a;
  for (auto& x : r) x = x * c % p;
  mtrim(r);
  return r;
}

MPoly mmonic(const MPoly& f, long p) {
  if (f.empty()) return f;
  return mscale(f, minv(f.back(), p), p);
}

// division with remainder; returns (quotient, remainder)
std::pair<MPoly, MPoly> mdivrem(const MPoly& a, const MPoly& b, long p) {
  MPoly r = a, q;
  const int db = mdeg(b);
  const long binv = minv(b.back(), p);
  if (mdeg(r) >= db) q.assign(mdeg(r) - db + 1, 0);
  while (mdeg(r) >= db) {
    int dr = mdeg(r);
    long c = r[dr] * binv % p;
    q[dr - db] = c;
    for (int j = 0; j <= db; ++j) r[dr - db + j] = (r[dr - db + j] - c * b[j] % p + p) % p;
    mtrim(r);
  }
  mtrim(q);
  return {q, r};
}

MPoly mmod(const MPoly& a, const MPoly& b, long p) { return mdivrem(a, b, p).second; }

MPoly mgcd(MPoly a, MPoly b, long p) {
  while (!b.empty()) {
    MPoly r = mmod(a, b, p);
    a = b;
    b = r;
  }
  return a.empty() ? a : mmonic(a, p);
}

// One-sided squarefreeness test: if gcd(f, f') is constant modulo some prime
// not dividing lc(f), then gcd over Q is constant, so f is squarefree.
bool msquarefree_witness(const ZPoly& f) {
  static const long primes[] = {9973, 31013, 65537};
  for (long p : primes) {
    if (f.back() % p == 0) continue;
    MPoly fm = mfrom(f, p);
    MPoly fd(fm.size() - 1);
    for (size_t i = 1; i < fm.size(); ++i) fd[i - 1] = Int((Int(fm[i]) * (long)i) % p).get_si();
    mtrim(fd);
    if (fd.empty()) continue;
    MPoly g = mgcd(fm, fd, p);
    if (g.size() == 1) return true;
  }
  return false;
}

MPoly mpowmod(const MPoly& base, const Int& e, const MPoly& f, long p) {
  MPoly result{1};
  MPoly b = mmod(base, f, p);
  for (long bit = mpz_sizeinbase(e.get_mpz_t(), 2) - 1; bit >= 0; --bit) {
    result = mmod(mmul(result, result, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), bit)) result = mmod(mmul(result, b, p), f, p);
  }
  return result;
}

// extended euclid: returns g, u with u*a == g (mod b); g monic gcd
void mextgcd(const MPoly& a, const MPoly& b, long p, MPoly& g, MPoly& u) {
  MPoly r0 = b, r1 = mmod(a, b, p);
  MPoly u0{}, u1{1};
  while (!r1.empty()) {
    auto [q, r2] = mdivrem(r0, r1, p);
    MPoly u2 = msub(u0, mmul(q, u1, p), p);
    r0 = r1;
    r1 = r2;
    u0 = u1;
    u1 = u2;
  }
  long lead = r0.back();
  g = mmonic(r0, p);
  u = mscale(u0, minv(lead, p), p);
  u = mmod(u, b, p);
}

// Cantor-Zassenhaus: full factorization of a squarefree monic f mod p into
// monic irreducibles. Deterministically seeded.
void cz_equal_degree(const MPoly& f, int d, long p, std::mt19937_64& rng,
                     std::vector<MPoly>& out) {
  const int n = mdeg(f);
  if (n == d) {
    out.push_back(f);
    return;
  }
  Int pd = 1;
  for (int i = 0; i < d; ++i) pd *= p;
  Int e = (pd - 1) / 2;
  while (true) {
    MPoly h(n);
    for (int i = 0; i < n; ++i) h[i] = static_cast<long>(rng() % static_cast<unsigned long>(p));
    mtrim(h);
    if (h.empty()) continue;
    MPoly g = mgcd(f, h, p);
    if (mdeg(g) > 0 && mdeg(g) < n) {
      cz_equal_degree(g, d, p, rng, out);
      cz_equal_degree(mdivrem(f, g, p).first, d, p, rng, out);
      return;
    }
    MPoly t = mpowmod(h, e, f, p);
    t = msub(t, MPoly{1}, p);
    g = mgcd(f, t, p);
    if (mdeg(g) > 0 && mdeg(g) < n) {
      cz_equal_degree(g, d, p, rng, out);
      cz_equal_degree(mdivrem(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

std::vector<MPoly> mfactor_squarefree_monic(const MPoly& f0, long p) {
  std::vector<MPoly> out;
  MPoly f = f0;
  // distinct-degree decomposition
  MPoly x{0, 1};
  MPoly h = x;  // will hold x^(p^i) mod f
  std::mt19937_64 rng(0x5adface % p + 7 + mdeg(f0));
  for (int d = 1; mdeg(f) >= 2 * d; ++d) {
    h = mpowmod(h, Int(p), f, p);
    MPoly g = mgcd(f, msub(h, x, p), p);
    if (mdeg(g) > 0) {
      cz_equal_degree(g, d, p, rng, out);
      f = mdivrem(f, g, p).first;
      h = mmod(h, f, p);
    }
  }
  if (mdeg(f) > 0) out.push_back(f);
  return out;
}

// ---------------------------------------------------------------- Hensel
ZPoly zmod_sym(const ZPoly& f, const Int& m) {
  ZPoly r = f;
  Int half = m / 2;
  for (auto& c : r) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
  ztrim(r);
  return r;
}

ZPoly zmod_pos(const ZPoly& f, const Int& m) {
  ZPoly r = f;
  for (auto& c : r) {
    c %= m;
    if (c < 0) c += m;
  }
  ztrim(r);
  return r;
}

// Lifts f == lc * prod(monic g_i) from mod p to mod >= target. Inputs g are
// monic mod p; returns monic factors mod m with m >= target.
std::pair<std::vector<ZPoly>, Int> hensel_lift(const ZPoly& f, std::vector<MPoly> gs,
                                               long p, const Int& target) {
  const int r = static_cast<int>(gs.size());
  // Bezout cofactors u_i = (prod_{j!=i} g_j)^{-1} mod g_i  (all mod p)
  std::vector<MPoly> u(r);
  for (int i = 0; i < r; ++i) {
    MPoly h{1};
    for (int j = 0; j < r; ++j)
      if (j != i) h = mmul(h, gs[j], p);
    MPoly g, ui;
    mextgcd(h, gs[i], p, g, ui);
    if (mdeg(g) != 0) throw std::runtime_error("hensel: factors not coprime");
    u[i] = ui;
  }
  const Int l = Int(f.back());
  Int lmod = l % p;
  if (lmod < 0) lmod += p;
  const long linv = minv(lmod.get_si(), p);

  std::vector<ZPoly> G(r);
  for (int i = 0; i < r; ++i) {
    G[i].assign(gs[i].size(), Int(0));
    for (size_t k = 0; k < gs[i].size(); ++k) G[i][k] = gs[i][k];
  }
  Int m = p;
  while (m < target) {
    // error e = (f - l*prod G) / m   mod p
    ZPoly prod{Int(1)};
    for (int i = 0; i < r; ++i) prod = zmul(prod, G[i]);
    ZPoly err = zsub(f, zscale(prod, l));
    for (auto& c : err) {
      if (c % m != 0) throw std::runtime_error("hensel: invariant broken");
      c /= m;
    }
    ztrim(err);
    MPoly e = mfrom(err, p);
    e = mscale(e, linv, p);
    for (int i = 0; i < r; ++i) {
      MPoly gi = mfrom(G[i], p);
      MPoly delta = mmod(mmul(u[i], e, p), gi, p);
      // G_i += m * delta
      if (!delta.empty()) {
        if (G[i].size() < delta.size()) G[i].resize(delta.size(), Int(0));
        for (size_t k = 0; k < delta.size(); ++k) G[i][k] += m * delta[k];
      }
    }
    m *= p;
  }
  return {G, m};
}

// ---------------------------------------------------------------- Zassenhaus
// Factors a primitive squarefree polynomial (degree >= 1) into primitive
// irreducible factors over Z.
std::vector<ZPoly> zfactor_squarefree(const ZPoly& f0) {
  std::vector<ZPoly> out;
  ZPoly f = f0;
  if (zdeg(f) == 1) {
    out.push_back(f);
    return out;
  }
  // choose a prime keeping f squarefree with unchanged degree
  static const long primes[] = {13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                                     59, 61, 67, 71, 73, 79, 83, 89, 97, 101};
  long p = 0;
  std::vector<MPoly> best;
  int tried = 0;
  for (long q : primes) {
    if (Int(f.back()) % q == 0) continue;
    MPoly fm = mmonic(mfrom(f, q), q);
    if (mdeg(fm) != zdeg(f)) continue;
    MPoly d = mfrom(zderiv(f), q);
    if (mdeg(mgcd(fm, d, q)) != 0) continue;
    auto fac = mfactor_squarefree_monic(fm, q);
    if (best.empty() || fac.size() < best.size()) {
      best = fac;
      p = q;
    }
    if (++tried >= 3 || best.size() == 1) break;
  }
  if (p == 0) throw std::runtime_error("factor: no usable prime found");
  if (best.size() == 1) {
    out.push_back(f);
    return out;
  }
  // coefficient bound: 2^deg * |f|_2 * |lc|, doubled for symmetric range
  Int norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Int b = sqrt(norm2) + 1;
  Int bound = b * abs(Int(f.back()));
  for (int i = 0; i < zdeg(f); ++i) bound *= 2;
  bound = bound * 2 + 1;
  auto [G, m] = hensel_lift(f, best, p, bound);

  // subset recombination
  std::vector<ZPoly> pool = G;
  ZPoly cur = f;
  int card = 1;
  long trials = 0;
  while (static_cast<int>(pool.size()) > 0) {
    if (card > static_cast<int>(pool.size())) {
      out.push_back(zprimitive(cur));
      pool.clear();
      break;
    }
    // iterate over cardinality-`card` index subsets
    std::vector<int> idx(card);
    for (int i = 0; i < card; ++i) idx[i] = i;
    bool found = false;
    while (true) {
      if (++trials > 4000000) throw std::runtime_error("factor: recombination cap");
      ZPoly cand{Int(cur.back())};
      for (int i : idx) cand = zmod_pos(zmul(cand, pool[i]), m);
      cand = zmod_sym(cand, m);
      cand = zprimitive(cand);
      if (auto quot = zdivide_exact(cur, cand)) {
        out.push_back(cand);
        cur = *quot;
        std::vector<ZPoly> np;
        for (int i = 0, k = 0; i < static_cast<int>(pool.size()); ++i) {
          if (k < card && idx[k] == i) {
            ++k;
            continue;
          }
          np.push_back(pool[i]);
        }
        pool = np;
        found = true;
        break;
      }
      // next combination
      int i = card - 1;
      while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - card + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++card;
    if (zdeg(cur) == 0) break;
  }
  return out;
}

// full univariate factorization over Z of a primitive polynomial
std::vector<std::pair<ZPoly, int>> zfactor(const ZPoly& f0) {
  std::vector<std::pair<ZPoly, int>> out;
  ZPoly f = f0;
  // trailing monomial t^k
  int shift = 0;
  while (!f.empty() && f.front() == 0) {
    f.erase(f.begin());
    ++shift;
  }
  if (shift > 0) out.push_back({ZPoly{Int(0), Int(1)}, shift});
  if (zdeg(f) < 1) return out;
  for (const auto& [sqf, mult] : zsquarefree(f))
    for (const auto& irr : zfactor_squarefree(sqf)) out.push_back({irr, mult});
  return out;
}

}  // namespace

// ---------------------------------------------------------------- public

UnivariateFactorization factor_univariate(const std::vector<Rat>& coeffs) {
  UnivariateFactorization out;
  // clear denominators
  Int dlcm = 1;
  for (const auto& c : coeffs) dlcm = lcm(dlcm, c.get_den());
  ZPoly f(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    Rat scaled = coeffs[i] * Rat(dlcm);
    scaled.canonicalize();
    f[i] = scaled.get_num();
  }
  ztrim(f);
  if (f.empty()) {
    out.content = 0;
    return out;
  }
  Int cont = zcontent(f);
  if (f.back() < 0) cont = -cont;
  out.content = Rat(cont, dlcm);
  out.content.canonicalize();
  ZPoly prim = f;
  for (auto& c : prim) c /= cont;
  for (auto& [fac, mult] : zfactor(prim)) {
    std::vector<Int> v(fac.begin(), fac.end());
    out.factors.push_back({v, mult});
  }
  return out;
}

Factorization factor_ppoly(const PPoly& p) {
  if (p.has_extension_symbol())
    throw std::invalid_argument("factor_ppoly: extension symbols not factorable");
  Factorization out;
  auto [content, prim] = p.content_primitive();
  out.content = content;
  if (prim.is_zero() || prim.is_constant()) return out;

  const SymTabPtr tab = prim.table();
  const int nsym = tab->size();

  std::map<PPoly, int, decltype([](const PPoly& a, const PPoly& b) {
             return PPoly::compare(a, b) < 0;
           })>
      found;

  // per-variable monomial content
  std::vector<int> minexp(nsym, -1);
  for (const auto& [m, c] : prim.terms())
    for (int s = 0; s < nsym; ++s) minexp[s] = minexp[s] < 0 ? m[s] : std::min(minexp[s], m[s]);
  PPoly rest(tab);
  for (const auto& [m, c] : prim.terms()) {
    PMono nm = m;
    for (int s = 0; s < nsym; ++s) nm[s] -= minexp[s];
    rest.add_term(nm, c);
  }
  for (int s = 0; s < nsym; ++s)
    if (minexp[s] > 0) found[PPoly::symbol(tab, s)] += minexp[s];

  // support variables and Kronecker weights (highest degree -> lowest weight)
  std::vector<int> support;
  for (int s = 0; s < nsym; ++s)
    if (rest.degree_in(s) > 0) support.push_back(s);

  if (!support.empty()) {
    std::stable_sort(support.begin(), support.end(), [&](int a, int b) {
      return rest.degree_in(a) > rest.degree_in(b);
    });
    int B = 1;
    for (int s : support) B = std::max(B, rest.degree_in(s) + 1);
    // weights
    std::vector<Int> weight(support.size());
    Int w = 1;
    double projected = 0;
    for (size_t i = 0; i < support.size(); ++i) {
      weight[i] = w;
      projected += static_cast<double>(rest.degree_in(support[i])) * w.get_d();
      w *= B;
    }
    if (projected > 200000)
      throw std::runtime_error("factor_ppoly: Kronecker degree cap exceeded");

    // clear rational denominators of the primitive part (it is integral by
    // construction of content_primitive, but be safe)
    ZPoly image(static_cast<size_t>(projected) + 1, Int(0));
    for (const auto& [m, c] : rest.terms()) {
      Int e = 0;
      for (size_t i = 0; i < support.size(); ++i) e += Int(m[support[i]]) * weight[i];
      image[e.get_ui()] += c.get_num();  // primitive => integer coefficients
    }
    ztrim(image);

    auto uni = zfactor(image);
    // expand multiset
    std::vector<ZPoly> pool;
    for (auto& [fac, mult] : uni)
      for (int i = 0; i < mult; ++i) pool.push_back(fac);

    // cheap reject filter: a candidate dividing `cur` must have a value at an
    // integer point dividing cur's value there
    static const long point_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    std::vector<std::vector<Int>> powtab(nsym);
    for (size_t i = 0; i < support.size(); ++i) {
      int s = support[i];
      long base = point_primes[i % 12];
      powtab[s].assign(rest.degree_in(s) + 1, Int(1));
      for (int e = 1; e <= rest.degree_in(s); ++e) powtab[s][e] = powtab[s][e - 1] * base;
    }
    auto eval_point = [&](const PPoly& g) {
      Int v = 0;
      for (const auto& [m, c] : g.terms()) {
        Int t = c.get_num();
        for (int s : support)
          if (m[s] > 0) t *= powtab[s][m[s]];
        v += t;
      }
      return v;
    };

    // Decode the uniform-radix exponents back to a monomial. A digit larger
    // than the variable's degree in `rest` proves the candidate cannot divide
    // `rest` (the radix B is shared across variables, so image factors can
    // carry such digits); those candidates are discarded via `ok`.
    auto digit_expand = [&](const ZPoly& u, bool& ok) {
      PPoly g(tab);
      ok = true;
      for (size_t e = 0; e < u.size(); ++e) {
        if (u[e] == 0) continue;
        PMono m(nsym, 0);
        Int rem = e;
        for (size_t i = support.size(); i-- > 0;) {
          Int d = rem / weight[i];
          int digit = static_cast<int>(d.get_si());
          if (digit > rest.degree_in(support[i])) {
            ok = false;
            return g;
          }
          m[support[i]] = digit;
          rem -= d * weight[i];
        }
        Rat c(u[e]);
        g.add_term(m, c);
      }
      return g;
    };

    PPoly cur = rest;
    Int curval = eval_point(cur);
    // equal pool values are interchangeable: only enumerate subsets choosing a
    // prefix of each block of equal values
    std::vector<char> same_as_prev;
    auto mark_dups = [&]() {
      same_as_prev.assign(pool.size(), 0);
      for (size_t i = 1; i < pool.size(); ++i) same_as_prev[i] = pool[i] == pool[i - 1];
    };
    mark_dups();
    long trials = 0;
    int card = 1;
    while (true) {
      if (cur.is_constant()) {
        // residual unit: fold into content (must be +-1 for primitive input)
        out.content = out.content * cur.constant_value();
        break;
      }
      if (card > static_cast<int>(pool.size())) {
        auto [cc, cp] = cur.content_primitive();
        out.content = out.content * cc;
        found[cp] += 1;
        break;
      }
      std::vector<int> idx(card);
      for (int i = 0; i < card; ++i) idx[i] = i;
      bool progressed = false;
      while (true) {
        if (++trials > 2000000) throw std::runtime_error("factor_ppoly: recombination cap");
        bool canonical = true;
        for (int j = 0; j < card; ++j)
          if (same_as_prev[idx[j]] && (j == 0 || idx[j - 1] != idx[j] - 1)) {
            canonical = false;
            break;
          }
        if (canonical) {
        ZPoly u{Int(1)};
        for (int i : idx) u = zmul(u, pool[i]);
        bool decodable = false;
        PPoly cand = digit_expand(u, decodable);
        auto [cc, cp] = cand.content_primitive();
        bool plausible = decodable && !cp.is_constant();
        if (plausible && curval != 0) {
          Int cv = eval_point(cp);
          if (cv != 0 && !mpz_divisible_p(curval.get_mpz_t(), cv.get_mpz_t())) plausible = false;
        }
        if (plausible) {
        if (!cp.is_constant()) {
          if (auto quot = cur.divide_exact(cp)) {
            int mult = 1;
            PPoly q = *quot;
            while (auto q2 = q.divide_exact(cp)) {
              q = *q2;
              ++mult;
            }
            found[cp] += mult;
            cur = q;
            // The image of cp^mult consumes the chosen subset `mult` times:
            // remove each chosen factor value that many times from the pool.
            std::vector<ZPoly> chosen;
            for (int i : idx) chosen.push_back(pool[i]);
            for (const ZPoly& value : chosen) {
              int removed = 0;
              std::vector<ZPoly> np;
              for (const ZPoly& q2 : pool) {
                if (removed < mult && q2 == value) {
                  ++removed;
                  continue;
                }
                np.push_back(q2);
              }
              pool = np;
            }
            curval = eval_point(cur);
            mark_dups();
            progressed = true;
            break;
          }
        }
        }
        }
        int i = card - 1;
        while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - card + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
      }
      if (progressed)
        card = 1;
      else
        ++card;
    }
  }

  for (auto& [fac, mult] : found) out.factors.push_back({fac, mult});
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return PPoly::compare(a.first, b.first) < 0; });
  return out;
}

}  // namespace landau
