#include "landau/ppoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace landau {

PPoly PPoly::constant(SymTabPtr tab, const Rat& c) {
  PPoly p(std::move(tab));
  if (c != 0) p.terms_[PMono(p.tab_ ? p.tab_->size() : 0, 0)] = c;
  return p;
}

PPoly PPoly::symbol(SymTabPtr tab, int sym, int exp) {
  PPoly p(std::move(tab));
  PMono m(p.tab_->size(), 0);
  m[sym] = exp;
  p.terms_[m] = 1;
  p.normalize_extensions();
  return p;
}

bool PPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

Rat PPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  PMono zero(tab_ ? tab_->size() : 0, 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Rat(0) : it->second;
}

int PPoly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (int e : terms_.rbegin()->first) d += e;
  return d;
}

int PPoly::degree_in(int sym) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[sym]);
  return d;
}

bool PPoly::contains_symbol(int sym) const {
  for (const auto& [m, c] : terms_)
    if (m[sym] != 0) return true;
  return false;
}

bool PPoly::has_extension_symbol() const {
  if (!tab_) return false;
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < static_cast<int>(m.size()); ++i)
      if (m[i] != 0 && tab_->is_extension(i)) return true;
  return false;
}

void PPoly::add_term(const PMono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PPoly PPoly::operator-() const {
  PPoly r(tab_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

PPoly PPoly::operator+(const PPoly& o) const {
  PPoly r = *this;
  if (!r.tab_) r.tab_ = o.tab_;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

PPoly PPoly::operator-(const PPoly& o) const {
  PPoly r = *this;
  if (!r.tab_) r.tab_ = o.tab_;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

PPoly PPoly::operator*(const PPoly& o) const {
  PPoly r(tab_ ? tab_ : o.tab_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      PMono m(ma);
      for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      r.add_term(m, ca * cb);
    }
  }
  r.normalize_extensions();
  return r;
}

PPoly PPoly::operator*(const Rat& c) const {
  PPoly r(tab_);
  if (c == 0) return r;
  for (const auto& [m, co] : terms_) r.terms_[m] = co * c;
  return r;
}

PPoly PPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("PPoly::pow: negative exponent");
  PPoly r = constant(tab_, 1);
  PPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = e > 1 ? base * base : base;
    e >>= 1;
  }
  return r;
}

void PPoly::normalize_extensions() {
  if (!tab_ || !tab_->has_extensions()) return;
  bool again = true;
  while (again) {
    again = false;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      const PMono& m = it->first;
      for (int s = 0; s < static_cast<int>(m.size()); ++s) {
        if (!tab_->is_extension(s)) continue;
        const auto& rel = tab_->relation(s);
        if (rel.degree <= 0 || m[s] < rel.degree) continue;
        // m = rest * s^(q*d + r): rewrite s^d -> rhs, q times.
        Rat coeff = it->second;
        PMono rest = m;
        const int q = m[s] / rel.degree;
        rest[s] = m[s] % rel.degree;
        terms_.erase(it);
        PPoly rhs(tab_);
        for (const auto& [rm, rc] : rel.rhs_terms) rhs.add_term(rm, rc);
        PPoly factor = rhs.pow(q);  // rhs has lower symbols only: no recursion blowup
        for (const auto& [fm, fc] : factor.terms_) {
          PMono nm = rest;
          for (size_t i = 0; i < nm.size(); ++i) nm[i] += fm[i];
          add_term(nm, coeff * fc);
        }
        again = true;
        break;
      }
      if (again) break;
    }
  }
}

PPoly PPoly::substitute(const std::map<int, Rat>& values) const {
  PPoly r(tab_);
  for (const auto& [m, c] : terms_) {
    Rat coeff = c;
    PMono nm = m;
    for (const auto& [sym, val] : values) {
      if (nm[sym] == 0) continue;
      Rat p(1);
      for (int i = 0; i < nm[sym]; ++i) p *= val;
      coeff *= p;
      nm[sym] = 0;
    }
    r.add_term(nm, coeff);
  }
  r.normalize_extensions();
  return r;
}

PPoly PPoly::substitute_symbol(int sym, const PPoly& replacement) const {
  PPoly r(tab_);
  for (const auto& [m, c] : terms_) {
    PMono rest = m;
    const int e = rest[sym];
    rest[sym] = 0;
    PPoly term(tab_);
    term.add_term(rest, c);
    if (e > 0) term = term * replacement.pow(e);
    r = r + term;
  }
  r.normalize_extensions();
  return r;
}

double PPoly::eval_double(const std::map<int, double>& values) const {
  auto symval = [&](int s) -> double {
    auto it = values.find(s);
    if (it != values.end()) return it->second;
    if (tab_ && tab_->is_extension(s)) {
      const auto& rel = tab_->relation(s);
      PPoly rhs(tab_);
      for (const auto& [rm, rc] : rel.rhs_terms) rhs.add_term(rm, rc);
      return std::pow(rhs.eval_double(values), 1.0 / rel.degree);
    }
    throw std::invalid_argument("eval_double: unassigned symbol " +
                                (tab_ ? tab_->name(s) : std::to_string(s)));
  };
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = rat_double(c);
    for (int s = 0; s < static_cast<int>(m.size()); ++s)
      for (int i = 0; i < m[s]; ++i) t *= symval(s);
    sum += t;
  }
  return sum;
}

std::pair<Rat, PPoly> PPoly::content_primitive() const {
  if (terms_.empty()) return {Rat(0), PPoly(tab_)};
  // gcd of numerators / lcm of denominators
  Int gnum = 0, dlcm = 1;
  for (const auto& [m, c] : terms_) {
    gnum = gcd(gnum, c.get_num());
    dlcm = lcm(dlcm, c.get_den());
  }
  Rat content(gnum, dlcm);
  content.canonicalize();
  if (terms_.rbegin()->second < 0) content = -content;
  PPoly prim(tab_);
  for (const auto& [m, c] : terms_) {
    Rat q = c / content;
    q.canonicalize();
    prim.terms_[m] = q;
  }
  return {content, prim};
}

std::optional<PPoly> PPoly::divide_exact(const PPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return PPoly(tab_);
  if (divisor.has_extension_symbol())
    throw std::invalid_argument("divide_exact: divisor contains extension symbols");
  PPoly rem = *this;
  PPoly quot(tab_);
  const auto& dlt = *divisor.terms_.rbegin();  // leading term of divisor
  while (!rem.is_zero()) {
    const auto& rlt = *rem.terms_.rbegin();
    PMono qm = rlt.first;
    for (size_t i = 0; i < qm.size(); ++i) {
      qm[i] -= dlt.first[i];
      if (qm[i] < 0) return std::nullopt;
    }
    Rat qc = rlt.second / dlt.second;
    qc.canonicalize();
    quot.add_term(qm, qc);
    PPoly t(tab_);
    t.add_term(qm, qc);
    rem = rem - t * divisor;
  }
  return quot;
}

PPoly PPoly::derivative(int sym) const {
  PPoly r(tab_);
  for (const auto& [m, c] : terms_) {
    if (m[sym] == 0) continue;
    PMono nm = m;
    nm[sym] -= 1;
    r.add_term(nm, c * m[sym]);
  }
  return r;
}

std::string PPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat a = c;
    if (first) {
      if (a < 0) { out << "-"; a = -a; }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string vars;
    for (int s = 0; s < static_cast<int>(m.size()); ++s) {
      if (m[s] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += tab_->name(s);
      if (m[s] > 1) vars += "^" + std::to_string(m[s]);
    }
    if (vars.empty()) {
      out << rat_str(a);
    } else {
      if (a != 1) out << rat_str(a) << "*";
      out << vars;
    }
  }
  return out.str();
}

int PPoly::compare(const PPoly& a, const PPoly& b) {
  const int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  if (a.terms_.size() != b.terms_.size())
    return a.terms_.size() < b.terms_.size() ? -1 : 1;
  auto ia = a.terms_.rbegin();
  auto ib = b.terms_.rbegin();
  PMonoLess less;
  for (; ia != a.terms_.rend(); ++ia, ++ib) {
    if (less(ia->first, ib->first)) return -1;
    if (less(ib->first, ia->first)) return 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  return 0;
}

}  // namespace landau
