#include "landau/ratfunc.hpp"

#include <algorithm>
#include <sstream>

#include "landau/errors.hpp"
#include "landau/factor.hpp"

namespace landau {

namespace {

int cmp_den(const std::vector<std::pair<PPoly, int>>& a,
            const std::vector<std::pair<PPoly, int>>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    int c = PPoly::compare(a[i].first, b[i].first);
    if (c != 0) return c;
    if (a[i].second != b[i].second) return a[i].second < b[i].second ? -1 : 1;
  }
  return 0;
}

}  // namespace

RatFunc::RatFunc(SymTabPtr tab) : tab_(std::move(tab)), coef_(0), num_(PPoly::constant(tab_, 1)) {}

RatFunc::RatFunc(SymTabPtr tab, const Rat& value)
    : tab_(std::move(tab)), coef_(value), num_(PPoly::constant(tab_, 1)) {}

RatFunc::RatFunc(const PPoly& p) : tab_(p.table()) {
  PPoly q = p;
  q.normalize_extensions();
  auto [c, prim] = q.content_primitive();
  coef_ = c;
  num_ = c == 0 ? PPoly::constant(tab_, 1) : prim;
}

RatFunc RatFunc::symbol(SymTabPtr tab, int sym) { return RatFunc(PPoly::symbol(tab, sym)); }

bool RatFunc::is_constant() const { return den_.empty() && num_.is_constant(); }

Rat RatFunc::constant_value() const { return coef_ * num_.constant_value(); }

PPoly RatFunc::scaled_num() const { return PPoly::constant(tab_, Rat(coef_.get_num())) * num_; }

PPoly RatFunc::expanded_den() const {
  PPoly d = PPoly::constant(tab_, Rat(coef_.get_den()));
  for (const auto& [f, e] : den_) d = d * f.pow(e);
  return d;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.coef_ = -r.coef_;
  return r;
}

void RatFunc::reduce_against_den() {
  for (size_t i = 0; i < den_.size();) {
    auto& [f, e] = den_[i];
    bool erased = false;
    while (e > 0) {
      auto q = num_.divide_exact(f);
      if (!q) break;
      num_ = *q;
      if (--e == 0) {
        den_.erase(den_.begin() + i);
        erased = true;
      }
    }
    if (!erased) ++i;
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // union denominator with per-factor max exponents
  std::vector<std::pair<PPoly, int>> uni;
  size_t i = 0, j = 0;
  while (i < den_.size() || j < o.den_.size()) {
    if (i == den_.size()) {
      uni.push_back(o.den_[j++]);
      continue;
    }
    if (j == o.den_.size()) {
      uni.push_back(den_[i++]);
      continue;
    }
    int c = PPoly::compare(den_[i].first, o.den_[j].first);
    if (c < 0)
      uni.push_back(den_[i++]);
    else if (c > 0)
      uni.push_back(o.den_[j++]);
    else {
      uni.push_back({den_[i].first, std::max(den_[i].second, o.den_[j].second)});
      ++i, ++j;
    }
  }
  auto complement = [&](const std::vector<std::pair<PPoly, int>>& d) {
    PPoly r = PPoly::constant(tab_, 1);
    size_t k = 0;
    for (const auto& [f, e] : uni) {
      int have = 0;
      if (k < d.size() && PPoly::compare(d[k].first, f) == 0) have = d[k++].second;
      if (e > have) r = r * f.pow(e - have);
    }
    return r;
  };
  PPoly sum = PPoly::constant(tab_, coef_) * num_ * complement(den_) +
              PPoly::constant(tab_, o.coef_) * o.num_ * complement(o.den_);
  sum.normalize_extensions();
  auto [c, prim] = sum.content_primitive();
  RatFunc r(tab_);
  if (c == 0) return r;
  r.coef_ = c;
  r.num_ = prim;
  r.den_ = std::move(uni);
  r.reduce_against_den();
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  RatFunc r(tab_ ? tab_ : o.tab_);
  if (is_zero() || o.is_zero()) return r;
  PPoly prod = num_ * o.num_;
  prod.normalize_extensions();
  auto [c, prim] = prod.content_primitive();
  r.coef_ = coef_ * o.coef_ * c;
  r.num_ = prim;
  size_t i = 0, j = 0;
  while (i < den_.size() || j < o.den_.size()) {
    if (i == den_.size()) {
      r.den_.push_back(o.den_[j++]);
      continue;
    }
    if (j == o.den_.size()) {
      r.den_.push_back(den_[i++]);
      continue;
    }
    int c2 = PPoly::compare(den_[i].first, o.den_[j].first);
    if (c2 < 0)
      r.den_.push_back(den_[i++]);
    else if (c2 > 0)
      r.den_.push_back(o.den_[j++]);
    else {
      r.den_.push_back({den_[i].first, den_[i].second + o.den_[j].second});
      ++i, ++j;
    }
  }
  r.reduce_against_den();
  return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

bool RatFunc::operator==(const RatFunc& o) const {
  return coef_ == o.coef_ && PPoly::compare(num_, o.num_) == 0 && cmp_den(den_, o.den_) == 0;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ComputationError("division by zero rational function");
  PPoly p = num_;
  PPoly extra = PPoly::constant(tab_, 1);
  while (p.has_extension_symbol()) {
    p.normalize_extensions();
    int sym = -1;
    for (int s = 0; s < tab_->size(); ++s)
      if (tab_->is_extension(s) && p.contains_symbol(s)) {
        sym = s;
        break;
      }
    if (sym < 0) break;
    const ExtensionRelation& rel = tab_->relation(sym);
    if (rel.degree != 2)
      throw ComputationError("cannot invert a quantity containing extension symbol '" +
                             tab_->name(sym) + "': its defining relation has degree " +
                             std::to_string(rel.degree) + " > 2");
    PPoly a(tab_), b(tab_);
    for (const auto& [m, c] : p.terms()) {
      if (m[sym] == 0) {
        a.add_term(m, c);
      } else {
        PMono reduced = m;
        reduced[sym] = 0;
        b.add_term(reduced, c);
      }
    }
    PPoly rhs(tab_);
    for (const auto& [m, c] : rel.rhs_terms) rhs.add_term(m, c);
    PPoly conj = a - b * PPoly::symbol(tab_, sym);
    p = a * a - b * b * rhs;
    p.normalize_extensions();
    if (p.is_zero())
      throw ComputationError("cannot invert: extension relation for '" + tab_->name(sym) +
                             "' is reducible over the current coefficients");
    extra = extra * conj;
  }
  Factorization fac = factor_ppoly(p);
  PPoly numerator = extra;
  for (const auto& [f, e] : den_) numerator = numerator * f.pow(e);
  numerator.normalize_extensions();
  auto [nc, nprim] = numerator.content_primitive();
  RatFunc r(tab_);
  r.coef_ = nc / (coef_ * fac.content);
  r.num_ = nprim;
  r.den_ = fac.factors;
  r.reduce_against_den();
  return r;
}

double RatFunc::eval_double(const std::map<int, double>& assign) const {
  double v = coef_.get_d() * num_.eval_double(assign);
  for (const auto& [f, e] : den_) {
    double d = f.eval_double(assign);
    for (int k = 0; k < e; ++k) v /= d;
  }
  return v;
}

std::optional<Rat> RatFunc::eval_exact(const std::map<int, Rat>& assign, PPoly* vanished) const {
  auto value_of = [&](const PPoly& p) {
    PPoly s = p.substitute(assign);
    if (!s.is_constant())
      throw ComputationError("eval_exact: symbols remain after substitution in " + p.str());
    return s.constant_value();
  };
  Rat v = coef_ * value_of(num_);
  for (const auto& [f, e] : den_) {
    Rat d = value_of(f);
    if (d == 0) {
      if (vanished) *vanished = f;
      return std::nullopt;
    }
    for (int k = 0; k < e; ++k) v /= d;
  }
  return v;
}

RatFunc RatFunc::substitute_params(const std::map<int, Rat>& assign) const {
  if (is_zero()) return *this;
  RatFunc out(num_.substitute(assign));
  out = out * RatFunc(tab_, coef_);
  for (const auto& [f, e] : den_) {
    PPoly fs = f.substitute(assign);
    if (fs.is_zero())
      throw ComputationError("denominator factor '" + f.str() +
                             "' vanishes at the given parameter values");
    RatFunc inv = RatFunc(fs).inverse();
    for (int k = 0; k < e; ++k) out = out * inv;
  }
  return out;
}

std::string RatFunc::str() const {
  if (is_zero()) return "0";
  PPoly n = scaled_num();
  std::vector<std::string> parts;
  if (coef_.get_den() != 1) parts.push_back(coef_.get_den().get_str());
  for (const auto& [f, e] : den_) {
    std::string s = f.str();
    if (f.num_terms() > 1 || (e > 1 && !f.is_constant() && f.num_terms() == 1 &&
                              s.find('*') != std::string::npos))
      s = "(" + s + ")";
    if (e > 1) s += "^" + std::to_string(e);
    parts.push_back(s);
  }
  if (parts.empty()) return n.str();
  std::string den_str;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) den_str += "*";
    den_str += parts[i];
  }
  if (parts.size() > 1) den_str = "(" + den_str + ")";
  std::string num_str = n.str();
  if (n.num_terms() > 1 || num_str.find('*') != std::string::npos || num_str[0] == '-')
    num_str = "(" + num_str + ")";
  return num_str + "/" + den_str;
}

int RatFunc::compare(const RatFunc& a, const RatFunc& b) {
  int c = mpq_cmp(a.coef_.get_mpq_t(), b.coef_.get_mpq_t());
  if (c != 0) return c < 0 ? -1 : 1;
  c = PPoly::compare(a.num_, b.num_);
  if (c != 0) return c;
  return cmp_den(a.den_, b.den_);
}

}  // namespace landau
