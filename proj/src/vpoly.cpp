#include "landau/vpoly.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "landau/errors.hpp"

namespace landau {

int vmono_compare(const VMono& a, const VMono& b) {
  int sa = std::accumulate(a.begin(), a.end(), 0);
  int sb = std::accumulate(b.begin(), b.end(), 0);
  if (sa != sb) return sa < sb ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

VPoly VPoly::constant(VSpacePtr space, const RatFunc& c) {
  VPoly p(space);
  p.add_term(VMono(space->size(), 0), c);
  return p;
}

VPoly VPoly::var(VSpacePtr space, int v) {
  VPoly p(space);
  VMono m(space->size(), 0);
  m[v] = 1;
  p.add_term(m, RatFunc(space->params, Rat(1)));
  return p;
}

VPoly VPoly::monomial(VSpacePtr space, const VMono& m, const RatFunc& c) {
  VPoly p(space);
  p.add_term(m, c);
  return p;
}

void VPoly::add_term(const VMono& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RatFunc VPoly::coeff(const VMono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RatFunc(space_->params) : it->second;
}

int VPoly::induced_degree(const VMono& m) const {
  int d = 0;
  for (size_t i = 0; i < m.size(); ++i) d += m[i] * space_->degrees[i];
  return d;
}

int VPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, induced_degree(m));
  return d;
}

int VPoly::low_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int k = induced_degree(m);
    if (d < 0 || k < d) d = k;
  }
  return d;
}

bool VPoly::is_homogeneous() const { return terms_.empty() || degree() == low_degree(); }

VPoly VPoly::operator+(const VPoly& o) const {
  VPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

VPoly VPoly::operator-(const VPoly& o) const { return *this + (-o); }

VPoly VPoly::operator-() const {
  VPoly r(space_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

VPoly VPoly::operator*(const VPoly& o) const { return mul_truncated(o, -1); }

VPoly VPoly::scaled(const RatFunc& c) const {
  VPoly r(space_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.add_term(m, k * c);
  return r;
}

VPoly VPoly::mul_truncated(const VPoly& o, int maxdeg) const {
  VPoly r(space_);
  for (const auto& [ma, ca] : terms_) {
    int da = induced_degree(ma);
    for (const auto& [mb, cb] : o.terms_) {
      if (maxdeg >= 0 && da + o.induced_degree(mb) > maxdeg) continue;
      VMono m(ma.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

VPoly VPoly::pow_truncated(int e, int maxdeg) const {
  VPoly r = constant(space_, RatFunc(space_->params, Rat(1)));
  VPoly base = maxdeg >= 0 ? truncated(maxdeg) : *this;
  for (int i = 0; i < e; ++i) r = r.mul_truncated(base, maxdeg);
  return r;
}

VPoly VPoly::truncated(int maxdeg) const {
  VPoly r(space_);
  for (const auto& [m, c] : terms_)
    if (induced_degree(m) <= maxdeg) r.terms_.emplace(m, c);
  return r;
}

bool VPoly::operator==(const VPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [m, c] : terms_) {
    if (m != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

VPoly VPoly::derivative(int v) const {
  VPoly r(space_);
  for (const auto& [m, c] : terms_) {
    if (m[v] == 0) continue;
    VMono d = m;
    d[v] -= 1;
    r.add_term(d, c * RatFunc(space_->params, Rat(m[v])));
  }
  return r;
}

std::map<int, VPoly> VPoly::decompose_by_degree() const {
  std::map<int, VPoly> out;
  for (const auto& [m, c] : terms_) {
    int d = induced_degree(m);
    auto it = out.find(d);
    if (it == out.end()) it = out.emplace(d, VPoly(space_)).first;
    it->second.add_term(m, c);
  }
  return out;
}

VPoly VPoly::part_of_degree(int d) const {
  VPoly r(space_);
  for (const auto& [m, c] : terms_)
    if (induced_degree(m) == d) r.terms_.emplace(m, c);
  return r;
}

VPoly VPoly::substitute_params(const std::map<int, Rat>& assign) const {
  VPoly r(space_);
  for (const auto& [m, c] : terms_) {
    RatFunc v = c.substitute_params(assign);
    if (!v.is_zero()) r.add_term(m, v);
  }
  return r;
}

double VPoly::eval_double(const std::vector<double>& vars,
                          const std::map<int, double>& params) const {
  double total = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.eval_double(params);
    for (size_t i = 0; i < m.size(); ++i)
      for (int k = 0; k < m[i]; ++k) t *= vars[i];
    total += t;
  }
  return total;
}

std::string VPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += space_->names[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    bool neg;
    std::string mag;
    if (c.is_constant()) {
      Rat v = c.constant_value();
      neg = v < 0;
      Rat a = neg ? Rat(-v) : v;
      if (a == 1 && !mono.empty())
        mag = mono;
      else
        mag = rat_str(a) + (mono.empty() ? "" : "*" + mono);
    } else {
      neg = c.coef() < 0;
      RatFunc a = neg ? -c : c;
      std::string cs = a.str();
      bool wrap = !a.is_polynomial() || a.num().num_terms() > 1 || a.coef() != 1;
      if (wrap) cs = "(" + cs + ")";
      mag = cs + (mono.empty() ? "" : "*" + mono);
    }
    if (first) {
      os << (neg ? "-" : "") << mag;
      first = false;
    } else {
      os << (neg ? " - " : " + ") << mag;
    }
  }
  return os.str();
}

}  // namespace landau
