#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "landau/ratfunc.hpp"

namespace landau {

// A polynomial variable space: named variables with induced degrees. For the
// carrier space (x1..xn) every degree is 1; for the orbit-space variables
// (J1..Jr) the degree of J_i is the degree of the invariant it stands for.
struct VarSpace {
  std::vector<std::string> names;
  std::vector<int> degrees;
  SymTabPtr params;

  int size() const { return static_cast<int>(names.size()); }
};

using VSpacePtr = std::shared_ptr<const VarSpace>;

using VMono = std::vector<int>;

// Monomial order: exponent sum first, then lexicographic with index 0 most
// significant. The map holds terms ascending; display walks it backwards so
// the largest monomial prints first.
int vmono_compare(const VMono& a, const VMono& b);

struct VMonoLess {
  bool operator()(const VMono& a, const VMono& b) const { return vmono_compare(a, b) < 0; }
};

// Polynomial in the variables of one VarSpace with RatFunc coefficients.
class VPoly {
 public:
  VPoly() = default;
  explicit VPoly(VSpacePtr space) : space_(std::move(space)) {}

  static VPoly constant(VSpacePtr space, const RatFunc& c);
  static VPoly var(VSpacePtr space, int v);
  static VPoly monomial(VSpacePtr space, const VMono& m, const RatFunc& c);

  const VSpacePtr& space() const { return space_; }
  const std::map<VMono, RatFunc, VMonoLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }

  void add_term(const VMono& m, const RatFunc& c);
  RatFunc coeff(const VMono& m) const;

  int induced_degree(const VMono& m) const;
  // maximum induced degree over the terms (-1 for zero)
  int degree() const;
  // minimum induced degree over the terms (-1 for zero)
  int low_degree() const;
  bool is_homogeneous() const;

  VPoly operator+(const VPoly& o) const;
  VPoly operator-(const VPoly& o) const;
  VPoly operator-() const;
  VPoly operator*(const VPoly& o) const;
  VPoly scaled(const RatFunc& c) const;
  // product keeping only terms of induced degree <= maxdeg
  VPoly mul_truncated(const VPoly& o, int maxdeg) const;
  VPoly pow_truncated(int e, int maxdeg) const;
  VPoly truncated(int maxdeg) const;

  bool operator==(const VPoly& o) const;
  bool operator!=(const VPoly& o) const { return !(*this == o); }

  VPoly derivative(int v) const;

  // terms grouped by induced degree
  std::map<int, VPoly> decompose_by_degree() const;
  VPoly part_of_degree(int d) const;

  // evaluate coefficients at an exact parameter point; a vanishing coefficient
  // denominator raises ComputationError naming the factor
  VPoly substitute_params(const std::map<int, Rat>& assign) const;

  double eval_double(const std::vector<double>& vars,
                     const std::map<int, double>& params = {}) const;

  std::string str() const;

 private:
  VSpacePtr space_;
  std::map<VMono, RatFunc, VMonoLess> terms_;
};

}  // namespace landau
