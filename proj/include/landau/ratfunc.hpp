#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "landau/ppoly.hpp"

namespace landau {

// Rational function in the parameter symbols, kept in the canonical shape
//
//     coef * num / prod_i den_i ^ e_i
//
// where `coef` is a rational scalar, `num` is a primitive integer polynomial
// with positive leading coefficient (or the constant 1), and every `den_i` is
// a distinct irreducible primitive polynomial with positive leading
// coefficient, sorted, with e_i >= 1 and none of them dividing `num`.
// Denominator factors never contain extension symbols. Zero is represented as
// coef = 0, num = 1, empty denominator. Because the shape is canonical,
// equality is structural.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(SymTabPtr tab);
  RatFunc(SymTabPtr tab, const Rat& value);
  explicit RatFunc(const PPoly& p);

  static RatFunc symbol(SymTabPtr tab, int sym);

  const SymTabPtr& table() const { return tab_; }
  bool is_zero() const { return coef_ == 0; }
  bool is_constant() const;             // rational constant (no symbols)
  Rat constant_value() const;           // requires is_constant()
  bool is_polynomial() const { return den_.empty(); }
  const Rat& coef() const { return coef_; }
  const PPoly& num() const { return num_; }
  const std::vector<std::pair<PPoly, int>>& den() const { return den_; }

  // numerator with the scalar folded in: coef.num * num (integer coefficients)
  PPoly scaled_num() const;
  // denominator as a single expanded polynomial: coef.den * prod den_i^e_i
  PPoly expanded_den() const;

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // Multiplicative inverse. Factors the numerator into the new denominator.
  // Numerators containing a degree-2 extension symbol are first cleared by
  // conjugation ((a + b*s)(a - b*s) = a^2 - b^2*R for s^2 = R); extension
  // relations of degree > 2 in the numerator make inversion fail.
  RatFunc inverse() const;

  double eval_double(const std::map<int, double>& assign = {}) const;

  // Exact evaluation under a full numeric assignment of the non-extension
  // symbols appearing here. Returns nullopt if a denominator factor vanishes
  // at the point; `vanished` then receives that factor. Throws if an
  // extension symbol survives the substitution.
  std::optional<Rat> eval_exact(const std::map<int, Rat>& assign,
                                PPoly* vanished = nullptr) const;

  // Partial substitution: symbols in `assign` are replaced, the rest stay
  // symbolic and the result is renormalized. Throws ComputationError naming
  // the factor if a denominator factor vanishes at the point.
  RatFunc substitute_params(const std::map<int, Rat>& assign) const;

  std::string str() const;

  // total order compatible with equality, for deterministic containers
  static int compare(const RatFunc& a, const RatFunc& b);

 private:
  void reduce_against_den();

  SymTabPtr tab_;
  Rat coef_ = 0;
  PPoly num_;
  std::vector<std::pair<PPoly, int>> den_;
};

}  // namespace landau
