#pragma once
// Exact multivariate polynomials in the parameter symbols, with rational
// coefficients. Monomials are dense exponent vectors over the symbol table;
// term order is graded lexicographic (total degree first, then exponent
// vector with the first symbol most significant). Extension symbols are kept
// reduced: any exponent >= the relation degree is rewritten via s^d = rhs.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "landau/rat.hpp"
#include "landau/symtab.hpp"

namespace landau {

using PMono = std::vector<int>;

// Graded-lex "less" used as std::map comparator; iteration ascends, so
// display code walks the map in reverse for the conventional descending order.
struct PMonoLess {
  bool operator()(const PMono& a, const PMono& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a < b;  // lexicographic, first symbol most significant
  }
};

class PPoly {
 public:
  PPoly() = default;
  explicit PPoly(SymTabPtr tab) : tab_(std::move(tab)) {}

  static PPoly constant(SymTabPtr tab, const Rat& c);
  static PPoly symbol(SymTabPtr tab, int sym, int exp = 1);

  const SymTabPtr& table() const { return tab_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero polynomial -> 0).
  Rat constant_value() const;
  int num_terms() const { return static_cast<int>(terms_.size()); }
  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(int sym) const;
  bool contains_symbol(int sym) const;
  bool has_extension_symbol() const;

  const std::map<PMono, Rat, PMonoLess>& terms() const { return terms_; }

  PPoly operator-() const;
  PPoly operator+(const PPoly& o) const;
  PPoly operator-(const PPoly& o) const;
  PPoly operator*(const PPoly& o) const;
  PPoly operator*(const Rat& c) const;
  PPoly pow(int e) const;
  bool operator==(const PPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const PPoly& o) const { return !(*this == o); }

  // Substitutes exact rational values for the given symbols (others remain).
  PPoly substitute(const std::map<int, Rat>& values) const;
  // Substitutes a polynomial for one symbol (used by extension rewriting and
  // conjugation). The exponent of `sym` in each term is expended into
  // replacement^exp.
  PPoly substitute_symbol(int sym, const PPoly& replacement) const;

  // Numeric evaluation; extension symbols take the positive real d-th root of
  // their (recursively evaluated) relation rhs unless explicitly assigned.
  double eval_double(const std::map<int, double>& values) const;

  // content * primitive: content is the rational gcd of coefficients signed so
  // the primitive part's leading (graded-lex greatest) coefficient is positive.
  // Zero polynomial: content 0, primitive part 0.
  std::pair<Rat, PPoly> content_primitive() const;

  // Exact division in the free polynomial ring (extension symbols must not
  // appear in the divisor). Returns std::nullopt when not divisible.
  std::optional<PPoly> divide_exact(const PPoly& divisor) const;

  PPoly derivative(int sym) const;

  std::string str() const;  // descending term order, canonical

  // Raw term insertion (accumulates; erases zeros); callers must finish with
  // normalize_extensions() when extension symbols may exceed their degree.
  void add_term(const PMono& m, const Rat& c);
  void normalize_extensions();

  // Total order on polynomials (for canonical sorting of factor lists):
  // compares (total degree, term count, term-by-term from the top).
  static int compare(const PPoly& a, const PPoly& b);

 private:
  SymTabPtr tab_;
  std::map<PMono, Rat, PMonoLess> terms_;
};

inline PPoly operator*(const Rat& c, const PPoly& p) { return p * c; }

}  // namespace landau
