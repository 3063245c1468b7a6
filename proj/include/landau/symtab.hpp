#pragma once
// Parameter-symbol table: names, kinds, and algebraic-extension relations.
// A table is built once per problem and shared (immutably) by all polynomials.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "landau/rat.hpp"

namespace landau {

enum class SymbolKind {
  QuadraticCoefficient,  // c_alpha multiplying a quadratic invariant
  HigherCoefficient,     // k_i multiplying a higher-order invariant monomial
  Auxiliary,             // free bookkeeping symbols (delta, gamma, ...)
  Extension,             // algebraic symbol with a monic relation s^d = rhs
};

class PPoly;  // defined in ppoly.hpp

// Relation s^degree = rhs, rhs a polynomial in earlier symbols only.
struct ExtensionRelation {
  int degree = 0;
  // Exponent-vector form of the rhs over the full table (filled by the owner
  // after the table is frozen; see SymbolTable::set_extension_rhs).
  std::vector<std::pair<std::vector<int>, Rat>> rhs_terms;
};

class SymbolTable {
 public:
  int add(const std::string& name, SymbolKind kind) {
    names_.push_back(name);
    kinds_.push_back(kind);
    relations_.emplace_back();
    return static_cast<int>(names_.size()) - 1;
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  SymbolKind kind(int i) const { return kinds_[i]; }

  std::optional<int> find(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  bool is_extension(int i) const { return kinds_[i] == SymbolKind::Extension; }

  void set_extension_rhs(int i, int degree,
                         std::vector<std::pair<std::vector<int>, Rat>> rhs) {
    relations_[i].degree = degree;
    relations_[i].rhs_terms = std::move(rhs);
  }

  const ExtensionRelation& relation(int i) const { return relations_[i]; }

  bool has_extensions() const {
    for (int i = 0; i < size(); ++i)
      if (is_extension(i)) return true;
    return false;
  }

 private:
  std::vector<std::string> names_;
  std::vector<SymbolKind> kinds_;
  std::vector<ExtensionRelation> relations_;
};

using SymTabPtr = std::shared_ptr<const SymbolTable>;

}  // namespace landau
