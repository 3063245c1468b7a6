#pragma once
// Exact rational scalars (GMP) and small helpers shared across the library.

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace landau {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n, long d = 1) { return Rat(n, d); }

// Canonical text form: "p" or "p/q" with q > 0, gcd(p,q)=1.
inline std::string rat_str(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_str();
}

// Parses "p" or "p/q" (with optional leading '-'). Throws on malformed input.
inline Rat rat_parse(const std::string& s) {
  const auto slash = s.find('/');
  Int num, den(1);
  const std::string numpart = slash == std::string::npos ? s : s.substr(0, slash);
  if (numpart.empty() || num.set_str(numpart, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (slash != std::string::npos) {
    const std::string denpart = s.substr(slash + 1);
    if (denpart.empty() || den.set_str(denpart, 10) != 0)
      throw std::invalid_argument("malformed rational literal: " + s);
    if (den == 0) throw std::invalid_argument("zero denominator in rational literal: " + s);
  }
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline double rat_double(const Rat& q) { return q.get_d(); }

}  // namespace landau
