#pragma once

#include <vector>

#include "landau/vpoly.hpp"

namespace landau {

// A polynomial map between variable spaces: component i is the image of
// variable i, written in the target space's variables.
using PolyMap = std::vector<VPoly>;

PolyMap identity_map(const VSpacePtr& space);

// Substitute images[v] for variable v of f's space. All images must live in
// one common space; the result is truncated to induced degree <= maxdeg
// (maxdeg < 0: no truncation). Powers of the images are memoized.
VPoly poly_substitute(const VPoly& f, const PolyMap& images, int maxdeg);

// Composition (outer o inner): substitute the inner map into each component
// of the outer map, truncating at maxdeg.
PolyMap compose_maps(const PolyMap& outer, const PolyMap& inner, int maxdeg);

// Inverse of a near-identity map S = id + h (h of induced degree >= 2 in every
// component) through induced degree maxdeg: returns U with S(U) == id == U(S)
// modulo degree > maxdeg. Throws ValidationError if S is not near-identity.
PolyMap series_invert(const PolyMap& S, int maxdeg);

}  // namespace landau
