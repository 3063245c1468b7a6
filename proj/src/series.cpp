#include "landau/series.hpp"

#include "landau/errors.hpp"

namespace landau {

PolyMap identity_map(const VSpacePtr& space) {
  PolyMap m;
  for (int v = 0; v < space->size(); ++v) m.push_back(VPoly::var(space, v));
  return m;
}

VPoly poly_substitute(const VPoly& f, const PolyMap& images, int maxdeg) {
  if (images.empty()) {
    if (f.is_zero()) return f;
    throw ValidationError("poly_substitute: no images supplied");
  }
  const VSpacePtr& target = images[0].space();
  // memoized powers: pows[v][k] = images[v]^k
  std::vector<std::vector<VPoly>> pows(images.size());
  for (size_t v = 0; v < images.size(); ++v)
    pows[v].push_back(VPoly::constant(target, RatFunc(target->params, Rat(1))));
  auto power = [&](int v, int k) -> const VPoly& {
    auto& list = pows[v];
    while (static_cast<int>(list.size()) <= k)
      list.push_back(list.back().mul_truncated(images[v], maxdeg));
    return list[k];
  };
  VPoly out(target);
  for (const auto& [m, c] : f.terms()) {
    VPoly term = VPoly::constant(target, c);
    for (size_t v = 0; v < m.size(); ++v)
      if (m[v] > 0) term = term.mul_truncated(power(static_cast<int>(v), m[v]), maxdeg);
    out = out + term;
  }
  return out;
}

PolyMap compose_maps(const PolyMap& outer, const PolyMap& inner, int maxdeg) {
  PolyMap r;
  r.reserve(outer.size());
  for (const auto& comp : outer) r.push_back(poly_substitute(comp, inner, maxdeg));
  return r;
}

PolyMap series_invert(const PolyMap& S, int maxdeg) {
  if (S.empty()) return S;
  const VSpacePtr& space = S[0].space();
  const int n = static_cast<int>(S.size());
  PolyMap id = identity_map(space);
  PolyMap h;
  for (int v = 0; v < n; ++v) {
    VPoly tail = S[v] - id[v];
    if (!tail.is_zero() && tail.low_degree() < 2)
      throw ValidationError("series_invert: map is not near-identity in component " +
                            space->names[v]);
    h.push_back(tail);
  }
  PolyMap U = id;
  for (int iter = 0; iter <= maxdeg; ++iter) {
    PolyMap next;
    next.reserve(n);
    bool stable = true;
    for (int v = 0; v < n; ++v) {
      VPoly nv = id[v] - poly_substitute(h[v], U, maxdeg);
      if (!(nv == U[v])) stable = false;
      next.push_back(std::move(nv));
    }
    U = std::move(next);
    if (stable) break;
  }
  return U;
}

}  // namespace landau
