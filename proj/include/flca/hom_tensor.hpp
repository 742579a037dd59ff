#pragma once

#include "derived.hpp"

namespace flca {

// Hom(X, Y) with the compact-open topology, read off degree 0 of RHom.
inline FlcaGroup hom(const FlcaGroup& x, const FlcaGroup& y) {
  const ExtResult h0 = ext(0, x, y);
  if (!h0.is_group()) throw InvariantViolation("Hom(" + to_string(x) + ", " + to_string(y) + ") left the category");
  return h0.group;
}

// X (x) Y := Hom(X, Y^v)^v.
inline FlcaGroup tensor(const FlcaGroup& x, const FlcaGroup& y) { return dual(hom(x, dual(y))); }

}  // namespace flca
