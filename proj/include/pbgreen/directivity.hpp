#ifndef PBGREEN_DIRECTIVITY_HPP
#define PBGREEN_DIRECTIVITY_HPP

#include "pbgreen/spacetime.hpp"

namespace pbgreen {

// D(y) = a/(s - a), a = |y|.  Defined on the open future cone; zero iff
// the dish degenerates to a point (a = 0).
double directivity(const SpacetimeDirection& y);

// D(y1) + D(y2) - D(y1 + y2); nonnegative on the cone (subadditivity).
// The combined argument uses a = |y1 + y2| and s = s1 + s2.
double convexity_gap(const SpacetimeDirection& y1, const SpacetimeDirection& y2);

}  // namespace pbgreen

#endif
