#include "pbgreen/directivity.hpp"

#include "pbgreen/errors.hpp"

namespace pbgreen {

double directivity(const SpacetimeDirection& y) {
    if (y.s <= 0.0 || !in_future_cone(y))
        throw domain_error("directivity: argument must lie in the open future cone");
    const double a = y.radius();
    return a / (y.s - a);
}

double convexity_gap(const SpacetimeDirection& y1, const SpacetimeDirection& y2) {
    const double d1 = directivity(y1);
    const double d2 = directivity(y2);
    return d1 + d2 - directivity(y1 + y2);
}

}  // namespace pbgreen
