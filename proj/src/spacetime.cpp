#include "pbgreen/spacetime.hpp"

#include <algorithm>

#include "pbgreen/errors.hpp"

namespace pbgreen {

ComplexSpacetimePoint::ComplexSpacetimePoint(const RealSpacetimePoint& x,
                                             const SpacetimeDirection& y,
                                             TubeSign sign) {
    const double sgn = (sign == TubeSign::plus) ? 1.0 : -1.0;
    z = CVec3(x.x, sgn * y.y);
    tau = Complex(x.t, sgn * y.s);
}

bool in_future_cone(const SpacetimeDirection& y) {
    return y.y.norm() < y.s;  // strict; boundary excluded
}

bool in_past_tube(const ComplexSpacetimePoint& z) {
    const Vec3 y = -z.z.imag();
    const double s = -z.tau.imag();
    return in_future_cone({y, s});
}

bool in_future_tube(const ComplexSpacetimePoint& z) {
    return in_future_cone({z.z.imag(), z.tau.imag()});
}

Complex complex_distance(const CVec3& z) {
    Complex w = dot(z, z);
    // Exactly on the branch disk the accumulated dot product carries a
    // +0.0 imaginary part, which std::sqrt maps to the -y-side limit.
    // Flip the zero so the on-disk value is the limit from the +y side.
    if (w.imag() == 0.0) w = Complex(w.real(), -0.0);
    return std::sqrt(w);  // principal root: Re >= 0
}

Complex complex_distance(const Vec3& x, const Vec3& y) {
    return complex_distance(CVec3(x, -y));
}

SourceDisk source_disk(const SpacetimeDirection& y) {
    const double a = y.radius();
    if (a <= 0.0) throw domain_error("source_disk: degenerate disk (|y| = 0)");
    return {Vec3{}, a, y.y / a};
}

double disk_distance(const Vec3& x, const Vec3& y) {
    const double a = y.norm();
    if (a == 0.0) return x.norm();  // disk degenerates to the origin
    const Vec3 n = y / a;
    const double h = dot(x, n);          // height above the disk plane
    const Vec3 p = x - h * n;            // in-plane projection
    const double rho = p.norm();
    if (rho <= a) return std::abs(h);
    const double dr = rho - a;
    return std::sqrt(dr * dr + h * h);
}

}  // namespace pbgreen
