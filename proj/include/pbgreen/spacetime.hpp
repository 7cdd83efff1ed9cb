#ifndef PBGREEN_SPACETIME_HPP
#define PBGREEN_SPACETIME_HPP

#include "pbgreen/vec3.hpp"

namespace pbgreen {

// A point (x, t) in real 4-D spacetime; wave speed normalized to 1.
struct RealSpacetimePoint {
    Vec3 x;
    double t = 0.0;
};

// An imaginary spacetime part (y, s).  The spatial vector y encodes dish
// radius a = |y| and orientation y/a; s is the duration parameter.
struct SpacetimeDirection {
    Vec3 y;
    double s = 0.0;

    double radius() const { return y.norm(); }

    SpacetimeDirection operator+(const SpacetimeDirection& o) const {
        return {y + o.y, s + o.s};
    }
};

enum class TubeSign { plus, minus };

// z = x -+ iy, tau = t -+ is.  The minus sign (past tube convention) is
// the argument convention of the holomorphic Green function.
struct ComplexSpacetimePoint {
    CVec3 z;
    Complex tau{};

    ComplexSpacetimePoint() = default;
    ComplexSpacetimePoint(const CVec3& zz, Complex tt) : z(zz), tau(tt) {}
    ComplexSpacetimePoint(const RealSpacetimePoint& x, const SpacetimeDirection& y,
                          TubeSign sign);
};

// The branch disk of the complex distance: radius a, centered at the
// origin, lying in the plane orthogonal to y.
struct SourceDisk {
    Vec3 center;
    double radius = 0.0;
    Vec3 normal;
};

// Strict cone membership |y| < s.
bool in_future_cone(const SpacetimeDirection& y);

// z = x - iy with y in the open future cone.
bool in_past_tube(const ComplexSpacetimePoint& z);
// z = x + iy with y in the open future cone.
bool in_future_tube(const ComplexSpacetimePoint& z);

// Complex distance sqrt(z.z) on the branch Re >= 0.  On the branch disk
// the value is the one-sided limit from the +y side.
Complex complex_distance(const CVec3& z);
Complex complex_distance(const Vec3& x, const Vec3& y);

// Throws domain_error when |y| = 0 (degenerate disk).
SourceDisk source_disk(const SpacetimeDirection& y);

// Euclidean distance from x to the branch disk of y (disk through the
// origin, orthogonal to y, radius |y|).
double disk_distance(const Vec3& x, const Vec3& y);

}  // namespace pbgreen

#endif
