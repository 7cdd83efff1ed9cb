#include "pbgreen/pulsed_beam.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pbgreen/errors.hpp"
#include "pbgreen/kernels.hpp"

namespace pbgreen {

namespace {
constexpr double kPi = std::numbers::pi;

void require_cone(const SpacetimeDirection& y, const char* who) {
    if (!in_future_cone(y))
        throw domain_error(std::string(who) + ": extension must lie in the open future cone (|y| < s)");
}
}  // namespace

EmitterDish::EmitterDish(const RealSpacetimePoint& c, const SpacetimeDirection& ext)
    : center(c), extension(ext) {
    require_cone(ext, "EmitterDish");
}

ReceiverDish::ReceiverDish(const RealSpacetimePoint& c, const SpacetimeDirection& ext)
    : center(c), extension(ext) {
    require_cone(ext, "ReceiverDish");
}

Complex emitted_field(const EmitterDish& e, const RealSpacetimePoint& x) {
    // x - z_e = (x - x_e) - i y_e lies in the past tube by construction.
    const RealSpacetimePoint dx{x.x - e.center.x, x.t - e.center.t};
    return holomorphic_green({dx, e.extension, TubeSign::minus});
}

double duration(double theta, double a, double s) {
    if (a < 0.0 || a >= s)
        throw domain_error("duration: requires 0 <= a < s");
    return s - a * std::cos(theta);
}

Complex far_zone_field(const BeamGeometry& g) {
    const double T = duration(g.theta, g.a, g.s);
    return 1.0 / (Complex(0.0, 8.0 * kPi * kPi * g.r) * Complex(g.t - g.r, -T));
}

Complex coupling(const EmitterDish& e, const ReceiverDish& rdish) {
    const RealSpacetimePoint dx{rdish.center.x - e.center.x,
                                rdish.center.t - e.center.t};
    const SpacetimeDirection ysum = rdish.extension + e.extension;
    // V+ is convex, so ysum is in the cone whenever both dishes are valid.
    return holomorphic_green({dx, ysum, TubeSign::minus});
}

BeamGeometry combined_geometry(const EmitterDish& e, const ReceiverDish& rdish) {
    BeamGeometry g;
    const Vec3 dx = rdish.center.x - e.center.x;
    const SpacetimeDirection ysum = rdish.extension + e.extension;
    g.r = dx.norm();
    g.t = rdish.center.t - e.center.t;
    g.a = ysum.y.norm();
    g.s = ysum.s;
    if (g.r > 0.0 && g.a > 0.0) {
        const double c = std::clamp(dot(dx, ysum.y) / (g.r * g.a), -1.0, 1.0);
        g.theta = std::acos(c);
    }  // theta = 0 when either vector vanishes
    return g;
}

double peak_coupling(double r, double a, double s) {
    if (r <= 0.0) throw domain_error("peak_coupling: requires r > 0");
    if (a < 0.0 || a >= s)
        throw domain_error("peak_coupling: requires 0 <= a < s");
    return 1.0 / (8.0 * kPi * kPi * r * (s - a));
}

Alignment optimal_alignment(const Vec3& x_e, const Vec3& x_r, double a_e,
                            double a_r, double s_e, double s_r) {
    const Vec3 dx = x_r - x_e;
    const double r = dx.norm();
    if (r == 0.0) throw domain_error("optimal_alignment: coincident dish centers");
    if (a_e >= s_e || a_r >= s_r)
        throw domain_error("optimal_alignment: dish parameters must satisfy a < s");
    const Vec3 u = dx / r;
    return {{a_e * u, s_e}, {a_r * u, s_r}, r};
}

}  // namespace pbgreen
