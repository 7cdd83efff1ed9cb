#ifndef PBGREEN_PULSED_BEAM_HPP
#define PBGREEN_PULSED_BEAM_HPP

#include "pbgreen/spacetime.hpp"

namespace pbgreen {

// Emitting dish z_e = x_e + iy_e in the future tube.  y_e points along
// the emitted beam axis.
struct EmitterDish {
    RealSpacetimePoint center;
    SpacetimeDirection extension{{}, 1.0};

    EmitterDish() = default;  // point dish at the origin, s = 1
    EmitterDish(const RealSpacetimePoint& c, const SpacetimeDirection& ext);

    ComplexSpacetimePoint complex_point() const {
        return {center, extension, TubeSign::plus};
    }
};

// Receiving dish z_r = x_r - iy_r in the past tube.  y_r points TOWARD
// the incoming signal source (into the receiver).
struct ReceiverDish {
    RealSpacetimePoint center;
    SpacetimeDirection extension{{}, 1.0};

    ReceiverDish() = default;  // point dish at the origin, s = 1
    ReceiverDish(const RealSpacetimePoint& c, const SpacetimeDirection& ext);

    ComplexSpacetimePoint complex_point() const {
        return {center, extension, TubeSign::minus};
    }
};

// Derived scalars of an emitter/receiver pair: r = |x_r - x_e|,
// t = t_r - t_e, a = |y_r + y_e|, s = s_r + s_e, theta the angle between
// x_r - x_e and y_r + y_e (defined 0 when either vector vanishes).
struct BeamGeometry {
    double r = 0.0;
    double t = 0.0;
    double a = 0.0;
    double s = 0.0;
    double theta = 0.0;
};

// Field of the translated Green function, G(x - z_e).
Complex emitted_field(const EmitterDish& e, const RealSpacetimePoint& x);

// Pulse duration T(theta) = s - a cos(theta) > 0.  Throws on a >= s.
double duration(double theta, double a, double s);

// Far-zone approximation 1/(8 i pi^2 r) * 1/(t - r - i T(theta)).
Complex far_zone_field(const BeamGeometry& g);

// Coupling G(z_r - z_e); depends only on x_r - x_e and y_r + y_e.
Complex coupling(const EmitterDish& e, const ReceiverDish& rdish);

BeamGeometry combined_geometry(const EmitterDish& e, const ReceiverDish& rdish);

// Peak far-zone coupling 1/(8 pi^2 r (s - a)) at t = r, theta = 0.
double peak_coupling(double r, double a, double s);

struct Alignment {
    SpacetimeDirection emitter;
    SpacetimeDirection receiver;
    double t = 0.0;  // optimal reception delay t_r - t_e
};

// Closed-form optimum: both y vectors along (x_r - x_e)/r, t = r.
// Maximizes |coupling| in the far zone at fixed radii and durations.
Alignment optimal_alignment(const Vec3& x_e, const Vec3& x_r, double a_e,
                            double a_r, double s_e, double s_r);

}  // namespace pbgreen

#endif
