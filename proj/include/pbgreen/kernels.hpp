#ifndef PBGREEN_KERNELS_HPP
#define PBGREEN_KERNELS_HPP

#include "pbgreen/spacetime.hpp"

namespace pbgreen {

// 1/(2 i pi tau), the analytic-signal extension of the delta function.
// Requires Im(tau) < 0.
Complex cauchy_kernel(Complex tau);

// phi(z) = -1/(4 pi rtilde(z)).  Throws singularity_error when |rtilde|
// falls below eps (default 1e-12 * max(1, a)).
Complex extended_coulomb(const CVec3& z, double eps = -1.0);

// G(z) = 1/(8 i pi^2 rtilde (tau - rtilde)).  Requires s + Im rtilde > 0,
// which holds throughout the past tube.
Complex holomorphic_green(const ComplexSpacetimePoint& z, double eps = -1.0);

struct FluxResult {
    Complex value{};
    double refinement_disagreement = 0.0;
    bool converged = true;  // false: refinement levels disagree by > 1e-3
};

// Outward flux of grad phi over the sphere of radius R.  Gauss-Legendre
// in the polar direction, uniform in azimuth; gradient by central
// differences with step 1e-5 * R.  Equals the total source strength.
FluxResult source_flux(const SpacetimeDirection& y, double R, int n_quadrature);

// 7-point central-difference Laplacian of phi at x.  Requires x at
// distance > 10 h from the branch disk.
Complex laplacian_residual(const Vec3& x, const Vec3& y, double h);

}  // namespace pbgreen

#endif
