#include "pbgreen/kernels.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "pbgreen/errors.hpp"

namespace pbgreen {

namespace {

constexpr double kPi = std::numbers::pi;

double default_eps(double a) { return 1e-12 * std::max(1.0, a); }

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

// Kahan accumulator for complex sums.
struct CompensatedSum {
    Complex sum{}, c{};
    void add(Complex v) {
        Complex t = v - c;
        Complex u = sum + t;
        c = (u - sum) - t;
        sum = u;
    }
};

CVec3 gradient_coulomb(const Vec3& p, const Vec3& y, double h) {
    auto phi = [&](const Vec3& q) { return extended_coulomb(CVec3(q, -y)); };
    const Vec3 ex{h, 0, 0}, ey{0, h, 0}, ez{0, 0, h};
    return {(phi(p + ex) - phi(p - ex)) / (2 * h),
            (phi(p + ey) - phi(p - ey)) / (2 * h),
            (phi(p + ez) - phi(p - ez)) / (2 * h)};
}

Complex flux_level(const SpacetimeDirection& y, double R, int n) {
    std::vector<double> mu, w;
    gauss_legendre(n, mu, w);
    const int nphi = 2 * n;
    const double dphi = 2 * kPi / nphi;
    const double h = 1e-5 * R;
    CompensatedSum acc;
    for (int i = 0; i < n; ++i) {
        const double st = std::sqrt(std::max(0.0, 1.0 - mu[i] * mu[i]));
        for (int j = 0; j < nphi; ++j) {
            const double phi_ang = j * dphi;
            const Vec3 nvec{st * std::cos(phi_ang), st * std::sin(phi_ang), mu[i]};
            const Vec3 p = R * nvec;
            const CVec3 g = gradient_coulomb(p, y.y, h);
            const Complex gn = g.x * nvec.x + g.y * nvec.y + g.z * nvec.z;
            acc.add(w[i] * dphi * R * R * gn);
        }
    }
    return acc.sum;
}

}  // namespace

Complex cauchy_kernel(Complex tau) {
    if (tau.imag() >= 0.0)
        throw domain_error("cauchy_kernel: requires Im(tau) < 0");
    return 1.0 / (Complex(0.0, 2.0 * kPi) * tau);
}

Complex extended_coulomb(const CVec3& z, double eps) {
    const Complex rt = complex_distance(z);
    if (eps < 0.0) eps = default_eps(z.imag().norm());
    if (std::abs(rt) < eps)
        throw singularity_error("extended_coulomb: evaluation point on the branch circle");
    return -1.0 / (4.0 * kPi * rt);
}

Complex holomorphic_green(const ComplexSpacetimePoint& z, double eps) {
    const Complex rt = complex_distance(z.z);
    const double s = -z.tau.imag();
    if (s + rt.imag() <= 0.0)
        throw domain_error("holomorphic_green: argument outside the past tube (s + Im rtilde <= 0)");
    const double a = z.z.imag().norm();
    if (eps < 0.0) eps = default_eps(a);
    const Complex denom_pole = z.tau - rt;
    if (std::abs(rt) < eps || std::abs(denom_pole) < eps)
        throw singularity_error("holomorphic_green: evaluation at a pole of the kernel");
    return 1.0 / (Complex(0.0, 8.0 * kPi * kPi) * rt * denom_pole);
}

FluxResult source_flux(const SpacetimeDirection& y, double R, int n_quadrature) {
    const double a = y.radius();
    if (R <= a) throw domain_error("source_flux: sphere radius must exceed disk radius");
    if (n_quadrature < 16) throw domain_error("source_flux: n_quadrature must be >= 16");
    FluxResult res;
    const Complex coarse = flux_level(y, R, n_quadrature);
    const Complex fine = flux_level(y, R, 2 * n_quadrature);
    res.value = fine;
    res.refinement_disagreement = std::abs(fine - coarse);
    res.converged = res.refinement_disagreement <= 1e-3;
    return res;
}

Complex laplacian_residual(const Vec3& x, const Vec3& y, double h) {
    if (disk_distance(x, y) <= 10.0 * h)
        throw domain_error("laplacian_residual: point too close to the branch disk");
    auto phi = [&](const Vec3& q) { return extended_coulomb(CVec3(q, -y)); };
    const Vec3 ex{h, 0, 0}, ey{0, h, 0}, ez{0, 0, h};
    const Complex center = phi(x);
    Complex lap = phi(x + ex) + phi(x - ex) + phi(x + ey) + phi(x - ey) +
                  phi(x + ez) + phi(x - ez) - 6.0 * center;
    return lap / (h * h);
}

}  // namespace pbgreen
