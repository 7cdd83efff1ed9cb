#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "pbgreen/errors.hpp"
#include "pbgreen/kernels.hpp"
#include "pbgreen/pulsed_beam.hpp"

using namespace pbgreen;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("Cauchy kernel") {
    const Complex k1 = cauchy_kernel({0.0, -1.0});
    CHECK(k1.real() == doctest::Approx(1.0 / (2.0 * kPi)));
    CHECK(k1.imag() == doctest::Approx(0.0));

    const Complex k2 = cauchy_kernel({1.0, -1.0});
    CHECK(k2.real() == doctest::Approx(1.0 / (4.0 * kPi)));
    CHECK(k2.imag() == doctest::Approx(-1.0 / (4.0 * kPi)));

    CHECK_THROWS_AS(cauchy_kernel({1.0, 1.0}), domain_error);
    CHECK_THROWS_AS(cauchy_kernel({1.0, 0.0}), domain_error);
}

TEST_CASE("extended Coulomb potential") {
    const Complex p1 = extended_coulomb(CVec3({0, 0, 1}, {0, 0, 0}));
    CHECK(p1.real() == doctest::Approx(-1.0 / (4.0 * kPi)));
    CHECK(p1.imag() == doctest::Approx(0.0));

    // rtilde = 2 - i  =>  phi = -(2 + i)/(20 pi)
    const Complex p2 = extended_coulomb(CVec3({0, 0, 2}, {0, 0, -1}));
    CHECK(p2.real() == doctest::Approx(-2.0 / (20.0 * kPi)));
    CHECK(p2.imag() == doctest::Approx(-1.0 / (20.0 * kPi)));

    // the branch circle is a singular set
    CHECK_THROWS_AS(extended_coulomb(CVec3({1, 0, 0}, {0, 0, -1})), singularity_error);
}

TEST_CASE("holomorphic Green function worked value") {
    // x = (0,0,2), t = 2, y = (0,0,0.5), s = 1: rtilde = 2 - 0.5i
    const ComplexSpacetimePoint z({{0, 0, 2}, 2.0}, {{0, 0, 0.5}, 1.0}, TubeSign::minus);
    const Complex g = holomorphic_green(z);
    const Complex expected = Complex(4.0, 1.0) / (34.0 * kPi * kPi);
    CHECK(std::abs(g - expected) < 1e-15);
}

TEST_CASE("holomorphic Green domain") {
    // y = 0 violates the tube condition
    const ComplexSpacetimePoint z({{0, 0, 2}, 1.0}, {{0, 0, 0}, 0.0}, TubeSign::minus);
    CHECK_THROWS_AS(holomorphic_green(z), domain_error);
}

TEST_CASE("far zone matches the exact kernel at large r") {
    const double a = 0.5, s = 1.0, r = 100.0 * a;
    const ComplexSpacetimePoint z({{0, 0, r}, r}, {{0, 0, a}, s}, TubeSign::minus);
    const Complex exact = holomorphic_green(z);
    BeamGeometry g;
    g.r = r;
    g.t = r;
    g.a = a;
    g.s = s;
    g.theta = 0.0;
    const Complex approx = far_zone_field(g);
    CHECK(std::abs(exact - approx) / std::abs(exact) < 5.0 * a / r);
}

TEST_CASE("source flux") {
    // point-source limit: flux of the Coulomb monopole is 1
    const FluxResult fp = source_flux({{0, 0, 1e-6}, 2e-6}, 1.0, 24);
    CHECK(std::abs(fp.value - Complex(1.0, 0.0)) < 1e-3);

    // golden value at a = 0.5 (frozen from the refinement oracle)
    const FluxResult f5 = source_flux({{0, 0, 0.5}, 1.0}, 5.0, 24);
    CHECK(f5.converged);
    CHECK(f5.refinement_disagreement < 1e-6);
    CHECK(std::abs(f5.value - Complex(1.0, 0.0)) < 1e-6);

    // flux is independent of the enclosing radius
    const FluxResult f50 = source_flux({{0, 0, 0.5}, 1.0}, 50.0, 24);
    CHECK(std::abs(f5.value - f50.value) < 1e-4);

    CHECK_THROWS_AS(source_flux({{0, 0, 0.5}, 1.0}, 0.3, 24), domain_error);
    CHECK_THROWS_AS(source_flux({{0, 0, 0.5}, 1.0}, 5.0, 8), domain_error);
}

TEST_CASE("Laplacian residual converges at order two") {
    const Vec3 x{0, 0, 3}, y{0, 0, 1};
    const double h = 1e-3;
    const double r1 = std::abs(laplacian_residual(x, y, h));
    const double r2 = std::abs(laplacian_residual(x, y, h / 2.0));
    CHECK(r1 < 1e-6);
    if (r2 > 1e-13) {
        const double order = std::log2(r1 / r2);
        CHECK(order > 1.5);
        CHECK(order < 2.5);
    }

    // harmonicity of 1/r at y = 0
    const double q1 = std::abs(laplacian_residual({1, 0, 0}, {0, 0, 0}, 1e-3));
    CHECK(q1 < 1e-5);

    // too close to the branch disk
    CHECK_THROWS_AS(laplacian_residual({0.5, 0, 0.001}, {0, 0, 1}, 1e-3), domain_error);
}
