#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pbgreen/directivity.hpp"
#include "pbgreen/errors.hpp"

using namespace pbgreen;

TEST_CASE("directivity values") {
    CHECK(directivity({{0, 0, 0}, 1.0}) == 0.0);
    CHECK(directivity({{1, 0, 0}, 2.0}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(directivity({{1, 0, 0}, 1.0}), domain_error);
    CHECK_THROWS_AS(directivity({{0, 0, 0}, 0.0}), domain_error);
}

TEST_CASE("convexity gap worked examples") {
    // equal parallel dishes: 1/2 + 1/2 - 2/4
    const SpacetimeDirection y{{0, 0, 1}, 3.0};
    CHECK(convexity_gap(y, y) == doctest::Approx(0.5));

    // a1 = 0: gap = D(y2) - D(|y2|, s1+s2) >= 0
    const SpacetimeDirection y0{{0, 0, 0}, 0.5};
    const SpacetimeDirection y2{{0, 0, 1}, 2.0};
    const double gap = convexity_gap(y0, y2);
    CHECK(gap == doctest::Approx(1.0 - 1.0 / 1.5));
    CHECK(gap >= 0.0);

    // anti-parallel equal radii: combined D is zero
    const SpacetimeDirection ym{{0, 0, -1}, 3.0};
    CHECK(convexity_gap(y, ym) == doctest::Approx(directivity(y) + directivity(ym)));
}

TEST_CASE("subadditivity on random cone pairs") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> n(0.0, 1.0);
    std::uniform_real_distribution<double> us(0.01, 10.0);
    std::uniform_real_distribution<double> uf(0.0, 0.999);
    auto sample = [&] {
        Vec3 v{n(rng), n(rng), n(rng)};
        const double norm = v.norm();
        const double s = us(rng);
        const double a = s * uf(rng);
        return SpacetimeDirection{norm > 0 ? v * (a / norm) : Vec3{}, s};
    };
    for (int i = 0; i < 100000; ++i) {
        CHECK(convexity_gap(sample(), sample()) >= -1e-12);
    }
}

TEST_CASE("scaling invariance and monotonicity") {
    const SpacetimeDirection y{{0.3, -0.4, 0.5}, 1.7};
    const double d = directivity(y);
    for (double lambda : {0.5, 2.0, 17.0}) {
        CHECK(directivity({lambda * y.y, lambda * y.s}) == doctest::Approx(d).epsilon(1e-13));
    }
    CHECK(directivity({y.y * 1.1, y.s}) > d);
    CHECK(directivity({y.y, y.s * 1.1}) < d);
}
