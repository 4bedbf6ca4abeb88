#include <cmath>
#include <numbers>

#include "doctest.h"

#include "coneproj/cone.hpp"
#include "coneproj/rng.hpp"
#include "test_support.hpp"

using namespace coneproj;
using namespace coneproj::testsupport;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("contains: axis point belongs to a closed cone") {
    const RoundCone c = make_cone(zero_vector(3), {0, 0, 1}, kPi / 6);
    CHECK(contains(c, {0, 0, 1}));
    CHECK(contains(c, zero_vector(3)));  // the apex
    CHECK_FALSE(contains(c, {1, 0, 0}));
}

TEST_CASE("contains: aperture pi is the whole space") {
    SplitMix64 rng(1);
    const RoundCone c = make_cone(zero_vector(4), gaussian_vector(4, rng), kPi);
    for (int i = 0; i < 100; ++i) {
        CHECK(contains(c, gaussian_vector(4, rng)));
    }
}

TEST_CASE("contains: apex-open cone of aperture zero is exactly the apex") {
    const Vec v{1, 2, 0};
    const RoundCone c = make_cone(zero_vector(3), v, 0.0, ConeFlavor::ApexOpen);
    CHECK(contains(c, zero_vector(3)));
    CHECK_FALSE(contains(c, v));
    CHECK_FALSE(contains(c, scaled(v, 0.5)));
}

TEST_CASE("contains: zero axis makes the closed cone the whole space") {
    SplitMix64 rng(2);
    const RoundCone c = make_cone(zero_vector(3), zero_vector(3), 0.3);
    for (int i = 0; i < 100; ++i) {
        CHECK(contains(c, gaussian_vector(3, rng)));
    }
    // apex-open flavor keeps only the apex
    const RoundCone o = make_cone(zero_vector(3), zero_vector(3), 0.3, ConeFlavor::ApexOpen);
    CHECK(contains(o, zero_vector(3)));
    CHECK_FALSE(contains(o, {1, 0, 0}));
}

TEST_CASE("translate: definition, inverse, membership covariance") {
    const Vec v{0, 1, 1};
    const Vec a{1.5, -2.25, 4};
    const RoundCone base = make_cone(zero_vector(3), v, 0.4);

    const RoundCone shifted = translate(base, a);
    CHECK(shifted.apex == a);
    CHECK(shifted.axis == v);
    CHECK(shifted.half_aperture == base.half_aperture);

    const RoundCone back = translate(shifted, scaled(a, -1.0));
    CHECK(back.apex == base.apex);

    SplitMix64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const Vec u = gaussian_vector(3, rng);
        const Vec s = gaussian_vector(3, rng);
        const RoundCone moved = translate(base, s);
        CHECK(contains(moved, add(u, s)) == contains(base, u));
    }
}

TEST_CASE("membership is invariant under positive axis scaling") {
    SplitMix64 rng(4);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 2 + i % 5;
        const Vec v = gaussian_vector(n, rng);
        const Vec a = gaussian_vector(n, rng);
        const Vec u = gaussian_vector(n, rng);
        const double phi = kPi * rng.next_unit();
        const double lambda = 0.01 + 20.0 * rng.next_unit();
        const RoundCone c1 = make_cone(a, v, phi);
        const RoundCone c2 = make_cone(a, scaled(v, lambda), phi);
        CHECK(contains(c1, u) == contains(c2, u));
    }
}

TEST_CASE("rays through the apex stay inside") {
    SplitMix64 rng(5);
    const Vec v{1, 0, 2, 0};
    const double phi = 0.7;
    const RoundCone c = make_cone(zero_vector(4), v, phi);
    const SubspaceBasis full = SubspaceBasis::full_space(4);
    for (int i = 0; i < 50; ++i) {
        // point at a random angle strictly inside the cone
        const double theta = phi * 0.99 * rng.next_unit();
        const Vec w = full.unit_orthogonal_to(v);
        Vec u = add(scaled(scaled(v, 1.0 / norm(v)), std::cos(theta)),
                    scaled(w, std::sin(theta)));
        REQUIRE(contains(c, u, 1e-10));
        for (double t : {0.0, 0.5, 1.0, 2.0, 10.0}) {
            CHECK(contains(c, scaled(u, t), 1e-10));
        }
    }
}

TEST_CASE("apex-open membership implies closed membership at zero tolerance") {
    SplitMix64 rng(6);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 2 + i % 4;
        const Vec v = gaussian_vector(n, rng);
        const Vec u = gaussian_vector(n, rng);
        const double phi = kPi * rng.next_unit();
        const RoundCone open = make_cone(zero_vector(n), v, phi, ConeFlavor::ApexOpen);
        const RoundCone closed = make_cone(zero_vector(n), v, phi, ConeFlavor::Closed);
        if (contains(open, u, 0.0)) {
            CHECK(contains(closed, u, 0.0));
        }
    }
}

TEST_CASE("make_cone validates its inputs") {
    CHECK_THROWS_AS(make_cone({0, 0}, {1, 0, 0}, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(make_cone({0, 0}, {1, 0}, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(make_cone({0, 0}, {1, 0}, kPi + 0.1), std::invalid_argument);
    CHECK_THROWS_AS(make_cone({}, {}, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(contains(make_cone({0, 0}, {1, 0}, 0.1), {1, 0}, -1.0),
                    std::invalid_argument);
}
