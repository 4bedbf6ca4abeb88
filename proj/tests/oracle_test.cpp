#include <cmath>
#include <numbers>

#include "doctest.h"

#include "coneproj/oracle.hpp"
#include "coneproj/projection.hpp"
#include "coneproj/rng.hpp"
#include "test_support.hpp"

using namespace coneproj;
using namespace coneproj::testsupport;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;
}

TEST_CASE("sampler: aperture zero emits only the axis direction") {
    const RoundCone cone = make_cone(zero_vector(3), {0, 0, 2}, 0.0);
    const ConeSampler sampler(cone, {5, 100, SampleMode::BoundaryOnly});
    for (std::size_t i = 0; i < 100; ++i) {
        CHECK(norm(sub(sampler.sample(i), Vec{0, 0, 1})) <= 1e-15);
    }
}

TEST_CASE("sampler: half-space boundary in dim 3 stays on the equator") {
    const Vec v{0, 0, 1};
    const RoundCone cone = make_cone(zero_vector(3), v, kHalfPi);
    const ConeSampler sampler(cone, {7, 10000, SampleMode::BoundaryOnly});
    double min_dot = 1.0;
    for (std::size_t i = 0; i < 10000; ++i) {
        const Vec u = sampler.sample(i);
        CHECK(std::abs(norm(u) - 1.0) <= 1e-12);
        min_dot = std::min(min_dot, dot(u, v));
    }
    CHECK(min_dot >= -1e-10);
}

TEST_CASE("sampler: every emitted vector is a cone member") {
    SplitMix64 rng(42);
    for (int inst = 0; inst < 10; ++inst) {
        const std::size_t n = 2 + inst % 5;
        const Vec v = gaussian_vector(n, rng);
        if (is_zero(v)) continue;
        const double phi = (inst % 2 == 0) ? kHalfPi * rng.next_unit()
                                           : kPi * rng.next_unit();
        const SampleMode mode =
            phi > kHalfPi ? SampleMode::FilledCone
                          : (inst % 2 ? SampleMode::FilledCone : SampleMode::BoundaryOnly);
        const RoundCone cone = make_cone(gaussian_vector(n, rng), v, phi);
        const ConeSampler sampler(cone, {std::uint64_t(inst), 1000, mode});
        for (std::size_t i = 0; i < 1000; ++i) {
            CHECK(contains(cone, sampler.sample(i), 1e-10));
        }
    }
}

TEST_CASE("sampler: configuration errors") {
    const Vec v{1, 0, 0};
    CHECK_THROWS_AS(ConeSampler(make_cone(zero_vector(3), zero_vector(3), 0.1),
                                {0, 10, SampleMode::BoundaryOnly}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ConeSampler(make_cone(zero_vector(3), v, kHalfPi + 0.2),
                                {0, 10, SampleMode::BoundaryOnly}),
                    std::invalid_argument);
    CHECK_NOTHROW(ConeSampler(make_cone(zero_vector(3), v, kHalfPi + 0.2),
                              {0, 10, SampleMode::FilledCone}));
    CHECK_THROWS_AS(ConeSampler(make_cone(zero_vector(3), v, 0.1),
                                {0, 0, SampleMode::BoundaryOnly}),
                    std::invalid_argument);
}

TEST_CASE("sampler and reports are deterministic for a fixed seed") {
    const RoundCone cone = make_cone(zero_vector(4), {1, 0, 1, 0}, 0.4);
    const ConeSampler a(cone, {99, 50, SampleMode::FilledCone});
    const ConeSampler b(cone, {99, 50, SampleMode::FilledCone});
    for (std::size_t i = 0; i < 50; ++i) {
        CHECK(a.sample(i) == b.sample(i));
    }

    const SubspaceBasis V = SubspaceBasis::coordinate(4, {0, 1});
    const SamplerConfig cfg{99, 5000, SampleMode::BoundaryOnly};
    const VerificationReport r1 = empirical_projection_check(cone, V, cfg);
    const VerificationReport r2 = empirical_projection_check(cone, V, cfg);
    CHECK(r1.violations == r2.violations);
    CHECK(r1.worst_margin == r2.worst_margin);
    CHECK(r1.empirical_max_projected_angle == r2.empirical_max_projected_angle);
    CHECK(r1.instance == r2.instance);
}

TEST_CASE("empirical check: canonical closed-cone instance") {
    const RoundCone cone = make_cone(zero_vector(3), {1, 0, 1}, kPi / 6);
    const SubspaceBasis xy = SubspaceBasis::coordinate(3, {0, 1});
    const VerificationReport rep =
        empirical_projection_check(cone, xy, {0, 100000, SampleMode::BoundaryOnly});

    CHECK(rep.tag == ProjectionTag::ClosedCone);
    CHECK(rep.violations == 0);
    CHECK(rep.samples_tested == 100000);
    CHECK(rep.predicted_aperture == doctest::Approx(kPi / 4).epsilon(1e-12));
    CHECK(rep.empirical_max_projected_angle <= rep.predicted_aperture + 1e-9);
    CHECK(rep.empirical_max_projected_angle >= rep.predicted_aperture - 0.01);
    CHECK(rep.lift_directions_checked == 2 * xy.dim() + 1);
    CHECK(rep.lift_failures == 0);
    CHECK(rep.worst_margin >= -1e-9);
}

TEST_CASE("empirical check: full-subspace instance lifts the antipode") {
    const RoundCone cone = make_cone(zero_vector(3), {1, 0, 1}, kPi / 3);
    const SubspaceBasis xy = SubspaceBasis::coordinate(3, {0, 1});
    const VerificationReport rep =
        empirical_projection_check(cone, xy, {1, 20000, SampleMode::FilledCone});

    CHECK(rep.tag == ProjectionTag::FullSubspace);
    CHECK(rep.violations == 0);
    CHECK(rep.lift_directions_checked >= 2 * xy.dim() + 1);
    CHECK(rep.lift_failures == 0);
}

TEST_CASE("empirical check: axis inside V keeps the aperture") {
    const double phi = 0.5;
    const RoundCone cone = make_cone(zero_vector(3), {1, 0, 0}, phi);
    const SubspaceBasis xy = SubspaceBasis::coordinate(3, {0, 1});
    const VerificationReport rep =
        empirical_projection_check(cone, xy, {2, 50000, SampleMode::BoundaryOnly});

    CHECK(rep.tag == ProjectionTag::ClosedCone);
    CHECK(rep.predicted_aperture == doctest::Approx(phi).epsilon(1e-12));
    CHECK(rep.violations == 0);
    CHECK(rep.empirical_max_projected_angle <= phi + 1e-9);
    CHECK(rep.empirical_max_projected_angle >= phi - 0.01);
}

TEST_CASE("empirical check: translated apex") {
    const Vec apex{2, -1, 0.5};
    const RoundCone cone = make_cone(apex, {1, 0, 1}, kPi / 6);
    const SubspaceBasis xy = SubspaceBasis::coordinate(3, {0, 1});
    const VerificationReport rep =
        empirical_projection_check(cone, xy, {3, 2000, SampleMode::BoundaryOnly});
    CHECK(rep.violations == 0);
    CHECK(rep.lift_failures == 0);
}

TEST_CASE("empirical check: one instance per table row") {
    SplitMix64 rng(73);
    const std::size_t n = 4;

    struct Row {
        double psi;
        double phi_factor;  // phi = factor * psi (or absolute for the psi=0 rows)
        ProjectionTag expected;
    };

    // row 1: phi = psi = 0; row 2: phi = psi in (0, pi/2); row 3: phi = psi = pi/2;
    // row 4: phi < psi; row 5: phi > psi
    const SubspaceBasis V = random_subspace(n, 2, rng);

    {  // row 1
        const Vec v = axis_at_complement_angle(V, 0.0, 1.0, rng);
        const RoundCone cone = make_cone(zero_vector(n), v, 0.0);
        const VerificationReport rep =
            empirical_projection_check(cone, V, {11, 1000, SampleMode::BoundaryOnly});
        CHECK(rep.tag == ProjectionTag::SinglePoint);
        CHECK(rep.violations == 0);
    }
    {  // row 2
        const double psi = 0.8;
        const Vec v = axis_at_complement_angle(V, psi, 1.0, rng);
        const RoundCone cone = make_cone(zero_vector(n), v, angle_to_complement(v, V));
        const VerificationReport rep =
            empirical_projection_check(cone, V, {12, 10000, SampleMode::BoundaryOnly});
        CHECK(rep.tag == ProjectionTag::ApexPlusOpenCone);
        CHECK(rep.predicted_aperture == kHalfPi);
        CHECK(rep.violations == 0);
        CHECK(rep.empirical_max_projected_angle <= kHalfPi + 1e-9);
    }
    {  // row 3
        const Vec v = scaled(random_unit_in(V, rng), 1.5);
        const RoundCone cone = make_cone(zero_vector(n), v, kHalfPi);
        const VerificationReport rep =
            empirical_projection_check(cone, V, {13, 10000, SampleMode::BoundaryOnly});
        CHECK(rep.tag == ProjectionTag::ClosedCone);
        CHECK(rep.predicted_aperture == doctest::Approx(kHalfPi).epsilon(1e-12));
        CHECK(rep.violations == 0);
    }
    {  // row 4
        const Vec v = axis_at_complement_angle(V, 1.1, 2.0, rng);
        const RoundCone cone = make_cone(zero_vector(n), v, 0.6);
        const VerificationReport rep =
            empirical_projection_check(cone, V, {14, 10000, SampleMode::BoundaryOnly});
        CHECK(rep.tag == ProjectionTag::ClosedCone);
        CHECK(rep.violations == 0);
        CHECK(rep.lift_failures == 0);
    }
    {  // row 5
        const Vec v = axis_at_complement_angle(V, 0.5, 1.0, rng);
        const RoundCone cone = make_cone(zero_vector(n), v, 2.2);
        const VerificationReport rep =
            empirical_projection_check(cone, V, {15, 10000, SampleMode::FilledCone});
        CHECK(rep.tag == ProjectionTag::FullSubspace);
        CHECK(rep.violations == 0);
        CHECK(rep.lift_failures == 0);
    }
}

TEST_CASE("l2 experiment: thresholds at desk scale") {
    CHECK(std::abs(l2_discretized_experiment(0.6, 1000) - 0.64) <= 1e-3);
    CHECK(std::abs(l2_discretized_experiment(1.0 / std::sqrt(2.0), 1000) - 0.5) <= 1e-3);
    CHECK(std::abs(l2_discretized_experiment(0.8, 200) - 0.36) <= 1.0 / 200.0);
    CHECK_THROWS_AS(l2_discretized_experiment(0.0, 100), std::invalid_argument);
    CHECK_THROWS_AS(l2_discretized_experiment(0.5, 5), std::invalid_argument);
}

TEST_CASE("l2 counterexample below the threshold") {
    const L2Counterexample ce = l2_counterexample(0.6, 1000, 0.60);
    CHECK(ce.cutoff_index == 600);
    CHECK(ce.partial_sum < 0.0);
    CHECK(ce.premise_margin >= 0.0);

    // at or above the threshold there is nothing to construct
    CHECK_THROWS_AS(l2_counterexample(0.6, 1000, 0.64), std::domain_error);
    CHECK_THROWS_AS(l2_counterexample(0.6, 1000, 0.9), std::domain_error);
}
