#include <cmath>
#include <numbers>

#include "doctest.h"

#include "coneproj/linalg.hpp"
#include "coneproj/rng.hpp"
#include "test_support.hpp"

using namespace coneproj;
using namespace coneproj::testsupport;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("orthonormalize: two independent vectors span the xy-plane") {
    const SubspaceBasis V = SubspaceBasis::orthonormalize({{1, 0, 0}, {1, 1, 0}}, 3);
    REQUIRE(V.dim() == 2);
    CHECK(V.max_gram_deviation() <= 1e-12);
    for (const Vec& b : V.vectors()) CHECK(b[2] == 0.0);
}

TEST_CASE("orthonormalize: dependent pair collapses to rank one") {
    const SubspaceBasis V = SubspaceBasis::orthonormalize({{2, 0}, {4, 0}}, 2);
    REQUIRE(V.dim() == 1);
    CHECK(V.vectors()[0][0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(V.vectors()[0][1] == 0.0);
}

TEST_CASE("orthonormalize: random spanning sets have identity Gram matrices") {
    SplitMix64 rng(11);
    const SubspaceBasis V = random_subspace(8, 5, rng);
    CHECK(V.max_gram_deviation() <= 1e-10);
}

TEST_CASE("orthonormalize: rejects mismatched dimensions, drops zero vectors") {
    CHECK_THROWS_AS(SubspaceBasis::orthonormalize({{1, 0}, {1, 0, 0}}, 2),
                    std::invalid_argument);
    const SubspaceBasis V = SubspaceBasis::orthonormalize({{0, 0, 0}}, 3);
    CHECK(V.dim() == 0);
}

TEST_CASE("project: coordinate subspace splits coordinates") {
    const SubspaceBasis V = SubspaceBasis::coordinate(3, {0, 1});
    const Decomposition d = V.decompose({3, 4, 5});
    CHECK(d.parallel == Vec{3, 4, 0});
    CHECK(d.perpendicular == Vec{0, 0, 5});
}

TEST_CASE("project: zero subspace and full space") {
    const Vec u{1, 2, 3};
    const Decomposition d0 = SubspaceBasis::zero_subspace(3).decompose(u);
    CHECK(d0.parallel == zero_vector(3));
    CHECK(d0.perpendicular == u);

    const Decomposition d1 = SubspaceBasis::full_space(3).decompose(u);
    CHECK(d1.parallel == u);
    CHECK(d1.perpendicular == zero_vector(3));
}

TEST_CASE("project is idempotent") {
    SplitMix64 rng(22);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + trial % 7;
        const std::size_t k = 1 + static_cast<std::size_t>(rng.next_unit() * double(n - 1));
        const SubspaceBasis V = random_subspace(n, k, rng);
        const Vec u = gaussian_vector(n, rng);
        const Vec once = V.project(u);
        const Vec twice = V.project(once);
        CHECK(norm(sub(twice, once)) <= 1e-10 * norm(u));
    }
}

TEST_CASE("decomposition: reconstruction, orthogonality, Pythagoras") {
    SplitMix64 rng(33);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + trial % 15;  // dims 2..16
        const std::size_t k = 1 + static_cast<std::size_t>(rng.next_unit() * double(n - 1));
        const SubspaceBasis V = random_subspace(n, k, rng);
        const Vec u = gaussian_vector(n, rng);
        const Decomposition d = V.decompose(u);
        const double nu = norm(u);

        const Vec rebuilt = add(d.parallel, d.perpendicular);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(rebuilt[i] - u[i]) <= 1e-12 * nu);
        }
        CHECK(std::abs(dot(d.parallel, d.perpendicular)) <= 1e-10 * nu * nu);

        const double lhs = nu * nu;
        const double rhs = dot(d.parallel, d.parallel) + dot(d.perpendicular, d.perpendicular);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * lhs);
    }
}

TEST_CASE("angle_between: orthogonal pair, zero convention, diagonal") {
    CHECK(angle_between({1, 0}, {0, 1}) == doctest::Approx(kPi / 2).epsilon(1e-14));
    CHECK(angle_between({1, 1, 1}, {0, 0, 0}) == kPi);
    CHECK(angle_between({0, 0, 0}, {1, 1, 1}) == kPi);
    CHECK(angle_between({1, 0, 0}, {1, 1, 0}) == doctest::Approx(kPi / 4).epsilon(1e-14));
}

TEST_CASE("angle_between: symmetric and invariant under positive scaling") {
    SplitMix64 rng(44);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 6;
        const Vec u = gaussian_vector(n, rng);
        const Vec v = gaussian_vector(n, rng);
        const double a = 0.01 + 10.0 * rng.next_unit();
        const double b = 0.01 + 10.0 * rng.next_unit();
        const double base = angle_between(u, v);
        CHECK(std::abs(angle_between(v, u) - base) <= 1e-12);
        CHECK(std::abs(angle_between(scaled(u, a), scaled(v, b)) - base) <= 1e-12);
    }
}

TEST_CASE("angle_between stays accurate near pi") {
    const Vec u{1.0, 1e-9, 0.0};
    const Vec v{-1.0, 0.0, 0.0};
    CHECK(kPi - angle_between(u, v) <= 2e-9);
    CHECK(kPi - angle_between(u, v) >= 1e-10);
}

TEST_CASE("angle to subspace and complement: diagonal against the xy-plane") {
    const SubspaceBasis V = SubspaceBasis::coordinate(3, {0, 1});
    const Vec u{1, 1, 1};
    CHECK(angle_to_subspace(u, V) ==
          doctest::Approx(std::acos(std::sqrt(2.0 / 3.0))).epsilon(1e-14));
    CHECK(angle_to_complement(u, V) ==
          doctest::Approx(std::acos(1.0 / std::sqrt(3.0))).epsilon(1e-14));
}

TEST_CASE("angle conventions for degenerate arguments") {
    const SubspaceBasis V = SubspaceBasis::coordinate(3, {0, 1});
    const Vec zero = zero_vector(3);
    CHECK(angle_to_subspace(zero, V) == kPi);
    CHECK(angle_to_complement(zero, V) == kPi);

    // u inside the complement
    CHECK(angle_to_complement({0, 0, 1}, V) == 0.0);

    const SubspaceBasis trivial = SubspaceBasis::zero_subspace(3);
    CHECK(angle_to_subspace({1, 2, 3}, trivial) == kPi);
    CHECK(angle_to_complement({1, 2, 3}, trivial) == 0.0);

    const SubspaceBasis full = SubspaceBasis::full_space(3);
    CHECK(angle_to_complement({1, 2, 3}, full) == kPi);
    CHECK(angle_to_subspace({1, 2, 3}, full) == 0.0);
}

TEST_CASE("complementarity: angles to V and V-perp sum to pi/2") {
    SplitMix64 rng(55);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + trial % 9;
        const std::size_t k = 1 + static_cast<std::size_t>(rng.next_unit() * double(n - 1));
        if (k >= n) continue;  // keep V proper
        const SubspaceBasis V = random_subspace(n, k, rng);
        const Vec v = gaussian_vector(n, rng);
        if (is_zero(v)) continue;
        const double s = angle_to_subspace(v, V) + angle_to_complement(v, V);
        CHECK(std::abs(s - kPi / 2) <= 1e-10);
    }
}

TEST_CASE("complement basis is orthonormal and orthogonal to the subspace") {
    SplitMix64 rng(66);
    const SubspaceBasis V = random_subspace(7, 3, rng);
    const SubspaceBasis C = V.complement();
    REQUIRE(C.dim() == 4);
    CHECK(C.max_gram_deviation() <= 1e-10);
    for (const Vec& c : C.vectors()) {
        for (const Vec& b : V.vectors()) {
            CHECK(std::abs(dot(b, c)) <= 1e-10);
        }
    }
}

TEST_CASE("unit_orthogonal_to: unit vector of V orthogonal to the anchor") {
    SplitMix64 rng(77);
    const SubspaceBasis V = random_subspace(6, 3, rng);
    const Vec w = gaussian_vector(6, rng);
    const Vec z = V.unit_orthogonal_to(w);
    CHECK(std::abs(norm(z) - 1.0) <= 1e-12);
    CHECK(std::abs(dot(z, V.project(w))) <= 1e-10);
    CHECK(norm(sub(V.project(z), z)) <= 1e-10);  // z stays inside V

    const SubspaceBasis line = random_subspace(6, 1, rng);
    CHECK_THROWS_AS(line.unit_orthogonal_to(line.vectors()[0]), std::domain_error);
}

TEST_CASE("is_zero threshold") {
    CHECK(is_zero(zero_vector(4)));
    CHECK(is_zero(Vec{1e-13, 1e-13}));
    CHECK_FALSE(is_zero(Vec{1e-9, 0.0}));
}
