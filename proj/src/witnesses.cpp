#include "coneproj/witnesses.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "coneproj/projection.hpp"

namespace coneproj {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

void require_angle(double x, const char* what) {
    if (!(x >= 0.0 && x <= kPi)) {
        throw std::invalid_argument(std::string(what) + ": angle outside [0, pi]");
    }
}

// Finds t0 < 0 with f(t0) > 0, given f(0) > 0. Accepts -1 outright when the
// margin there is healthy, otherwise bisects toward 0 while holding the
// margin above f(0)/2, which keeps both |t0| and the premise slack away
// from the underflow regime.
template <class F>
double find_negative_parameter(F&& f) {
    const double f0 = f(0.0);
    if (!(f0 > 0.0)) {
        throw std::domain_error("witness search: no positive margin at t = 0");
    }
    const double target = 0.5 * f0;
    if (f(-1.0) >= target) return -1.0;
    double lo = -1.0;
    double hi = 0.0;
    double best = 0.0;
    bool found = false;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) >= target) {
            best = mid;
            hi = mid;
            found = true;
        } else {
            lo = mid;
        }
    }
    if (!found) {
        throw std::domain_error("witness search: bisection found no negative parameter");
    }
    return best;
}

// Finds the smallest convenient t >= 0 with f(t) >= target for an increasing
// f whose limit exceeds target: doubling from 1 until the target is met
// (capped at 2^60), then bisection back toward the crossing.
template <class F>
double find_positive_parameter(F&& f, double target) {
    if (f(0.0) >= target) return 0.0;
    double hi = 1.0;
    int doublings = 0;
    while (!(f(hi) >= target)) {
        hi *= 2.0;
        if (++doublings > 60) {
            throw std::domain_error("witness search: no positive margin below t = 2^60");
        }
    }
    double lo = (hi == 1.0) ? 0.0 : hi * 0.5;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) >= target) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

Witness certify(Vec u, const Vec& axis, const SubspaceBasis& V, WitnessConstruction c) {
    if (is_zero(u)) {
        throw std::domain_error("witness: constructed vector degenerated to zero");
    }
    const Vec pu = V.project(u);
    if (is_zero(pu)) {
        throw std::domain_error("witness: constructed vector projects to zero");
    }
    Witness w;
    w.certified_original_angle = angle_between(u, axis);
    w.certified_projected_angle = angle_between(pu, V.project(axis));
    w.vector = std::move(u);
    w.construction = c;
    return w;
}

}  // namespace

Witness equality_witness(const Vec& axis, const SubspaceBasis& V, double phi) {
    if (axis.size() != V.ambient_dim()) {
        throw std::invalid_argument("equality_witness: dimension mismatch");
    }
    require_angle(phi, "equality_witness: phi");
    if (is_zero(axis)) {
        throw std::domain_error("equality_witness: axis must be nonzero");
    }
    if (V.dim() < 2) {
        throw std::domain_error("equality_witness: subspace dimension must be at least 2");
    }
    const double psi = angle_to_complement(axis, V);
    if (!(phi < psi)) {
        throw std::domain_error(
            "equality_witness: requires phi < angle(axis, V-perp)");
    }

    const double phi1 = projected_aperture(phi, psi);
    const Decomposition d = V.decompose(axis);
    const Vec& v1 = d.parallel;  // nonzero: phi < psi forces psi > 0
    const Vec z = V.unit_orthogonal_to(v1);

    const double c1 = std::cos(phi1);
    const double s1 = std::sin(phi1);
    const double n1 = norm(v1);

    Vec u = add(scaled(v1, c1), scaled(z, n1 * s1));
    if (!is_zero(d.perpendicular)) {
        // With a genuine perpendicular part, psi < pi/2 and phi < psi keep
        // phi1 strictly below pi/2, so the division is safe.
        if (!(c1 > 1e-14)) {
            throw std::domain_error("equality_witness: projected aperture too close to pi/2");
        }
        u = add(u, scaled(d.perpendicular, 1.0 / c1));
    }
    return certify(std::move(u), axis, V, WitnessConstruction::Equality);
}

Witness antipodal_witness(const Vec& axis, const SubspaceBasis& V, double phi) {
    if (axis.size() != V.ambient_dim()) {
        throw std::invalid_argument("antipodal_witness: dimension mismatch");
    }
    require_angle(phi, "antipodal_witness: phi");
    if (is_zero(axis)) {
        throw std::domain_error("antipodal_witness: axis must be nonzero");
    }
    if (V.dim() == 0) {
        throw std::domain_error("antipodal_witness: subspace dimension must be at least 1");
    }
    if (V.is_full_space()) {
        throw std::domain_error("antipodal_witness: subspace must be proper");
    }
    const double psi = angle_to_complement(axis, V);
    if (!(phi > psi)) {
        throw std::domain_error(
            "antipodal_witness: requires phi > angle(axis, V-perp)");
    }

    const Decomposition d = V.decompose(axis);
    const double nv = norm(axis);
    const double cphi = std::cos(phi);

    Vec u;
    if (!is_zero(d.parallel) && !is_zero(d.perpendicular)) {
        // u(t) = t v1 + v2
        const double n1 = norm(d.parallel);
        const double n2 = norm(d.perpendicular);
        const auto f = [&](double t) {
            return t * n1 * n1 + n2 * n2 -
                   cphi * std::sqrt(t * t * n1 * n1 + n2 * n2) * nv;
        };
        const double t0 = find_negative_parameter(f);
        u = add(scaled(d.parallel, t0), d.perpendicular);
    } else if (is_zero(d.parallel)) {
        // axis in V-perp: u(t) = t z + v2 with z a unit vector of V
        const Vec& z = V.vectors().front();
        const double n2 = norm(d.perpendicular);
        const auto f = [&](double t) {
            return n2 * n2 - cphi * std::sqrt(t * t + n2 * n2) * nv;
        };
        const double t0 = find_negative_parameter(f);
        u = add(scaled(z, t0), d.perpendicular);
    } else {
        // axis in V: u(t) = t v1 + z with z a unit vector of V-perp
        const Vec z = V.complement().vectors().front();
        const double n1 = norm(d.parallel);
        const auto f = [&](double t) {
            return t * n1 * n1 - cphi * std::sqrt(t * t * n1 * n1 + 1.0) * n1;
        };
        const double t0 = find_negative_parameter(f);
        u = add(scaled(d.parallel, t0), z);
    }
    return certify(std::move(u), axis, V, WitnessConstruction::Antipodal);
}

Witness border_witness(const Vec& axis, const SubspaceBasis& V, double epsilon) {
    if (axis.size() != V.ambient_dim()) {
        throw std::invalid_argument("border_witness: dimension mismatch");
    }
    if (!(epsilon > 0.0 && epsilon <= 1.0)) {
        throw std::invalid_argument("border_witness: epsilon must lie in (0, 1]");
    }
    if (is_zero(axis)) {
        throw std::domain_error("border_witness: axis must be nonzero");
    }
    if (V.dim() < 2) {
        throw std::domain_error("border_witness: subspace dimension must be at least 2");
    }
    const double psi = angle_to_complement(axis, V);
    if (!(psi > 0.0)) {
        throw std::domain_error(
            "border_witness: axis must not be orthogonal to the subspace");
    }

    const Decomposition d = V.decompose(axis);
    const double n1 = norm(d.parallel);  // > 0 since psi > 0
    const Vec v1_hat = scaled(d.parallel, 1.0 / n1);
    const Vec v2_unitized = scaled(d.perpendicular, 1.0 / n1);
    const double m2 = norm(v2_unitized);

    const Vec zdir = V.unit_orthogonal_to(d.parallel);
    const Vec z = scaled(zdir, std::sqrt(std::max(0.0, 1.0 - epsilon * epsilon)));

    // f(t) = eps + t m2^2 - m2 sqrt(1 + t^2 m2^2), strictly increasing with
    // limit eps; targeting eps/2 keeps the premise slack healthy while
    // bounding t by roughly 2/eps.
    const auto f = [&](double t) {
        return epsilon + t * m2 * m2 - m2 * std::sqrt(1.0 + t * t * m2 * m2);
    };
    const double t0 = find_positive_parameter(f, 0.5 * epsilon);

    Vec u = add(add(scaled(v1_hat, epsilon), scaled(v2_unitized, t0)), z);
    return certify(std::move(u), axis, V, WitnessConstruction::Border);
}

Vec lift_to_cone(const Vec& target, const Vec& seed, const RoundCone& cone,
                 const SubspaceBasis& V) {
    const std::size_t n = V.ambient_dim();
    if (target.size() != n || seed.size() != n || cone.apex.size() != n) {
        throw std::invalid_argument("lift_to_cone: dimension mismatch");
    }
    if (cone.flavor != ConeFlavor::Closed) {
        throw std::invalid_argument("lift_to_cone: expects the closed flavor");
    }
    if (!is_zero(cone.apex)) {
        throw std::invalid_argument(
            "lift_to_cone: cone apex must be at the origin; translate first");
    }
    if (!contains(cone, seed, 1e-10)) {
        throw std::domain_error("lift_to_cone: seed is not a member of the cone");
    }
    const Decomposition sd = V.decompose(seed);
    if (is_zero(sd.parallel)) {
        throw std::domain_error("lift_to_cone: seed projects to zero");
    }
    if (norm(sub(target, V.project(target))) > 1e-10 * (norm(target) + 1.0)) {
        throw std::domain_error("lift_to_cone: target must lie in the subspace");
    }

    const Vec pv = V.project(cone.axis);
    const double n1 = norm(sd.parallel);
    const double nt = norm(target);
    const double npv = norm(pv);
    // cos(theta) is certified by the seed; a zero projected axis makes the
    // requirement vacuous (every target qualifies).
    if (!is_zero(pv)) {
        const double lhs = dot(target, pv);
        const double rhs = dot(sd.parallel, pv) / n1 * nt;
        if (lhs < rhs - 1e-12 * (nt * npv + 1.0)) {
            throw std::domain_error(
                "lift_to_cone: target lies outside the cone certified by the seed");
        }
    }
    const Vec z = scaled(sd.perpendicular, nt / n1);
    return add(target, z);
}

const char* to_string(WitnessConstruction c) {
    switch (c) {
        case WitnessConstruction::Equality: return "equality";
        case WitnessConstruction::Antipodal: return "antipodal";
        case WitnessConstruction::Border: return "border";
    }
    return "unknown";
}

}  // namespace coneproj
