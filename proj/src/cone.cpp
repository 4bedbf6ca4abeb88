#include "coneproj/cone.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coneproj {

RoundCone make_cone(Vec apex, Vec axis, double half_aperture, ConeFlavor flavor) {
    if (apex.size() != axis.size()) {
        throw std::invalid_argument("make_cone: apex/axis dimension mismatch");
    }
    if (apex.empty()) {
        throw std::invalid_argument("make_cone: dimension must be positive");
    }
    if (!all_finite(apex) || !all_finite(axis)) {
        throw std::invalid_argument("make_cone: non-finite coordinate");
    }
    if (!(half_aperture >= 0.0 && half_aperture <= std::numbers::pi)) {
        throw std::invalid_argument("make_cone: half aperture outside [0, pi]");
    }
    return RoundCone{std::move(apex), std::move(axis), half_aperture, flavor};
}

double membership_margin(const RoundCone& cone, const Vec& u) {
    const Vec d = sub(u, cone.apex);
    const double nd = norm(d);
    const double nv = norm(cone.axis);
    const double lhs = dot(d, cone.axis);
    return (lhs - std::cos(cone.half_aperture) * nd * nv) / (nd * nv + 1.0);
}

bool contains(const RoundCone& cone, const Vec& u, double tol) {
    if (tol < 0.0) {
        throw std::invalid_argument("contains: tolerance must be nonnegative");
    }
    if (cone.flavor == ConeFlavor::Closed) {
        return membership_margin(cone, u) >= -tol;
    }
    if (norm(sub(u, cone.apex)) <= tol) return true;
    return membership_margin(cone, u) > tol;
}

RoundCone translate(const RoundCone& cone, const Vec& shift) {
    RoundCone out = cone;
    out.apex = add(cone.apex, shift);
    return out;
}

}  // namespace coneproj
