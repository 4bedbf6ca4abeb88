#include "coneproj/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace coneproj {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

void require_angle(double x, const char* what) {
    if (!(x >= 0.0 && x <= kPi)) {
        throw std::invalid_argument(std::string(what) + ": angle outside [0, pi]");
    }
}

}  // namespace

double projected_aperture(double phi, double psi) {
    require_angle(phi, "projected_aperture: phi");
    require_angle(psi, "projected_aperture: psi");
    if (!(psi > 0.0 && psi <= kHalfPi)) {
        return phi;  // "else" branch: psi = 0 never reaches the formula, psi > pi/2 keeps phi
    }
    if (phi > psi + 1e-12) {
        throw std::domain_error(
            "projected_aperture: phi exceeds the axis-complement angle; "
            "the projection is the whole subspace, not a cone");
    }
    const double cphi = std::cos(phi);
    const double cpsi = std::cos(psi);
    const double denom = 1.0 - cpsi * cpsi;  // > 0 for psi in (0, pi/2]
    double radicand = (cphi * cphi - cpsi * cpsi) / denom;
    radicand = std::clamp(radicand, 0.0, 1.0);
    return std::acos(std::sqrt(radicand));
}

double inverse_aperture(double phi1, double psi) {
    require_angle(phi1, "inverse_aperture: phi1");
    require_angle(psi, "inverse_aperture: psi");
    if (!(phi1 < kHalfPi)) {
        throw std::domain_error("inverse_aperture: projected aperture must be below pi/2");
    }
    if (!(psi > 0.0 && psi <= kHalfPi)) {
        throw std::domain_error("inverse_aperture: psi must lie in (0, pi/2]");
    }
    // arccos sqrt(cos^2 psi + cos^2 phi1 - cos^2 psi cos^2 phi1), evaluated
    // through the complement identity 1 - radicand = sin^2 psi sin^2 phi1,
    // which avoids the cancellation near phi1 = 0.
    const double s = std::sin(psi) * std::sin(phi1);
    return std::asin(std::clamp(s, 0.0, 1.0));
}

ProjectionClass classify(const RoundCone& cone, const SubspaceBasis& V,
                         const ClassifierPolicy& policy) {
    if (cone.flavor != ConeFlavor::Closed) {
        throw std::invalid_argument("classify: expects the closed flavor; use project_open_cone");
    }
    if (cone.apex.size() != V.ambient_dim()) {
        throw std::invalid_argument("classify: dimension mismatch");
    }
    if (policy.angle_tol < 0.0) {
        throw std::invalid_argument("classify: angle tolerance must be nonnegative");
    }

    const double phi = cone.half_aperture;
    const double psi = angle_to_complement(cone.axis, V);
    const double margin = phi - psi;

    ProjectionClass pc;
    pc.projected_apex = V.project(cone.apex);
    pc.projected_axis = V.project(cone.axis);
    pc.boundary_margin = margin;

    if (margin > policy.angle_tol) {
        pc.tag = ProjectionTag::FullSubspace;
        pc.projected_aperture = kPi;  // the whole subspace, as the aperture-pi cone
    } else if (margin >= -policy.angle_tol) {
        // boundary band phi == psi
        if (psi <= policy.angle_tol) {
            pc.tag = ProjectionTag::SinglePoint;
            pc.projected_aperture = 0.0;
        } else if (psi < kHalfPi - policy.angle_tol) {
            pc.tag = ProjectionTag::ApexPlusOpenCone;
            pc.projected_aperture = kHalfPi;
        } else {
            pc.tag = ProjectionTag::ClosedCone;
            pc.projected_aperture = projected_aperture(std::min(phi, psi), psi);
        }
    } else {
        pc.tag = ProjectionTag::ClosedCone;
        pc.projected_aperture = projected_aperture(phi, psi);
    }
    return pc;
}

ProjectionClass project_open_cone(const RoundCone& cone, const SubspaceBasis& V,
                                  const ClassifierPolicy& policy) {
    if (cone.flavor != ConeFlavor::ApexOpen) {
        throw std::invalid_argument("project_open_cone: expects the apex-open flavor");
    }
    if (cone.apex.size() != V.ambient_dim()) {
        throw std::invalid_argument("project_open_cone: dimension mismatch");
    }
    if (policy.angle_tol < 0.0) {
        throw std::invalid_argument("project_open_cone: angle tolerance must be nonnegative");
    }

    const double phi = cone.half_aperture;
    const double psi = angle_to_complement(cone.axis, V);
    const double margin = phi - psi;

    ProjectionClass pc;
    pc.projected_apex = V.project(cone.apex);
    pc.projected_axis = V.project(cone.axis);
    pc.boundary_margin = margin;

    if (margin > policy.angle_tol) {
        pc.tag = ProjectionTag::FullSubspace;
        pc.projected_aperture = kPi;
    } else {
        pc.tag = ProjectionTag::ApexPlusOpenCone;
        if (margin >= -policy.angle_tol && psi <= policy.angle_tol) {
            pc.projected_aperture = 0.0;  // phi = psi = 0 extension of the formula
        } else if (margin >= -policy.angle_tol && psi < kHalfPi - policy.angle_tol) {
            pc.projected_aperture = kHalfPi;
        } else {
            // min() keeps the call inside the formula's validity band when
            // phi sits a rounding error above psi.
            pc.projected_aperture = projected_aperture(std::min(phi, psi), psi);
        }
    }
    return pc;
}

ProjectionClass classify_affine(const RoundCone& cone, const SubspaceBasis& V,
                                const Vec& offset, const ClassifierPolicy& policy) {
    if (offset.size() != V.ambient_dim()) {
        throw std::invalid_argument("classify_affine: offset dimension mismatch");
    }
    if (norm(V.project(offset)) > 1e-10 * norm(offset)) {
        throw std::invalid_argument("classify_affine: offset must be orthogonal to the subspace");
    }
    ProjectionClass pc = classify(cone, V, policy);
    pc.projected_apex = add(pc.projected_apex, offset);
    return pc;
}

double classified_set_margin(const ProjectionClass& pc, const Vec& point) {
    switch (pc.tag) {
        case ProjectionTag::SinglePoint:
            return -norm(sub(point, pc.projected_apex)) / (norm(pc.projected_apex) + 1.0);
        case ProjectionTag::FullSubspace:
            return 0.0;  // projections land in V by construction
        case ProjectionTag::ClosedCone:
        case ProjectionTag::ApexPlusOpenCone: {
            const RoundCone image{pc.projected_apex, pc.projected_axis,
                                  pc.projected_aperture, ConeFlavor::Closed};
            return membership_margin(image, point);
        }
    }
    throw std::logic_error("classified_set_margin: unknown tag");
}

double orthant_max_aperture(int n) {
    if (n < 2) {
        throw std::invalid_argument("orthant_max_aperture: dimension must be at least 2");
    }
    return std::acos(std::sqrt((n - 1.0) / n));
}

double l2_threshold(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("l2_threshold: alpha must lie in (0, 1)");
    }
    return 1.0 - alpha * alpha;
}

const char* to_string(ProjectionTag tag) {
    switch (tag) {
        case ProjectionTag::SinglePoint: return "single_point";
        case ProjectionTag::FullSubspace: return "full_subspace";
        case ProjectionTag::ClosedCone: return "closed_cone";
        case ProjectionTag::ApexPlusOpenCone: return "apex_plus_open_cone";
    }
    return "unknown";
}

}  // namespace coneproj
