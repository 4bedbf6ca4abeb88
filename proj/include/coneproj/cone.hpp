#pragma once

#include "coneproj/linalg.hpp"

namespace coneproj {

enum class ConeFlavor {
    Closed,    // boundary rays included
    ApexOpen,  // apex included, the rest of the boundary excluded
};

/// Infinite one-sided solid round cone: every point whose direction from the
/// apex makes an angle of at most half_aperture with the axis. Degenerate
/// parameters follow the membership inequality directly: a zero axis makes
/// the closed cone the whole space (and the apex-open one just the apex),
/// half_aperture = pi makes the closed cone the whole space, and
/// half_aperture = 0 collapses the apex-open cone to the apex.
///
/// The axis is stored as given; the membership inequality is homogeneous in
/// it, so no normalization is applied to user input.
struct RoundCone {
    Vec apex;
    Vec axis;
    double half_aperture = 0.0;  // radians, in [0, pi]
    ConeFlavor flavor = ConeFlavor::Closed;
};

/// Validating constructor.
RoundCone make_cone(Vec apex, Vec axis, double half_aperture,
                    ConeFlavor flavor = ConeFlavor::Closed);

/// Signed slack of the closed membership inequality
///   <u - a, v> - cos(half_aperture) ||u - a|| ||v||,
/// normalized by (||u - a|| ||v|| + 1) so tolerances are scale-free.
double membership_margin(const RoundCone& cone, const Vec& u);

/// Closed flavor: margin >= -tol. ApexOpen flavor: u within tol of the apex,
/// or the strict inequality holds with margin > tol.
bool contains(const RoundCone& cone, const Vec& u, double tol = 1e-10);

/// Moves the apex by `shift`; axis, aperture and flavor are unchanged.
RoundCone translate(const RoundCone& cone, const Vec& shift);

}  // namespace coneproj
