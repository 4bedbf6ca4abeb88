#pragma once

#include "coneproj/cone.hpp"
#include "coneproj/linalg.hpp"

namespace coneproj {

/// Possible shapes of the orthogonal projection of a round cone onto a
/// closed subspace V. Writing psi for the angle between the axis and the
/// orthogonal complement of V, the closed cone classifies as:
///
///   phi = psi = 0               -> SinglePoint       {P a}
///   phi = psi in (0, pi/2)      -> ApexPlusOpenCone  apex + open cone, aperture pi/2
///   phi = psi >= pi/2           -> ClosedCone        aperture phi1
///   phi < psi                   -> ClosedCone        aperture phi1
///   phi > psi                   -> FullSubspace      all of V
enum class ProjectionTag { SinglePoint, FullSubspace, ClosedCone, ApexPlusOpenCone };

struct ProjectionClass {
    ProjectionTag tag = ProjectionTag::SinglePoint;
    Vec projected_apex;              // P a (plus the affine offset, if any)
    Vec projected_axis;              // P v, reported unnormalized
    double projected_aperture = 0.0; // phi1; pi/2 on the open boundary row,
                                     // 0 for SinglePoint, pi for FullSubspace
    double boundary_margin = 0.0;    // phi - psi, signed diagnostic
};

/// Numerical policy for the classifier: |phi - psi| <= angle_tol selects the
/// boundary rows of the table. The signed margin is always reported so
/// near-boundary decisions can be audited.
struct ClassifierPolicy {
    double angle_tol = 1e-9;
};

/// Half-aperture of the projected cone:
///   arccos sqrt((cos^2 phi - cos^2 psi) / (1 - cos^2 psi))  for psi in (0, pi/2],
///   phi                                                     otherwise.
/// The radicand is clamped to [0, 1]. Requires phi <= psi whenever the first
/// branch applies; phi > psi belongs to the FullSubspace row and is reported
/// as std::domain_error.
double projected_aperture(double phi, double psi);

/// Widest original half-aperture producing a projected aperture of at most
/// phi1: arccos sqrt(cos^2 psi + cos^2 phi1 - cos^2 psi cos^2 phi1).
/// Requires phi1 < pi/2 and psi in (0, pi/2]; inverts projected_aperture on
/// that regime.
double inverse_aperture(double phi1, double psi);

/// Classifies the orthogonal projection of a closed round cone onto V.
ProjectionClass classify(const RoundCone& cone, const SubspaceBasis& V,
                         const ClassifierPolicy& policy = {});

/// Open-cone variant: apex-open cones project to apex-plus-open cones with
/// the same phi1 (extended so phi1 = 0 when phi = psi = 0), or to the whole
/// subspace when phi > psi.
ProjectionClass project_open_cone(const RoundCone& cone, const SubspaceBasis& V,
                                  const ClassifierPolicy& policy = {});

/// Projection onto the affine subspace V + {offset} with offset orthogonal
/// to V: same classification, apex shifted by the offset.
ProjectionClass classify_affine(const RoundCone& cone, const SubspaceBasis& V,
                                const Vec& offset, const ClassifierPolicy& policy = {});

/// Signed, scale-free membership slack of a point with respect to the
/// classified set. Values >= -tol mean the point is consistent with the set
/// at tolerance tol (the open/closed boundary distinction sits below any
/// fixed tolerance and is certified analytically, not numerically). Points
/// are expected to lie in V already, as projections do.
double classified_set_margin(const ProjectionClass& pc, const Vec& point);

/// Widest half-aperture of a one-sided infinite cone inscribed in an orthant
/// of R^n: arccos sqrt((n-1)/n). Decreases to 0 as n grows.
double orthant_max_aperture(int n);

/// Smallest t such that every u with <u, 1> >= alpha ||u|| on (0,1) has a
/// nonnegative integral over (0,t): 1 - alpha^2.
double l2_threshold(double alpha);

const char* to_string(ProjectionTag tag);

}  // namespace coneproj
